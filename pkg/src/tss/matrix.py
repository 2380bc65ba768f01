"""Dense complex matrices: Kronecker products, unitarity checks and file I/O.

Matrices are immutable square ``complex128`` arrays wrapped in
:class:`ComplexMatrix`. Entries are plain Python ``complex`` scalars.
"""
from __future__ import annotations

import csv
import io
import json
import math
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DimensionLimitError, MatrixParseError, ShapeError

DEFAULT_MAX_DIM = 4096
DEFAULT_TOLERANCE = 1e-9


class ComplexMatrix:
    """Immutable N x N complex matrix.

    Any N >= 1 is accepted; power-of-two dimension is not required.
    """

    __slots__ = ("_data",)

    def __init__(self, data):
        arr = np.array(data, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ShapeError(f"matrix must be square, got shape {arr.shape}")
        if arr.shape[0] < 1:
            raise ShapeError("matrix must have dimension >= 1")
        arr.flags.writeable = False
        self._data = arr

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n, dtype=np.complex128))

    @property
    def dim(self) -> int:
        return self._data.shape[0]

    @property
    def data(self) -> np.ndarray:
        """Read-only view of the underlying array."""
        return self._data

    def entries(self) -> list[complex]:
        """Row-major list of entries (length ``dim**2``)."""
        return [complex(z) for z in self._data.ravel()]

    def __getitem__(self, index) -> complex:
        i, j = index
        return complex(self._data[i, j])

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self._data, other._data))

    def __hash__(self):
        return hash((self.dim, self._data.tobytes()))

    def __repr__(self):
        return f"ComplexMatrix(dim={self.dim})"

    def __matmul__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return ComplexMatrix(self._data @ other._data)

    def scaled(self, factor) -> "ComplexMatrix":
        return ComplexMatrix(self._data * factor)

    def transpose(self) -> "ComplexMatrix":
        return ComplexMatrix(self._data.T)

    def dagger(self) -> "ComplexMatrix":
        return ComplexMatrix(self._data.conj().T)

    def allclose(self, other, atol=1e-9) -> bool:
        """Entrywise comparison: ``max |a - b| <= atol``."""
        if self.dim != other.dim:
            return False
        return float(np.max(np.abs(self._data - other._data))) <= atol


@dataclass(frozen=True)
class UnitarityReport:
    is_unitary: bool
    max_deviation: float
    tolerance_used: float


def kron(a: ComplexMatrix, b: ComplexMatrix, max_dim: int = DEFAULT_MAX_DIM) -> ComplexMatrix:
    """Kronecker product with the left operand owning the high-order index digits.

    ``result[p*nb + r, q*nb + s] == a[p, q] * b[r, s]``.
    """
    dim = a.dim * b.dim
    if dim > max_dim:
        raise DimensionLimitError(dim, max_dim)
    return ComplexMatrix(np.kron(a.data, b.data))


def check_unitarity(m: ComplexMatrix, tolerance: float = DEFAULT_TOLERANCE) -> UnitarityReport:
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")
    u = m.data
    deviation = u @ u.conj().T - np.eye(m.dim)
    max_dev = float(np.max(np.abs(deviation)))
    return UnitarityReport(max_dev <= tolerance, max_dev, tolerance)


# --- file I/O ---------------------------------------------------------------

_CSV_FIELD = re.compile(
    r"""^\s*
    (?:
        (?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
        (?:(?P<sign>[+-])(?P<im>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?
      |
        (?P<im_only>[+-]?(?:(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?)i
    )
    \s*$""",
    re.VERBOSE,
)


def parse_complex_literal(text: str) -> complex:
    """Parse ``1``, ``-0.5``, ``0.5-0.5i``, ``2i``, ``-i`` style literals."""
    m = _CSV_FIELD.match(text)
    if m is None:
        raise ValueError(f"invalid complex literal {text!r}")
    if m.group("re") is not None:
        real = float(m.group("re"))
        if m.group("sign") is None:
            return complex(real, 0.0)
        mag = float(m.group("im")) if m.group("im") else 1.0
        return complex(real, mag if m.group("sign") == "+" else -mag)
    im = m.group("im_only")
    if im in ("", "+"):
        return 1j
    if im == "-":
        return -1j
    return complex(0.0, float(im))


def format_complex_literal(z: complex) -> str:
    if z.imag == 0:
        return repr(z.real)
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def _square_rows(rows, path):
    n = len(rows)
    if n == 0:
        raise ShapeError("empty matrix", path=path)
    for r, row in enumerate(rows, start=1):
        if len(row) != n:
            raise ShapeError(f"expected {n} entries, found {len(row)}", path=path, row=r)
    return ComplexMatrix(rows)


def _json_entry(value, path, row, col):
    if isinstance(value, bool):
        raise MatrixParseError("boolean is not a matrix entry", path, row, col)
    if isinstance(value, (int, float)):
        return complex(float(value), 0.0)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        return complex(float(value[0]), float(value[1]))
    raise MatrixParseError(f"entry must be a number or [re, im], got {value!r}", path, row, col)


def matrix_from_json_text(text: str, path=None) -> ComplexMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"invalid JSON: {exc.msg}", path, exc.lineno, exc.colno) from exc
    if not isinstance(doc, list):
        raise MatrixParseError("top level must be an array of rows", path)
    rows = []
    for r, row in enumerate(doc, start=1):
        if not isinstance(row, list):
            raise MatrixParseError("row must be an array", path, r)
        rows.append([_json_entry(v, path, r, c) for c, v in enumerate(row, start=1)])
    return _square_rows(rows, path)


def matrix_from_csv_text(text: str, path=None) -> ComplexMatrix:
    rows = []
    for r, fields in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not fields or all(not f.strip() for f in fields):
            # blank lines are tolerated only at the end
            rows.append(None)
            continue
        row = []
        for c, field in enumerate(fields, start=1):
            try:
                row.append(parse_complex_literal(field))
            except ValueError as exc:
                raise MatrixParseError(str(exc), path, r, c) from None
        rows.append(row)
    while rows and rows[-1] is None:
        rows.pop()
    for r, row in enumerate(rows, start=1):
        if row is None:
            raise MatrixParseError("blank line inside matrix", path, r)
    return _square_rows(rows, path)


def _infer_format(path: Path, fmt):
    if fmt is not None:
        return fmt
    suffix = path.suffix.lower().lstrip(".")
    if suffix in ("json", "csv"):
        return suffix
    raise MatrixParseError("cannot infer format; use a .json or .csv extension", path)


def matrix_from_file(path, format=None) -> ComplexMatrix:
    """Read a matrix from a JSON or CSV file (format inferred from extension)."""
    path = Path(path)
    fmt = _infer_format(path, format)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixParseError(f"cannot read file: {exc.strerror}", path) from exc
    if fmt == "json":
        return matrix_from_json_text(text, path)
    if fmt == "csv":
        return matrix_from_csv_text(text, path)
    raise MatrixParseError(f"unknown matrix format {fmt!r}", path)


def matrix_to_json_text(m: ComplexMatrix) -> str:
    rows = [[[z.real, z.imag] for z in map(complex, row)] for row in m.data]
    return json.dumps(rows) + "\n"


def matrix_to_csv_text(m: ComplexMatrix) -> str:
    return "".join(
        ",".join(format_complex_literal(complex(z)) for z in row) + "\n" for row in m.data
    )


def matrix_to_file(m: ComplexMatrix, path, format=None) -> None:
    path = Path(path)
    fmt = _infer_format(path, format)
    text = matrix_to_json_text(m) if fmt == "json" else matrix_to_csv_text(m)
    path.write_text(text, encoding="utf-8")
