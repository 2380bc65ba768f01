"""Registry of named gate matrices.

Every gate is built on demand by :func:`build_gate`. Parameterised gates take
real parameters in the order listed by their :class:`GateSpec`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import ArityError, CatalogError
from .matrix import DEFAULT_MAX_DIM, ComplexMatrix

GROVER_MAX_QUBITS = 12  # 2**12 == DEFAULT_MAX_DIM


@dataclass(frozen=True)
class GateSpec:
    name: str
    arity: Optional[int]  # qubit count; None when it depends on a parameter
    params: tuple[str, ...]
    builder: Callable[..., ComplexMatrix] = field(repr=False, compare=False)
    description: str = ""
    unitary: bool = True

    @property
    def signature(self) -> str:
        return f"{self.name}({', '.join(self.params)})" if self.params else self.name


# Sylvester-ordered order-16 Hadamard matrix, rows as printed.
_HAD16_ROWS = """
 1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1
 1 -1  1 -1  1 -1  1 -1  1 -1  1 -1  1 -1  1 -1
 1  1 -1 -1  1  1 -1 -1  1  1 -1 -1  1  1 -1 -1
 1 -1 -1  1  1 -1 -1  1  1 -1 -1  1  1 -1 -1  1
 1  1  1  1 -1 -1 -1 -1  1  1  1  1 -1 -1 -1 -1
 1 -1  1 -1 -1  1 -1  1  1 -1  1 -1 -1  1 -1  1
 1  1 -1 -1 -1 -1  1  1  1  1 -1 -1 -1 -1  1  1
 1 -1 -1  1 -1  1  1 -1  1 -1 -1  1 -1  1  1 -1
 1  1  1  1  1  1  1  1 -1 -1 -1 -1 -1 -1 -1 -1
 1 -1  1 -1  1 -1  1 -1 -1  1 -1  1 -1  1 -1  1
 1  1 -1 -1  1  1 -1 -1 -1 -1  1  1 -1 -1  1  1
 1 -1 -1  1  1 -1 -1  1 -1  1  1 -1 -1  1  1 -1
 1  1  1  1 -1 -1 -1 -1 -1 -1 -1 -1  1  1  1  1
 1 -1  1 -1 -1  1 -1  1 -1  1 -1  1  1 -1  1 -1
 1  1 -1 -1 -1 -1  1  1 -1 -1  1  1  1  1 -1 -1
 1 -1 -1  1 -1  1  1 -1 -1  1  1 -1  1 -1 -1  1
"""


def _had16_raw():
    rows = [[int(x) for x in line.split()] for line in _HAD16_ROWS.strip().splitlines()]
    return ComplexMatrix(rows)


def pauli_x():
    return ComplexMatrix([[0, 1], [1, 0]])


def pauli_y():
    # standard form; the [[1, -i], [i, 0]] variant is not unitary
    return ComplexMatrix([[0, -1j], [1j, 0]])


def pauli_z():
    return ComplexMatrix([[1, 0], [0, -1]])


def hadamard():
    return ComplexMatrix(np.array([[1, 1], [1, -1]]) / math.sqrt(2))


def had16():
    return _had16_raw().scaled(0.25)


def raw_had16():
    return _had16_raw()


def swap_alpha(alpha):
    """SWAP**alpha.

    ``e^{i pi alpha/2} * [[e^{-i pi alpha/2},0,0,0], [0,c,-i s,0], [0,-i s,c,0],
    [0,0,0,e^{-i pi alpha/2}]]`` with ``c = cos(pi alpha/2)``,
    ``s = sin(pi alpha/2)``. alpha = 1/2 gives :func:`sapos12`, alpha = -1/2
    gives :func:`saneg12`, alpha = 1 gives SWAP.
    """
    return _swap_alpha_family(alpha, sine_sign=-1)


def swap_alpha_as_printed(alpha):
    """Variant with ``+i sin`` off-diagonals.

    Kept for comparison only: at alpha = 1/2 its off-diagonal entries are the
    negatives of :func:`sapos12`. Its support is identical to
    :func:`swap_alpha` for every alpha.
    """
    return _swap_alpha_family(alpha, sine_sign=+1)


def _swap_alpha_family(alpha, sine_sign):
    theta = math.pi * alpha / 2
    phase = cmath.exp(1j * theta)
    c = math.cos(theta)
    s = sine_sign * 1j * math.sin(theta)
    inner = np.array(
        [
            [cmath.exp(-1j * theta), 0, 0, 0],
            [0, c, s, 0],
            [0, s, c, 0],
            [0, 0, 0, cmath.exp(-1j * theta)],
        ],
        dtype=np.complex128,
    )
    return ComplexMatrix(phase * inner)


def saneg12():
    return ComplexMatrix(
        [
            [1, 0, 0, 0],
            [0, 0.5 - 0.5j, 0.5 + 0.5j, 0],
            [0, 0.5 + 0.5j, 0.5 - 0.5j, 0],
            [0, 0, 0, 1],
        ]
    )


def sapos12():
    return ComplexMatrix(
        [
            [1, 0, 0, 0],
            [0, 0.5 + 0.5j, 0.5 - 0.5j, 0],
            [0, 0.5 - 0.5j, 0.5 + 0.5j, 0],
            [0, 0, 0, 1],
        ]
    )


def berkeley():
    a = math.pi / 8
    b = 3 * math.pi / 8
    ca, sa = math.cos(a), 1j * math.sin(a)
    cb, sb = math.cos(b), 1j * math.sin(b)
    return ComplexMatrix(
        [
            [ca, 0, 0, sa],
            [0, cb, sb, 0],
            [0, sb, cb, 0],
            [sa, 0, 0, ca],
        ]
    )


def gr4():
    return ComplexMatrix(
        [
            [-0.5, 0.5, 0.5, 0.5],
            [0.5, -0.5, 0.5, 0.5],
            [0.5, 0.5, -0.5, 0.5],
            [0.5, 0.5, 0.5, -0.5],
        ]
    )


def grover(n):
    """Grover diffusion operator ``2J/2**n - I`` on ``n`` qubits (extension).

    Reduces to :func:`gr4` at ``n == 2``.
    """
    if n != int(n) or n < 1:
        raise ArityError(f"grover: qubit count must be a positive integer, got {n!r}")
    n = int(n)
    if n > GROVER_MAX_QUBITS:
        raise ArityError(f"grover: at most {GROVER_MAX_QUBITS} qubits (dimension {DEFAULT_MAX_DIM})")
    dim = 2**n
    return ComplexMatrix(np.full((dim, dim), 2.0 / dim) - np.eye(dim))


def swap():
    return ComplexMatrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


def _spec(name, arity, params, builder, description, unitary=True):
    return GateSpec(name, arity, tuple(params), builder, description, unitary)


REGISTRY: dict[str, GateSpec] = {
    s.name: s
    for s in (
        _spec("px", 1, (), pauli_x, "Pauli X"),
        _spec("py", 1, (), pauli_y, "Pauli Y (standard form)"),
        _spec("pz", 1, (), pauli_z, "Pauli Z"),
        _spec("h", 1, (), hadamard, "Hadamard"),
        _spec("had16", 4, (), had16, "order-16 Hadamard matrix, normalised by 1/4"),
        _spec("raw_had16", 4, (), raw_had16, "order-16 Hadamard matrix, +-1 entries", unitary=False),
        _spec("swap_alpha", 2, ("alpha",), swap_alpha, "SWAP**alpha"),
        _spec("saneg12", 2, (), saneg12, "SWAP**(-1/2)"),
        _spec("sapos12", 2, (), sapos12, "SWAP**(1/2), square root of SWAP"),
        _spec("berkeley", 2, (), berkeley, "Berkeley B-gate, a = pi/8, b = 3pi/8"),
        _spec("gr4", 2, (), gr4, "2-qubit Grover diffusion"),
        _spec("grover", None, ("n",), grover, "n-qubit Grover diffusion 2J/2^n - I (extension)"),
    )
}


def gate_names() -> list[str]:
    return sorted(REGISTRY)


def build_gate(name: str, params=()) -> ComplexMatrix:
    try:
        spec = REGISTRY[name]
    except KeyError:
        raise CatalogError(f"unknown gate {name!r}; known gates: {', '.join(gate_names())}") from None
    params = tuple(params)
    if len(params) != len(spec.params):
        raise ArityError(
            f"{spec.signature} takes {len(spec.params)} parameter(s), got {len(params)}"
        )
    return spec.builder(*params)
