"""Gate-expression language.

Grammar::

    expr := term { ("(x)" | "⊗") term }        left-associative Kronecker product
    term := atom [ "^(x)" integer ]             Kronecker power
    atom := ident [ "(" real { "," real } ")" ]
          | "kron" "(" expr "," expr ")"
          | "file" "(" path ")"
          | "(" expr ")"

Identifiers are lowercase letters, digits and underscores. A ``file`` path is
either double-quoted or the raw text up to the closing parenthesis.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .errors import DimensionLimitError, EvaluationError, ParseError, TssError
from .gates import build_gate
from .matrix import DEFAULT_MAX_DIM, ComplexMatrix, kron, matrix_from_file


@dataclass(frozen=True)
class GateRef:
    name: str
    params: tuple[float, ...] = ()


@dataclass(frozen=True)
class Kron:
    left: "GateExpr"
    right: "GateExpr"


@dataclass(frozen=True)
class KronPower:
    base: "GateExpr"
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("KronPower count must be >= 1")


@dataclass(frozen=True)
class MatrixFile:
    path: str


GateExpr = Union[GateRef, Kron, KronPower, MatrixFile]

KEYWORDS = frozenset({"kron", "file"})

_IDENT = re.compile(r"[a-z0-9_]+")
_REAL = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_INT = re.compile(r"\d+")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    # -- scanning helpers -----------------------------------------------------

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, literal):
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def accept(self, literal):
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal, expected=None):
        if not self.accept(literal):
            self.fail(expected or repr(literal))

    def fail(self, expected, message=None):
        self.skip_ws()
        if message is None:
            found = "end of input" if self.pos >= len(self.text) else repr(self.text[self.pos])
            message = f"unexpected {found}"
        raise ParseError(message, self.pos, expected, self.text)

    def match(self, pattern):
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if m is None:
            return None
        self.pos = m.end()
        return m.group(0)

    def at_kron_op(self):
        return self.peek("(x)") or self.peek("⊗")

    # -- grammar ----------------------------------------------------------------

    def parse(self):
        node = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail("'(x)', '⊗' or end of input")
        return node

    def expr(self):
        node = self.term()
        while self.at_kron_op():
            if not self.accept("(x)"):
                self.accept("⊗")
            node = Kron(node, self.term())
        return node

    def term(self):
        node = self.atom()
        if self.accept("^(x)"):
            self.skip_ws()
            start = self.pos
            digits = self.match(_INT)
            if digits is None:
                self.fail("positive integer")
            count = int(digits)
            if count < 1:
                raise ParseError("Kronecker power must be >= 1", start, "positive integer", self.text)
            node = KronPower(node, count)
        return node

    def atom(self):
        self.skip_ws()
        if self.at_kron_op():
            self.fail("term", "operator without left operand")
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        name = self.match(_IDENT)
        if name is None:
            self.fail("term")
        if name == "kron":
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return Kron(left, right)
        if name == "file":
            self.expect("(")
            return MatrixFile(self.path())
        params = ()
        # "(x)" after an identifier is the operator, not a parameter list
        if self.peek("(") and not self.at_kron_op():
            self.accept("(")
            params = [self.real()]
            while self.accept(","):
                params.append(self.real())
            self.expect(")", "',' or ')'")
            params = tuple(params)
        return GateRef(name, params)

    def real(self):
        text = self.match(_REAL)
        if text is None:
            self.fail("real literal")
        return float(text)

    def path(self):
        self.skip_ws()
        if self.accept('"'):
            end = self.text.find('"', self.pos)
            if end < 0:
                self.pos = len(self.text)
                self.fail("'\"'", "unterminated quoted path")
            path = self.text[self.pos:end]
            self.pos = end + 1
            self.expect(")")
        else:
            end = self.text.find(")", self.pos)
            if end < 0:
                self.pos = len(self.text)
                self.fail("')'", "unterminated file(...)")
            path = self.text[self.pos:end].strip()
            self.pos = end + 1
        if not path:
            raise ParseError("empty file path", self.pos - 1, "path", self.text)
        return path


def parse(text: str) -> GateExpr:
    """Parse a gate expression; raises :class:`ParseError` on any violation."""
    return _Parser(text).parse()


def _format_real(x):
    r = repr(float(x))
    return r[:-2] if r.endswith(".0") else r


def format_expr(node: GateExpr) -> str:
    """Pretty-print an AST; ``parse(format_expr(e)) == e``."""
    if isinstance(node, GateRef):
        if node.params:
            return f"{node.name}({', '.join(_format_real(p) for p in node.params)})"
        return node.name
    if isinstance(node, Kron):
        right = format_expr(node.right)
        if isinstance(node.right, Kron):
            right = f"({right})"
        return f"{format_expr(node.left)} (x) {right}"
    if isinstance(node, KronPower):
        base = format_expr(node.base)
        if isinstance(node.base, (Kron, KronPower)):
            base = f"({base})"
        return f"{base} ^(x) {node.count}"
    if isinstance(node, MatrixFile):
        if '"' in node.path or ")" in node.path or node.path != node.path.strip():
            if '"' in node.path:
                raise ValueError(f"path cannot be represented: {node.path!r}")
            return f'file("{node.path}")'
        return f"file({node.path})"
    raise TypeError(f"not a gate expression: {node!r}")


def evaluate(node: GateExpr, max_dim: int = DEFAULT_MAX_DIM, base_dir=None) -> ComplexMatrix:
    """Evaluate an AST into a matrix.

    Errors are re-raised as :class:`EvaluationError` carrying the AST path
    to the failing node. Relative ``file(...)`` paths resolve against
    ``base_dir`` when given.
    """
    return _eval(node, (), max_dim, base_dir)


def _eval(node, path, max_dim, base_dir):
    try:
        if isinstance(node, GateRef):
            m = build_gate(node.name, node.params)
        elif isinstance(node, MatrixFile):
            p = Path(node.path)
            if base_dir is not None and not p.is_absolute():
                p = Path(base_dir) / p
            m = matrix_from_file(p)
        elif isinstance(node, Kron):
            left = _eval(node.left, path + ("left",), max_dim, base_dir)
            right = _eval(node.right, path + ("right",), max_dim, base_dir)
            return kron(left, right, max_dim)
        elif isinstance(node, KronPower):
            base = _eval(node.base, path + ("base",), max_dim, base_dir)
            if base.dim**node.count > max_dim:
                raise DimensionLimitError(base.dim**node.count, max_dim)
            m = base
            for _ in range(node.count - 1):
                m = kron(m, base, max_dim)
            return m
        else:
            raise TypeError(f"not a gate expression: {node!r}")
    except EvaluationError:
        raise
    except TssError as exc:
        raise EvaluationError(exc, path) from exc
    if m.dim > max_dim:
        raise EvaluationError(DimensionLimitError(m.dim, max_dim), path)
    return m
