"""Exact dense vectors and small linear-algebra helpers over ``Fraction``."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[Fraction, int]


class DimensionError(ValueError):
    """Operands have incompatible dimensions."""


def to_rational(x) -> Fraction:
    """Convert an int, Fraction or exact string (``"p/q"``, ``"-3"``) to Fraction.

    Floats are refused: they would silently import rounding error.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {x!r}") from exc
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class Vector(tuple):
    """Immutable coordinate tuple of Fractions with vector-space arithmetic.

    ``+``/``-`` are coordinatewise (not tuple concatenation), ``*`` and ``/``
    scale by a scalar. Covectors use the same type; ``dot`` pairs them.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable = ()):
        return super().__new__(cls, (to_rational(c) for c in coords))

    @classmethod
    def zeros(cls, dim: int) -> "Vector":
        return cls([0] * dim)

    @classmethod
    def unit(cls, dim: int, i: int) -> "Vector":
        return cls(1 if j == i else 0 for j in range(dim))

    @property
    def dim(self) -> int:
        return len(self)

    def _check(self, other: Sequence) -> None:
        if len(self) != len(other):
            raise DimensionError(f"dimension mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        self._check(other)
        return Vector(a + b for a, b in zip(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        self._check(other)
        return Vector(a - b for a, b in zip(self, other))

    def __rsub__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        self._check(other)
        return Vector(b - a for a, b in zip(self, other))

    def __neg__(self):
        return Vector(-a for a in self)

    def __mul__(self, k):
        if isinstance(k, tuple) or isinstance(k, float):
            return NotImplemented
        k = to_rational(k)
        return Vector(k * a for a in self)

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = to_rational(k)
        return Vector(a / k for a in self)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self)

    def __repr__(self) -> str:
        return f"Vector({format_vector(self)!r})"


Covector = Vector


def dot(f: Sequence, v: Sequence) -> Fraction:
    """Exact pairing sum(f_i * v_i)."""
    if len(f) != len(v):
        raise DimensionError(f"dimension mismatch: {len(f)} vs {len(v)}")
    return sum((Fraction(a) * b for a, b in zip(f, v)), Fraction(0))


def parse_vector(text: str) -> Vector:
    """Parse ``"p/q,p/q,..."`` into a Vector."""
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise ValueError(f"malformed vector {text!r}")
    return Vector(to_rational(p) for p in parts)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def format_vector(v: Sequence) -> str:
    return ",".join(format_rational(c) for c in v)


def concat(*parts: Sequence) -> Vector:
    return Vector(c for p in parts for c in p)


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a list of rational row vectors by Gaussian elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def inverse(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse of a square matrix; raises on singularity."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DimensionError("matrix is not square")
    a = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def matvec(matrix: Sequence[Sequence], v: Sequence) -> Vector:
    return Vector(dot(row, v) for row in matrix)


def transpose(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    return [list(col) for col in zip(*matrix)]
