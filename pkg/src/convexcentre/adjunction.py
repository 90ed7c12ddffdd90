"""Adjoining an order unit to a normed space: V^(.) = V x R.

The cone is {(v, a) : ||v|| <= a} and e = (0, 1). The same ordered space
carries two norms:

* the order-unit norm ``||(v, a)||_e = ||v|| + |a|``;
* the base norm of the base ``B^(.) = {(v, 1) : ||v|| <= 1}``, which is
  ``max(||v||, |a|)``.

Both closed forms are paired with LP evaluations of the defining infima, so
the formulas can be checked rather than assumed.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import DimensionError, Vector, concat, dot
from .lp import LpProblem, lp_solve
from .norms import NormOracle, dual_norm_le, norm_eval, norm_le


@dataclass(frozen=True)
class AdjoinedElement:
    v: Vector
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "v", Vector(self.v))
        object.__setattr__(self, "alpha", Fraction(self.alpha))

    @classmethod
    def from_vector(cls, x: Sequence) -> "AdjoinedElement":
        """Split (v_1, ..., v_n, alpha)."""
        x = Vector(x)
        if not x:
            raise DimensionError("empty vector")
        return cls(x[:-1], x[-1])

    def as_vector(self) -> Vector:
        return concat(self.v, (self.alpha,))

    def __add__(self, other: "AdjoinedElement") -> "AdjoinedElement":
        return AdjoinedElement(self.v + other.v, self.alpha + other.alpha)

    def __sub__(self, other: "AdjoinedElement") -> "AdjoinedElement":
        return AdjoinedElement(self.v - other.v, self.alpha - other.alpha)

    def __neg__(self) -> "AdjoinedElement":
        return AdjoinedElement(-self.v, -self.alpha)

    def __mul__(self, k) -> "AdjoinedElement":
        k = Fraction(k)
        return AdjoinedElement(self.v * k, self.alpha * k)

    __rmul__ = __mul__


@dataclass(frozen=True)
class AdjoinedSpace:
    base_norm_oracle: NormOracle

    @property
    def dim(self) -> int:
        return self.base_norm_oracle.dim

    @property
    def unit(self) -> AdjoinedElement:
        return AdjoinedElement(Vector.zeros(self.dim), 1)

    def _check(self, x: AdjoinedElement) -> None:
        if len(x.v) != self.dim:
            raise DimensionError(f"element has dimension {len(x.v)}, space has {self.dim}")

    def _ball_vertices(self):
        o = self.base_norm_oracle
        if not o.polyhedral:
            raise ValueError("LP evaluation needs a polyhedral norm")
        return o.unit_ball().vertices if o.dim else ()


def cone_member(S: AdjoinedSpace, x: AdjoinedElement) -> bool:
    S._check(x)
    return norm_le(S.base_norm_oracle, x.v, x.alpha)


def order_unit_norm(S: AdjoinedSpace, x: AdjoinedElement):
    S._check(x)
    return norm_eval(S.base_norm_oracle, x.v) + abs(x.alpha)


def base_norm(S: AdjoinedSpace, x: AdjoinedElement):
    S._check(x)
    return max(norm_eval(S.base_norm_oracle, x.v), abs(x.alpha))


def base_member(S: AdjoinedSpace, x: AdjoinedElement) -> bool:
    S._check(x)
    return x.alpha == 1 and norm_le(S.base_norm_oracle, x.v, 1)


def state_member(S: AdjoinedSpace, f: Sequence, c) -> bool:
    """(f, c) is a state iff c = 1 and the dual norm of f is at most 1."""
    f = Vector(f)
    if len(f) != S.dim:
        raise DimensionError(f"functional has dimension {len(f)}, space has {S.dim}")
    return Fraction(c) == 1 and dual_norm_le(S.base_norm_oracle, f, 1)


def order_unit_norm_lp(S: AdjoinedSpace, x: AdjoinedElement) -> Fraction:
    """inf{t : t e - x and t e + x in the cone}, as one exact LP.

    Cone membership of (w, b) is written as w = sum mu_j v_j with
    sum mu_j <= b over the unit-ball vertices v_j.
    """
    S._check(x)
    verts = S._ball_vertices()
    m, d = len(verts), S.dim
    # variables: t, mu+ (m), s+, mu- (m), s-
    nv = 2 * m + 3
    rows, rhs = [], []
    for sign, off in ((-1, 1), (1, m + 2)):
        # sign * v = sum mu v_j
        for i in range(d):
            row = [0] * nv
            for j, vj in enumerate(verts):
                row[off + j] = vj[i]
            rows.append(row)
            rhs.append(sign * x.v[i])
        # sum mu + s - t = sign * alpha
        row = [0] * nv
        row[0] = -1
        row[off:off + m] = [1] * m
        row[off + m] = 1
        rows.append(row)
        rhs.append(sign * x.alpha)
    c = [0] * nv
    c[0] = 1
    out = lp_solve(LpProblem(c, rows, rhs))
    if not out.optimal:
        raise AssertionError(f"order-unit norm LP ended {out.status.value}")
    return out.value


@functools.lru_cache(maxsize=None)
def base_normed_view(S: AdjoinedSpace):
    """The same space as a base-normed space on R^(n+1) with centre e."""
    from .base_normed import BaseNormedSpace
    from .polytope import Polytope

    verts = S._ball_vertices()
    base = Polytope(tuple(concat(v, (1,)) for v in verts))
    e = Vector.unit(S.dim + 1, S.dim)
    return BaseNormedSpace(base, e, e)


def base_norm_lp(S: AdjoinedSpace, x: AdjoinedElement) -> Fraction:
    """min{lambda + mu : x = lambda b1 - mu b2, b_i in B^(.)} via the base-normed LP."""
    from .base_normed import base_norm_lp as _lp

    S._check(x)
    return _lp(base_normed_view(S), x.as_vector())


def base_representation(S: AdjoinedSpace, x: AdjoinedElement):
    """Nonzero cone element (v, a) as a * (v / a, 1) with (v / a, 1) in B^(.)."""
    if not cone_member(S, x) or (x.v.is_zero() and x.alpha == 0):
        raise ValueError("need a nonzero cone element")
    b = AdjoinedElement(x.v / x.alpha, 1)
    return x.alpha, b


@dataclass(frozen=True)
class BaseSplit:
    lam: Fraction
    b1: AdjoinedElement
    mu: Fraction
    b2: AdjoinedElement

    def value(self) -> AdjoinedElement:
        return self.b1 * self.lam - self.b2 * self.mu


def unit_ball_split(S: AdjoinedSpace, x: AdjoinedElement) -> BaseSplit:
    """For ||v|| <= 1, |a| <= 1: (v, a) = lam b1 - mu b2, b_i in B^(.), lam + mu <= 1.

    If ||v|| <= |a| a single base point suffices; otherwise y = v / ||v||,
    b1 = (y, 1), b2 = (-y, 1) and 2 lam = ||v|| + a, 2 mu = ||v|| - a.
    """
    S._check(x)
    if not S.base_norm_oracle.polyhedral:
        raise ValueError("exact split needs a polyhedral norm")
    n = norm_eval(S.base_norm_oracle, x.v)
    if n > 1 or abs(x.alpha) > 1:
        raise ValueError("element is outside co(B u -B)")
    e = S.unit
    if n <= abs(x.alpha):
        if x.alpha == 0:
            return BaseSplit(Fraction(0), e, Fraction(0), e)
        b = AdjoinedElement(x.v / x.alpha, 1)
        if x.alpha > 0:
            return BaseSplit(x.alpha, b, Fraction(0), e)
        return BaseSplit(Fraction(0), e, -x.alpha, b)
    y = x.v / n
    return BaseSplit((n + x.alpha) / 2, AdjoinedElement(y, 1),
                     (n - x.alpha) / 2, AdjoinedElement(-y, 1))


def pairing(f: Sequence, c, x: AdjoinedElement) -> Fraction:
    """(f, c) acting on (v, a) as f(v) + c a."""
    return dot(f, x.v) + Fraction(c) * x.alpha
