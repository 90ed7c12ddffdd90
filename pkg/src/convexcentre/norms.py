"""Norm oracles and Minkowski gauges of balanced polytopes.

A polyhedral norm is the gauge of a balanced polytope ``C``::

    r(x) = min { sum(mu) : sum_j mu_j v_j = x, mu >= 0 }

which is exact. ``Lead(C)`` is the set where ``r == 1``. For polytope balls
of dimension two or more both smoothness (Property (S)) and strict convexity
fail; the routines here return explicit witnesses for that.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import DimensionError, Vector, dot, rank
from .lp import LpProblem, lp_solve
from .polytope import Polytope, cross_polytope, cube, extreme_points, is_balanced

KINDS = ("l1", "l2", "linf", "poly")


@dataclass(frozen=True)
class GaugeResult:
    r: Fraction
    lead: Optional[Vector]


@dataclass(frozen=True)
class SmoothnessReport:
    point: Vector
    unique: bool
    witnesses: tuple


@dataclass(frozen=True)
class NormOracle:
    """Tagged norm on R^dim.

    ``poly`` norms carry their unit ball, which must have a negation-closed
    vertex set and be full-dimensional (so 0 is interior and the gauge is
    finite everywhere). The l2 norm is the only kind without exact values.
    """

    kind: str
    dim: int
    ball: Optional[Polytope] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown norm kind {self.kind!r}")
        if self.kind == "poly":
            if self.ball is None:
                raise ValueError("polytope norm needs a ball")
            if self.ball.dim != self.dim:
                raise DimensionError(f"ball has dimension {self.ball.dim}, expected {self.dim}")
            if not self.ball.is_vertex_symmetric():
                raise ValueError("ball is not absolutely convex: vertex set not closed under negation")
            if not self.ball.is_full_dimensional():
                raise ValueError("ball is not full-dimensional: 0 is not an interior point")
        elif self.ball is not None:
            raise ValueError(f"{self.kind} norm takes no ball")
        if self.dim < 0 or (self.kind == "poly" and self.dim == 0):
            raise DimensionError("bad dimension")

    @classmethod
    def l1(cls, dim: int) -> "NormOracle":
        return cls("l1", dim)

    @classmethod
    def l2(cls, dim: int) -> "NormOracle":
        return cls("l2", dim)

    @classmethod
    def linf(cls, dim: int) -> "NormOracle":
        return cls("linf", dim)

    @classmethod
    def poly(cls, ball: Polytope) -> "NormOracle":
        return cls("poly", ball.dim, ball)

    @property
    def polyhedral(self) -> bool:
        return self.kind != "l2"

    def unit_ball(self) -> Polytope:
        if self.kind == "poly":
            return self.ball
        if self.dim == 0:
            raise ValueError("the zero space has no polytope ball")
        if self.kind == "l1":
            return cross_polytope(self.dim)
        if self.kind == "linf":
            return cube(self.dim)
        raise ValueError("the l2 ball is not a polytope")

    def dual(self) -> "NormOracle":
        """Dual norm oracle, where it has a closed form."""
        if self.kind == "l1":
            return NormOracle.linf(self.dim)
        if self.kind == "linf":
            return NormOracle.l1(self.dim)
        if self.kind == "l2":
            return self
        raise ValueError("dual of a polytope gauge has no vertex description here")


def _check_dim(o: NormOracle, x: Sequence) -> None:
    if len(x) != o.dim:
        raise DimensionError(f"vector has dimension {len(x)}, norm has {o.dim}")


def norm_squared(o: NormOracle, x: Sequence) -> Fraction:
    return sum((Fraction(c) ** 2 for c in x), Fraction(0))


def norm_eval(o: NormOracle, x: Sequence):
    """Norm of x: a Fraction for polyhedral kinds, a float for l2."""
    x = Vector(x)
    _check_dim(o, x)
    if o.kind == "l1":
        return sum((abs(c) for c in x), Fraction(0))
    if o.kind == "linf":
        return max((abs(c) for c in x), default=Fraction(0))
    if o.kind == "poly":
        return gauge(o.ball, x).r
    return math.sqrt(norm_squared(o, x))


def norm_le(o: NormOracle, x: Sequence, t) -> bool:
    """Exact test ||x|| <= t (l2 by squares)."""
    t = Fraction(t)
    if t < 0:
        return False
    if o.kind == "l2":
        _check_dim(o, x)
        return norm_squared(o, x) <= t * t
    return norm_eval(o, x) <= t


def dual_norm(o: NormOracle, f: Sequence):
    """sup{|f(x)| : ||x|| <= 1}; vertex scan for polytope balls."""
    f = Vector(f)
    _check_dim(o, f)
    if o.kind == "l1":
        return max((abs(c) for c in f), default=Fraction(0))
    if o.kind == "linf":
        return sum((abs(c) for c in f), Fraction(0))
    if o.kind == "poly":
        return max(abs(dot(f, v)) for v in o.ball.vertices)
    return math.sqrt(norm_squared(o, f))


def dual_norm_le(o: NormOracle, f: Sequence, t) -> bool:
    t = Fraction(t)
    if o.kind == "l2":
        _check_dim(o, f)
        return t >= 0 and norm_squared(o, f) <= t * t
    return dual_norm(o, f) <= t


def gauge_lp(vertices: Sequence[Vector], x: Sequence) -> Optional[Fraction]:
    """min sum(mu) with sum mu_j v_j = x, mu >= 0; None when x is out of reach."""
    m = len(vertices)
    rows = [[v[i] for v in vertices] for i in range(len(x))]
    out = lp_solve(LpProblem([1] * m, rows, list(x)))
    return out.value if out.optimal else None


def gauge(ball: Polytope, x: Sequence) -> GaugeResult:
    """Minkowski gauge of x and its lead point x / r.

    ``ball`` must be balanced; it may be lower-dimensional, in which case x
    has to lie in its linear span.
    """
    x = Vector(x)
    if len(x) != ball.dim:
        raise DimensionError(f"point has dimension {len(x)}, ball has {ball.dim}")
    if not is_balanced(ball):
        raise ValueError("ball is not absolutely convex")
    if x.is_zero():
        return GaugeResult(Fraction(0), None)
    r = gauge_lp(ball.vertices, x)
    if r is None:
        raise ValueError(f"{x} is outside the linear span of the ball")
    return GaugeResult(r, x / r)


def is_lead_point(ball: Polytope, x: Sequence) -> bool:
    return gauge(ball, x).r == 1


def negation_closure_of_lead(ball: Polytope, x: Sequence) -> bool:
    """Check that -x is a lead point whenever x is."""
    x = Vector(x)
    if not is_lead_point(ball, x):
        raise ValueError(f"{x} is not a lead point")
    return is_lead_point(ball, -x)


def supporting_functionals(ball: Polytope, x0: Sequence) -> SmoothnessReport:
    """Probe F = {f : f(x0) = 1, |f(v)| <= 1 on the ball} coordinate by coordinate.

    F is a polytope; it is a single point iff every coordinate range
    [min f_i, max f_i] over F is degenerate. Otherwise the two optima of the
    first non-degenerate coordinate are returned as distinct witnesses.
    """
    x0 = Vector(x0)
    if not is_lead_point(ball, x0):
        raise ValueError(f"{x0} is not a lead point of the ball")
    d = ball.dim
    verts = extreme_points(ball).vertices
    m = len(verts)
    # variables: f+ (d), f- (d), slacks s (m), t (m)
    nv = 2 * d + 2 * m
    rows = [list(x0) + [-c for c in x0] + [0] * (2 * m)]
    rhs = [1]
    for j, v in enumerate(verts):
        row = list(v) + [-c for c in v] + [0] * (2 * m)
        row[2 * d + j] = 1
        rows.append(row)
        row = [-c for c in v] + list(v) + [0] * (2 * m)
        row[2 * d + m + j] = 1
        rows.append(row)
        rhs += [1, 1]

    def extremal(i, sign):
        c = [0] * nv
        c[i], c[d + i] = sign, -sign
        out = lp_solve(LpProblem(c, rows, rhs))
        if not out.optimal:
            raise RuntimeError(f"supporting-functional LP ended {out.status.value}")
        p = out.point
        return Vector(p[k] - p[d + k] for k in range(d))

    first = None
    for i in range(d):
        lo, hi = extremal(i, 1), extremal(i, -1)
        if first is None:
            first = lo
        if lo[i] != hi[i]:
            return SmoothnessReport(x0, False, (lo, hi))
    return SmoothnessReport(x0, True, (first,))


def flat_segment(ball: Polytope) -> Optional[tuple]:
    """Two distinct extreme points whose midpoint still has gauge 1, or None.

    Scans vertex pairs in order. A hit is a nondegenerate segment on the unit
    sphere; none exists iff the sphere is strictly convex, which for a
    polytope means its span has dimension at most one.
    """
    verts = extreme_points(ball).vertices
    if rank(verts) <= 1:
        return None
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            if y == -x:
                continue
            if gauge(ball, (x + y) / 2).r == 1:
                return (x, y)
    return None


def common_support(ball: Polytope, x: Vector, y: Vector) -> Vector:
    """A norming functional g with g(x) = g(y) = 1 for a flat-segment pair."""
    g = supporting_functionals(ball, (x + y) / 2).witnesses[0]
    if dot(g, x) != 1 or dot(g, y) != 1:
        raise AssertionError("segment endpoints do not share the midpoint's support")
    return g


def satisfies_property_S(o: NormOracle):
    """(verdict, SmoothnessReport or None) for Property (S) of the unit ball.

    Polytope balls are refuted by scanning their vertices: in dimension two
    or more every vertex lies on at least two facets.
    """
    if o.kind == "l2" or o.dim <= 1:
        return True, None
    ball = o.unit_ball()
    for v in extreme_points(ball).vertices:
        rep = supporting_functionals(ball, v)
        if not rep.unique:
            return False, rep
    return True, None


def is_strictly_convex(o: NormOracle):
    """(verdict, witness pair or None)."""
    if o.kind == "l2" or o.dim <= 1:
        return True, None
    pair = flat_segment(o.unit_ball())
    return pair is None, pair
