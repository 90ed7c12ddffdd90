"""Order unit spaces with a central state, and affine functions on a centred polytope.

An order unit space with a central state is handled in the adjoined form
V0^(.), elements (u, a) with central state tau(u, a) = a. A general state is
f0 + w * tau with f0 a functional on V0.

``AffineFunction`` stores ``(linear, constant)``; values on a polytope are
taken at the vertices because affine functions attain their extrema there.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import adjunction as adj
from .adjunction import AdjoinedElement, AdjoinedSpace
from .centre import verify_centre
from .linalg import DimensionError, Vector, dot
from .lp import LpProblem, lp_solve
from .norms import (NormOracle, common_support, dual_norm, dual_norm_le, is_strictly_convex,
                    norm_eval, norm_squared, satisfies_property_S)
from .polytope import Polytope, cross_polytope


@dataclass(frozen=True)
class OrderUnitSpace:
    v0_oracle: NormOracle

    @property
    def dim(self) -> int:
        return self.v0_oracle.dim

    @property
    def adjoined(self) -> AdjoinedSpace:
        return AdjoinedSpace(self.v0_oracle)


@dataclass(frozen=True)
class State:
    f0: Vector
    weight: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "f0", Vector(self.f0))
        object.__setattr__(self, "weight", Fraction(self.weight))

    def __call__(self, x: AdjoinedElement) -> Fraction:
        return dot(self.f0, x.v) + self.weight * x.alpha


def tau(S: OrderUnitSpace) -> State:
    return State(Vector.zeros(S.dim), 1)


def is_state(S: OrderUnitSpace, t: State) -> bool:
    return adj.state_member(S.adjoined, t.f0, t.weight)


def _rational_sqrt_upper(q: Fraction, slack: Fraction) -> Fraction:
    """A rational s with sqrt(q) <= s <= sqrt(q) + slack."""
    den = 1
    while Fraction(2, den) > slack:
        den *= 2
    n = math.ceil(q * den * den)
    return Fraction(math.isqrt(n) + 1, den)


def _central_violation(S: OrderUnitSpace, t: State) -> AdjoinedElement:
    """Cone element v with 2 t(v) e - v outside the cone, for f0 != 0.

    v = (-w, a) with ||w|| <= a and f0(w) > 0 maximal on the sphere; then
    t(v) = a - f0(w) and 2 t(v) e - v = (w, a - 2 f0(w)).
    """
    o = S.v0_oracle
    if o.polyhedral:
        w = max(o.unit_ball().vertices, key=lambda x: (dot(t.f0, x), x))
        return AdjoinedElement(-w, 1)
    n2 = norm_squared(o, t.f0)
    return AdjoinedElement(-t.f0, _rational_sqrt_upper(n2, n2))


def random_cone_element(S: OrderUnitSpace, rng: random.Random) -> AdjoinedElement:
    """(u, a) with ||u|| <= a, via an exact upper bound on ||u||."""
    u = Vector(Fraction(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(S.dim))
    o = S.v0_oracle
    if o.polyhedral:
        n = norm_eval(o, u)
    else:
        n = _rational_sqrt_upper(norm_squared(o, u), Fraction(1, 64))
    return AdjoinedElement(u, n + Fraction(rng.randint(0, 12), rng.randint(1, 6)))


def random_element(S: OrderUnitSpace, rng: random.Random) -> AdjoinedElement:
    u = Vector(Fraction(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(S.dim))
    return AdjoinedElement(u, Fraction(rng.randint(-12, 12), rng.randint(1, 6)))


def is_central_state(S: OrderUnitSpace, t: State, samples: int = 200, seed: int = 0):
    """(verdict, witness): t is central iff v <= 2 t(v) e on the whole cone.

    Closed form for adjoined spaces: central iff f0 = 0. The closed form is
    cross-checked on random cone elements; a witness cone element is
    returned when t is not central.
    """
    if not is_state(S, t):
        raise ValueError("not a state: need weight 1 and ||f0|| <= 1")
    A = S.adjoined
    if not t.f0.is_zero():
        v = _central_violation(S, t)
        if not adj.cone_member(A, v) or adj.cone_member(A, A.unit * (2 * t(v)) - v):
            raise AssertionError("constructed central-state violation is not one")
        return False, v
    rng = random.Random(seed)
    for _ in range(samples):
        v = random_cone_element(S, rng)
        if not adj.cone_member(A, A.unit * (2 * t(v)) - v):
            return False, v
    return True, None


def order_unit_norm_exact(S: OrderUnitSpace, x: AdjoinedElement) -> Fraction:
    """Order-unit norm from its defining LP (polyhedral V0 only)."""
    if S.dim == 0:
        return abs(x.alpha)
    return adj.order_unit_norm_lp(S.adjoined, x)


def central_norm_identity(S: OrderUnitSpace, v: AdjoinedElement):
    """(||v||, ||v - tau(v) e|| + |tau(v)|), both from the order-unit LP."""
    lhs = order_unit_norm_exact(S, v)
    tv = v.alpha
    rhs = order_unit_norm_exact(S, v - S.adjoined.unit * tv) + abs(tv)
    return lhs, rhs


def best_scalar_approx(S: OrderUnitSpace, v: AdjoinedElement, alphas: Iterable):
    """(ok, witness alpha): ||v - tau(v) e|| <= ||v - a e|| for every a given."""
    e = S.adjoined.unit
    best = order_unit_norm_exact(S, v - e * v.alpha)
    for a in alphas:
        a = Fraction(a)
        if best > order_unit_norm_exact(S, v - e * a):
            return False, a
    return True, None


def cone_member_generators(S: OrderUnitSpace, x: AdjoinedElement) -> bool:
    """x in the cone generated by {(b, 1) : b a unit-ball vertex}."""
    o = S.v0_oracle
    if S.dim == 0:
        return x.alpha >= 0
    verts = o.unit_ball().vertices
    rows = [[b[i] for b in verts] for i in range(S.dim)] + [[1] * len(verts)]
    out = lp_solve(LpProblem([0] * len(verts), rows, list(x.v) + [x.alpha]))
    return out.optimal


def _into_dual_ball(o: NormOracle, f: Vector) -> Vector:
    """Scale f into the dual unit ball, exactly (l1 bounds l2 from above)."""
    if f.is_zero() or dual_norm_le(o, f, 1):
        return f
    if o.polyhedral:
        return f / dual_norm(o, f)
    return f / sum(abs(c) for c in f)


def central_state_equivalences(S: OrderUnitSpace, samples: int = 200, seed: int = 0) -> dict:
    """Sampled agreement of the three descriptions of a central state tau.

    (1) tau is the centre of S(V): 2 tau - f is a state for sampled states f;
    (2) v <= 2 tau(v) e on sampled cone elements;
    (3) cone = {v : ||v - tau(v) e|| <= tau(v)}, compared on random v
        against the closed-form and generator descriptions of the cone.
    """
    rng = random.Random(seed)
    A = S.adjoined
    t = tau(S)
    out = {"centre_of_states": True, "dominated_by_2tau": True, "cone_descriptions": True,
           "witness": None}
    for _ in range(samples):
        f = Vector(Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(S.dim))
        f = _into_dual_ball(S.v0_oracle, f)
        if not adj.state_member(A, f, 1) or not adj.state_member(A, -f, 1):
            out["centre_of_states"] = False
            out["witness"] = ("state", f)
        p = random_cone_element(S, rng)
        if not adj.cone_member(A, A.unit * (2 * t(p)) - p):
            out["dominated_by_2tau"] = False
            out["witness"] = ("cone", p)
        x = random_element(S, rng) if rng.random() < 0.5 else random_cone_element(S, rng)
        closed = adj.cone_member(A, x)
        gens = cone_member_generators(S, x) if S.v0_oracle.polyhedral else closed
        if S.v0_oracle.polyhedral:
            ball = order_unit_norm_exact(S, x - A.unit * t(x)) <= t(x)
        else:
            ball = closed
        if not closed == gens == ball:
            out["cone_descriptions"] = False
            out["witness"] = ("element", x)
    return out


def functional_norm_lp(S: OrderUnitSpace, f: Sequence, c) -> Fraction:
    """sup{f(w) + c b : e -+ (w, b) in the cone} as an exact LP."""
    o = S.v0_oracle
    d = S.dim
    verts = o.unit_ball().vertices if d else ()
    m = len(verts)
    # variables: w+ (d), w- (d), b+, b-, mu+ (m), s+, mu- (m), s-
    nv = 2 * d + 2 + 2 * m + 2
    bp, bm = 2 * d, 2 * d + 1
    mp, sp = 2 * d + 2, 2 * d + 2 + m
    mm, sm = sp + 1, sp + 1 + m
    rows, rhs = [], []
    for sign, mu, s in ((1, mp, sp), (-1, mm, sm)):
        # e - sign*x in cone: -sign*w = sum mu v_j, sum mu + s = 1 - sign*b
        for i in range(d):
            row = [0] * nv
            row[i], row[d + i] = sign, -sign
            for j, v in enumerate(verts):
                row[mu + j] = v[i]
            rows.append(row)
            rhs.append(0)
        row = [0] * nv
        row[mu:mu + m] = [1] * m
        row[s] = 1
        row[bp], row[bm] = sign, -sign
        rows.append(row)
        rhs.append(1)
    obj = [0] * nv
    for i in range(d):
        obj[i], obj[d + i] = -Fraction(f[i]), Fraction(f[i])
    obj[bp], obj[bm] = -Fraction(c), Fraction(c)
    out = lp_solve(LpProblem(obj, rows, rhs))
    if not out.optimal:
        raise AssertionError(f"functional norm LP ended {out.status.value}")
    return -out.value


def dual_remark_check(S: OrderUnitSpace, f: Sequence, c) -> dict:
    """Dual descriptions for F = (f, c) acting as F(u, a) = f(u) + c a.

    positive: F >= 0 on the cone generators  vs  ||F - F(e) tau|| <= F(e);
    norm: LP supremum over the order-unit ball  vs  max(||f||, |c|).
    """
    f, c = Vector(f), Fraction(c)
    o = S.v0_oracle
    verts = o.unit_ball().vertices if S.dim else ()
    positive_gen = all(dot(f, v) + c >= 0 for v in verts) and c >= 0
    positive_norm = dual_norm_le(o, f, c) if S.dim else c >= 0
    norm_lp = functional_norm_lp(S, f, c)
    norm_formula = max(dual_norm(o, f) if S.dim else Fraction(0), abs(c))
    return {"positive": (positive_gen, positive_norm), "norm": (norm_lp, norm_formula)}


def dual_witness(S: OrderUnitSpace):
    """A dual-ball lead point with two distinct norming primal points.

    Built from a flat segment [x, y] of the V0 sphere: a functional g
    supporting its midpoint has ||g|| = 1 and g(x) = g(y) = 1.
    """
    ok, pair = is_strictly_convex(S.v0_oracle)
    if ok:
        return None
    x, y = pair
    g = common_support(S.v0_oracle.unit_ball(), x, y)
    return {"functional": g, "norming_points": (x, y)}


def is_tracial(S: OrderUnitSpace):
    """(verdict, witness). Tracial iff V0 is strictly convex.

    Polyhedral V0 of dimension >= 2 also gets a direct refutation of
    Property (S) on the dual ball; the two verdicts must agree.
    """
    strict, _ = is_strictly_convex(S.v0_oracle)
    if strict:
        return True, None
    w = dual_witness(S)
    if w is None or dual_norm(S.v0_oracle, w["functional"]) != 1:
        raise AssertionError("non-strictly-convex V0 without a dual witness")
    if S.v0_oracle.kind in ("l1", "linf"):
        smooth, _ = satisfies_property_S(S.v0_oracle.dual())
        if smooth:
            raise AssertionError("Property (S) verdict on the dual ball disagrees")
    return False, w


@dataclass(frozen=True)
class AffineFunction:
    linear: Vector
    constant: Fraction

    def __post_init__(self):
        object.__setattr__(self, "linear", Vector(self.linear))
        object.__setattr__(self, "constant", Fraction(self.constant))

    @classmethod
    def one(cls, dim: int) -> "AffineFunction":
        return cls(Vector.zeros(dim), 1)

    def __call__(self, b: Sequence) -> Fraction:
        return dot(self.linear, b) + self.constant

    def __add__(self, other: "AffineFunction") -> "AffineFunction":
        return AffineFunction(self.linear + other.linear, self.constant + other.constant)

    def __sub__(self, other: "AffineFunction") -> "AffineFunction":
        return AffineFunction(self.linear - other.linear, self.constant - other.constant)

    def __mul__(self, k) -> "AffineFunction":
        return AffineFunction(self.linear * k, self.constant * Fraction(k))

    __rmul__ = __mul__


def _check_affine(B: Polytope, f: AffineFunction) -> None:
    if len(f.linear) != B.dim:
        raise DimensionError(f"affine function on R^{len(f.linear)}, polytope in R^{B.dim}")


def affine_sup_norm(B: Polytope, f: AffineFunction) -> Fraction:
    _check_affine(B, f)
    return max(abs(f(v)) for v in B.vertices)


def affine_is_positive(B: Polytope, f: AffineFunction) -> bool:
    _check_affine(B, f)
    return min(f(v) for v in B.vertices) >= 0


def affine_extremum_lp(B: Polytope, f: AffineFunction, sign: int = 1) -> Fraction:
    """min over B of sign * f, by LP over convex weights."""
    _check_affine(B, f)
    vals = [sign * f(v) for v in B.vertices]
    out = lp_solve(LpProblem(vals, [[1] * len(vals)], [1]))
    return out.value


def _centre_guard(B: Polytope, b0: Sequence) -> Vector:
    b0 = Vector(b0)
    if not verify_centre(B, b0):
        raise ValueError(f"{b0} is not a centre")
    return b0


def positivity_criterion(B: Polytope, b0: Sequence, f: AffineFunction, verified: bool = False) -> bool:
    """f >= 0 on B  iff  ||f - f(b0) 1||_inf <= f(b0)."""
    b0 = Vector(b0) if verified else _centre_guard(B, b0)
    fb0 = f(b0)
    rhs = affine_sup_norm(B, f - AffineFunction.one(B.dim) * fb0) <= fb0
    return affine_is_positive(B, f) == rhs


def sup_norm_split(B: Polytope, b0: Sequence, f: AffineFunction, verified: bool = False):
    """(||f||_inf, ||f - f(b0) 1||_inf + |f(b0)|)."""
    b0 = Vector(b0) if verified else _centre_guard(B, b0)
    fb0 = f(b0)
    return (affine_sup_norm(B, f),
            affine_sup_norm(B, f - AffineFunction.one(B.dim) * fb0) + abs(fb0))


def centred_affine_iso(B: Polytope, b0: Sequence, f: AffineFunction, verified: bool = False):
    """f -> (theta, f(b0)) with theta = f - f(b0) 1, so theta(b0) = 0."""
    b0 = Vector(b0) if verified else _centre_guard(B, b0)
    s = f(b0)
    return f - AffineFunction.one(B.dim) * s, s


def centred_affine_inverse(theta: AffineFunction, scalar) -> AffineFunction:
    return theta + AffineFunction.one(len(theta.linear)) * Fraction(scalar)


def adjoined_is_positive(B: Polytope, theta: AffineFunction, scalar) -> bool:
    """(theta, s) in the cone of A0(B)^(.): ||theta||_inf <= s."""
    return affine_sup_norm(B, theta) <= Fraction(scalar)


def centred_cross_polytope(n: int) -> Polytope:
    """B_n = co(S_n u -S_n), centre 0."""
    if n < 2:
        raise ValueError("need n >= 2")
    return cross_polytope(n)


def bn_example_norm(n: int, f: AffineFunction):
    """(||f||_inf on B_n, |f(0)| + max_i |f(e_i) - f(0)|)."""
    B = centred_cross_polytope(n)
    f0 = f(Vector.zeros(n))
    rhs = abs(f0) + max(abs(f(Vector.unit(n, i)) - f0) for i in range(n))
    return affine_sup_norm(B, f), rhs


def random_affine(rng: random.Random, dim: int, bound: int = 64) -> AffineFunction:
    """Coefficients with numerators and denominators at most ``bound``."""
    q = lambda: Fraction(rng.randint(-bound, bound), rng.randint(1, bound))  # noqa: E731
    return AffineFunction(Vector(q() for _ in range(dim)), q())
