"""Base-normed spaces whose base polytope has a centre.

The base B lies on the hyperplane {e = 1}; b0 is its centre. On the kernel
V0 = {e = 0} the norm is the gauge of B0 = B - b0. K is the translate by b0
of the unit sphere of V0; it is never enumerated, only tested
(``e(k) = 1`` and gauge 1).
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .centre import find_centre, verify_centre
from .linalg import DimensionError, Vector, dot, inverse, matvec, rank
from .lp import LpProblem, find_feasible, lp_solve
from .norms import NormOracle, flat_segment, gauge, is_strictly_convex
from .polytope import Polytope, extreme_points


@dataclass(frozen=True)
class BaseNormedSpace:
    base: Polytope
    e: Vector
    b0: Optional[Vector] = None

    def __post_init__(self):
        object.__setattr__(self, "e", Vector(self.e))
        if self.b0 is not None:
            object.__setattr__(self, "b0", Vector(self.b0))
        d = self.base.dim
        if len(self.e) != d:
            raise DimensionError(f"e has dimension {len(self.e)}, base has {d}")
        for v in self.base.vertices:
            if dot(self.e, v) != 1:
                raise ValueError(f"e(v) != 1 at base vertex {v}")
        # e = 1 on the base and e(0) = 0, so 0 is never in its affine hull;
        # the vertices must still span V for B - B to generate it
        if rank(self.base.vertices) != d:
            raise ValueError("base does not span the space: the cone is not generating")
        if self.b0 is not None and not verify_centre(self.base, self.b0):
            raise ValueError(f"{self.b0} is not a centre of the base")

    @property
    def dim(self) -> int:
        return self.base.dim

    def with_centre(self) -> "BaseNormedSpace":
        """Same space with b0 filled in by ``find_centre``."""
        if self.b0 is not None:
            return self
        res = find_centre(self.base)
        if not res.found:
            raise ValueError("base has no centre")
        return BaseNormedSpace(self.base, self.e, res.b0)

    @functools.cached_property
    def ball0(self) -> Polytope:
        """B0 = B - b0, the unit ball of V0 (lower-dimensional in V)."""
        return _require_centre(self).base.translate(-self.b0)

    def e_of(self, v: Sequence) -> Fraction:
        return dot(self.e, v)


def _require_centre(S: BaseNormedSpace) -> BaseNormedSpace:
    if S.b0 is None:
        raise ValueError("operation needs a verified centre b0")
    return S


def _check(S: BaseNormedSpace, v: Sequence) -> Vector:
    v = Vector(v)
    if len(v) != S.dim:
        raise DimensionError(f"vector has dimension {len(v)}, space has {S.dim}")
    return v


def v0_part(S: BaseNormedSpace, v: Sequence) -> Vector:
    """v - e(v) b0, the component of v in V0."""
    _require_centre(S)
    v = _check(S, v)
    return v - S.b0 * S.e_of(v)


def v0_norm(S: BaseNormedSpace, u: Sequence) -> Fraction:
    return gauge(S.ball0, u).r


def cone_member_via_centre(S: BaseNormedSpace, v: Sequence) -> bool:
    """||v - e(v) b0|| <= e(v)."""
    v = _check(_require_centre(S), v)
    ev = S.e_of(v)
    return ev >= 0 and v0_norm(S, v0_part(S, v)) <= ev


def base_member_via_centre(S: BaseNormedSpace, v: Sequence) -> bool:
    """e(v) = 1 and ||v - b0|| <= 1."""
    v = _check(_require_centre(S), v)
    return S.e_of(v) == 1 and v0_norm(S, v - S.b0) <= 1


def cone_member_lp(S: BaseNormedSpace, v: Sequence) -> bool:
    """v = sum lambda_j b_j with lambda >= 0 over the base vertices."""
    v = _check(S, v)
    verts = S.base.vertices
    rows = [[b[i] for b in verts] for i in range(S.dim)]
    return find_feasible(rows, list(v), len(verts)) is not None


def base_norm_lp(S: BaseNormedSpace, v: Sequence) -> Fraction:
    """min{sum lambda + sum mu : sum lambda_j b_j - sum mu_j b_j = v}."""
    v = _check(S, v)
    verts = S.base.vertices
    m = len(verts)
    rows = [[b[i] for b in verts] + [-b[i] for b in verts] for i in range(S.dim)]
    out = lp_solve(LpProblem([1] * (2 * m), rows, list(v)))
    if not out.optimal:
        raise ValueError(f"{v} is not in the span of the cone")
    return out.value


def norm_via_max_formula(S: BaseNormedSpace, v: Sequence) -> Fraction:
    """max(||v - e(v) b0||, |e(v)|)."""
    v = _check(_require_centre(S), v)
    return max(v0_norm(S, v0_part(S, v)), abs(S.e_of(v)))


@dataclass(frozen=True)
class KDecomposition:
    k: Vector
    k_prime: Vector
    alpha: Fraction
    beta: Fraction

    def value(self) -> Vector:
        return self.k * self.alpha + self.k_prime * self.beta

    def same_as(self, other: "KDecomposition") -> bool:
        """Equal up to the swap (k, alpha) <-> (k', beta)."""
        return (self.k, self.alpha, self.beta) == (other.k, other.alpha, other.beta) or (
            self.k == other.k_prime and self.alpha == other.beta and self.beta == other.alpha)


@dataclass(frozen=True)
class ScalarOfCentre:
    lam: Fraction


def k_decompose(S: BaseNormedSpace, v: Sequence) -> Union[KDecomposition, ScalarOfCentre]:
    """v = alpha k + beta k' with k in K, k' = 2 b0 - k and |alpha| >= |beta|.

    With u = v - e(v) b0 and r = ||u||: k = u / r + b0,
    alpha = (e(v) + r) / 2, beta = (e(v) - r) / 2, then the roles of
    (k, alpha) and (k', beta) are swapped when e(v) < 0. For e(v) = 0 the
    tie |alpha| = |beta| keeps the alpha > 0 ordering. Multiples of b0 have
    no K-decomposition and come back as ``ScalarOfCentre``.
    """
    v = _check(_require_centre(S), v)
    ev = S.e_of(v)
    u = v - S.b0 * ev
    if u.is_zero():
        return ScalarOfCentre(ev)
    r = v0_norm(S, u)
    k = u / r + S.b0
    kp = -u / r + S.b0
    alpha, beta = (ev + r) / 2, (ev - r) / 2
    if ev < 0:
        return KDecomposition(kp, k, beta, alpha)
    return KDecomposition(k, kp, alpha, beta)


def in_K(S: BaseNormedSpace, k: Sequence) -> bool:
    k = _check(_require_centre(S), k)
    return S.e_of(k) == 1 and v0_norm(S, k - S.b0) == 1


def abs_value(S: BaseNormedSpace, v: Sequence) -> Vector:
    """|v| = |alpha| k + |beta| k' (|lam| b0 for v = lam b0)."""
    dec = k_decompose(S, v)
    if isinstance(dec, ScalarOfCentre):
        return S.b0 * abs(dec.lam)
    return dec.k * abs(dec.alpha) + dec.k_prime * abs(dec.beta)


def v0_oracle(S: BaseNormedSpace) -> NormOracle:
    """The V0 norm as a polytope gauge in coordinates of a basis of V0."""
    ball = extreme_points(_require_centre(S).ball0)
    basis = []
    for v in ball.vertices:
        if rank(basis + [v]) > len(basis):
            basis.append(v)
    if not basis:
        raise ValueError("V0 is the zero space")
    # coordinates c of u in the basis W solve (W^T W) c = W^T u
    wt = basis
    gram_inv = inverse([[dot(a, b) for b in basis] for a in basis])
    coords = [matvec(gram_inv, matvec(wt, v)) for v in ball.vertices]
    return NormOracle.poly(Polytope(tuple(coords)))


def v0_dim(S: BaseNormedSpace) -> int:
    return rank(_require_centre(S).ball0.vertices)


def v0_is_strictly_convex(S: BaseNormedSpace):
    if v0_dim(S) <= 1:
        return True, None
    return is_strictly_convex(v0_oracle(S))


def ext_equals_K(S: BaseNormedSpace):
    """(K == ext(B), witness).

    ext(B) is the list of non-redundant base vertices. Each must lie in K;
    conversely a K-point that is not extreme is the lifted midpoint of two
    extreme points whose midpoint still has V0-norm 1.
    """
    _require_centre(S)
    for p in extreme_points(S.base).vertices:
        if not in_K(S, p):
            return False, p
    pair = flat_segment(S.ball0)
    if pair is None:
        return True, None
    x, y = pair
    return False, (x + y) / 2 + S.b0


@dataclass
class AxiomResult:
    passed: bool = True
    checked: int = 0
    witness: Optional[tuple] = None

    def record(self, ok: bool, witness) -> None:
        self.checked += 1
        if not ok and self.passed:
            self.passed = False
            self.witness = witness


@dataclass
class AxiomReport:
    results: dict = field(default_factory=lambda: {i: AxiomResult() for i in range(1, 6)})
    constructed_witness: Optional[tuple] = None

    @property
    def core_pass(self) -> bool:
        """Axioms (1)-(4), which hold in every centred base-normed space."""
        return all(self.results[i].passed for i in range(1, 5))

    @property
    def axiom5(self) -> bool:
        return self.results[5].passed


def _rand_q(rng: random.Random, bound: int = 3, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound * den, bound * den), rng.randint(1, den))


def _rand_pos(rng: random.Random, den: int = 6) -> Fraction:
    return Fraction(rng.randint(1, 3 * den), rng.randint(1, den))


def random_vector(S: BaseNormedSpace, rng: random.Random) -> Vector:
    return Vector(_rand_q(rng) for _ in range(S.dim))


def random_cone_element(S: BaseNormedSpace, rng: random.Random) -> Vector:
    """Positive multiple of a random convex combination of base vertices."""
    verts = S.base.vertices
    w = [Fraction(rng.randint(0, 6)) for _ in verts]
    if not any(w):
        w[rng.randrange(len(w))] = Fraction(1)
    s = sum(w)
    scale = _rand_pos(rng)
    out = Vector.zeros(S.dim)
    for wi, b in zip(w, verts):
        if wi:
            out = out + b * (wi * scale / s)
    return out


def random_K_point(S: BaseNormedSpace, rng: random.Random) -> Vector:
    while True:
        u = v0_part(S, random_vector(S, rng))
        if not u.is_zero():
            return u / v0_norm(S, u) + S.b0


def axiom5_counterexample(S: BaseNormedSpace) -> Optional[tuple]:
    """Triple (u, v, w) refuting axiom (5), built from a flat face of B0.

    With x0 the midpoint of a flat segment [y, z] on the unit sphere of V0:
    u = -x0 + b0, v = x0 + b0, w = (y + b0) / 2. Then |u - v| = u + v and
    0 <= w <= v, but w is not a multiple of u' = v, so |u - w| != u + w.
    """
    pair = flat_segment(_require_centre(S).ball0)
    if pair is None:
        return None
    y, z = pair
    x0 = (y + z) / 2
    return (-x0 + S.b0, x0 + S.b0, (y + S.b0) / 2)


def check_abs_axioms(S: BaseNormedSpace, sample_count: int = 200, seed: int = 0) -> AxiomReport:
    """Randomised exact check of the absolute-value axioms (1)-(5).

    Triples for (4) and (5) satisfy |u - v| = u + v by construction:
    u = a k and v = b k' for k in K and a, b > 0.
    """
    _require_centre(S)
    rng = random.Random(seed)
    rep = AxiomReport()
    R = rep.results
    cone = functools.partial(cone_member_lp, S)
    A = functools.partial(abs_value, S)

    for _ in range(sample_count):
        p = random_cone_element(S, rng)
        R[1].record(A(p) == p, (p,))

        v = random_vector(S, rng)
        av = A(v)
        R[2].record(cone(av + v) and cone(av - v), (v,))

        lam = _rand_q(rng)
        R[3].record(A(v * lam) == A(v) * abs(lam), (v, lam))

        k = random_K_point(S, rng)
        kp = S.b0 * 2 - k
        a, b, c = _rand_pos(rng), _rand_pos(rng), _rand_pos(rng)
        u, v4, w4 = k * a, kp * b, kp * c
        if rng.random() < 0.2:
            v4 = Vector.zeros(S.dim)
        hyp = A(u - v4) == u + v4 and A(u - w4) == u + w4
        if not hyp:
            raise AssertionError("constructed triple violates its own hypothesis")
        for s in (1, -1):
            t = A(v4 + w4 * s)
            R[4].record(A(u - t) == u + t, (u, v4, w4, s))

        # axiom (5): 0 <= w <= v
        u5, v5 = k * a, kp * b
        if rng.random() < 0.5:
            w5 = v5 * Fraction(rng.randint(0, 12), 12)
        else:
            w5 = v5 - random_cone_element(S, rng) * Fraction(1, rng.randint(2, 12))
            if not cone(w5):
                w5 = v5 * Fraction(1, 2)
        R[5].record(A(u5 - w5) == u5 + w5, (u5, v5, w5))

    triple = axiom5_counterexample(S)
    if triple is not None:
        u, v, w = triple
        if A(u - v) != u + v or not cone(w) or not cone(v - w):
            raise AssertionError("constructed axiom (5) triple violates its hypothesis")
        rep.constructed_witness = triple
        R[5].record(A(u - w) == u + w, triple)
    return rep
