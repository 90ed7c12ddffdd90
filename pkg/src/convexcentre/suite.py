"""Invariant batteries run against one input space.

Every check returns a ``Check`` record. Each check draws from its own RNG
seeded by ``(seed, check name)`` so results do not depend on which other
checks ran or in what order.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import adjunction as adj
from . import base_normed as bn
from . import order_unit as ou
from . import sampling
from .adjunction import AdjoinedElement, AdjoinedSpace
from .base_normed import BaseNormedSpace
from .centre import (centre_is_unique, find_centre, reflection_decompose, simplex_centre_obstruction,
                     verify_centre)
from .linalg import Vector, dot
from .norms import (NormOracle, common_support, dual_norm, gauge, is_lead_point, is_strictly_convex,
                    negation_closure_of_lead, norm_eval, satisfies_property_S)
from .order_unit import OrderUnitSpace
from .polytope import Polytope, contains, simplex


@dataclass
class Check:
    passed: bool = True
    checked: int = 0
    witness: Optional[object] = None
    details: dict = field(default_factory=dict)

    def record(self, ok: bool, witness=None) -> bool:
        self.checked += 1
        if not ok and self.passed:
            self.passed = False
            self.witness = witness
        return ok


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


# -- polytopes ---------------------------------------------------------------

def polytope_checks(P: Polytope, samples: int, seed: int) -> dict:
    out = {}
    res = find_centre(P)
    c = Check(details={"status": res.status})
    if res.found:
        c.details["centre"] = res.b0
        c.record(verify_centre(P, res.b0), res.b0)
        c.record(centre_is_unique(P, res.b0), res.b0)
    else:
        c.details["witness_vertex"] = res.witness
        c.record(res.witness is not None)
        if P == simplex(P.dim) and P.dim >= 3:
            ob = simplex_centre_obstruction(P.dim)
            c.details["obstruction"] = {"vertex_index": ob.vertex_index,
                                        "distance": ob.distance, "bound": ob.bound}
            c.record(ob.excludes_centre and ob.distance == ob.bound, ob)
    out["centre.find_verify_unique"] = c
    if not res.found:
        return out
    b0 = res.b0
    B0 = P.translate(-b0)

    rng, c = _rng(seed, "centre.reflection_closure"), Check()
    for _ in range(samples):
        p = sampling.convex_point(rng, P)
        c.record(contains(P, b0 * 2 - p), p)
    out["centre.reflection_closure"] = c

    rng, c = _rng(seed, "centre.balanced"), Check()
    for _ in range(samples):
        x = sampling.convex_point(rng, P) - b0
        lam = Fraction(rng.randint(0, 12), 12)
        c.record(contains(B0, x * lam) and contains(B0, -x), (x, lam))
    out["centre.balanced"] = c

    rng, c = _rng(seed, "centre.reflection_decompose"), Check()
    for _ in range(samples):
        b = sampling.convex_point(rng, P)
        if b == b0:
            continue
        d = reflection_decompose(P, b0, b)
        ok = (d.b1 * d.alpha + d.b2 * (1 - d.alpha) == b and Fraction(1, 2) < d.alpha <= 1
              and (d.b1 + d.b2) / 2 == b0 and is_lead_point(B0, d.b1 - b0)
              and negation_closure_of_lead(B0, d.b1 - b0))
        c.record(ok, b)
    out["centre.reflection_decompose"] = c

    rng, c = _rng(seed, "affine.positivity_norm_iso"), Check()
    for _ in range(samples):
        f = ou.random_affine(rng, P.dim)
        lhs, rhs = ou.sup_norm_split(P, b0, f, verified=True)
        theta, s = ou.centred_affine_iso(P, b0, f, verified=True)
        ok = (ou.positivity_criterion(P, b0, f, verified=True) and lhs == rhs
              and ou.centred_affine_inverse(theta, s) == f and theta(b0) == 0
              and ou.affine_is_positive(P, f) == ou.adjoined_is_positive(P, theta, s))
        c.record(ok, f)
    out["affine.positivity_norm_iso"] = c
    return out


# -- norms -------------------------------------------------------------------

def norm_checks(o: NormOracle, samples: int, seed: int) -> dict:
    out = {}
    strict, pair = is_strictly_convex(o)
    smooth, rep = satisfies_property_S(o)
    c = Check(details={"strictly_convex": strict, "property_s": smooth})
    expected = o.kind == "l2" or o.dim <= 1
    c.record(strict == expected and smooth == expected)
    if pair is not None:
        c.details["flat_segment"] = pair
        ball = o.unit_ball()
        x, y = pair
        g = common_support(ball, x, y)
        c.record(dot(g, x) == dot(g, y) == 1 and dual_norm(o, g) == 1, pair)
    if rep is not None:
        c.details["non_smooth_point"] = rep.point
        c.details["functionals"] = rep.witnesses
    out["norm.strict_and_property_s"] = c
    if not o.polyhedral or o.dim == 0:
        return out
    ball = o.unit_ball()

    rng, c = _rng(seed, "norm.axioms"), Check()
    for _ in range(samples):
        x, y = sampling.vector(rng, o.dim), sampling.vector(rng, o.dim)
        lam = sampling.rational(rng)
        nx, ny = norm_eval(o, x), norm_eval(o, y)
        c.record(norm_eval(o, x * lam) == abs(lam) * nx, ("homogeneity", x, lam))
        c.record(norm_eval(o, x + y) <= nx + ny, ("triangle", x, y))
        c.record((nx == 0) == x.is_zero(), ("definite", x))
    out["norm.axioms"] = c

    rng, c = _rng(seed, "norm.lead_decomposition"), Check()
    for _ in range(samples):
        x = sampling.vector(rng, o.dim)
        if x.is_zero():
            continue
        g = gauge(ball, x)
        s = Fraction(rng.randint(1, 12), rng.randint(1, 12))
        # x = (r / s) * (s * lead); only s = 1 keeps the second factor a lead point
        ok = (g.lead * g.r == x and is_lead_point(ball, g.lead)
              and negation_closure_of_lead(ball, g.lead)
              and (s == 1) == is_lead_point(ball, g.lead * s))
        c.record(ok, x)
    out["norm.lead_decomposition"] = c

    c = Check()
    for v in ball.vertices:
        c.record(gauge(ball, v).r <= 1, v)
    out["norm.unit_ball_recovery"] = c
    return out


# -- adjoined / order unit ---------------------------------------------------

def _adjoined_element(rng: random.Random, dim: int) -> AdjoinedElement:
    return AdjoinedElement(sampling.vector(rng, dim), sampling.rational(rng))


def adjoined_checks(S: AdjoinedSpace, samples: int, seed: int) -> dict:
    out = {}
    o = S.base_norm_oracle
    if o.polyhedral and o.dim:
        rng, c = _rng(seed, "adjoined.norms_vs_lp"), Check()
        for _ in range(samples):
            x = _adjoined_element(rng, S.dim)
            ue, ub = adj.order_unit_norm(S, x), adj.base_norm(S, x)
            c.record(ue == adj.order_unit_norm_lp(S, x), ("order_unit", x))
            c.record(ub == adj.base_norm_lp(S, x), ("base", x))
            c.record(ub <= ue <= 2 * ub, ("sandwich", x))
        out["adjoined.norms_vs_lp"] = c

        rng, c = _rng(seed, "adjoined.base_split"), Check()
        for _ in range(samples):
            x = _adjoined_element(rng, S.dim)
            n = adj.norm_eval(o, x.v)
            scale = max(n, abs(x.alpha))
            if scale == 0:
                continue
            x = x * (1 / scale)
            sp = adj.unit_ball_split(S, x)
            ok = (sp.value() == x and sp.lam >= 0 and sp.mu >= 0 and sp.lam + sp.mu <= 1
                  and adj.base_member(S, sp.b1) and adj.base_member(S, sp.b2))
            c.record(ok, x)
        out["adjoined.base_split"] = c

    rng, c = _rng(seed, "adjoined.base_representation"), Check()
    for _ in range(samples):
        x = ou.random_cone_element(OrderUnitSpace(o), rng)
        if x.alpha == 0:
            continue
        a, b = adj.base_representation(S, x)
        c.record(b * a == x and adj.base_member(S, b), x)
    out["adjoined.base_representation"] = c
    return out


def order_unit_checks(S: OrderUnitSpace, samples: int, seed: int) -> dict:
    out = {}
    t = ou.tau(S)
    central, _ = ou.is_central_state(S, t, samples, seed)
    c = Check()
    c.record(central)
    if S.dim:
        f0 = Vector.unit(S.dim, 0)
        other, w = ou.is_central_state(S, ou.State(f0), samples, seed)
        c.record(not other, w)
        c.details["non_central_witness"] = w
    out["order_unit.central_state"] = c

    d = ou.central_state_equivalences(S, samples, hash_seed(seed, "order_unit.central_state_equivalences"))
    c = Check(details={k: v for k, v in d.items() if k != "witness"})
    c.record(d["centre_of_states"] and d["dominated_by_2tau"] and d["cone_descriptions"],
             d["witness"])
    out["order_unit.central_state_equivalences"] = c

    tracial, w = ou.is_tracial(S)
    strict, _ = is_strictly_convex(S.v0_oracle)
    c = Check(details={"tracial": tracial})
    c.record(tracial == strict)
    if w is not None:
        c.details["dual_witness"] = w
    out["order_unit.tracial"] = c

    if not S.v0_oracle.polyhedral:
        return out
    rng, c = _rng(seed, "order_unit.norm_identity_best_scalar"), Check()
    for _ in range(samples):
        v = ou.random_element(S, rng)
        lhs, rhs = ou.central_norm_identity(S, v)
        c.record(lhs == rhs, ("norm_identity", v))
        alphas = [sampling.rational(rng) for _ in range(2)] + [v.alpha]
        c.record(ou.best_scalar_approx(S, v, alphas)[0], ("best_scalar", v))
    out["order_unit.norm_identity_best_scalar"] = c

    rng, c = _rng(seed, "order_unit.dual_remark"), Check()
    for _ in range(max(1, samples // 4)):
        f, cc = sampling.vector(rng, S.dim, 2), sampling.rational(rng, 2)
        r = ou.dual_remark_check(S, f, cc)
        c.record(r["positive"][0] == r["positive"][1] and r["norm"][0] == r["norm"][1], (f, cc))
    out["order_unit.dual_remark"] = c
    return out


def hash_seed(seed: int, name: str) -> int:
    return _rng(seed, name).getrandbits(32)


# -- base normed -------------------------------------------------------------

def base_normed_checks(S: BaseNormedSpace, samples: int, seed: int) -> dict:
    out = {}
    S = S.with_centre()
    c = Check()
    c.record(centre_is_unique(S.base, S.b0), S.b0)
    out["base.centre_unique"] = c

    rng, c = _rng(seed, "base.cone_membership_and_norm"), Check()
    for _ in range(samples):
        v = bn.random_vector(S, rng) if rng.random() < 0.6 else bn.random_cone_element(S, rng)
        ev = S.e_of(v)
        lp = bn.base_norm_lp(S, v)
        via_centre = bn.cone_member_via_centre(S, v)
        via_norm = lp == ev and ev >= 0
        via_gen = bn.cone_member_lp(S, v)
        c.record(via_centre == via_norm == via_gen, ("cone", v))
        c.record(lp >= bn.v0_norm(S, bn.v0_part(S, v)) and lp >= abs(ev), ("norm_lower_bounds", v))
        c.record(bn.norm_via_max_formula(S, v) == lp, ("max_formula", v))
        if ev != 0:
            b = v / ev
            c.record(bn.base_member_via_centre(S, b) == contains(S.base, b), ("base", b))
    out["base.cone_membership_and_norm"] = c

    rng, c = _rng(seed, "base.k_decomposition"), Check()
    for _ in range(samples):
        v = bn.random_vector(S, rng)
        dec = bn.k_decompose(S, v)
        if isinstance(dec, bn.ScalarOfCentre):
            c.record(S.b0 * dec.lam == v, v)
            continue
        swapped = bn.KDecomposition(dec.k_prime, dec.k, dec.beta, dec.alpha)
        ok = (dec.value() == v and abs(dec.alpha) >= abs(dec.beta) and bn.in_K(S, dec.k)
              and dec.k_prime == S.b0 * 2 - dec.k and dec.same_as(swapped))
        # moving k off its ray breaks the representation
        nudged = bn.random_K_point(S, rng)
        if nudged != dec.k and nudged != dec.k_prime:
            ok = ok and (nudged * dec.alpha + (S.b0 * 2 - nudged) * dec.beta != v)
        av = bn.abs_value(S, v)
        ok = ok and bn.cone_member_lp(S, av + v) and bn.cone_member_lp(S, av - v)
        c.record(ok, v)
    out["base.k_decomposition"] = c

    rep = bn.check_abs_axioms(S, samples, hash_seed(seed, "base.abs_axioms"))
    ext, ext_w = bn.ext_equals_K(S)
    strict, _ = bn.v0_is_strictly_convex(S)
    c = Check(details={f"axiom{i}": rep.results[i].passed for i in range(1, 6)})
    c.details.update(ext_equals_K=ext, v0_strictly_convex=strict)
    c.record(rep.core_pass, {i: rep.results[i].witness for i in range(1, 5)})
    c.record(ext == strict == rep.axiom5, {"ext_witness": ext_w, "axiom5": rep.results[5].witness})
    if rep.constructed_witness is not None:
        c.details["axiom5_counterexample"] = rep.constructed_witness
    out["base.abs_axioms_strictness"] = c
    return out


def run_suite(kind: str, obj, samples: int, seed: int) -> dict:
    """All applicable batteries for one input, keyed and sorted by check name."""
    batteries: list[Callable[[], dict]] = []
    if kind == "polytope":
        batteries.append(lambda: polytope_checks(obj, samples, seed))
    elif kind == "norm":
        batteries.append(lambda: norm_checks(obj, samples, seed))
    elif kind == "adjoined":
        o = obj.base_norm_oracle
        batteries.append(lambda: adjoined_checks(obj, samples, seed))
        batteries.append(lambda: order_unit_checks(OrderUnitSpace(o), samples, seed))
        batteries.append(lambda: norm_checks(o, samples, seed))
        if o.polyhedral and o.dim:
            batteries.append(lambda: base_normed_checks(adj.base_normed_view(obj), samples, seed))
    elif kind == "order_unit":
        batteries.append(lambda: order_unit_checks(obj, samples, seed))
        batteries.append(lambda: adjoined_checks(obj.adjoined, samples, seed))
    elif kind == "base_normed":
        batteries.append(lambda: base_normed_checks(obj, samples, seed))
        batteries.append(lambda: polytope_checks(obj.base, samples, seed))
    else:
        raise ValueError(f"unknown input kind {kind!r}")
    results = {}
    for run in batteries:
        results.update(run())
    return dict(sorted(results.items()))
