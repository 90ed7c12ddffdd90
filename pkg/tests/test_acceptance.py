"""Acceptance criteria 1-9, exact (zero tolerance).

Run under pytest, or directly with ``python3 tests/test_acceptance.py`` to
get one PASS/FAIL line per criterion.
"""
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from convexcentre import adjunction as adj, base_normed as bn, order_unit as ou, sampling
from convexcentre.adjunction import AdjoinedElement, AdjoinedSpace
from convexcentre.centre import (centre_is_unique, find_centre, simplex_centre_obstruction,
                                 verify_centre)
from convexcentre.cli import validate_report
from convexcentre.linalg import Vector, dot
from convexcentre.norms import (NormOracle, dual_norm, gauge, is_lead_point,
                                negation_closure_of_lead, norm_eval)
from convexcentre.order_unit import OrderUnitSpace
from convexcentre.polytope import contains, cross_polytope, simplex

ROOT = Path(__file__).resolve().parent.parent
SEED = 20260101


class Failed(Exception):
    pass


def need(ok, what):
    if not ok:
        raise Failed(what)


def l1_dist(a, b):
    return sum((abs(x - y) for x, y in zip(a, b)), Fraction(0))


def random_ball(seed):
    return NormOracle.poly(sampling.symmetric_ball(random.Random(seed), 2, 3))


# -- criteria ------------------------------------------------------------------

def criterion_1():
    rng = random.Random(SEED)
    for n in (3, 4, 5, 6):
        t0 = time.perf_counter()
        S = simplex(n)
        res = find_centre(S)
        need(not res.found, f"S_{n} reported a centre")
        bound = 2 * (1 - Fraction(1, n))
        ob = simplex_centre_obstruction(n)
        bary = Vector([Fraction(1, n)] * n)
        need(ob.distance == bound and bound > 1, f"n={n}: barycentre distance {ob.distance}")
        need(max(l1_dist(v, bary) for v in S.vertices) == bound, f"n={n}: direct distance")
        # every candidate b0 in S_n has a vertex at l1 distance >= 2(1 - 1/n) > 1
        for _ in range(50):
            b0 = sampling.convex_point(rng, S)
            need(max(l1_dist(v, b0) for v in S.vertices) >= bound, f"n={n}: candidate {b0}")
            need(simplex_centre_obstruction(n, b0).excludes_centre, f"n={n}: obstruction {b0}")
        need(not contains(S, bary * 2 - S.vertices[0]), "reflected e1 stays in S_n")
        dt = time.perf_counter() - t0
        need(dt <= 1.0, f"n={n} took {dt:.2f}s")
    return "S_3..S_6 NotFound; distance = 2(1-1/n) > 1 at barycentre; <= 1 s each"


def criterion_2():
    for n in (2, 3, 4, 5):
        P = cross_polytope(n)
        res = find_centre(P)
        need(res.found and res.b0 == Vector.zeros(n), f"n={n}: {res}")
        need(centre_is_unique(P, res.b0), f"n={n}: uniqueness")
        rng = random.Random(SEED + n)
        for _ in range(200):
            f = ou.random_affine(rng, n)
            lhs, rhs = ou.bn_example_norm(n, f)
            direct = max(abs(f(v)) for v in P.vertices)
            need(lhs == rhs == direct, f"n={n}: {f}")
    return "Found(0), unique, n=2..5; 800 B_n norm identities"


def criterion_3():
    spaces = {"l1^2": NormOracle.l1(2), "linf^2": NormOracle.linf(2), "ball6": random_ball(SEED)}
    need(len(spaces["ball6"].unit_ball().vertices) == 6, "random ball is not 6-vertex")
    for name, o in spaces.items():
        S = AdjoinedSpace(o)
        rng = random.Random(f"{SEED}:{name}")
        for _ in range(500):
            x = AdjoinedElement(sampling.vector(rng, 2), sampling.rational(rng))
            need(adj.order_unit_norm(S, x) == adj.order_unit_norm_lp(S, x), f"{name}: ou {x}")
            need(adj.base_norm(S, x) == adj.base_norm_lp(S, x), f"{name}: base {x}")
    return "3 x 500 elements, both norms equal their LP definitions"


def criterion_4():
    balls = {"l1^2": NormOracle.l1(2), "linf^2": NormOracle.linf(2), "l1^3": NormOracle.l1(3),
             "ball6": random_ball(SEED)}
    for name, o in balls.items():
        rng = random.Random(f"{SEED}:{name}")
        d = o.dim
        for _ in range(500):
            x, y = sampling.vector(rng, d), sampling.vector(rng, d)
            lam = sampling.rational(rng)
            nx, ny = norm_eval(o, x), norm_eval(o, y)
            need(norm_eval(o, x * lam) == abs(lam) * nx, f"{name}: homogeneity")
            need(norm_eval(o, x + y) <= nx + ny, f"{name}: triangle")
            need((nx == 0) == x.is_zero(), f"{name}: definiteness")
        ball = o.unit_ball()
        count = 0
        while count < 200:
            x = sampling.vector(rng, d)
            if x.is_zero():
                continue
            count += 1
            g = gauge(ball, x)
            need(g.lead * g.r == x and is_lead_point(ball, g.lead), f"{name}: lead of {x}")
            s = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            need(is_lead_point(ball, g.lead * s) == (s == 1), f"{name}: uniqueness at {x}")
            need(negation_closure_of_lead(ball, g.lead), f"{name}: negation of {x}")
    return "4 oracles x 500 pairs; 4 x 200 lead decompositions"


def criterion_5():
    rng = random.Random(SEED)
    spaces = {
        "l1^2": adj.base_normed_view(AdjoinedSpace(NormOracle.l1(2))),
        "linf^2": adj.base_normed_view(AdjoinedSpace(NormOracle.linf(2))),
        "rand2": sampling.centred_base_space(rng, 2),
        "rand3": sampling.centred_base_space(rng, 3),
    }
    for name, S in spaces.items():
        need(verify_centre(S.base, S.b0), f"{name}: centre")
        r = random.Random(f"{SEED}:{name}")
        for i in range(500):
            v = bn.random_vector(S, r) if i % 2 else bn.random_cone_element(S, r)
            ev = S.e_of(v)
            lp = bn.base_norm_lp(S, v)
            a, b, c = bn.cone_member_via_centre(S, v), bn.cone_member_lp(S, v), lp == ev
            need(a == b == c, f"{name}: cone descriptions disagree at {v}")
            need(bn.norm_via_max_formula(S, v) == lp, f"{name}: max formula at {v}")
            if ev:
                u = v / ev
                need(bn.base_member_via_centre(S, u) == contains(S.base, u), f"{name}: base {u}")
    return "4 centred spaces x 500 vectors; cone/base characterisations and max formula agree"


def criterion_6():
    spaces = {
        "R^1": adj.base_normed_view(AdjoinedSpace(NormOracle.l1(1))),
        "linf^2": adj.base_normed_view(AdjoinedSpace(NormOracle.linf(2))),
        "l1^2": adj.base_normed_view(AdjoinedSpace(NormOracle.l1(2))),
        "rand2": sampling.centred_base_space(random.Random(SEED), 2),
    }
    # reconstruction: 500 samples spread over the spaces
    for name, S in spaces.items():
        r = random.Random(f"{SEED}:{name}")
        for _ in range(125):
            v = bn.random_vector(S, r)
            d = bn.k_decompose(S, v)
            if isinstance(d, bn.ScalarOfCentre):
                need(S.b0 * d.lam == v, f"{name}: scalar {v}")
            else:
                need(d.k * d.alpha + d.k_prime * d.beta == v, f"{name}: reconstruction {v}")
                need(bn.in_K(S, d.k) and abs(d.alpha) >= abs(d.beta), f"{name}: shape {v}")
    for name, S in spaces.items():
        rep = bn.check_abs_axioms(S, 200, SEED)
        need(rep.core_pass, f"{name}: axioms 1-4 {[(i, r.witness) for i, r in rep.results.items()]}")
        strict, _ = bn.v0_is_strictly_convex(S)
        need(rep.axiom5 == strict, f"{name}: axiom 5 verdict {rep.axiom5} vs strict {strict}")
        need(bn.ext_equals_K(S)[0] == strict, f"{name}: ext(B) = K verdict")
        if name == "R^1":
            need(rep.axiom5 and strict, "R^1: axiom 5 should hold")
        if name in ("linf^2", "l1^2"):
            need(not rep.axiom5, f"{name}: axiom 5 should fail")
            u, v, w = rep.constructed_witness
            A = lambda x: bn.abs_value(S, x)  # noqa: E731
            need(A(u - v) == u + v, f"{name}: witness hypothesis |u - v| = u + v")
            need(bn.cone_member_lp(S, w) and bn.cone_member_lp(S, v - w), f"{name}: 0 <= w <= v")
            need(A(u - w) != u + w, f"{name}: witness conclusion")
    return "500 K-decompositions; axioms 1-4 on 4 spaces; axiom 5 iff strictly convex"


def criterion_7():
    spaces = {"l1^2": NormOracle.l1(2), "linf^2": NormOracle.linf(2), "ball6": random_ball(SEED)}
    for name, o in spaces.items():
        S = OrderUnitSpace(o)
        A = S.adjoined
        t = ou.tau(S)
        need(ou.is_central_state(S, t, 200, SEED) == (True, None), f"{name}: tau")
        d = ou.central_state_equivalences(S, 500, SEED)
        need(d["centre_of_states"] and d["dominated_by_2tau"] and d["cone_descriptions"],
             f"{name}: central state equivalences {d['witness']}")
        rng = random.Random(f"{SEED}:{name}")
        for _ in range(500):
            v = ou.random_element(S, rng)
            lhs, rhs = ou.central_norm_identity(S, v)
            need(lhs == rhs, f"{name}: norm identity at {v}")
            a = sampling.rational(rng)
            best = ou.order_unit_norm_exact(S, v - A.unit * t(v))
            need(best <= ou.order_unit_norm_exact(S, v - A.unit * a), f"{name}: best scalar {v}, {a}")
    need(ou.is_tracial(OrderUnitSpace(NormOracle.l2(3))) == (True, None), "l2^3 tracial")
    need(ou.is_tracial(OrderUnitSpace(NormOracle.l1(1))) == (True, None), "dim 1 tracial")
    for o in (NormOracle.l1(2), NormOracle.linf(2)):
        ok, w = ou.is_tracial(OrderUnitSpace(o))
        need(not ok and w is not None, f"{o.kind}: tracial verdict")
        g, (x, y) = w["functional"], w["norming_points"]
        need(x != y and dual_norm(o, g) == 1, f"{o.kind}: dual witness functional")
        need(dot(g, x) == dot(g, y) == 1 and norm_eval(o, x) == norm_eval(o, y) == 1,
             f"{o.kind}: norming points")
    return "3 adjoined spaces x 500 (state equivalences, norm identity, best scalar); tracial verdicts with dual witnesses"


def criterion_8():
    dims = (2, 3, 4, 2, 3)
    for j, d in enumerate(dims):
        P, c = sampling.centred_polytope(random.Random(SEED + j), d)
        res = find_centre(P)
        need(res.found and res.b0 == c, f"polytope {j}: centre")
        rng = random.Random(f"{SEED}:affine:{j}")
        for _ in range(100):
            f = ou.random_affine(rng, d)
            need(ou.positivity_criterion(P, c, f, verified=True), f"polytope {j}: positivity {f}")
            lhs, rhs = ou.sup_norm_split(P, c, f, verified=True)
            need(lhs == rhs, f"polytope {j}: norm split {f}")
            theta, s = ou.centred_affine_iso(P, c, f, verified=True)
            need(theta(c) == 0 and ou.centred_affine_inverse(theta, s) == f, f"polytope {j}: iso {f}")
            need(ou.affine_is_positive(P, f) == ou.adjoined_is_positive(P, theta, s),
                 f"polytope {j}: order {f}")
    return "500 affine functions over 5 centred polytopes (dims 2-4)"


def criterion_9():
    import json

    for name in ("square.json", "adjoined_linf_2.json"):
        cmd = [sys.executable, "-m", "convexcentre.cli", "suite", "--input",
               str(ROOT / "inputs" / name), "--seed", "11", "--samples", "40"]
        runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(2)]
        need(all(r.returncode == 0 for r in runs), f"{name}: exit codes {[r.returncode for r in runs]}")
        need(runs[0].stdout == runs[1].stdout, f"{name}: reports differ")
        validate_report(json.loads(runs[0].stdout))
    return "suite reports byte-identical across two runs (2 inputs)"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9]


def evaluate(fn):
    n = fn.__name__.split("_")[1]
    t0 = time.perf_counter()
    try:
        detail, ok = fn(), True
    except Failed as exc:
        detail, ok = str(exc), False
    return ok, f"criterion {n}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - t0:.1f}s) {detail}"


@pytest.mark.parametrize("fn", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(fn, acceptance_log):
    ok, line = evaluate(fn)
    print(line)
    acceptance_log.append(line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(fn) for fn in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
