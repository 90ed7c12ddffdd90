"""JSON front end: read a space description, run one operation, print a report.

Exit status is 0 when every contract of the operation holds, 1 when one is
falsified (the report then carries a witness) and 2 on unreadable or
invalid input.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys
import time
from fractions import Fraction
from typing import Callable, Optional

import jsonschema

from . import adjunction as adj
from . import base_normed as bn
from . import order_unit as ou
from .adjunction import AdjoinedElement, AdjoinedSpace
from .base_normed import BaseNormedSpace
from .centre import (centre_is_unique, find_centre, reflection_decompose, simplex_centre_obstruction,
                     verify_centre)
from .linalg import DimensionError, Vector, dot, parse_vector, to_rational
from .norms import (NormOracle, dual_norm, gauge, is_lead_point, is_strictly_convex,
                    negation_closure_of_lead, norm_eval, norm_squared, satisfies_property_S,
                    supporting_functionals)
from .order_unit import AffineFunction, OrderUnitSpace, State
from .polytope import Polytope, is_balanced, simplex
from .suite import run_suite

# -- input -------------------------------------------------------------------

_RATIONAL = {"type": ["string", "integer"]}
_VECTOR = {"type": "array", "items": _RATIONAL, "minItems": 1}
_VERTICES = {"type": "array", "items": _VECTOR, "minItems": 1}
_NORM = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["l1", "l2", "linf", "polytope"]},
        "dim": {"type": "integer", "minimum": 0},
        "vertices": _VERTICES,
    },
    "required": ["kind", "dim"],
    "if": {"properties": {"kind": {"const": "polytope"}}},
    "then": {"required": ["kind", "dim", "vertices"]},
    "additionalProperties": False,
}
_POLYTOPE_BODY = {
    "dim": {"type": "integer", "minimum": 1},
    "vertices": _VERTICES,
    "centre": _VECTOR,
}


def _kind(name: str, props: dict, required: list) -> dict:
    return {
        "if": {"properties": {"kind": {"const": name}}, "required": ["kind"]},
        "then": {
            "properties": {"kind": {"const": name}, **props},
            "required": ["kind", *required],
            "additionalProperties": False,
        },
    }


INPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {"kind": {"enum": ["polytope", "norm", "base_normed", "adjoined", "order_unit"]}},
    "required": ["kind"],
    "allOf": [
        _kind("polytope", _POLYTOPE_BODY, ["vertices"]),
        _kind("norm", {"norm": _NORM}, ["norm"]),
        _kind("adjoined", {"norm": _NORM}, ["norm"]),
        _kind("order_unit", {"norm": _NORM, "state": _VECTOR}, ["norm"]),
        _kind("base_normed", {
            "base": {"type": "object", "properties": _POLYTOPE_BODY, "required": ["vertices"],
                     "additionalProperties": False},
            "e": _VECTOR,
            "centre": _VECTOR,
        }, ["base", "e"]),
    ],
}

_SCALAR_OUT = {"type": ["string", "integer", "boolean", "null"]}
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$defs": {
        "value": {"anyOf": [
            _SCALAR_OUT,
            {"type": "array", "items": {"$ref": "#/$defs/value"}},
            {"type": "object", "additionalProperties": {"$ref": "#/$defs/value"}},
        ]},
    },
    "type": "object",
    "properties": {
        "operation": {"type": "string"},
        "inputs": {"type": "object"},
        "result": {"type": "object", "additionalProperties": {"$ref": "#/$defs/value"}},
        "witnesses": {"type": "array", "items": {"$ref": "#/$defs/value"}},
        "exact": {"type": "boolean"},
        "seed": {"type": "integer"},
        "elapsed_ms": {"type": ["number", "null"]},
    },
    "required": ["operation", "inputs", "result", "witnesses", "exact", "seed", "elapsed_ms"],
    "additionalProperties": False,
}


class InputError(Exception):
    pass


def _where(path) -> str:
    out = "$"
    for p in path:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def _vec(raw, path: tuple) -> Vector:
    out = []
    for i, x in enumerate(raw):
        try:
            out.append(to_rational(x))
        except (TypeError, ValueError) as exc:
            raise InputError(f"{_where(path + (i,))}: {exc}") from None
    return Vector(out)


def _verts(raw, dim: Optional[int], path: tuple) -> tuple:
    vs = tuple(_vec(v, path + (i,)) for i, v in enumerate(raw))
    for i, v in enumerate(vs):
        if dim is not None and len(v) != dim:
            raise InputError(f"{_where(path + (i,))}: dimension {len(v)}, expected {dim}")
    return vs


def _polytope(doc: dict, path: tuple) -> Polytope:
    vs = _verts(doc["vertices"], doc.get("dim"), path + ("vertices",))
    if len({len(v) for v in vs}) != 1:
        raise InputError(f"{_where(path + ('vertices',))}: vertices of mixed dimension")
    return Polytope(vs)


def _norm(doc: dict, path: tuple) -> NormOracle:
    if doc["kind"] == "polytope":
        ball = _polytope(doc, path)
        if ball.dim != doc["dim"]:
            raise InputError(f"{_where(path)}: dim {doc['dim']} but vertices of dimension {ball.dim}")
        return NormOracle.poly(ball)
    return NormOracle(doc["kind"], doc["dim"])


def build(doc: dict):
    """(kind, object) from a schema-valid document."""
    try:
        jsonschema.validate(doc, INPUT_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise InputError(f"{_where(exc.absolute_path)}: {exc.message}") from None
    kind = doc["kind"]
    try:
        if kind == "polytope":
            P = _polytope(doc, ())
            if "centre" in doc:
                c = _vec(doc["centre"], ("centre",))
                if len(c) != P.dim:
                    raise InputError(f"$.centre: dimension {len(c)}, expected {P.dim}")
                return kind, (P, c)
            return kind, (P, None)
        if kind == "norm":
            return kind, _norm(doc["norm"], ("norm",))
        if kind == "adjoined":
            return kind, AdjoinedSpace(_norm(doc["norm"], ("norm",)))
        if kind == "order_unit":
            S = OrderUnitSpace(_norm(doc["norm"], ("norm",)))
            f0 = _vec(doc["state"], ("state",)) if "state" in doc else Vector.zeros(S.dim)
            if len(f0) != S.dim:
                raise InputError(f"$.state: dimension {len(f0)}, expected {S.dim}")
            return kind, (S, State(f0))
        base = _polytope(doc["base"], ("base",))
        e = _vec(doc["e"], ("e",))
        c = _vec(doc["centre"], ("centre",)) if "centre" in doc else None
        return kind, BaseNormedSpace(base, e, c)
    except InputError:
        raise
    except (DimensionError, ValueError) as exc:
        raise InputError(str(exc)) from None


# -- output ------------------------------------------------------------------

class Encoder:
    """Exact values to JSON: rationals as "p/q", vectors as "a,b,c".

    Floats (from l2 norms) become 12-significant-digit strings and mark the
    report inexact.
    """

    def __init__(self):
        self.exact = True

    def scalar(self, x) -> str:
        if isinstance(x, float):
            self.exact = False
            return f"{x:.12g}"
        return str(Fraction(x))

    def __call__(self, x):
        if x is None or isinstance(x, (bool, str)):
            return x
        if isinstance(x, int):
            return x
        if isinstance(x, (Fraction, float)):
            return self.scalar(x)
        if isinstance(x, Vector):
            return ",".join(self.scalar(c) for c in x)
        if isinstance(x, AdjoinedElement):
            return self(x.as_vector())
        if isinstance(x, Polytope):
            return [self(v) for v in x.vertices]
        if isinstance(x, State):
            return {"f0": self(x.f0), "weight": self(x.weight)}
        if dataclasses.is_dataclass(x):
            return {f.name: self(getattr(x, f.name)) for f in dataclasses.fields(x)}
        if isinstance(x, dict):
            return {str(k): self(v) for k, v in x.items()}
        if isinstance(x, (list, tuple)):
            return [self(v) for v in x]
        raise TypeError(f"cannot encode {type(x).__name__}")


def validate_report(doc: dict) -> None:
    """Schema check plus a JSON round trip; raises on failure."""
    jsonschema.validate(doc, REPORT_SCHEMA)
    if json.loads(json.dumps(doc)) != doc:
        raise ValueError("report does not survive a JSON round trip")


@dataclasses.dataclass
class Outcome:
    result: dict
    contracts: dict
    witnesses: list = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.contracts.values())


# -- coercions ---------------------------------------------------------------

def _polytope_and_centre(kind, obj, need_centre: bool):
    if kind == "polytope":
        P, c = obj
    elif kind == "base_normed":
        P, c = obj.base, obj.b0
    else:
        raise InputError(f"operation needs a polytope or base_normed input, got {kind}")
    if c is not None and not verify_centre(P, c):
        raise InputError(f"$.centre: {c} is not a centre")
    if need_centre and c is None:
        res = find_centre(P)
        if not res.found:
            raise InputError("polytope has no centre")
        c = res.b0
    return P, c


def _norm_of(kind, obj) -> NormOracle:
    if kind == "norm":
        return obj
    if kind == "adjoined":
        return obj.base_norm_oracle
    if kind == "order_unit":
        return obj[0].v0_oracle
    if kind == "polytope":
        try:
            return NormOracle.poly(obj[0])
        except ValueError as exc:
            raise InputError(str(exc)) from None
    raise InputError(f"operation needs a norm, got {kind}")


def _ball_of(kind, obj) -> Polytope:
    if kind == "polytope":
        if not is_balanced(obj[0]):
            raise InputError("polytope is not balanced")
        return obj[0]
    o = _norm_of(kind, obj)
    if not o.polyhedral:
        raise InputError("operation needs a polyhedral ball")
    return o.unit_ball()


def _base_space(kind, obj) -> BaseNormedSpace:
    if kind == "base_normed":
        try:
            return obj.with_centre()
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if kind in ("adjoined", "order_unit", "norm"):
        o = _norm_of(kind, obj)
        if not o.polyhedral or o.dim == 0:
            raise InputError("base-normed view needs a polyhedral norm of dimension >= 1")
        return adj.base_normed_view(AdjoinedSpace(o))
    raise InputError(f"operation needs a base-normed space, got {kind}")


def _order_unit(kind, obj):
    if kind == "order_unit":
        return obj
    o = _norm_of(kind, obj)
    return OrderUnitSpace(o), State(Vector.zeros(o.dim))


def _need_point(args, dim: int) -> Vector:
    if args.point is None:
        raise InputError("--point is required")
    return _point(args.point, dim)


def _point(text: str, dim: int) -> Vector:
    try:
        x = parse_vector(text)
    except (TypeError, ValueError) as exc:
        raise InputError(f"--point: {exc}") from None
    if len(x) != dim:
        raise InputError(f"--point: dimension {len(x)}, expected {dim}")
    return x


# -- operations --------------------------------------------------------------

def op_gauge(kind, obj, args) -> Outcome:
    if kind != "polytope" and not _norm_of(kind, obj).polyhedral:
        o = _norm_of(kind, obj)
        x = _need_point(args, o.dim)
        r = norm_eval(o, x)
        lead = [float(c) / r for c in x] if r else None
        return Outcome({"r": r, "lead": lead}, {"r_nonnegative": r >= 0})
    ball = _ball_of(kind, obj)
    x = _need_point(args, ball.dim)
    try:
        g = gauge(ball, x)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if g.lead is None:
        return Outcome({"r": g.r, "lead": None}, {"zero": x.is_zero()})
    return Outcome({"r": g.r, "lead": g.lead}, {
        "reconstruction": g.lead * g.r == x,
        "lead_is_lead": is_lead_point(ball, g.lead),
        "negation_closed": negation_closure_of_lead(ball, g.lead),
    })


def op_lead(kind, obj, args) -> Outcome:
    if kind != "polytope" and _norm_of(kind, obj).kind == "l2":
        o = _norm_of(kind, obj)
        x = _need_point(args, o.dim)
        lead = norm_squared(o, x) == 1
        # on the euclidean sphere the only norming functional at x is x itself
        return Outcome({"is_lead": lead, "unique": lead or None,
                        "functionals": [x] if lead else []}, {})
    ball = _ball_of(kind, obj)
    x = _need_point(args, ball.dim)
    if x.is_zero() or not is_lead_point(ball, x):
        return Outcome({"is_lead": False, "unique": None, "functionals": []}, {})
    rep = supporting_functionals(ball, x)
    witnesses = [{"norming_functionals": list(rep.witnesses)}] if not rep.unique else []
    return Outcome(
        {"is_lead": True, "unique": rep.unique, "functionals": list(rep.witnesses)},
        {"negation_closed": negation_closure_of_lead(ball, x),
         "functionals_norm_x": all(dot(f, x) == 1 and dual_norm(NormOracle.poly(ball), f) == 1
                                   for f in rep.witnesses)},
        witnesses)


def op_centre(kind, obj, args) -> Outcome:
    P, _ = _polytope_and_centre(kind, obj, need_centre=False)
    res = find_centre(P)
    if res.found:
        unique = centre_is_unique(P, res.b0)
        return Outcome({"status": "Found", "centre": res.b0, "unique": unique},
                       {"verified": verify_centre(P, res.b0), "unique": unique})
    out = Outcome({"status": "NotFound", "centre": None, "unique": None},
                  {"witness_is_vertex": res.witness in P.vertices},
                  [{"unreflectable_vertex": res.witness}])
    if P.dim >= 3 and P == simplex(P.dim):
        ob = simplex_centre_obstruction(P.dim)
        out.result["obstruction"] = ob
        out.contracts["obstruction_excludes_centre"] = ob.excludes_centre
    return out


def op_decompose(kind, obj, args) -> Outcome:
    P, b0 = _polytope_and_centre(kind, obj, need_centre=True)
    b = _need_point(args, P.dim)
    try:
        d = reflection_decompose(P, b0, b)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    B0 = P.translate(-b0)
    return Outcome({"centre": b0, "b1": d.b1, "b2": d.b2, "alpha": d.alpha}, {
        "reconstruction": d.b1 * d.alpha + d.b2 * (1 - d.alpha) == b,
        "alpha_range": Fraction(1, 2) < d.alpha <= 1,
        "b2_reflects_b1": d.b1 + d.b2 == b0 * 2,
        "b1_on_boundary": is_lead_point(B0, d.b1 - b0),
    })


def op_knorm(kind, obj, args) -> Outcome:
    S = _base_space(kind, obj)
    v = _need_point(args, S.dim)
    lp = bn.base_norm_lp(S, v)
    formula = bn.norm_via_max_formula(S, v)
    ev, n0 = S.e_of(v), bn.v0_norm(S, bn.v0_part(S, v))
    return Outcome({"norm": lp, "formula": formula, "e": ev, "v0_norm": n0,
                    "in_cone": bn.cone_member_via_centre(S, v)},
                   {"formula_equals_lp": formula == lp, "lower_bounds": lp >= n0 and lp >= abs(ev)})


def _k_outcome(S: BaseNormedSpace, v: Vector) -> Outcome:
    dec = bn.k_decompose(S, v)
    av = bn.abs_value(S, v)
    cone = {"abs_plus_v_in_cone": bn.cone_member_lp(S, av + v),
            "abs_minus_v_in_cone": bn.cone_member_lp(S, av - v)}
    if isinstance(dec, bn.ScalarOfCentre):
        return Outcome({"scalar_of_centre": dec.lam, "abs": av},
                       {"reconstruction": S.b0 * dec.lam == v, **cone})
    return Outcome({"k": dec.k, "k_prime": dec.k_prime, "alpha": dec.alpha, "beta": dec.beta,
                    "abs": av}, {
        "reconstruction": dec.value() == v,
        "k_in_K": bn.in_K(S, dec.k),
        "k_prime_reflects_k": dec.k + dec.k_prime == S.b0 * 2,
        "dominance": abs(dec.alpha) >= abs(dec.beta),
        **cone,
    })


def op_kdecompose(kind, obj, args) -> Outcome:
    S = _base_space(kind, obj)
    return _k_outcome(S, _need_point(args, S.dim))


def op_abs(kind, obj, args) -> Outcome:
    S = _base_space(kind, obj)
    v = _need_point(args, S.dim)
    out = _k_outcome(S, v)
    out.result = {"abs": out.result["abs"], "v": v}
    return out


def op_axioms(kind, obj, args) -> Outcome:
    S = _base_space(kind, obj)
    rep = bn.check_abs_axioms(S, args.samples, args.seed)
    strict, _ = bn.v0_is_strictly_convex(S)
    ext, ext_w = bn.ext_equals_K(S)
    result = {f"axiom{i}": {"passed": r.passed, "checked": r.checked}
              for i, r in rep.results.items()}
    result.update(v0_strictly_convex=strict, ext_equals_K=ext)
    witnesses = [{f"axiom{i}": r.witness} for i, r in rep.results.items() if r.witness is not None]
    if rep.constructed_witness is not None:
        witnesses.append({"axiom5_counterexample": rep.constructed_witness})
    if ext_w is not None:
        witnesses.append({"ext_not_K": ext_w})
    return Outcome(result, {
        "axioms_1_to_4": rep.core_pass,
        "axiom5_iff_strict": rep.axiom5 == strict,
        "ext_equals_K_iff_strict": ext == strict,
    }, witnesses)


def op_adjoin_norms(kind, obj, args) -> Outcome:
    if kind == "order_unit":
        S = obj[0].adjoined
    else:
        S = AdjoinedSpace(_norm_of(kind, obj))
    x = AdjoinedElement.from_vector(_need_point(args, S.dim + 1))
    ue, ub = adj.order_unit_norm(S, x), adj.base_norm(S, x)
    result = {"order_unit_norm": ue, "base_norm": ub, "in_cone": adj.cone_member(S, x),
              "in_base": adj.base_member(S, x)}
    contracts = {"sandwich": ub <= ue <= 2 * ub}
    if S.base_norm_oracle.polyhedral and S.dim:
        result["order_unit_norm_lp"] = adj.order_unit_norm_lp(S, x)
        result["base_norm_lp"] = adj.base_norm_lp(S, x)
        contracts["order_unit_norm_equals_lp"] = result["order_unit_norm_lp"] == ue
        contracts["base_norm_equals_lp"] = result["base_norm_lp"] == ub
    return Outcome(result, contracts)


def _affine_from_point(x: Vector) -> AffineFunction:
    return AffineFunction(x[:-1], x[-1])


def op_affine(kind, obj, args) -> Outcome:
    rng = random.Random(args.seed)
    if args.bn is not None:
        n = args.bn
        if n < 2:
            raise InputError("--bn needs n >= 2")
        fs = ([_affine_from_point(_point(args.point, n + 1))] if args.point
              else [ou.random_affine(rng, n) for _ in range(args.samples)])
        bad = [f for f in fs if len(set(ou.bn_example_norm(n, f))) != 1]
        result = {"n": n, "checked": len(fs)}
        if len(fs) == 1:
            result["sup_norm"], result["formula"] = ou.bn_example_norm(n, fs[0])
        return Outcome(result, {"bn_norm_formula": not bad}, [{"function": bad[0]}] if bad else [])
    if kind is None:
        raise InputError("--input or --bn is required")
    P, b0 = _polytope_and_centre(kind, obj, need_centre=True)
    fs = ([_affine_from_point(_point(args.point, P.dim + 1))] if args.point
          else [ou.random_affine(rng, P.dim) for _ in range(args.samples)])
    checks = {"positivity_criterion": [], "sup_norm_split": [], "iso_round_trip": [], "iso_order": []}
    for f in fs:
        lhs, rhs = ou.sup_norm_split(P, b0, f, verified=True)
        theta, s = ou.centred_affine_iso(P, b0, f, verified=True)
        ok = {"positivity_criterion": ou.positivity_criterion(P, b0, f, verified=True), "sup_norm_split": lhs == rhs,
              "iso_round_trip": ou.centred_affine_inverse(theta, s) == f and theta(b0) == 0,
              "iso_order": ou.affine_is_positive(P, f) == ou.adjoined_is_positive(P, theta, s)}
        for k, v in ok.items():
            if not v:
                checks[k].append(f)
    result = {"centre": b0, "checked": len(fs)}
    if len(fs) == 1:
        f = fs[0]
        theta, s = ou.centred_affine_iso(P, b0, f, verified=True)
        result.update(sup_norm=ou.affine_sup_norm(P, f), positive=ou.affine_is_positive(P, f),
                      theta=theta, scalar=s)
    witnesses = [{k: v[0]} for k, v in checks.items() if v]
    return Outcome(result, {k: not v for k, v in checks.items()}, witnesses)


def op_central_state(kind, obj, args) -> Outcome:
    S, t = _order_unit(kind, obj)
    if args.point is not None:
        t = State(_point(args.point, S.dim))
    if not ou.is_state(S, t):
        raise InputError("functional is not a state: need ||f0||* <= 1")
    central, w = ou.is_central_state(S, t, args.samples, args.seed)
    d = ou.central_state_equivalences(S, args.samples, args.seed)
    result = {"state": t, "central": central,
              "equivalences": {k: v for k, v in d.items() if k != "witness"}}
    contracts = {"central_iff_f0_zero": central == t.f0.is_zero(),
                 "equivalences": d["centre_of_states"] and d["dominated_by_2tau"] and d["cone_descriptions"]}
    witnesses = []
    if w is not None:
        witnesses.append({"violating_cone_element": w, "gap": _unit_gap(S, t, w)})
    if d["witness"] is not None:
        witnesses.append({"equivalences": d["witness"]})
    return Outcome(result, contracts, witnesses)


def _unit_gap(S: OrderUnitSpace, t: State, v: AdjoinedElement) -> AdjoinedElement:
    """2 t(v) e - v, which leaves the cone for a violating v."""
    return S.adjoined.unit * (2 * t(v)) - v


def op_tracial(kind, obj, args) -> Outcome:
    S, _ = _order_unit(kind, obj)
    tracial, w = ou.is_tracial(S)
    strict, _ = is_strictly_convex(S.v0_oracle)
    return Outcome({"tracial": tracial, "v0_strictly_convex": strict},
                   {"tracial_iff_strict": tracial == strict}, [w] if w else [])


def op_strict(kind, obj, args) -> Outcome:
    o = _norm_of(kind, obj)
    strict, pair = is_strictly_convex(o)
    if pair is None:
        return Outcome({"strictly_convex": strict}, {})
    ball = o.unit_ball()
    x, y = pair
    return Outcome({"strictly_convex": strict}, {
        "endpoints_on_sphere": is_lead_point(ball, x) and is_lead_point(ball, y),
        "midpoint_on_sphere": is_lead_point(ball, (x + y) / 2),
    }, [{"flat_segment": list(pair)}])


def op_property_s(kind, obj, args) -> Outcome:
    o = _norm_of(kind, obj)
    smooth, rep = satisfies_property_S(o)
    if rep is None:
        return Outcome({"property_s": smooth}, {})
    return Outcome({"property_s": smooth}, {
        "distinct_functionals": len(set(rep.witnesses)) >= 2,
        "functionals_norm_point": all(dot(f, rep.point) == 1 and dual_norm(o, f) == 1
                                      for f in rep.witnesses),
    }, [{"point": rep.point, "norming_functionals": list(rep.witnesses)}])


def op_suite(kind, obj, args) -> Outcome:
    target = obj
    if kind == "polytope":
        target = obj[0]
    elif kind == "order_unit":
        target = obj[0]
    results = run_suite(kind, target, args.samples, args.seed)
    result = {name: {"passed": c.passed, "checked": c.checked, "details": c.details}
              for name, c in results.items()}
    witnesses = [{"check": name, "witness": c.witness}
                 for name, c in results.items() if not c.passed]
    return Outcome(result, {name: c.passed for name, c in results.items()}, witnesses)


OPERATIONS: dict[str, Callable] = {
    "gauge": op_gauge,
    "lead": op_lead,
    "centre": op_centre,
    "decompose": op_decompose,
    "knorm": op_knorm,
    "kdecompose": op_kdecompose,
    "abs": op_abs,
    "axioms": op_axioms,
    "adjoin-norms": op_adjoin_norms,
    "affine": op_affine,
    "central-state": op_central_state,
    "tracial": op_tracial,
    "strict": op_strict,
    "property-s": op_property_s,
    "suite": op_suite,
}


# -- driver ------------------------------------------------------------------

def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convexcentre", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="operation", required=True)
    for name in OPERATIONS:
        s = sub.add_parser(name)
        s.add_argument("--input", metavar="FILE")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--samples", type=int, default=200)
        s.add_argument("--point", metavar="P/Q,...")
        s.add_argument("--timing", action="store_true", help="fill in elapsed_ms")
        fmt = s.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="pretty", action="store_false")
        fmt.add_argument("--pretty", dest="pretty", action="store_true")
        s.set_defaults(pretty=False)
        if name == "affine":
            s.add_argument("--bn", type=int, metavar="N", help="check the B_n norm formula")
    return p


def load(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def execute(args) -> tuple[int, dict]:
    t0 = time.perf_counter()
    doc, kind, obj = None, None, None
    if args.input is not None:
        doc = load(args.input)
        kind, obj = build(doc)
    elif not (args.operation == "affine" and args.bn is not None):
        raise InputError("--input is required")
    try:
        out = OPERATIONS[args.operation](kind, obj, args)
    except (DimensionError, ValueError) as exc:
        raise InputError(str(exc)) from None
    enc = Encoder()
    result = enc(out.result)
    result["contracts"] = out.contracts
    report = {
        "operation": args.operation,
        "inputs": {"document": doc, "point": args.point, "samples": args.samples,
                   "bn": getattr(args, "bn", None)},
        "result": result,
        "witnesses": enc(out.witnesses),
        "exact": enc.exact,
        "seed": args.seed,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3) if args.timing else None,
    }
    validate_report(report)
    return (0 if out.ok else 1), report


def render(report: dict) -> str:
    lines = [f"{report['operation']}: {'PASS' if all(report['result']['contracts'].values()) else 'FAIL'}"
             f"  (exact={str(report['exact']).lower()}, seed={report['seed']})"]

    def walk(prefix: str, v):
        if isinstance(v, dict):
            for k, x in v.items():
                walk(f"{prefix}.{k}" if prefix else str(k), x)
        else:
            lines.append(f"  {prefix}: {json.dumps(v)}")

    walk("", report["result"])
    for i, w in enumerate(report["witnesses"]):
        lines.append(f"  witness[{i}]: {json.dumps(w)}")
    return "\n".join(lines)


def main(argv=None) -> int:
    args = parser().parse_args(argv)
    try:
        code, report = execute(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.pretty:
        print(render(report))
    else:
        print(json.dumps(report, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
