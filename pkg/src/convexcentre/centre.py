"""Centres of polytopes and the boundary decomposition around a centre.

b0 is a centre of P when the point reflection b -> 2 b0 - b maps P into
itself. The reflection is affine, so it suffices that every vertex is sent
into P; the set of centres is therefore the projection of one polyhedron and
a single exact LP decides existence.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import Vector
from .lp import LpProblem, find_feasible, lp_solve
from .norms import gauge
from .polytope import Polytope, combine, contains, extreme_points, simplex


@dataclass(frozen=True)
class CentreResult:
    found: bool
    b0: Optional[Vector] = None
    witness: Optional[Vector] = None

    @property
    def status(self) -> str:
        return "Found" if self.found else "NotFound"


@dataclass(frozen=True)
class ReflectionDecomposition:
    b1: Vector
    b2: Vector
    alpha: Fraction


def _centre_system(E: Sequence[Vector], reflected: Sequence[int]):
    """Rows over [lambda | mu_i for i in reflected] for the centre polyhedron.

    lambda are convex weights of b0; mu_i are convex weights of 2 b0 - v_i.
    """
    m, d = len(E), len(E[0])
    nv = m * (1 + len(reflected))
    rows, rhs = [], []
    row = [0] * nv
    row[:m] = [1] * m
    rows.append(row)
    rhs.append(1)
    for k, i in enumerate(reflected):
        base = m * (k + 1)
        row = [0] * nv
        row[base:base + m] = [1] * m
        rows.append(row)
        rhs.append(1)
        for c in range(d):
            row = [0] * nv
            for j, v in enumerate(E):
                row[j] = -2 * v[c]
                row[base + j] = v[c]
            rows.append(row)
            rhs.append(-E[i][c])
    return rows, rhs, nv


def find_centre(P: Polytope) -> CentreResult:
    E = extreme_points(P).vertices
    everything = range(len(E))
    rows, rhs, nv = _centre_system(E, everything)
    sol = find_feasible(rows, rhs, nv)
    if sol is not None:
        b0 = Vector.zeros(P.dim)
        for w, v in zip(sol[:len(E)], E):
            if w:
                b0 = b0 + v * w
        return CentreResult(True, b0)
    # first vertex whose reflection cannot be accommodated together with the earlier ones
    for i in everything:
        rows, rhs, nv = _centre_system(E, range(i + 1))
        if find_feasible(rows, rhs, nv) is None:
            return CentreResult(False, witness=E[i])
    raise AssertionError("full centre system infeasible but every prefix feasible")


def verify_centre(P: Polytope, b0: Sequence) -> bool:
    b0 = Vector(b0)
    if not contains(P, b0):
        raise ValueError(f"{b0} is not a point of the polytope")
    return all(contains(P, b0 * 2 - v) for v in P.vertices)


def centre_is_unique(P: Polytope, b0: Sequence) -> bool:
    """Range of every coordinate of b0 over the centre polyhedron is a point."""
    b0 = Vector(b0)
    if not verify_centre(P, b0):
        raise ValueError(f"{b0} is not a centre")
    E = extreme_points(P).vertices
    rows, rhs, nv = _centre_system(E, range(len(E)))
    m = len(E)
    for c in range(P.dim):
        obj = [0] * nv
        obj[:m] = [v[c] for v in E]
        lo = lp_solve(LpProblem(obj, rows, rhs))
        hi = lp_solve(LpProblem([-a for a in obj], rows, rhs))
        if not (lo.optimal and hi.optimal):
            raise AssertionError("centre polyhedron is empty or unbounded")
        if lo.value != b0[c] or -hi.value != b0[c]:
            return False
    return True


def reflection_decompose(P: Polytope, b0: Sequence, b: Sequence) -> ReflectionDecomposition:
    """Write b = alpha b1 + (1 - alpha) b2 with b1, b2 antipodal about b0 on K.

    K is the translate by b0 of the lead points of P - b0, and 1/2 < alpha <= 1.
    """
    b0, b = Vector(b0), Vector(b)
    if not verify_centre(P, b0):
        raise ValueError(f"{b0} is not a centre")
    if not contains(P, b):
        raise ValueError(f"{b} is not a point of the polytope")
    if b == b0:
        raise ValueError("b equals the centre: the decomposition is not unique there")
    res = gauge(P.translate(-b0), b - b0)
    return ReflectionDecomposition(res.lead + b0, -res.lead + b0, (1 + res.r) / 2)


@dataclass(frozen=True)
class SimplexObstruction:
    vertex_index: int
    distance: Fraction
    bound: Fraction

    @property
    def excludes_centre(self) -> bool:
        return self.distance >= self.bound > 1


def simplex_centre_obstruction(n: int, b0: Optional[Sequence] = None) -> SimplexObstruction:
    """For a candidate b0 in S_n, the vertex e_m farthest in l1 from it.

    m is the index of the smallest coordinate, so b0_m <= 1/n and
    ||e_m - b0||_1 = 2 (1 - b0_m) >= 2 (1 - 1/n). Any centre would need
    that distance to be at most 1; for n >= 3 the bound already exceeds 1.
    """
    S = simplex(n)
    b0 = Vector(b0) if b0 is not None else combine(S, [Fraction(1, n)] * n)
    if not contains(S, b0):
        raise ValueError(f"{b0} is not in the simplex")
    m = min(range(n), key=lambda i: (b0[i], i))
    dist = sum((abs(c) for c in Vector.unit(n, m) - b0), Fraction(0))
    return SimplexObstruction(m, dist, 2 * (1 - Fraction(1, n)))
