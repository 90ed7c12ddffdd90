"""V-represented polytopes and LP-backed membership queries."""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import DimensionError, Vector, rank
from .lp import find_feasible


@dataclass(frozen=True)
class Polytope:
    """Convex hull of a finite, duplicate-free list of points.

    No facet description is ever computed; every geometric question is
    answered by an exact LP over convex weights on ``vertices``.
    """

    vertices: tuple

    def __post_init__(self):
        verts = tuple(Vector(v) for v in self.vertices)
        if not verts:
            raise ValueError("a polytope needs at least one vertex")
        d = len(verts[0])
        if d == 0:
            raise DimensionError("vertices must have positive dimension")
        for v in verts:
            if len(v) != d:
                raise DimensionError(f"vertex {v} has dimension {len(v)}, expected {d}")
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertices")
        object.__setattr__(self, "vertices", verts)

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def __len__(self) -> int:
        return len(self.vertices)

    def translate(self, shift: Sequence) -> "Polytope":
        shift = Vector(shift)
        return Polytope(tuple(v + shift for v in self.vertices))

    def affine_dim(self) -> int:
        v0 = self.vertices[0]
        return rank([v - v0 for v in self.vertices[1:]])

    def is_full_dimensional(self) -> bool:
        return self.affine_dim() == self.dim

    def is_vertex_symmetric(self) -> bool:
        """Vertex set closed under negation, as a set."""
        verts = set(self.vertices)
        return all(-v in verts for v in self.vertices)


def convex_weights(P: Polytope, x: Sequence) -> Optional[Vector]:
    """Convex weights expressing x in terms of P's vertices, or None."""
    x = Vector(x)
    if len(x) != P.dim:
        raise DimensionError(f"point has dimension {len(x)}, polytope has {P.dim}")
    m = len(P.vertices)
    rows = [[v[i] for v in P.vertices] for i in range(P.dim)]
    rows.append([1] * m)
    return find_feasible(rows, list(x) + [1], m)


def contains(P: Polytope, x: Sequence) -> bool:
    return convex_weights(P, x) is not None


def combine(P: Polytope, weights: Sequence) -> Vector:
    out = Vector.zeros(P.dim)
    for w, v in zip(weights, P.vertices):
        if w:
            out = out + v * w
    return out


@functools.lru_cache(maxsize=256)
def extreme_points(P: Polytope) -> Polytope:
    """Drop every listed vertex that is a convex combination of the others."""
    keep = []
    for i, v in enumerate(P.vertices):
        others = [u for j, u in enumerate(P.vertices) if j != i]
        if others and contains(Polytope(tuple(others)), v):
            continue
        keep.append(v)
    return Polytope(tuple(keep))


@functools.lru_cache(maxsize=256)
def is_balanced(P: Polytope) -> bool:
    """P = -P as a convex set (0 then lies in P)."""
    if P.is_vertex_symmetric():
        return True
    return all(contains(P, -v) for v in P.vertices)


def simplex(n: int) -> Polytope:
    """Standard simplex co{e_1, ..., e_n} in R^n."""
    return Polytope(tuple(Vector.unit(n, i) for i in range(n)))


def cross_polytope(n: int) -> Polytope:
    """co(S_n u -S_n): the l1 unit ball, vertices e_1..e_n then -e_1..-e_n."""
    pos = [Vector.unit(n, i) for i in range(n)]
    return Polytope(tuple(pos + [-v for v in pos]))


def cube(n: int) -> Polytope:
    """The l-infinity unit ball [-1, 1]^n."""
    return Polytope(tuple(Vector(s) for s in itertools.product((1, -1), repeat=n)))


def unit_square() -> Polytope:
    return Polytope(((0, 0), (1, 0), (0, 1), (1, 1)))


def segment(n: int = 1) -> Polytope:
    """co{-e_1, e_1} in R^n."""
    e = Vector.unit(n, 0)
    return Polytope((-e, e))


def barycentre(P: Polytope) -> Vector:
    return combine(P, [Fraction(1, len(P.vertices))] * len(P.vertices))
