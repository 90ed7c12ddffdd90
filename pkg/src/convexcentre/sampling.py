"""Seeded generators of small rational test objects."""
from __future__ import annotations

import random
from fractions import Fraction

from .base_normed import BaseNormedSpace
from .linalg import Vector, concat, inverse, matvec, transpose
from .polytope import Polytope, extreme_points


def rational(rng: random.Random, bound: int = 4, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound * den, bound * den), rng.randint(1, den))


def vector(rng: random.Random, dim: int, bound: int = 4, den: int = 6) -> Vector:
    return Vector(rational(rng, bound, den) for _ in range(dim))


def convex_point(rng: random.Random, P: Polytope) -> Vector:
    w = [Fraction(rng.randint(0, 8)) for _ in P.vertices]
    if not any(w):
        w[rng.randrange(len(w))] = Fraction(1)
    s = sum(w)
    out = Vector.zeros(P.dim)
    for wi, v in zip(w, P.vertices):
        if wi:
            out = out + v * (wi / s)
    return out


def symmetric_ball(rng: random.Random, dim: int = 2, pairs: int = 3) -> Polytope:
    """co{+-p_1, ..., +-p_k} with all 2k points extreme and full-dimensional."""
    while True:
        ps = [vector(rng, dim, 2, 4) for _ in range(pairs)]
        verts = tuple(ps + [-p for p in ps])
        if len(set(verts)) != len(verts) or any(p.is_zero() for p in ps):
            continue
        P = Polytope(verts)
        if P.is_full_dimensional() and len(extreme_points(P)) == len(verts):
            return P


def centred_polytope(rng: random.Random, dim: int, pairs: int = None):
    """(P, c): full-dimensional polytope c + co{+-p_i} with centre c."""
    pairs = pairs or dim + 1
    c = vector(rng, dim, 2, 4)
    while True:
        ps = [vector(rng, dim, 2, 4) for _ in range(pairs)]
        pts = [c + p for p in ps] + [c - p for p in ps]
        if len(set(pts)) != len(pts) or any(p.is_zero() for p in ps):
            continue
        P = Polytope(tuple(pts))
        if P.is_full_dimensional():
            return P, c


def _unimodular(rng: random.Random, n: int):
    """Random integer matrix with determinant 1 (lower times upper unitriangular)."""
    L = [[Fraction(rng.randint(-2, 2)) if j < i else Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    U = [[Fraction(rng.randint(-2, 2)) if j > i else Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    Ut = transpose(U)
    return [[sum(a * b for a, b in zip(row, col)) for col in Ut] for row in L]


def centred_base_space(rng: random.Random, dim0: int) -> BaseNormedSpace:
    """Base-normed space on R^(dim0 + 1) with a random centred base and a non-standard e.

    A centred polytope is lifted to height 1 and pushed through a random
    unimodular map T; e = e_last o T^-1 keeps the base at level 1.
    """
    P, c = centred_polytope(rng, dim0)
    T = _unimodular(rng, dim0 + 1)
    Tinv = inverse(T)
    base = Polytope(tuple(matvec(T, concat(v, (1,))) for v in P.vertices))
    e = Vector(Tinv[dim0])
    return BaseNormedSpace(base, e, matvec(T, concat(c, (1,))))
