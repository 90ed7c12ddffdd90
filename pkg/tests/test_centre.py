import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from convexcentre import sampling
from convexcentre.centre import (centre_is_unique, find_centre, reflection_decompose,
                                 simplex_centre_obstruction, verify_centre)
from convexcentre.norms import gauge
from convexcentre.polytope import (Polytope, barycentre, contains, cross_polytope, cube,
                                   extreme_points, is_balanced, segment, simplex, unit_square)

from oracles import contains_float

THIRD = Fraction(1, 3)


def test_contains_examples():
    assert contains(cross_polytope(2), (Fraction(1, 2), Fraction(1, 2)))
    assert contains(simplex(3), (THIRD, THIRD, THIRD))
    assert not contains(simplex(3), (1, 1, 0))
    with pytest.raises(ValueError):
        contains(simplex(3), (1, 0))


def test_polytope_validation():
    for bad in [(), ((1, 0), (1,)), ((1, 0), (1, 0))]:
        with pytest.raises(ValueError):
            Polytope(bad)


def test_extreme_points_drop_interior_vertices():
    P = Polytope(((0, 0), (2, 0), (0, 2), (2, 2), (1, 1)))
    assert set(extreme_points(P).vertices) == {(0, 0), (2, 0), (0, 2), (2, 2)}


def test_contains_matches_float_oracle():
    rng = random.Random(3)
    P, _ = sampling.centred_polytope(rng, 3)
    for _ in range(40):
        x = sampling.vector(rng, 3, 5, 3)
        assert contains(P, x) == contains_float(P.vertices, x)


def test_find_centre_examples():
    for n in range(3, 7):
        res = find_centre(simplex(n))
        assert res.status == "NotFound" and res.witness in simplex(n).vertices
    res = find_centre(cross_polytope(3))
    assert res.status == "Found" and res.b0 == (0, 0, 0)
    assert find_centre(unit_square()).b0 == (Fraction(1, 2), Fraction(1, 2))
    assert find_centre(segment(1)).b0 == (0,)
    # a triangle in the plane is a 2-simplex: no centre either
    assert not find_centre(Polytope(((0, 0), (1, 0), (0, 1)))).found


def test_verify_and_unique():
    sq = unit_square()
    assert verify_centre(sq, (Fraction(1, 2), Fraction(1, 2)))
    assert not verify_centre(sq, (Fraction(1, 4), Fraction(1, 4)))
    assert not verify_centre(simplex(3), barycentre(simplex(3)))
    assert not contains(simplex(3), (-THIRD, 2 * THIRD, 2 * THIRD))
    with pytest.raises(ValueError):
        verify_centre(sq, (2, 2))
    assert centre_is_unique(sq, (Fraction(1, 2), Fraction(1, 2)))
    assert centre_is_unique(cross_polytope(3), (0, 0, 0))
    assert centre_is_unique(segment(1), (0,))


def test_lower_dimensional_centre_is_unique_in_its_hull():
    # a segment sitting in the plane
    P = Polytope(((0, 0), (2, 2)))
    assert find_centre(P).b0 == (1, 1) and centre_is_unique(P, (1, 1))


def test_simplex_obstruction():
    for n in range(3, 7):
        ob = simplex_centre_obstruction(n)
        assert ob.distance == ob.bound == 2 * (1 - Fraction(1, n)) and ob.excludes_centre
    # n = 2 meets the bound with equality 1: the segment does have a centre
    assert not simplex_centre_obstruction(2).excludes_centre


def test_reflection_decompose_examples():
    d = reflection_decompose(cross_polytope(2), (0, 0), (Fraction(1, 2), Fraction(1, 4)))
    assert d.b1 == (Fraction(2, 3), Fraction(1, 3))
    assert d.b2 == (-Fraction(2, 3), -Fraction(1, 3))
    assert d.alpha == Fraction(7, 8)
    d = reflection_decompose(cross_polytope(2), (0, 0), (1, 0))
    assert (d.b1, d.b2, d.alpha) == ((1, 0), (-1, 0), 1)
    with pytest.raises(ValueError):
        reflection_decompose(cross_polytope(2), (0, 0), (0, 0))
    with pytest.raises(ValueError):
        reflection_decompose(cross_polytope(2), (0, 0), (1, 1))


CENTRED = [sampling.centred_polytope(random.Random(s), d) for s, d in ((0, 2), (1, 3), (2, 2))]


@pytest.mark.parametrize("Pc", CENTRED, ids=["p2a", "p3", "p2b"])
def test_random_centred_polytopes(Pc):
    P, c = Pc
    res = find_centre(P)
    assert res.found and res.b0 == c and centre_is_unique(P, c)
    assert is_balanced(P.translate(-c))


@pytest.mark.parametrize("Pc", CENTRED, ids=["p2a", "p3", "p2b"])
@given(data=st.data())
def test_reflection_closure_and_decomposition(Pc, data):
    P, c = Pc
    seed = data.draw(st.integers(0, 10 ** 6))
    b = sampling.convex_point(random.Random(seed), P)
    assert contains(P, c * 2 - b)
    if b != c:
        d = reflection_decompose(P, c, b)
        assert d.b1 * d.alpha + d.b2 * (1 - d.alpha) == b
        assert Fraction(1, 2) < d.alpha <= 1
        assert gauge(P.translate(-c), d.b1 - c).r == 1


def test_cube_centre():
    assert find_centre(cube(3)).b0 == (0, 0, 0)
