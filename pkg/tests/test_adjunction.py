import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from convexcentre import adjunction as adj, sampling
from convexcentre.adjunction import AdjoinedElement, AdjoinedSpace
from convexcentre.linalg import DimensionError
from convexcentre.norms import NormOracle

from conftest import rationals, vectors

S1 = AdjoinedSpace(NormOracle.l1(2))
E = S1.unit


def el(v, a):
    return AdjoinedElement(v, a)


def test_cone_and_norm_examples():
    assert adj.cone_member(S1, E)
    assert adj.cone_member(S1, el((3, 4), 7))
    assert not adj.cone_member(S1, el((3, 4), 6))
    assert not adj.cone_member(S1, el((0, 0), -1))
    assert adj.order_unit_norm(S1, E) == 1 and adj.base_norm(S1, E) == 1
    assert adj.order_unit_norm(S1, el((3, 4), -2)) == 9
    assert adj.base_norm(S1, el((3, 4), -2)) == 7


def test_base_and_state_examples():
    assert adj.base_member(S1, E)
    assert adj.base_member(S1, el((Fraction(1, 2), Fraction(1, 2)), 1))
    assert not adj.base_member(S1, el((0, 0), 2))
    assert adj.state_member(S1, (0, 0), 1)
    assert adj.state_member(S1, (1, -1), 1)
    assert not adj.state_member(S1, (2, 0), 1)
    assert not adj.state_member(S1, (0, 0), 2)


def test_dimension_checks():
    with pytest.raises(DimensionError):
        adj.cone_member(S1, el((1,), 1))
    with pytest.raises(DimensionError):
        adj.state_member(S1, (1, 2, 3), 1)


def test_lp_forms_need_polyhedral_norm():
    with pytest.raises(ValueError):
        adj.order_unit_norm_lp(AdjoinedSpace(NormOracle.l2(2)), el((1, 0), 1))


def test_base_representation():
    a, b = adj.base_representation(S1, el((1, 2), 6))
    assert a == 6 and b == el((Fraction(1, 6), Fraction(1, 3)), 1)
    with pytest.raises(ValueError):
        adj.base_representation(S1, el((1, 2), 1))


SPACES = [AdjoinedSpace(NormOracle.l1(2)), AdjoinedSpace(NormOracle.linf(2)),
          AdjoinedSpace(NormOracle.poly(sampling.symmetric_ball(random.Random(9), 2, 3))),
          AdjoinedSpace(NormOracle.l1(1))]


@pytest.mark.parametrize("S", SPACES, ids=["l1", "linf", "poly", "r1"])
@given(data=st.data())
def test_norms_equal_lp_definitions(S, data):
    x = el(data.draw(vectors(S.dim)), data.draw(rationals()))
    ue, ub = adj.order_unit_norm(S, x), adj.base_norm(S, x)
    assert ue == adj.order_unit_norm_lp(S, x)
    assert ub == adj.base_norm_lp(S, x)
    assert ub <= ue <= 2 * ub


@pytest.mark.parametrize("S", SPACES, ids=["l1", "linf", "poly", "r1"])
@given(data=st.data())
def test_base_split(S, data):
    o = S.base_norm_oracle
    v = data.draw(vectors(S.dim))
    a = data.draw(rationals())
    scale = max(adj.norm_eval(o, v), abs(a)) or 1
    x = el(v / scale, a / scale)
    sp = adj.unit_ball_split(S, x)
    assert sp.value() == x
    assert sp.lam >= 0 and sp.mu >= 0 and sp.lam + sp.mu <= 1
    assert adj.base_member(S, sp.b1) and adj.base_member(S, sp.b2)


@given(vectors(2), rationals(), vectors(2), rationals())
def test_pairing_is_bilinear(f, c, v, a):
    x = el(v, a)
    assert adj.pairing(f, c, x * 3) == 3 * adj.pairing(f, c, x)
    assert adj.pairing(f, c, x + E) == adj.pairing(f, c, x) + c
