from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from convexcentre.linalg import (DimensionError, Vector, dot, format_vector, inverse, matvec,
                                 parse_vector, rank, to_rational)
from convexcentre.lp import LpProblem, LpStatus, find_feasible, lp_solve, satisfies

from conftest import rationals


def test_to_rational_accepts_exact_forms():
    assert to_rational("3/4") == Fraction(3, 4)
    assert to_rational(" -3 ") == -3
    assert to_rational(5) == 5


@pytest.mark.parametrize("bad", ["1/x", "", "1/0", "0.5.1"])
def test_to_rational_rejects_malformed(bad):
    with pytest.raises(ValueError, match="malformed"):
        to_rational(bad)


@pytest.mark.parametrize("bad", [0.5, True, None])
def test_to_rational_rejects_inexact(bad):
    with pytest.raises(TypeError):
        to_rational(bad)


def test_dot_examples():
    assert dot((1, 1, 1), Vector(["1/2", "1/4", "1/4"])) == 1
    assert dot((0, 0), (5, -7)) == 0
    assert dot((2, -1), (3, 4)) == 2
    with pytest.raises(DimensionError):
        dot((1, 2), (1, 2, 3))


def test_vector_round_trip():
    v = parse_vector("1/2,-3,0")
    assert v == Vector([Fraction(1, 2), -3, 0])
    assert parse_vector(format_vector(v)) == v
    with pytest.raises(ValueError):
        parse_vector("1,,2")


def test_lp_examples():
    out = lp_solve(LpProblem([1], [[1]], [1]))
    assert out.status is LpStatus.OPTIMAL and out.value == 1 and out.point == (1,)
    out = lp_solve(LpProblem([1, 1], [[1, -1]], [1]))
    assert out.value == 1 and out.point == (1, 0)
    assert lp_solve(LpProblem([0, 0], [[1, 1]], [-1])).status is LpStatus.INFEASIBLE


def test_lp_unbounded_and_structural_errors():
    assert lp_solve(LpProblem([-1, 0], [[1, -1]], [0])).status is LpStatus.UNBOUNDED
    with pytest.raises(DimensionError):
        LpProblem([1, 1], [[1]], [1])
    with pytest.raises(DimensionError):
        LpProblem([1], [[1], [1]], [1])


def test_lp_redundant_rows():
    # duplicated and dependent equality rows must not break phase 1
    out = lp_solve(LpProblem([1, 2, 0], [[1, 1, 1], [1, 1, 1], [2, 2, 2]], [3, 3, 6]))
    assert out.optimal and out.value == 0


def test_inverse_and_rank():
    m = [[2, 1], [1, 1]]
    inv = inverse(m)
    assert matvec(m, matvec(inv, (3, 5))) == (3, 5)
    assert rank([(1, 2), (2, 4)]) == 1
    with pytest.raises(ValueError):
        inverse([[1, 2], [2, 4]])


lp_rows = st.integers(1, 3).flatmap(lambda m: st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(rationals(3, 3), min_size=n, max_size=n), min_size=m, max_size=m),
    st.lists(rationals(3, 3), min_size=m, max_size=m),
    st.lists(rationals(3, 3), min_size=n, max_size=n),
)))


def _dual_value(A, b, c):
    """max b.y s.t. A^T y <= c, written as an equality LP in y+, y-, s."""
    m, n = len(A), len(A[0])
    rows = []
    for j in range(n):
        rows.append([A[i][j] for i in range(m)] + [-A[i][j] for i in range(m)]
                    + [1 if k == j else 0 for k in range(n)])
    obj = [-x for x in b] + list(b) + [0] * n
    return lp_solve(LpProblem(obj, rows, c))


@given(lp_rows)
def test_lp_optimal_points_resubstitute(data):
    A, b, c = data
    p = LpProblem(c, A, b)
    out = lp_solve(p)
    if out.optimal:
        assert satisfies(p, out.point)
        assert dot(c, out.point) == out.value
    elif out.infeasible:
        assert find_feasible(A, b, len(c)) is None


@given(lp_rows)
def test_lp_strong_duality(data):
    A, b, c = data
    primal = lp_solve(LpProblem(c, A, b))
    dual = _dual_value(A, b, c)
    if primal.optimal:
        assert dual.optimal and -dual.value == primal.value
    if primal.unbounded:
        assert dual.infeasible
    if dual.unbounded:
        assert primal.infeasible


@given(lp_rows)
def test_lp_deterministic(data):
    A, b, c = data
    assert lp_solve(LpProblem(c, A, b)) == lp_solve(LpProblem(c, A, b))
