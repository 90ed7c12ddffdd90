"""Independent floating-point oracles used to cross-check the exact code."""
import numpy as np
from scipy.optimize import linprog

TOL = 1e-7


def gauge_float(vertices, x) -> float:
    """min sum(mu) s.t. sum mu_j v_j = x, mu >= 0 (HiGHS)."""
    V = np.array([[float(c) for c in v] for v in vertices]).T
    res = linprog(np.ones(V.shape[1]), A_eq=V, b_eq=[float(c) for c in x], bounds=(0, None),
                  method="highs")
    assert res.status == 0
    return res.fun


def contains_float(vertices, x) -> bool:
    V = np.array([[float(c) for c in v] for v in vertices]).T
    A = np.vstack([V, np.ones(V.shape[1])])
    b = [float(c) for c in x] + [1.0]
    res = linprog(np.zeros(V.shape[1]), A_eq=A, b_eq=b, bounds=(0, None), method="highs")
    return res.status == 0


def support_range_float(vertices, x0, i) -> tuple:
    """min and max of f_i over {f : f(x0) = 1, |f(v)| <= 1}."""
    n = len(x0)
    A_ub = []
    for v in vertices:
        A_ub.append([float(c) for c in v])
        A_ub.append([-float(c) for c in v])
    b_ub = [1.0] * len(A_ub)
    out = []
    for sign in (1.0, -1.0):
        c = [0.0] * n
        c[i] = sign
        res = linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=[[float(t) for t in x0]], b_eq=[1.0],
                      bounds=(None, None), method="highs")
        assert res.status == 0
        out.append(sign * res.fun)
    return out[0], out[1]
