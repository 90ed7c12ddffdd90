"""Exact two-phase simplex over the rationals.

Problems are in standard form::

    minimize  c.x   subject to   A x = b,  x >= 0

Pivoting follows Bland's rule (smallest eligible index enters, ties in the
ratio test broken by smallest basic index), so the method terminates and is
deterministic. All arithmetic is on ``Fraction``; nothing is rounded.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import DimensionError, Vector, dot

_ZERO = Fraction(0)


class LpStatus(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpProblem:
    objective: Vector
    eq_lhs: tuple = ()
    eq_rhs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "objective", Vector(self.objective))
        object.__setattr__(self, "eq_lhs", tuple(Vector(r) for r in self.eq_lhs))
        object.__setattr__(self, "eq_rhs", Vector(self.eq_rhs))
        n = len(self.objective)
        if len(self.eq_lhs) != len(self.eq_rhs):
            raise DimensionError(
                f"{len(self.eq_lhs)} constraint rows but {len(self.eq_rhs)} right-hand sides")
        for i, row in enumerate(self.eq_lhs):
            if len(row) != n:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {n}")

    @property
    def nvars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    value: Optional[Fraction] = None
    point: Optional[Vector] = field(default=None)

    @property
    def optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL

    @property
    def infeasible(self) -> bool:
        return self.status is LpStatus.INFEASIBLE

    @property
    def unbounded(self) -> bool:
        return self.status is LpStatus.UNBOUNDED


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.cost = []
        self.z = _ZERO

    def price(self, c):
        """Load cost vector c and compute reduced costs for the current basis."""
        n = len(self.rows[0]) if self.rows else len(c)
        d = list(c) + [_ZERO] * (n - len(c))
        z = _ZERO
        for i, b in enumerate(self.basis):
            cb = c[b] if b < len(c) else _ZERO
            if cb:
                row = self.rows[i]
                for k, a in enumerate(row):
                    if a:
                        d[k] -= cb * a
                z += cb * self.rhs[i]
        self.cost = d
        self.z = z

    def pivot(self, i, j):
        row = self.rows[i]
        p = row[j]
        if p != 1:
            row = [a / p for a in row]
            self.rows[i] = row
            self.rhs[i] /= p
        nz = [k for k, a in enumerate(row) if a]
        r_i = self.rhs[i]
        for r, other in enumerate(self.rows):
            if r == i:
                continue
            f = other[j]
            if f:
                for k in nz:
                    other[k] -= f * row[k]
                self.rhs[r] -= f * r_i
        f = self.cost[j]
        if f:
            for k in nz:
                self.cost[k] -= f * row[k]
            # z tracks c_B . x_B, so it moves with the entering variable's value
            self.z += f * r_i
        self.basis[i] = j

    def run(self, ncols):
        """Bland-rule primal simplex restricted to columns < ncols."""
        while True:
            j = next((k for k in range(ncols) if self.cost[k] < 0), None)
            if j is None:
                return LpStatus.OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[j]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return LpStatus.UNBOUNDED
            self.pivot(best[1], j)


def lp_solve(p: LpProblem) -> LpOutcome:
    """Solve a standard-form LP exactly.

    Returns an optimal basic feasible solution, or reports infeasibility
    (decided by an exact phase 1) or unboundedness.
    """
    n = p.nvars
    m = len(p.eq_lhs)
    c = list(p.objective)
    if m == 0:
        if any(ci < 0 for ci in c):
            return LpOutcome(LpStatus.UNBOUNDED)
        return LpOutcome(LpStatus.OPTIMAL, _ZERO, Vector.zeros(n))

    rows, rhs = [], []
    for i, (a, b) in enumerate(zip(p.eq_lhs, p.eq_rhs)):
        a = list(a)
        if b < 0:
            a = [-x for x in a]
            b = -b
        art = [_ZERO] * m
        art[i] = Fraction(1)
        rows.append(a + art)
        rhs.append(b)
    t = _Tableau(rows, rhs, list(range(n, n + m)))

    # phase 1: minimize the sum of artificials
    t.price([_ZERO] * n + [Fraction(1)] * m)
    t.run(n + m)
    if t.z > 0:
        return LpOutcome(LpStatus.INFEASIBLE)

    # drive zero-level artificials out of the basis; drop redundant rows
    i = 0
    while i < len(t.rows):
        if t.basis[i] >= n:
            j = next((k for k in range(n) if t.rows[i][k] != 0), None)
            if j is None:
                del t.rows[i], t.rhs[i], t.basis[i]
                continue
            t.cost = [_ZERO] * (n + m)
            t.pivot(i, j)
        i += 1
    t.rows = [row[:n] for row in t.rows]

    if not t.rows:
        if any(ci < 0 for ci in c):
            return LpOutcome(LpStatus.UNBOUNDED)
        return LpOutcome(LpStatus.OPTIMAL, _ZERO, Vector.zeros(n))

    t.price(c)
    status = t.run(n)
    if status is LpStatus.UNBOUNDED:
        return LpOutcome(status)
    x = [_ZERO] * n
    for i, b in enumerate(t.basis):
        x[b] = t.rhs[i]
    point = Vector(x)
    return LpOutcome(LpStatus.OPTIMAL, dot(c, point), point)


def find_feasible(
    eq_lhs: Sequence[Sequence], eq_rhs: Sequence, nvars: int
) -> Optional[Vector]:
    """A basic feasible point of {A x = b, x >= 0}, or None if empty."""
    out = lp_solve(LpProblem([0] * nvars, eq_lhs, eq_rhs))
    return out.point if out.optimal else None


def satisfies(p: LpProblem, x: Sequence) -> bool:
    """Exact re-substitution check: x >= 0 and every equality holds."""
    if len(x) != p.nvars or any(xi < 0 for xi in x):
        return False
    return all(dot(row, x) == b for row, b in zip(p.eq_lhs, p.eq_rhs))
