"""Exact two-phase simplex over Fractions.

Interface is standard form: minimize c.x subject to A x = b, x >= 0.
Pivot selection is Bland's rule (lowest eligible index entering, lowest
basic index among tied minimum ratios leaving), which cannot cycle, so
termination needs no perturbation or tolerance machinery; with Fractions
every comparison is exact.

Phase 1 minimizes the sum of one artificial variable per row.  An
artificial that leaves the basis is dropped for good; after phase 1,
artificials still basic (at level zero) are pivoted out, and rows that
cannot be pivoted are redundant and deleted.  Callers that only need
feasibility (the garbling test) pass a zero objective and skip straight
through phase 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch

_ZERO = Fraction(0)
_ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple | None
    objective: Fraction | None


def _pivot(tableau, cost, basis, row, col):
    pivot_value = tableau[row][col]
    if pivot_value != 1:
        tableau[row] = [x / pivot_value for x in tableau[row]]
    pivot_row = tableau[row]
    for i, other in enumerate(tableau):
        if i != row and other[col] != 0:
            f = other[col]
            tableau[i] = [a - f * b for a, b in zip(other, pivot_row)]
    if cost[col] != 0:
        f = cost[col]
        for j in range(len(cost)):
            cost[j] -= f * pivot_row[j]
    basis[row] = col


def _optimize(tableau, cost, basis, entering_columns):
    """Bland's rule loop; returns OPTIMAL or UNBOUNDED."""
    while True:
        enter = next((j for j in entering_columns if cost[j] < 0), None)
        if enter is None:
            return OPTIMAL
        leave = None
        best_ratio = None
        for i, row in enumerate(tableau):
            coefficient = row[enter]
            if coefficient > 0:
                ratio = row[-1] / coefficient
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave is None:
            return UNBOUNDED
        _pivot(tableau, cost, basis, leave, enter)


def solve_standard_form(c, rows, rhs) -> LPResult:
    """Minimize c.x subject to (rows) x = rhs, x >= 0, all exactly."""
    m = len(rows)
    n = len(c)
    if len(rhs) != m or any(len(r) != n for r in rows):
        raise DimensionMismatch("inconsistent LP dimensions")

    # tableau: n structural columns, m artificial columns, rhs last
    tableau = []
    for row, b in zip(rows, rhs):
        r = [Fraction(x) for x in row]
        b = Fraction(b)
        if b < 0:
            r = [-x for x in r]
            b = -b
        tableau.append(r + [_ZERO] * m + [b])
    for i in range(m):
        tableau[i][n + i] = _ONE
    basis = list(range(n, n + m))

    # phase 1: minimize the artificial sum; reduced costs relative to the
    # artificial basis are the negated column sums
    width = n + m + 1
    cost = [_ZERO] * width
    for j in range(n):
        cost[j] = -sum(tableau[i][j] for i in range(m))
    cost[-1] = -sum(tableau[i][-1] for i in range(m))
    structural = range(n)
    _optimize(tableau, cost, basis, structural)
    if -cost[-1] != 0:
        return LPResult(INFEASIBLE, None, None)

    # pivot leftover artificials out; rows with no structural entry are
    # redundant (their rhs is zero at a phase-1 optimum) and get dropped
    i = 0
    while i < len(tableau):
        if basis[i] >= n:
            col = next((j for j in range(n) if tableau[i][j] != 0), None)
            if col is None:
                del tableau[i]
                del basis[i]
                continue
            _pivot(tableau, cost, basis, i, col)
        i += 1
    tableau = [row[:n] + [row[-1]] for row in tableau]

    # phase 2 with the real objective
    cost = [Fraction(x) for x in c] + [_ZERO]
    for i in range(len(tableau)):
        f = cost[basis[i]]
        if f != 0:
            for j in range(n + 1):
                cost[j] -= f * tableau[i][j]
    status = _optimize(tableau, cost, basis, structural)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, None)

    x = [_ZERO] * n
    for i, b in enumerate(basis):
        x[b] = tableau[i][-1]
    objective = sum((cj * xj for cj, xj in zip(c, x)), _ZERO)
    return LPResult(OPTIMAL, tuple(x), objective)


def find_feasible(rows, rhs):
    """A feasible point of {x >= 0 : (rows) x = rhs}, or None."""
    result = solve_standard_form([_ZERO] * len(rows[0]), rows, rhs)
    return result.x if result.status == OPTIMAL else None
