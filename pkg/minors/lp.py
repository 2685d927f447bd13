"""
Exact rational linear and integer programs of the packing form

    maximize c.x  subject to  A.x <= b,  x >= 0,  b >= 0.

Non-negative b makes the all-slack basis feasible, so no phase one is
needed. Pivoting follows Bland's rule, which cannot cycle.
"""
import logging
from fractions import Fraction
from math import floor
from typing import Dict, List, Optional, Sequence, Tuple

from utils.errors import InputError

logger = logging.getLogger(__name__)


def solve_lp(
    c: Sequence[Fraction], a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]
) -> Tuple[Fraction, List[Fraction]]:
    """
    Returns:
        (optimum, x) with x an optimal vertex of the feasible region

    Raises:
        InputError: if some b is negative or the program is unbounded
    """
    n_vars = len(c)
    n_rows = len(a)
    if any(Fraction(value) < 0 for value in b):
        raise InputError("solve_lp needs b >= 0")
    width = n_vars + n_rows
    rows: List[List[Fraction]] = []
    for i, row in enumerate(a):
        if len(row) != n_vars:
            raise InputError(f"row {i} has {len(row)} coefficients, expected {n_vars}")
        slack = [Fraction(0)] * n_rows
        slack[i] = Fraction(1)
        rows.append([Fraction(value) for value in row] + slack + [Fraction(b[i])])
    objective = [-Fraction(value) for value in c] + [Fraction(0)] * (n_rows + 1)
    basis = [n_vars + i for i in range(n_rows)]

    pivots = 0
    while True:
        entering = next((j for j in range(width) if objective[j] < 0), None)
        if entering is None:
            break
        leaving: Optional[int] = None
        best_ratio: Optional[Fraction] = None
        for i in range(n_rows):
            coefficient = rows[i][entering]
            if coefficient <= 0:
                continue
            ratio = rows[i][-1] / coefficient
            if best_ratio is None or ratio < best_ratio or (ratio == best_ratio and basis[i] < basis[leaving]):
                leaving, best_ratio = i, ratio
        if leaving is None:
            raise InputError("linear program is unbounded")

        pivot_row = rows[leaving]
        pivot = pivot_row[entering]
        rows[leaving] = pivot_row = [value / pivot for value in pivot_row]
        for i in range(n_rows):
            if i != leaving and rows[i][entering] != 0:
                factor = rows[i][entering]
                rows[i] = [value - factor * p for value, p in zip(rows[i], pivot_row)]
        if objective[entering] != 0:
            factor = objective[entering]
            objective = [value - factor * p for value, p in zip(objective, pivot_row)]
        basis[leaving] = entering
        pivots += 1

    x = [Fraction(0)] * n_vars
    for i, var in enumerate(basis):
        if var < n_vars:
            x[var] = rows[i][-1]
    logger.debug(f"solve_lp: {n_vars} vars, {n_rows} rows, {pivots} pivots, optimum {objective[-1]}")
    return objective[-1], x


def solve_ip(c: Sequence[int], a: Sequence[Sequence[int]], b: Sequence[int]) -> Tuple[int, List[int]]:
    """
    Integer optimum of the same program with integer data, by branch and bound.

    A lower bound x_j >= L is applied by shifting the variable, an upper
    bound x_j <= U by an extra row.
    """
    n_vars = len(c)
    best_value = 0
    best_x = [0] * n_vars

    def branch(lower: List[int], upper: Dict[int, int]) -> None:
        nonlocal best_value, best_x
        shifted_b = [
            Fraction(b_i) - sum(Fraction(a_ij) * low for a_ij, low in zip(row, lower))
            for row, b_i in zip(a, b)
        ]
        if any(value < 0 for value in shifted_b):
            return
        rows = [list(row) for row in a]
        rhs = list(shifted_b)
        for j, bound in sorted(upper.items()):
            if bound - lower[j] < 0:
                return
            unit = [0] * n_vars
            unit[j] = 1
            rows.append(unit)
            rhs.append(Fraction(bound - lower[j]))
        base = sum(c_j * low for c_j, low in zip(c, lower))
        value, y = solve_lp(c, rows, rhs)
        if floor(base + value) <= best_value:
            return
        fractional = next((j for j in range(n_vars) if y[j].denominator != 1), None)
        if fractional is None:
            best_value = base + int(value)
            best_x = [low + int(v) for low, v in zip(lower, y)]
            return
        cut = floor(y[fractional])
        up = list(lower)
        up[fractional] += cut + 1
        branch(up, upper)
        tighter = dict(upper)
        tighter[fractional] = min(upper.get(fractional, lower[fractional] + cut), lower[fractional] + cut)
        branch(lower, tighter)

    branch([0] * n_vars, {})
    return best_value, best_x
