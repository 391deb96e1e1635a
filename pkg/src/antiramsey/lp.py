"""Exact rational simplex for packing LPs  max c.y  s.t.  A y <= b, y >= 0, b >= 0."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class UnboundedLP(ArithmeticError):
    pass


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    primal: tuple[Fraction, ...]  # optimal y
    dual: tuple[Fraction, ...]  # optimal multipliers of the rows of A
    pivots: int


def solve_packing(a: Sequence[Sequence[int | Fraction]], b: Sequence[int | Fraction], c: Sequence[int | Fraction]) -> LPSolution:
    """Tableau simplex from the slack basis with Bland's rule; all arithmetic in Fractions.

    The dual values are the reduced costs of the slack columns at optimality.
    """
    rows = len(a)
    cols = len(c)
    if any(len(r) != cols for r in a) or len(b) != rows:
        raise ValueError("dimension mismatch")
    if any(x < 0 for x in b):
        raise ValueError("right-hand side must be non-negative for the slack basis")
    width = cols + rows
    tab = [[Fraction(x) for x in a[i]] + [Fraction(int(i == j)) for j in range(rows)] + [Fraction(b[i])] for i in range(rows)]
    obj = [-Fraction(x) for x in c] + [Fraction(0)] * rows + [Fraction(0)]
    basis = list(range(cols, width))
    pivots = 0
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(rows):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise UnboundedLP("objective unbounded")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        prow = tab[leave]
        for i in range(rows):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * p for x, p in zip(tab[i], prow)]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * p for x, p in zip(obj, prow)]
        basis[leave] = enter
        pivots += 1
    y = [Fraction(0)] * cols
    for i, var in enumerate(basis):
        if var < cols:
            y[var] = tab[i][-1]
    dual = tuple(obj[cols + i] for i in range(rows))
    return LPSolution(obj[-1], tuple(y), dual, pivots)
