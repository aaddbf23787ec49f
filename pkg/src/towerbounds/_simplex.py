"""Exact rational simplex for small maximization models.

Standard form: maximize c.x subject to A x <= b and x >= 0, with every
b_i >= 0 so the slack basis is a feasible start.  Bland's rule picks the
pivots, which guarantees termination without any tolerance handling; all
arithmetic is over Fraction, so the reported optimum, solution, and duals
are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class LpSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    duals: tuple[Fraction, ...]
    binding: tuple[int, ...]


def solve_max(c: Sequence[Fraction], A: Sequence[Sequence[Fraction]],
              b: Sequence[Fraction]) -> LpSolution:
    """Maximize c.x over {x >= 0 : A x <= b}.

    Raises ValueError for a negative right-hand side (the slack start would
    be infeasible) or an unbounded model.
    """
    m = len(A)
    n = len(c)
    for row in A:
        if len(row) != n:
            raise ValueError("constraint row length does not match objective")
    if len(b) != m:
        raise ValueError("right-hand side length does not match row count")
    bvec = [Fraction(x) for x in b]
    if any(bi < 0 for bi in bvec):
        raise ValueError("infeasible model: negative right-hand side")

    # Tableau rows: structural columns, slack columns, rhs.
    T = [[Fraction(x) for x in A[i]]
         + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
         + [bvec[i]]
         for i in range(m)]
    # Reduced-cost row; its rhs entry carries minus the objective value.
    z = [Fraction(x) for x in c] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))

    while True:
        enter = next((j for j in range(n + m) if z[j] > 0), None)
        if enter is None:
            break
        pivot_row = None
        best_ratio = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if (best_ratio is None or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[pivot_row])):
                    best_ratio = ratio
                    pivot_row = i
        if pivot_row is None:
            raise ValueError("unbounded model")
        _pivot(T, z, basis, pivot_row, enter)

    x = [Fraction(0)] * n
    slack = [Fraction(0)] * m
    for i, var in enumerate(basis):
        if var < n:
            x[var] = T[i][-1]
        else:
            slack[var - n] = T[i][-1]
    duals = tuple(-z[n + i] for i in range(m))
    binding = tuple(i for i in range(m) if slack[i] == 0)
    return LpSolution(value=-z[-1], x=tuple(x), duals=duals, binding=binding)


def _pivot(T: list[list[Fraction]], z: list[Fraction], basis: list[int],
           row: int, col: int) -> None:
    inv = 1 / T[row][col]
    T[row] = [inv * v for v in T[row]]
    for i in range(len(T)):
        if i != row and T[i][col] != 0:
            coef = T[i][col]
            T[i] = [v - coef * w for v, w in zip(T[i], T[row])]
    if z[col] != 0:
        coef = z[col]
        z[:] = [v - coef * w for v, w in zip(z, T[row])]
    basis[row] = col
