"""Exact phase-1 simplex for feasibility of ``{A x = b, x >= 0}``.

Bland's rule guarantees termination; all pivots are done in Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .linalg import Matrix


def feasible_point(A: Matrix, b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Return some x >= 0 with ``A x = b``, or None if there is none."""
    m, n = A.shape
    b = [Fraction(x) for x in b]
    if m == 0:
        return tuple(Fraction(0) for _ in range(n))

    # Tableau rows: [A | I | b], with rows negated where b < 0.
    T: list[list[Fraction]] = []
    for i, row in enumerate(A.rows):
        sign = -1 if b[i] < 0 else 1
        art = [Fraction(int(j == i)) for j in range(m)]
        T.append([sign * x for x in row] + art + [sign * b[i]])
    width = n + m
    basis = [n + i for i in range(m)]

    # Phase-1 objective: minimise the sum of artificials, i.e. reduced costs
    # are minus the column sums over the original rows.
    cost = [Fraction(0)] * (width + 1)
    for row in T:
        for j in range(n):
            cost[j] -= row[j]
        cost[width] -= row[width]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(T):
            if row[enter] > 0:
                ratio = row[width] / row[enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            # Unbounded below cannot happen for a nonnegative objective.
            raise RuntimeError("phase-1 objective unbounded")
        leave = best[1]
        _pivot(T, cost, leave, enter)
        basis[leave] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = T[i][width]
    return tuple(x)


def _pivot(T, cost, r, c):
    p = T[r][c]
    T[r] = [x / p for x in T[r]]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            T[i] = [a - f * b for a, b in zip(row, T[r])]
    f = cost[c]
    if f != 0:
        cost[:] = [a - f * b for a, b in zip(cost, T[r])]
