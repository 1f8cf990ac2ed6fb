"""Rainbow regularity of a rational matrix.

A is rainbow regular iff ker(A) has a vector with positive integer entries
and every two-column deletion of A keeps the rank. The pairwise kernel-minor
test is computed alongside the rank test and the two are required to agree
pair by pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Optional

from .lattice import leading_coefficient
from .linalg import KernelBasis, Matrix, delete_columns, kernel_basis, primitive, rank, rref
from .simplex import feasible_point

Pair = tuple[int, int]


class NotRainbowRegular(ValueError):
    pass


class ConditionDisagreement(AssertionError):
    """The rank test and the kernel-minor test gave different answers."""


@dataclass(frozen=True)
class PairCheck:
    passed: bool
    table: dict[Pair, object]
    failing_pair: Optional[Pair]


@dataclass
class RegularityVerdict:
    regular: bool
    reason: str
    positive_witness: Optional[tuple[int, ...]] = None
    failing_pair: Optional[Pair] = None
    vanishing_row: Optional[tuple[int, ...]] = None
    condition_iii_table: dict[Pair, int] = field(default_factory=dict)
    condition_iv_table: dict[Pair, bool] = field(default_factory=dict)
    rank: int = 0
    kernel: Optional[KernelBasis] = None

    def to_dict(self) -> dict:
        def pairs(table):
            return [[i, j, v] for (i, j), v in sorted(table.items())]

        return {
            "regular": self.regular,
            "reason": self.reason,
            "rank": self.rank,
            "kernel_basis": [list(v) for v in self.kernel.vectors] if self.kernel else None,
            "positive_witness": list(self.positive_witness) if self.positive_witness else None,
            "failing_pair": list(self.failing_pair) if self.failing_pair else None,
            "vanishing_row": list(self.vanishing_row) if self.vanishing_row else None,
            "condition_iii_ranks": pairs(self.condition_iii_table),
            "condition_iv_pass": pairs(self.condition_iv_table),
        }


def check_condition_iii(A: Matrix) -> PairCheck:
    """rank(A with columns i, j deleted) == rank(A) for every pair."""
    d = A.ncols
    if d < 2:
        raise ValueError(f"the rank test needs at least 2 columns, got {d}")
    r = rank(A)
    table = {(i, j): rank(delete_columns(A, i, j)) for i, j in combinations(range(d), 2)}
    failing = [p for p, rk in table.items() if rk != r]
    return PairCheck(not failing, table, min(failing) if failing else None)


def check_condition_iv(K: KernelBasis, d: int) -> PairCheck:
    """Pair (i, j) passes iff some x, y in ker(A) have x_i y_j != x_j y_i.

    By bilinearity it suffices to look at the basis: the pair passes iff the
    r x 2 block of basis coordinates (i, j) has rank 2.
    """
    if d < 2:
        raise ValueError(f"the kernel-minor test needs at least 2 columns, got {d}")
    table = {}
    for i, j in combinations(range(d), 2):
        table[(i, j)] = any(
            x[i] * y[j] != x[j] * y[i] for x, y in combinations(K.vectors, 2)
        )
    failing = [p for p, ok in table.items() if not ok]
    return PairCheck(not failing, table, min(failing) if failing else None)


def positive_kernel_vector(A: Matrix) -> Optional[tuple[int, ...]]:
    """An integer vector v >= 1 with A v = 0, or None.

    Substituting x = 1 + s turns {Ax = 0, x >= 1} into {A s = -A 1, s >= 0},
    decided by exact phase-1 simplex on the independent rows of A.
    """
    d = A.ncols
    R, pivots = rref(A)
    rows = Matrix(R.rows[: len(pivots)], d)
    ones = [Fraction(1)] * d
    rhs = [-x for x in rows.apply(ones)]
    s = feasible_point(rows, rhs)
    if s is None:
        return None
    x = [1 + v for v in s]
    den = lcm(*(v.denominator for v in x))
    return tuple(int(v * den) for v in x)


def vanishing_row_certificate(A: Matrix, i: int, j: int) -> Optional[tuple[int, ...]]:
    """A nonzero vector in the row space of A supported on {i, j}.

    Any left-kernel vector alpha of A with columns i, j deleted gives
    r = alpha^T A, zero outside {i, j}; when the pair fails the rank test,
    some basis alpha has r != 0. Returned as a primitive integer vector.
    """
    if i > j:
        i, j = j, i
    Aij = delete_columns(A, i, j)
    if rank(Aij) == rank(A):
        return None
    alphas = kernel_basis(Aij.transpose()) if Aij.ncols else kernel_basis(Matrix.zeros(0, A.nrows))
    for alpha in alphas.vectors:
        r = [sum((a * row[c] for a, row in zip(alpha, A.rows)), Fraction(0)) for c in range(A.ncols)]
        if any(r):
            return primitive(r)
    raise AssertionError("rank drop without a vanishing row combination")


def is_rainbow_regular(A: Matrix) -> RegularityVerdict:
    d = A.ncols
    K = kernel_basis(A)
    rk = rank(A)
    if d == 0:
        return RegularityVerdict(False, "no columns: no rainbow vector exists", rank=0, kernel=K)
    witness = positive_kernel_vector(A)
    if d == 1:
        if witness is None:
            return RegularityVerdict(False, "no positive integer vector in ker(A)", rank=rk, kernel=K)
        return RegularityVerdict(True, "single column with A = 0", positive_witness=witness, rank=rk, kernel=K)

    iii = check_condition_iii(A)
    iv = check_condition_iv(K, d)
    for p, rk_p in iii.table.items():
        if (rk_p == rk) != iv.table[p]:
            raise ConditionDisagreement(f"pair {p}: rank test {rk_p == rk}, kernel test {iv.table[p]}")

    verdict = RegularityVerdict(
        regular=False,
        reason="",
        positive_witness=witness,
        condition_iii_table=iii.table,
        condition_iv_table=iv.table,
        rank=rk,
        kernel=K,
    )
    if not iii.passed:
        i, j = iii.failing_pair
        verdict.failing_pair = iii.failing_pair
        verdict.vanishing_row = vanishing_row_certificate(A, i, j)
        verdict.reason = f"deleting columns {i} and {j} drops the rank"
        if witness is None:
            verdict.reason += "; no positive integer vector in ker(A)"
    elif witness is None:
        verdict.reason = "no positive integer vector in ker(A)"
    else:
        verdict.regular = True
        verdict.reason = "positive kernel vector and all two-column deletions keep the rank"
    return verdict


@dataclass(frozen=True)
class RobustConstant:
    nu: Fraction
    C_squared: Fraction

    def C(self, digits: int = 40) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits
            return (Decimal(self.C_squared.numerator) / Decimal(self.C_squared.denominator)).sqrt()


def robust_constant(A: Matrix) -> RobustConstant:
    """C^2 = nu / C(d, 2), nu the leading Ehrhart coefficient of [0,1]^d ∩ ker(A)."""
    verdict = is_rainbow_regular(A)
    if not verdict.regular:
        raise NotRainbowRegular(f"matrix is not rainbow regular: {verdict.reason}")
    if A.ncols < 2:
        raise ValueError("robust constant needs at least 2 columns")
    nu = leading_coefficient(A)
    return RobustConstant(nu, nu / comb(A.ncols, 2))
