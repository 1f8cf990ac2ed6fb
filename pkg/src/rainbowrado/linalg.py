"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`; there is no floating
point anywhere. Matrices are small (desk scale, d <= ~16), so dense
row-major tuples are plenty.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

__all__ = [
    "Matrix",
    "KernelBasis",
    "rref",
    "rank",
    "kernel_basis",
    "solve",
    "delete_columns",
    "primitive",
    "determinant",
]


@dataclass(frozen=True)
class Matrix:
    """An m x d rational matrix.

    ``ncols`` is stored explicitly so that m x 0 matrices (all columns
    deleted) keep their shape.
    """

    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError(f"row of length {len(r)} in matrix with {self.ncols} columns")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], ncols: Optional[int] = None) -> "Matrix":
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def zeros(cls, m: int, d: int) -> "Matrix":
        return cls(tuple((Fraction(0),) * d for _ in range(m)), d)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(
            tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)), n
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product ``M v``."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum((a * x for a, x in zip(r, v)), Fraction(0)) for r in self.rows)

    def select_columns(self, cols: Sequence[int]) -> "Matrix":
        return Matrix(tuple(tuple(r[j] for j in cols) for r in self.rows), len(cols))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def to_lists(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


@dataclass(frozen=True)
class KernelBasis:
    """Primitive integer basis of ker(M); ``dim`` = d - rank(M)."""

    vectors: tuple[tuple[int, ...], ...]
    ncols: int

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def as_matrix(self) -> Matrix:
        """Basis vectors as the rows of an r x d matrix."""
        return Matrix.from_rows(self.vectors, self.ncols)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector whose
    first nonzero entry is positive. The zero vector maps to itself."""
    v = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in M.rows]
    m, d = M.shape
    pivots: list[int] = []
    pr = 0
    for c in range(d):
        if pr == m:
            break
        src = next((i for i in range(pr, m) if rows[i][c] != 0), None)
        if src is None:
            continue
        rows[pr], rows[src] = rows[src], rows[pr]
        p = rows[pr][c]
        if p != 1:
            rows[pr] = [x / p for x in rows[pr]]
        for i in range(m):
            if i != pr and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
        pivots.append(c)
        pr += 1
    return Matrix(tuple(tuple(r) for r in rows), d), pivots


def rank(M: Matrix) -> int:
    if M.ncols == 0 or M.nrows == 0:
        return 0
    return len(rref(M)[1])


def kernel_basis(M: Matrix) -> KernelBasis:
    R, pivots = rref(M)
    d = M.ncols
    free = [j for j in range(d) if j not in pivots]
    vectors = []
    for f in free:
        v = [Fraction(0)] * d
        v[f] = Fraction(1)
        for row, p in enumerate(pivots):
            v[p] = -R.rows[row][f]
        vectors.append(primitive(v))
    return KernelBasis(tuple(vectors), d)


def solve(M: Matrix, b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """One rational solution of ``M x = b``, or None when inconsistent.

    Free variables are set to zero, so the full solution set is the returned
    vector plus ker(M).
    """
    m, d = M.shape
    if len(b) != m:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m}")
    aug = Matrix(tuple(r + (Fraction(x),) for r, x in zip(M.rows, b)), d + 1)
    R, pivots = rref(aug)
    if d in pivots:
        return None
    x = [Fraction(0)] * d
    for row, p in enumerate(pivots):
        x[p] = R.rows[row][d]
    return tuple(x)


def delete_columns(M: Matrix, i: int, j: int) -> Matrix:
    """The submatrix with columns ``i`` and ``j`` removed."""
    d = M.ncols
    if not (0 <= i < d and 0 <= j < d) or i == j:
        raise ValueError(f"invalid column pair ({i}, {j}) for a matrix with {d} columns")
    keep = [c for c in range(d) if c != i and c != j]
    return M.select_columns(keep)


def determinant(M: Matrix) -> Fraction:
    """Determinant of a square matrix by fraction-exact elimination."""
    n, d = M.shape
    if n != d:
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in M.rows]
    det = Fraction(1)
    for c in range(n):
        src = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if src is None:
            return Fraction(0)
        if src != c:
            rows[c], rows[src] = rows[src], rows[c]
            det = -det
        p = rows[c][c]
        det *= p
        for i in range(c + 1, n):
            f = rows[i][c] / p
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


def inverse(M: Matrix) -> Matrix:
    n, d = M.shape
    if n != d:
        raise ValueError("inverse of a non-square matrix")
    aug = Matrix(tuple(r + I for r, I in zip(M.rows, Matrix.identity(n).rows)), 2 * n)
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return Matrix(tuple(r[n:] for r in R.rows), n)


def invertible_column_subsets(B: Matrix) -> list[tuple[tuple[int, ...], Fraction]]:
    """All r-subsets S of columns with B[:, S] nonsingular, with |det|."""
    r, d = B.shape
    out = []
    for S in combinations(range(d), r):
        det = determinant(B.select_columns(S))
        if det != 0:
            out.append((S, abs(det)))
    return out
