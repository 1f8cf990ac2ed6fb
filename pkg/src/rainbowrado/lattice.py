"""Lattice points of ker(A) in boxes, the kernel polytope ``[0,1]^d ∩ ker(A)``
and its Ehrhart quasi-polynomial.

Counts come from direct enumeration; the quasi-polynomial is interpolated
from those counts one residue class at a time and then checked against
further counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, lcm
from typing import Iterator, Optional, Sequence

from .linalg import (
    KernelBasis,
    Matrix,
    inverse,
    invertible_column_subsets,
    kernel_basis,
    rank,
    solve,
)


class EhrhartMismatch(RuntimeError):
    """Interpolated quasi-polynomial disagrees with a direct count."""


@dataclass(frozen=True)
class KernelParametrization:
    """Integer form of ker(A): x = (xs @ coeffs) / denom, where xs are the
    values of the free coordinates ``free``."""

    free: tuple[int, ...]
    coeffs: tuple[tuple[int, ...], ...]
    denom: int
    ncols: int


def parametrize(K: KernelBasis) -> KernelParametrization:
    """Pick free coordinates whose basis block is invertible with the
    smallest |det| (ties: lexicographically first)."""
    r, d = K.dim, K.ncols
    if r == 0:
        return KernelParametrization((), (), 1, d)
    B = K.as_matrix()
    S, _ = min(invertible_column_subsets(B), key=lambda p: (p[1], p[0]))
    Binv = inverse(B.select_columns(S))
    T = [
        [sum((Binv.rows[i][l] * B.rows[l][j] for l in range(r)), Fraction(0)) for j in range(d)]
        for i in range(r)
    ]
    den = lcm(*(x.denominator for row in T for x in row))
    coeffs = tuple(tuple(int(x * den) for x in row) for row in T)
    return KernelParametrization(tuple(S), coeffs, den, d)


def box_points(
    par: KernelParametrization, lo: Sequence[int], hi: Sequence[int]
) -> Iterator[tuple[int, ...]]:
    """Integer kernel vectors with ``lo[j] <= x[j] <= hi[j]``, in lexicographic
    order of the free coordinates."""
    d = par.ncols
    r = len(par.free)
    if any(l > h for l, h in zip(lo, hi)):
        return
    if r == 0:
        if all(l <= 0 <= h for l, h in zip(lo, hi)):
            yield (0,) * d
        return
    D = par.denom
    C = par.coeffs
    dlo = [D * l for l in lo]
    dhi = [D * h for h in hi]

    def rec(level, partial):
        if level < r - 1:
            j = par.free[level]
            row = C[level]
            for v in range(lo[j], hi[j] + 1):
                yield from rec(level + 1, [p + v * c for p, c in zip(partial, row)])
            return
        # Last free coordinate: every x_j is affine in v, so solve for the
        # feasible interval of v directly.
        row = C[level]
        vmin, vmax = lo[par.free[level]], hi[par.free[level]]
        for j in range(d):
            c = row[j]
            p = partial[j]
            if c > 0:
                vmin = max(vmin, -((p - dlo[j]) // c))
                vmax = min(vmax, (dhi[j] - p) // c)
            elif c < 0:
                vmin = max(vmin, -((dhi[j] - p) // -c))
                vmax = min(vmax, (p - dlo[j]) // -c)
            elif not dlo[j] <= p <= dhi[j]:
                return
            if vmin > vmax:
                return
        for v in range(vmin, vmax + 1):
            x = [p + v * c for p, c in zip(partial, row)]
            if D != 1:
                if any(t % D for t in x):
                    continue
                x = [t // D for t in x]
            yield tuple(x)

    yield from rec(0, [0] * d)


def kernel_box_points(K: KernelBasis, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Every integer x in ker(A) with lo <= x_i <= hi, each exactly once."""
    d = K.ncols
    return box_points(parametrize(K), [lo] * d, [hi] * d)


@dataclass(frozen=True)
class KernelPolytope:
    matrix: Matrix
    kernel: KernelBasis
    dim: int
    vertices: tuple[tuple[Fraction, ...], ...]

    @property
    def zero_coordinates(self) -> tuple[int, ...]:
        """Coordinates that vanish on all of P (implicit equations)."""
        d = self.matrix.ncols
        return tuple(j for j in range(d) if all(v[j] == 0 for v in self.vertices))

    @property
    def denominator_lcm(self) -> int:
        return lcm(*(x.denominator for v in self.vertices for x in v))


def polytope(A: Matrix) -> KernelPolytope:
    """Vertices of P = [0,1]^d ∩ ker(A) by tight-set search.

    A vertex needs r = dim ker(A) linearly independent tight box facets, i.e.
    a set S of r coordinates with invertible basis block, each pinned to 0 or
    1; the remaining coordinates must then land in [0, 1].
    """
    K = kernel_basis(A)
    d, r = A.ncols, K.dim
    if r == 0:
        verts = {(Fraction(0),) * d}
    else:
        B = K.as_matrix()
        verts = set()
        for S, _ in invertible_column_subsets(B):
            Binv = inverse(B.select_columns(S))
            T = [
                [sum((Binv.rows[i][l] * B.rows[l][j] for l in range(r)), Fraction(0)) for j in range(d)]
                for i in range(r)
            ]
            for pins in product((0, 1), repeat=r):
                x = tuple(sum((pins[i] * T[i][j] for i in range(r)), Fraction(0)) for j in range(d))
                if all(0 <= t <= 1 for t in x):
                    verts.add(x)
    verts = tuple(sorted(verts))
    v0 = verts[0]
    diffs = [[a - b for a, b in zip(v, v0)] for v in verts[1:]]
    dim = rank(Matrix.from_rows(diffs, d)) if diffs else 0
    return KernelPolytope(A, K, dim, verts)


def count_dilation(P: KernelPolytope, t: int, interior: bool = False) -> int:
    """Integer points of tP, or of its relative interior."""
    d = P.matrix.ncols
    par = parametrize(P.kernel)
    if not interior:
        return sum(1 for _ in box_points(par, [0] * d, [t] * d))
    zero = set(P.zero_coordinates)
    lo = [0 if j in zero else 1 for j in range(d)]
    hi = [0 if j in zero else t - 1 for j in range(d)]
    return sum(1 for _ in box_points(par, lo, hi))


def count_positive(P: KernelPolytope, t: int) -> int:
    """Integer points of tP with every coordinate >= 1."""
    d = P.matrix.ncols
    return sum(1 for _ in box_points(parametrize(P.kernel), [1] * d, [t] * d))


@dataclass(frozen=True)
class QuasiPolynomial:
    """coefficients[rho] holds the polynomial (constant term first) used on
    t ≡ rho (mod period)."""

    degree: int
    period: int
    coefficients: tuple[tuple[Fraction, ...], ...]

    def __call__(self, t: int) -> Fraction:
        cs = self.coefficients[t % self.period]
        return sum((c * Fraction(t) ** i for i, c in enumerate(cs)), Fraction(0))

    @property
    def leading(self) -> Fraction:
        return self.coefficients[0][self.degree]


def _interpolate(ts: Sequence[int], ys: Sequence[int], degree: int) -> tuple[Fraction, ...]:
    V = Matrix.from_rows([[Fraction(t) ** i for i in range(degree + 1)] for t in ts])
    sol = solve(V, ys)
    if sol is None:
        raise EhrhartMismatch("interpolation system is inconsistent")
    return sol


def validation_range(period: int, dim: int, extra_samples: int) -> range:
    return range(1, period * (dim + 2) + extra_samples + 1)


def ehrhart(P: KernelPolytope, extra_samples: int = 3) -> QuasiPolynomial:
    """Interpolate L_P(t) = #(tP ∩ Z^d) per residue class and validate.

    The period is the lcm of vertex denominators. Each residue is fitted
    through ``dim + 1`` dilations t >= 1; every t in
    ``1 .. period*(dim+2) + extra_samples`` is then compared against a
    direct count, and any disagreement raises :class:`EhrhartMismatch`.
    """
    period = P.denominator_lcm
    deg = P.dim
    counts: dict[int, int] = {}

    def L(t):
        if t not in counts:
            counts[t] = count_dilation(P, t)
        return counts[t]

    coeffs = []
    for rho in range(period):
        start = rho if rho > 0 else period
        ts = [start + period * j for j in range(deg + 1)]
        coeffs.append(_interpolate(ts, [L(t) for t in ts], deg))
    qp = QuasiPolynomial(deg, period, tuple(coeffs))

    lead = {cs[deg] for cs in coeffs}
    if len(lead) != 1:
        raise EhrhartMismatch(f"leading coefficient varies across residues: {sorted(lead)}")
    for t in validation_range(period, deg, extra_samples):
        if qp(t) != L(t):
            raise EhrhartMismatch(f"L_P({t}) = {L(t)} but quasi-polynomial gives {qp(t)}")
    return qp


def reciprocity_check(qp: QuasiPolynomial, P: KernelPolytope, t: int) -> bool:
    """Interior count of tP against (-1)^dim L_P(-t)."""
    lhs = count_dilation(P, t, interior=True)
    return Fraction(lhs) == (-1) ** P.dim * qp(-t)


def non_rainbow_upper_bound(class_sizes: Sequence[int], d: int, kernel_dim: int, N: int) -> int:
    """(sum of squared class sizes) * C(d, 2) * N^(kernel_dim - 2).

    Upper bound on non-rainbow vectors in [N]^d ∩ ker(A) when every
    two-column deletion of A keeps its rank.
    """
    if kernel_dim < 2:
        raise ValueError(f"bound needs kernel dimension >= 2, got {kernel_dim}")
    return sum(s * s for s in class_sizes) * comb(d, 2) * N ** (kernel_dim - 2)


def leading_coefficient(A: Matrix, extra_samples: int = 3) -> Fraction:
    return ehrhart(polytope(A), extra_samples).leading
