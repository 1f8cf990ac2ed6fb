"""Rainbow kernel vectors under a given coloring, and the seeded
robust-regularity experiment."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from decimal import Decimal, ROUND_FLOOR, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .colorings import Coloring, random_bounded_coloring
from .lattice import box_points, non_rainbow_upper_bound, parametrize
from .linalg import Matrix, kernel_basis, rank
from .regularity import NotRainbowRegular, check_condition_iii, is_rainbow_regular, robust_constant


class BoundViolation(AssertionError):
    """More non-rainbow vectors than the pair-counting bound allows."""


@dataclass
class RainbowReport:
    found: bool
    witness: Optional[tuple[int, ...]] = None
    solutions_scanned: int = 0
    non_rainbow_count: Optional[int] = None
    bound: Optional[int] = None


def kernel_points(A: Matrix, N: int):
    """Lazy iterator over [1..N]^d ∩ ker(A)."""
    d = A.ncols
    return box_points(_parametrization(A), [1] * d, [N] * d)


@lru_cache(maxsize=256)
def _parametrization(A: Matrix):
    return parametrize(kernel_basis(A))


@lru_cache(maxsize=256)
def distinct_solutions(A: Matrix, N: int) -> tuple[tuple[int, ...], ...]:
    """Solutions in [1..N]^d with pairwise distinct entries (the only ones
    that can be rainbow)."""
    d = A.ncols
    return tuple(x for x in kernel_points(A, N) if len(set(x)) == d)


def find_rainbow(A: Matrix, c: Coloring) -> RainbowReport:
    scanned = 0
    for x in kernel_points(A, c.N):
        scanned += 1
        if c.is_rainbow(x):
            return RainbowReport(True, x, scanned)
    return RainbowReport(False, None, scanned)


def count_non_rainbow(A: Matrix, c: Coloring) -> tuple[int, Optional[int]]:
    """Exact number of non-rainbow vectors in [1..N]^d ∩ ker(A), with the
    counting bound when the kernel has dimension >= 2.

    Raises :class:`BoundViolation` if A keeps its rank under every
    two-column deletion and the count still exceeds the bound.
    """
    count = sum(1 for x in kernel_points(A, c.N) if not c.is_rainbow(x))
    d = A.ncols
    kdim = d - rank(A)
    if kdim < 2:
        return count, None
    bound = non_rainbow_upper_bound(c.class_sizes, d, kdim, c.N)
    if count > bound and check_condition_iii(A).passed:
        raise BoundViolation(f"{count} non-rainbow vectors exceed the bound {bound}")
    return count, bound


def max_class_size(C: Decimal, epsilon: Union[Fraction, Decimal], N: int, k: int) -> int:
    """floor((C - eps) N / sqrt(k)), evaluated with 50 significant digits."""
    with localcontext() as ctx:
        ctx.prec = 50
        eps = Decimal(epsilon.numerator) / Decimal(epsilon.denominator) if isinstance(epsilon, Fraction) else Decimal(epsilon)
        val = (C - eps) * N / Decimal(k).sqrt()
        return int(val.to_integral_value(rounding=ROUND_FLOOR))


@dataclass
class RobustReport:
    k: int
    N: int
    trials: int
    max_class_size: int
    C_squared: str
    C: str
    found: int = 0
    failures: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def trial_seeds(seed: int, trials: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(63) for _ in range(trials)]


def _run_trial(args):
    A, N, k, size, s = args
    return find_rainbow(A, random_bounded_coloring(N, k, size, s)).found


def robust_experiment(
    A: Matrix,
    k: int,
    N: int,
    epsilon: Union[Fraction, Decimal],
    trials: int,
    seed: int = 0,
    jobs: int = 1,
) -> RobustReport:
    """Seeded random colorings of [N] with every class of size at most
    floor((C - eps) N / sqrt(k)); count how many contain a rainbow vector.

    Failures are reported by trial seed, never dropped.
    """
    verdict = is_rainbow_regular(A)
    if not verdict.regular:
        raise NotRainbowRegular(f"matrix is not rainbow regular: {verdict.reason}")
    rc = robust_constant(A)
    C = rc.C(50)
    size = max_class_size(C, epsilon, N, k)
    if size < 1 or k * size < N or k > N:
        raise ValueError(
            f"infeasible: class bound floor((C - eps) N / sqrt k) = {size} with k = {k}, N = {N}"
        )
    report = RobustReport(k, N, trials, size, str(rc.C_squared), str(rc.C(20)))
    seeds = trial_seeds(seed, trials)
    tasks = [(A, N, k, size, s) for s in seeds]
    if jobs > 1 and trials > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_run_trial, tasks))
    else:
        results = [_run_trial(t) for t in tasks]
    for s, ok in zip(seeds, results):
        if ok:
            report.found += 1
        else:
            report.failures.append(s)
    return report
