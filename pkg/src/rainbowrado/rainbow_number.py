"""Desk-scale rainbow numbers and the Fibonacci family A_d.

A certificate for k is an equinumerous k-coloring of [kn] with no rainbow
kernel vector; it proves A is not rainbow partition k-regular. Finding no
certificate for n <= n_max is evidence only.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .colorings import Coloring, equinumerous_count
from .lattice import count_positive, polytope
from .linalg import Matrix
from .regularity import NotRainbowRegular, is_rainbow_regular
from .search import distinct_solutions, find_rainbow, kernel_points


def certificate_no_rainbow(A: Matrix, k: int, n: int) -> Optional[Coloring]:
    """First equinumerous k-coloring of [kn] (canonical enumeration order)
    with no rainbow vector in ker(A), or None.

    Walks the same first-occurrence enumeration as
    :func:`colorings.enumerate_equinumerous` but cuts a branch as soon as a
    solution whose largest entry is already colored turns out rainbow; such
    branches cannot hold a certificate, so the first certificate found is
    the same one plain enumeration would return.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    N = k * n
    d = A.ncols
    by_max = defaultdict(list)
    for x in distinct_solutions(A, N):
        by_max[max(x) - 1].append([v - 1 for v in x])

    labels = [0] * N
    sizes = [0] * (k + 1)

    def closes_rainbow(i):
        for sol in by_max.get(i, ()):
            if len({labels[v] for v in sol}) == d:
                return True
        return False

    def rec(i, used):
        if i == N:
            return True
        if N - i < (k - used) * n:
            return False
        choices = [c for c in range(1, used + 1) if sizes[c] < n]
        if used < k:
            choices.append(used + 1)
        for c in choices:
            labels[i] = c
            sizes[c] += 1
            if not closes_rainbow(i) and rec(i + 1, max(used, c)):
                return True
            sizes[c] -= 1
        labels[i] = 0
        return False

    if rec(0, 0):
        cert = Coloring(N, k, tuple(labels))
        assert not find_rainbow(A, cert).found
        return cert
    return None


@dataclass
class RainbowNumberEstimate:
    matrix: Matrix
    k_range: tuple[int, int]
    n_max: int
    certificates: dict[int, Optional[tuple[int, Coloring]]] = field(default_factory=dict)
    n_checked: dict[int, list[int]] = field(default_factory=dict)
    skipped: dict[int, list[int]] = field(default_factory=dict)
    smallest_clean_k: Optional[int] = None

    def to_dict(self) -> dict:
        certs = {}
        for k, hit in self.certificates.items():
            certs[str(k)] = None if hit is None else {"n": hit[0], "coloring": list(hit[1].assign)}
        return {
            "k_range": list(self.k_range),
            "n_max": self.n_max,
            "certificates": certs,
            "n_checked": {str(k): v for k, v in self.n_checked.items()},
            "skipped_over_budget": {str(k): v for k, v in self.skipped.items()},
            "smallest_clean_k": self.smallest_clean_k,
            "note": "a certificate proves non-k-regularity; a clean k is evidence up to the checked n only",
        }


def estimate_rainbow_number(
    A: Matrix, k_max: int, n_max: int, budget: int = 100_000
) -> RainbowNumberEstimate:
    """Search certificates for k = d .. k_max and n = 1 .. n_max.

    (k, n) pairs whose canonical coloring count exceeds ``budget`` are
    skipped and listed as such.
    """
    verdict = is_rainbow_regular(A)
    if not verdict.regular:
        raise NotRainbowRegular(f"r(A) is undefined: {verdict.reason}")
    d = A.ncols
    est = RainbowNumberEstimate(A, (d, k_max), n_max)
    for k in range(d, k_max + 1):
        est.certificates[k] = None
        est.n_checked[k] = []
        est.skipped[k] = []
        for n in range(1, n_max + 1):
            if equinumerous_count(k * n, k) > budget:
                est.skipped[k].append(n)
                continue
            est.n_checked[k].append(n)
            cert = certificate_no_rainbow(A, k, n)
            if cert is not None:
                est.certificates[k] = (n, cert)
                break
        if est.smallest_clean_k is None and est.certificates[k] is None:
            est.smallest_clean_k = k
    return est


# Fibonacci family ---------------------------------------------------------


@lru_cache(maxsize=None)
def fib(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fibonacci_matrix(d: int) -> Matrix:
    """(d-2) x d matrix whose kernel is the sequences p_{i+2} = p_i + p_{i+1}."""
    if d < 3:
        raise ValueError(f"Fibonacci matrix needs d >= 3, got {d}")
    rows = []
    for i in range(d - 2):
        row = [0] * d
        row[i] = row[i + 1] = 1
        row[i + 2] = -1
        rows.append(row)
    return Matrix.from_rows(rows)


def L_d_closed_form(d: int, t: int) -> int:
    """F_{d-1}F_{d-2}/2 t^2 - (F_d - 1)/2 t."""
    if d < 4 or t < 0:
        raise ValueError("need d >= 4 and t >= 0")
    val = Fraction(fib(d - 1) * fib(d - 2), 2) * t * t - Fraction(fib(d) - 1, 2) * t
    if val.denominator != 1:
        raise ArithmeticError(f"L_d({d}, {t}) = {val} is not an integer")
    return int(val)


def triangle_positive_points(d: int, t: int) -> int:
    """Lattice points (a, b) >= 1 of tQ, Q = conv{(0,0), (F_{d-1},0), (0,F_{d-2})}."""
    p, q = fib(d - 2), fib(d - 1)
    bound = t * p * q
    return sum(1 for a in range(1, t * q + 1) for b in range(1, t * p + 1) if p * a + q * b <= bound)


def expected_fibonacci_vertices(d: int) -> set[tuple[Fraction, ...]]:
    O = tuple(Fraction(0) for _ in range(d))
    A = tuple(Fraction(fib(i), fib(d - 1)) for i in range(d))
    B = (Fraction(1, fib(d - 2)),) + tuple(Fraction(fib(i), fib(d - 2)) for i in range(d - 1))
    return {O, A, B}


class FibonacciClaimFailure(AssertionError):
    pass


def check_fibonacci_claims(d: int, t_max: int) -> dict:
    """Vertices of [0,1]^d ∩ ker(A_d), the closed-form count L_d(t) against
    two brute-force counts, and the n = 1 lower bound r(A_d) >= F_{d+1}.

    Vertex or count mismatches raise :class:`FibonacciClaimFailure`. The
    lower bound is reported, not raised: (2, 1, 3, 4, ...) is a kernel
    vector with distinct entries and largest entry F_d + F_{d-2}, which is
    below F_{d+1}, so the n = 1 argument only certifies F_d + F_{d-2}.
    """
    if d < 4:
        raise ValueError("Fibonacci checks need d >= 4")
    A = fibonacci_matrix(d)
    P = polytope(A)
    got = set(P.vertices)
    want = expected_fibonacci_vertices(d)
    if got != want:
        raise FibonacciClaimFailure(f"d={d}: vertices {sorted(got)} != {sorted(want)}")

    scale = fib(d - 1) * fib(d - 2)
    counts = []
    for t in range(1, t_max + 1):
        closed = L_d_closed_form(d, t)
        lattice = count_positive(P, t * scale)
        tri = triangle_positive_points(d, t)
        if not closed == lattice == tri:
            raise FibonacciClaimFailure(
                f"d={d}, t={t}: closed form {closed}, lattice count {lattice}, triangle count {tri}"
            )
        counts.append({"t": t, "L_d": closed})

    # With n = 1 every vector with distinct entries in [k] is rainbow, so the
    # smallest possible largest entry of such a solution is a lower bound
    # for r(A_d). The claimed bound needs no distinct solution inside
    # [F_{d+1} - 1].
    k_low = fib(d + 1) - 1
    inside = distinct_solutions(A, k_low)
    smallest = min((x for x in kernel_points(A, fib(d + 1)) if len(set(x)) == d), key=lambda x: (max(x), x))
    lower = {
        "claimed": fib(d + 1),
        "holds": not inside,
        "counterexample": list(min(inside, key=lambda x: (max(x), x))) if inside else None,
        "certified_by_n1": max(smallest),
        "smallest_distinct_solution": list(smallest),
    }

    return {
        "d": d,
        "vertices": [[str(x) for x in v] for v in P.vertices],
        "vertices_verified": True,
        "counts": counts,
        "counts_verified": True,
        "lower_bound": lower,
        "upper_bound": (d * d - d + 1) * scale,
        "all_verified": lower["holds"],
    }
