"""Colorings of [N] = {1, ..., N}.

Includes the multiplicative-class partition for a 1 x 2 kernel generator
(a, b) and the greedy coloring built from it, which is constant on every
class and therefore has no rainbow solution of a*x = b*y style equations.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Iterator, Optional, Sequence


@dataclass(frozen=True)
class Coloring:
    """A surjective map [N] -> {1..k}; ``assign[i-1]`` is the color of i."""

    N: int
    k: int
    assign: tuple[int, ...]

    def __post_init__(self):
        if len(self.assign) != self.N:
            raise ValueError(f"{len(self.assign)} colors given for N = {self.N}")
        if any(not 1 <= c <= self.k for c in self.assign):
            raise ValueError(f"colors must lie in 1..{self.k}")
        if len(set(self.assign)) != self.k:
            raise ValueError("coloring is not surjective")

    def color(self, x: int) -> int:
        return self.assign[x - 1]

    @property
    def class_sizes(self) -> tuple[int, ...]:
        counts = Counter(self.assign)
        return tuple(counts[c] for c in range(1, self.k + 1))

    @property
    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for x, c in enumerate(self.assign, 1):
            out[c - 1].append(x)
        return out

    @property
    def equinumerous(self) -> bool:
        return len(set(self.class_sizes)) == 1

    def is_rainbow(self, x: Sequence[int]) -> bool:
        cols = [self.assign[v - 1] for v in x]
        return len(set(cols)) == len(cols)

    @classmethod
    def from_classes(cls, N: int, classes: Sequence[Sequence[int]]) -> "Coloring":
        assign = [0] * N
        for c, members in enumerate(classes, 1):
            for x in members:
                assign[x - 1] = c
        return cls(N, len(classes), tuple(assign))


@dataclass(frozen=True)
class MultiplicativePartition:
    a: int
    b: int
    N: int
    classes: tuple[tuple[int, ...], ...]


def multiplicative_partition(a: int, b: int, N: int) -> MultiplicativePartition:
    """Classes of the relation a*i = b*j on [N], for coprime 0 < a < b.

    Each class is a chain c*a^t, c*a^(t-1)*b, ..., c*b^t cut to [N]; its
    smallest element is the unique member not divisible by b, and walking
    up multiplies by b/a while the current element is divisible by a.
    """
    if not (0 < a < b) or gcd(a, b) != 1:
        raise ValueError(f"need coprime 0 < a < b, got a={a}, b={b}")
    if N < 1:
        raise ValueError("N must be positive")
    classes = []
    for x in range(1, N + 1):
        if x % b == 0:
            continue
        chain = [x]
        while x % a == 0 and x // a * b <= N:
            x = x // a * b
            chain.append(x)
        classes.append(tuple(chain))
    return MultiplicativePartition(a, b, N, tuple(classes))


def greedy_coloring(P: MultiplicativePartition, k: int) -> Coloring:
    """Give a least used color to a largest uncolored class, repeatedly.

    Ties: larger classes first, then smaller minimum element; among least
    used colors, the smallest index.
    """
    if k < 1 or k > len(P.classes):
        raise ValueError(f"k = {k} cannot be surjective on {len(P.classes)} classes")
    order = sorted(P.classes, key=lambda c: (-len(c), c[0]))
    used = [0] * k
    assign = [0] * P.N
    for cls in order:
        c = min(range(k), key=lambda i: (used[i], i))
        used[c] += len(cls)
        for x in cls:
            assign[x - 1] = c + 1
    return Coloring(P.N, k, tuple(assign))


def partition_stats(P: MultiplicativePartition) -> tuple[int, int]:
    """(largest class size, number of singleton classes)."""
    sizes = [len(c) for c in P.classes]
    return max(sizes), sizes.count(1)


def equinumerous_count(N: int, k: int) -> int:
    """Number of equinumerous k-colorings of [N] up to relabeling colors."""
    n = N // k
    return factorial(N) // (factorial(n) ** k * factorial(k))


def _canonical_labelings(N: int, k: int) -> Iterator[list[int]]:
    n = N // k
    labels = [0] * N
    sizes = [0] * (k + 1)

    def rec(i, used):
        if i == N:
            yield labels
            return
        # Too few elements left to open the remaining colors.
        if N - i < (k - used) * n:
            return
        for c in range(1, used + 1):
            if sizes[c] < n:
                labels[i] = c
                sizes[c] += 1
                yield from rec(i + 1, used)
                sizes[c] -= 1
        if used < k:
            labels[i] = used + 1
            sizes[used + 1] += 1
            yield from rec(i + 1, used + 1)
            sizes[used + 1] -= 1

    yield from rec(0, 0)


def enumerate_equinumerous(N: int, k: int) -> Iterator[Coloring]:
    """One representative per relabeling orbit, in first-occurrence form
    (element 1 has color 1, the next new color seen is 2, and so on)."""
    if k < 1 or N % k:
        raise ValueError(f"k = {k} does not divide N = {N}")
    for labels in _canonical_labelings(N, k):
        yield Coloring(N, k, tuple(labels))


def random_bounded_coloring(N: int, k: int, max_class_size: int, seed: int) -> Coloring:
    """A seeded random surjective k-coloring of [N] with classes of size at
    most ``max_class_size``.

    Sizes start at one per color and the remaining N - k elements are handed
    out one at a time to a random color that still has room; the labels are
    then shuffled over [N].
    """
    if max_class_size < 1 or k < 1 or k > N or k * max_class_size < N:
        raise ValueError(
            f"no surjective {k}-coloring of [{N}] with classes of size <= {max_class_size}"
        )
    rng = random.Random(seed)
    sizes = [1] * k
    open_colors = [c for c in range(k) if sizes[c] < max_class_size]
    for _ in range(N - k):
        idx = rng.randrange(len(open_colors))
        c = open_colors[idx]
        sizes[c] += 1
        if sizes[c] == max_class_size:
            open_colors[idx] = open_colors[-1]
            open_colors.pop()
    labels = [c + 1 for c in range(k) for _ in range(sizes[c])]
    rng.shuffle(labels)
    return Coloring(N, k, tuple(labels))


def ratio_generator(p, q) -> Optional[tuple[int, int]]:
    """Kernel generator (a, b) of the 1 x 2 matrix (p q), as coprime
    0 < a < b, or None when the greedy construction does not apply
    (a zero entry, equal signs, or p = -q)."""
    p, q = Fraction(p), Fraction(q)
    if p == 0 or q == 0 or (p > 0) == (q > 0) or p == -q:
        return None
    # p*x + q*y = 0 is solved by (x, y) = (|q|, |p|) up to scaling.
    x, y = abs(q), abs(p)
    den = math.lcm(x.denominator, y.denominator)
    x, y = int(x * den), int(y * den)
    g = gcd(x, y)
    x, y = x // g, y // g
    return (min(x, y), max(x, y))
