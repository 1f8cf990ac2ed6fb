"""Greedy colorings over the multiplicative partition of [k*n] for a
1 x 2 matrix: class statistics, equinumerosity and rainbow search."""

import argparse
from dataclasses import dataclass
from math import log

from rainbowrado.colorings import greedy_coloring, ratio_generator, multiplicative_partition, partition_stats
from rainbowrado.linalg import Matrix
from rainbowrado.search import find_rainbow


@dataclass
class GreedyConfig:
    p: int = 1
    q: int = -2
    k_min: int = 3
    k_max: int = 12


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--p", type=int, default=GreedyConfig.p)
    p.add_argument("--q", type=int, default=GreedyConfig.q)
    p.add_argument("--k-min", type=int, default=GreedyConfig.k_min)
    p.add_argument("--k-max", type=int, default=GreedyConfig.k_max)
    a = p.parse_args()
    cfg = GreedyConfig(a.p, a.q, a.k_min, a.k_max)

    gen = ratio_generator(cfg.p, cfg.q)
    if gen is None:
        raise SystemExit(f"({cfg.p} {cfg.q}) is outside the greedy construction")
    A = Matrix.from_rows([[cfg.p, cfg.q]])
    print(f"generator {gen}")
    print(f"{'k=n':>4} {'N':>5} {'largest':>8} {'1+log_b N':>10} {'singletons':>11} {'equinum':>8} {'rainbow':>8}")
    for k in range(cfg.k_min, cfg.k_max + 1):
        N = k * k
        P = multiplicative_partition(*gen, N)
        largest, singles = partition_stats(P)
        c = greedy_coloring(P, k)
        print(
            f"{k:>4} {N:>5} {largest:>8} {1 + log(N, gen[1]):>10.2f} {singles:>11} "
            f"{str(c.equinumerous):>8} {str(find_rainbow(A, c).found):>8}"
        )


if __name__ == "__main__":
    main()
