"""Robust-regularity sweep: fraction of bounded random colorings of [N]
that contain a rainbow vector, over a grid of (k, N)."""

import argparse
from dataclasses import dataclass, field, fields
from decimal import Decimal

from rainbowrado.linalg import Matrix
from rainbowrado.regularity import robust_constant
from rainbowrado.search import max_class_size, robust_experiment


@dataclass
class SweepConfig:
    rows: list = field(default_factory=lambda: [[1, -2, 1]])
    ks: tuple = (9, 16, 25, 49)
    Ns: tuple = (50, 100, 200, 500)
    eps_frac: Decimal = Decimal("0.01")
    trials: int = 50
    seed: int = 20140101
    jobs: int = 1


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--ks", type=int, nargs="+")
    p.add_argument("--Ns", type=int, nargs="+")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int)
    args = p.parse_args()
    cfg = SweepConfig(**{f.name: getattr(args, f.name) for f in fields(SweepConfig) if getattr(args, f.name, None) is not None})

    A = Matrix.from_rows(cfg.rows)
    C = robust_constant(A).C(50)
    eps = C * cfg.eps_frac
    print(f"C = {robust_constant(A).C(12)}, eps = {cfg.eps_frac} C")
    print(f"{'k':>4} {'N':>5} {'bound':>6} {'found':>9}")
    for k in cfg.ks:
        for N in cfg.Ns:
            size = max_class_size(C, eps, N, k)
            if size < 1 or k * size < N or k > N:
                print(f"{k:>4} {N:>5} {size:>6} {'infeasible':>9}")
                continue
            rep = robust_experiment(A, k, N, eps, cfg.trials, cfg.seed, cfg.jobs)
            print(f"{k:>4} {N:>5} {size:>6} {rep.found:>4}/{rep.trials:<4}")


if __name__ == "__main__":
    main()
