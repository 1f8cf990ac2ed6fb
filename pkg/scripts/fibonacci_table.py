"""Fibonacci matrices A_d: vertex and count checks, the smallest
distinct-entry solution and the upper bound, one row per d."""

import argparse
from dataclasses import dataclass

from rainbowrado.rainbow_number import check_fibonacci_claims, fib


@dataclass
class FibConfig:
    d_min: int = 4
    d_max: int = 8
    t_max: int = 4


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--d-min", type=int, default=FibConfig.d_min)
    p.add_argument("--d-max", type=int, default=FibConfig.d_max)
    p.add_argument("--t-max", type=int, default=FibConfig.t_max)
    a = p.parse_args()
    cfg = FibConfig(a.d_min, a.d_max, a.t_max)

    print(f"{'d':>3} {'verts':>6} {'counts':>7} {'F_(d+1)':>8} {'n=1 bound':>10} {'upper':>7}  smallest distinct solution")
    for d in range(cfg.d_min, cfg.d_max + 1):
        rep = check_fibonacci_claims(d, cfg.t_max)
        low = rep["lower_bound"]
        print(
            f"{d:>3} {str(rep['vertices_verified']):>6} {str(rep['counts_verified']):>7} {fib(d + 1):>8} "
            f"{low['certified_by_n1']:>10} {rep['upper_bound']:>7}  {low['smallest_distinct_solution']}"
        )


if __name__ == "__main__":
    main()
