"""Certificate search for small rainbow numbers over a list of matrices."""

import argparse
import json
from dataclasses import dataclass, field

from rainbowrado.linalg import Matrix
from rainbowrado.rainbow_number import estimate_rainbow_number, fibonacci_matrix


@dataclass
class SearchConfig:
    k_extra: int = 1
    n_max: int = 3
    budget: int = 100_000
    matrices: dict = field(
        default_factory=lambda: {
            "(1 -2 1)": [[1, -2, 1]],
            "(1 1 -1)": [[1, 1, -1]],
            "(1 1 -1 -1)": [[1, 1, -1, -1]],
            "(1 2 -1)": [[1, 2, -1]],
            "fibonacci(4)": fibonacci_matrix(4).to_lists(),
        }
    )


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k-extra", type=int, default=SearchConfig.k_extra, help="search k = d .. d + k_extra")
    p.add_argument("--n-max", type=int, default=SearchConfig.n_max)
    p.add_argument("--budget", type=int, default=SearchConfig.budget)
    a = p.parse_args()
    cfg = SearchConfig(a.k_extra, a.n_max, a.budget)

    for name, rows in cfg.matrices.items():
        A = Matrix.from_rows(rows)
        est = estimate_rainbow_number(A, A.ncols + cfg.k_extra, cfg.n_max, cfg.budget)
        out = est.to_dict()
        out.pop("note")
        print(name, json.dumps(out))


if __name__ == "__main__":
    main()
