from decimal import Decimal
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from rainbowrado.acceptance import A1, A2, SCHUR
from rainbowrado.colorings import Coloring, greedy_coloring, multiplicative_partition, random_bounded_coloring
from rainbowrado.linalg import Matrix
from rainbowrado.regularity import NotRainbowRegular, robust_constant
from rainbowrado.search import (
    count_non_rainbow,
    find_rainbow,
    kernel_points,
    max_class_size,
    robust_experiment,
)


def solutions_oracle(A, N):
    return [x for x in product(range(1, N + 1), repeat=A.ncols) if not any(A.apply(x))]


def test_find_rainbow_examples():
    assert not find_rainbow(A1, Coloring(4, 2, (1, 1, 2, 2))).found
    rep = find_rainbow(A1, Coloring(3, 3, (1, 2, 3)))
    assert rep.found and rep.witness in {(1, 2, 3), (3, 2, 1)}
    c = greedy_coloring(multiplicative_partition(1, 2, 12), 3)
    assert not find_rainbow(Matrix.from_rows([[1, -2]]), c).found


@given(st.sampled_from([A1, A2, SCHUR]), st.integers(1, 14), st.data())
def test_witness_verifies(A, N, data):
    k = data.draw(st.integers(1, N))
    c = random_bounded_coloring(N, k, N - k + 1, data.draw(st.integers(0, 10**6)))
    rep = find_rainbow(A, c)
    oracle = [x for x in solutions_oracle(A, N) if c.is_rainbow(x)]
    assert rep.found == bool(oracle)
    if rep.found:
        w = rep.witness
        assert not any(A.apply(w)) and all(1 <= x <= N for x in w)
        assert len({c.color(x) for x in w}) == len(w)


def test_count_non_rainbow_examples():
    for N in range(1, 10):
        c = Coloring(N, N, tuple(range(1, N + 1)))
        count, bound = count_non_rainbow(A1, c)
        assert count == N and bound == 3 * N
    c = Coloring(7, 1, (1,) * 7)
    assert count_non_rainbow(A1, c)[0] == len(solutions_oracle(A1, 7))
    c = greedy_coloring(multiplicative_partition(1, 2, 12), 3)
    count, bound = count_non_rainbow(A1, c)
    assert bound == 144
    assert count == sum(1 for x in solutions_oracle(A1, 12) if not c.is_rainbow(x))
    assert count <= bound


def test_count_without_bound_for_small_kernel():
    c = Coloring(6, 2, (1, 2, 1, 2, 1, 2))
    count, bound = count_non_rainbow(Matrix.from_rows([[1, -2]]), c)
    # Solutions (2,1), (4,2), (6,3); only (4,2) is monochromatic.
    assert bound is None and count == 1


@given(st.sampled_from([A1, A2, SCHUR]), st.integers(2, 16), st.data())
def test_rainbow_plus_non_rainbow_is_total(A, N, data):
    k = data.draw(st.integers(1, N))
    c = random_bounded_coloring(N, k, N - k + 1, data.draw(st.integers(0, 10**6)))
    count, bound = count_non_rainbow(A, c)
    rainbow = sum(1 for x in kernel_points(A, N) if c.is_rainbow(x))
    assert count + rainbow == len(solutions_oracle(A, N))
    assert count <= bound


@given(st.sampled_from([A1, A2, SCHUR]), st.integers(2, 16), st.data())
def test_refinement_never_loses_rainbow_solutions(A, N, data):
    k = data.draw(st.integers(1, N - 1))
    c = random_bounded_coloring(N, k, N - k + 1, data.draw(st.integers(0, 10**6)))
    splittable = [i for i, s in enumerate(c.class_sizes) if s >= 2]
    if not splittable:
        return
    target = data.draw(st.sampled_from(splittable)) + 1
    members = [x for x in range(1, N + 1) if c.color(x) == target]
    cut = data.draw(st.integers(1, len(members) - 1))
    moved = set(data.draw(st.permutations(members))[:cut])
    finer = Coloring(N, k + 1, tuple(k + 1 if x in moved else c.color(x) for x in range(1, N + 1)))
    total = sum(1 for _ in kernel_points(A, N))
    assert total - count_non_rainbow(A, finer)[0] >= total - count_non_rainbow(A, c)[0]


def test_max_class_size():
    C = robust_constant(A1).C(50)
    assert max_class_size(C, Fraction(0), 500, 49) == 29
    assert max_class_size(C, C / Decimal(100), 500, 49) == 28
    assert max_class_size(Decimal(1), Fraction(1, 2), 10, 4) == 2


def test_robust_experiment():
    rep = robust_experiment(A1, 49, 500, Fraction(0), 5, seed=3)
    assert rep.trials == 5 and rep.found == 5 and rep.failures == []
    assert rep.to_dict() == robust_experiment(A1, 49, 500, Fraction(0), 5, seed=3).to_dict()
    empty = robust_experiment(A1, 49, 500, Fraction(0), 0)
    assert empty.found == 0 and empty.failures == []
    with pytest.raises(NotRainbowRegular):
        robust_experiment(Matrix.from_rows([[1, 1]]), 4, 10, Fraction(0), 1)
    with pytest.raises(ValueError):
        robust_experiment(A1, 49, 20, Fraction(0), 1)


def test_robust_experiment_jobs_deterministic():
    one = robust_experiment(A1, 16, 80, Fraction(0), 6, seed=11, jobs=1)
    two = robust_experiment(A1, 16, 80, Fraction(0), 6, seed=11, jobs=2)
    assert one.to_dict() == two.to_dict()
