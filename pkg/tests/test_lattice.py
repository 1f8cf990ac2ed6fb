from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import linprog

from rainbowrado.acceptance import A1, SCHUR, ZERO_1x2
from rainbowrado.lattice import (
    count_dilation,
    count_positive,
    ehrhart,
    kernel_box_points,
    leading_coefficient,
    non_rainbow_upper_bound,
    polytope,
    reciprocity_check,
    validation_range,
)
from rainbowrado.linalg import Matrix, kernel_basis, rank
from rainbowrado.rainbow_number import fibonacci_matrix
from rainbowrado.regularity import positive_kernel_vector
from strategies import int_matrices

F = Fraction


def box_oracle(A, lo, hi):
    """All integer kernel vectors in [lo, hi]^d by full product scan."""
    return sorted(x for x in product(range(lo, hi + 1), repeat=A.ncols) if not any(A.apply(x)))


def vanishing_coordinates_oracle(A):
    """Coordinates with max x_j = 0 over [0,1]^d ∩ ker(A), via floating LP."""
    d = A.ncols
    M = np.array([[float(x) for x in r] for r in A.rows])
    out = set()
    for j in range(d):
        c = np.zeros(d)
        c[j] = -1
        res = linprog(c, A_eq=M, b_eq=np.zeros(A.nrows), bounds=[(0, 1)] * d, method="highs")
        if -res.fun < 1e-9:
            out.add(j)
    return out


def dilation_oracle(A, t, interior=False):
    if not interior:
        return len(box_oracle(A, 0, t))
    zero = vanishing_coordinates_oracle(A)
    return sum(
        1
        for x in box_oracle(A, 0, t)
        if all(x[j] == 0 if j in zero else 0 < x[j] < t for j in range(A.ncols))
    )


def test_kernel_box_point_examples():
    pts = sorted(kernel_box_points(kernel_basis(A1), 1, 3))
    assert pts == [(1, 1, 1), (1, 2, 3), (2, 2, 2), (3, 2, 1), (3, 3, 3)]
    assert list(kernel_box_points(kernel_basis(Matrix.from_rows([[1, 1]])), 1, 5)) == []
    assert sorted(kernel_box_points(kernel_basis(ZERO_1x2), 1, 2)) == [(1, 1), (1, 2), (2, 1), (2, 2)]


@given(int_matrices(max_cols=4, min_cols=1), st.integers(-2, 1), st.integers(0, 3))
def test_kernel_box_points_match_oracle(A, lo, width):
    K = kernel_basis(A)
    got = list(kernel_box_points(K, lo, lo + width))
    assert len(got) == len(set(got))
    assert sorted(got) == box_oracle(A, lo, lo + width)


def test_polytope_examples():
    P = polytope(fibonacci_matrix(4))
    assert set(P.vertices) == {(0, 0, 0, 0), (0, F(1, 2), F(1, 2), 1), (1, 0, 1, 1)}
    assert P.dim == 2 and P.denominator_lcm == 2
    P = polytope(Matrix.from_rows([[1, 1]]))
    assert P.vertices == ((0, 0),) and P.dim == 0
    P = polytope(ZERO_1x2)
    assert set(P.vertices) == {(0, 0), (0, 1), (1, 0), (1, 1)} and P.dim == 2


@given(int_matrices(max_cols=5, min_cols=1))
def test_vertices_are_basic_feasible(A):
    P = polytope(A)
    d = A.ncols
    for v in P.vertices:
        assert not any(A.apply(v)) and all(0 <= x <= 1 for x in v)
        tight = list(A.rows)
        for j in range(d):
            if v[j] in (0, 1):
                e = [0] * d
                e[j] = 1
                tight.append(tuple(F(x) for x in e))
        assert rank(Matrix.from_rows(tight, d)) == d


@given(int_matrices(max_cols=4, min_cols=1), st.randoms(use_true_random=False))
def test_vertices_permute_with_columns(A, rnd):
    perm = list(range(A.ncols))
    rnd.shuffle(perm)
    P, Q = polytope(A), polytope(A.select_columns(perm))
    assert set(Q.vertices) == {tuple(v[p] for p in perm) for v in P.vertices}


def test_count_dilation_examples():
    P = polytope(ZERO_1x2)
    assert count_dilation(P, 3) == 16 and count_dilation(P, 3, interior=True) == 4
    F4 = polytope(fibonacci_matrix(4))
    # Interior of 4P has one point; the positive points of 4P are two.
    assert count_dilation(F4, 4, interior=True) == 1
    assert count_positive(F4, 4) == 2
    assert sorted(x for x in box_oracle(fibonacci_matrix(4), 1, 4)) == [(1, 1, 2, 3), (2, 1, 3, 4)]


@pytest.mark.parametrize("rows", [[[0, 0]], [[1, -1]], [[1, -2, 1]], [[1, 1, -1]], [[1, 0, -1]], [[1, -1, 0], [0, 1, 0]]])
def test_count_dilation_matches_oracle(rows):
    A = Matrix.from_rows(rows)
    P = polytope(A)
    for t in range(0, 6):
        assert count_dilation(P, t) == dilation_oracle(A, t)
        if t:
            assert count_dilation(P, t, interior=True) == dilation_oracle(A, t, interior=True)


def test_ehrhart_examples():
    qp = ehrhart(polytope(ZERO_1x2))
    assert qp.period == 1 and qp.coefficients == ((1, 2, 1),)
    qp = ehrhart(polytope(Matrix.from_rows([[1, -1]])))
    assert qp.period == 1 and qp.coefficients == ((1, 1),)
    qp = ehrhart(polytope(fibonacci_matrix(4)))
    assert qp.period == 2
    assert qp.coefficients == ((1, 1, F(1, 4)), (F(3, 4), 1, F(1, 4)))
    qp = ehrhart(polytope(fibonacci_matrix(5)))
    assert qp.period == 6 and qp.leading == F(1, 12)


def test_leading_coefficients():
    assert leading_coefficient(A1) == F(1, 2)
    assert leading_coefficient(SCHUR) == F(1, 2)
    assert leading_coefficient(Matrix.from_rows([[1, 1, -1, -1]])) == F(2, 3)
    assert leading_coefficient(ZERO_1x2) == 1


def test_reciprocity_examples():
    P = polytope(ZERO_1x2)
    assert reciprocity_check(ehrhart(P), P, 3)
    P = polytope(Matrix.from_rows([[1, -1]]))
    assert count_dilation(P, 5, interior=True) == 4
    assert reciprocity_check(ehrhart(P), P, 5)
    P = polytope(fibonacci_matrix(4))
    qp = ehrhart(P)
    assert all(reciprocity_check(qp, P, t) for t in range(1, 7))


@given(int_matrices(max_rows=2, max_cols=4, min_cols=1, lo=-2, hi=2))
def test_ehrhart_and_reciprocity_random(A):
    P = polytope(A)
    qp = ehrhart(P)
    for t in validation_range(qp.period, P.dim, 3):
        assert qp(t) == count_dilation(P, t)
    for t in range(1, 5):
        assert reciprocity_check(qp, P, t)


@given(int_matrices(max_rows=2, max_cols=4, min_cols=1, lo=-2, hi=2))
def test_nu_positive_with_positive_kernel_vector(A):
    if positive_kernel_vector(A) is not None:
        P = polytope(A)
        assert P.dim == kernel_basis(A).dim
        assert ehrhart(P).leading > 0


def test_counting_bound_examples():
    assert non_rainbow_upper_bound([1] * 7, 3, 2, 7) == 21
    assert non_rainbow_upper_bound([4, 4, 4], 3, 2, 12) == 144
    assert non_rainbow_upper_bound([2, 2], 4, 3, 4) == 8 * 6 * 4
    with pytest.raises(ValueError):
        non_rainbow_upper_bound([3], 2, 1, 3)
