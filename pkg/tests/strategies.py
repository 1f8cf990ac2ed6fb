"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from rainbowrado.linalg import Matrix


@st.composite
def int_matrices(draw, max_rows=3, min_cols=0, max_cols=6, lo=-3, hi=3):
    m = draw(st.integers(1, max_rows))
    d = draw(st.integers(min_cols, max_cols))
    rows = draw(st.lists(st.lists(st.integers(lo, hi), min_size=d, max_size=d), min_size=m, max_size=m))
    return Matrix.from_rows(rows, d)
