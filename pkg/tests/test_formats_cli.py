import json

import pytest
from hypothesis import given, strategies as st

from rainbowrado.cli import main, run
from rainbowrado.colorings import random_bounded_coloring
from rainbowrado.formats import (
    ParseError,
    dump_coloring,
    dump_graph,
    dump_matrix,
    parse_coloring,
    parse_graph,
    parse_matrix,
)
from rainbowrado.graphs import OrientedGraph
from rainbowrado.linalg import Matrix
from strategies import int_matrices


@given(int_matrices(min_cols=0, lo=-9, hi=9), st.integers(1, 7))
def test_matrix_round_trip(M, den):
    M = Matrix.from_rows([[x / den for x in r] for r in M.rows], M.ncols)
    assert parse_matrix(dump_matrix(M)) == M


@given(st.integers(1, 40), st.data())
def test_coloring_round_trip(N, data):
    k = data.draw(st.integers(1, N))
    c = random_bounded_coloring(N, k, N, data.draw(st.integers(0, 999)))
    assert parse_coloring(dump_coloring(c)) == c


@given(st.integers(2, 6), st.data())
def test_graph_round_trip(n, data):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    G = OrientedGraph.from_edges(n, data.draw(st.lists(st.sampled_from(pairs), max_size=9)))
    assert parse_graph(dump_graph(G)) == G


def test_matrix_parsing_details():
    M = parse_matrix("2 3\n1 -1/2 0\n\n3 4 -5\n")
    assert M == Matrix.from_rows([[1, "-1/2", 0], [3, 4, -5]])
    assert parse_matrix("2 0\n").shape == (2, 0)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, 1),
        ("1 x\n1\n", 1, 3),
        ("1 2\n1\n", 2, 1),
        ("1 2\n1 1.5\n", 2, 3),
        ("1 2\n1 3/0\n", 2, 3),
        ("2 2\n1 1\n", 3, 1),
    ],
)
def test_matrix_parse_errors(text, line, column):
    with pytest.raises(ParseError) as e:
        parse_matrix(text)
    assert (e.value.line, e.value.column) == (line, column)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("3 2\n1 2 3\n", 2, 5),
        ("3 2\n1 2\n", 2, 1),
        ("3 3\n1 1 2\n", 2, 1),
        ("3 2\n1 a 2\n", 2, 3),
    ],
)
def test_coloring_parse_errors(text, line, column):
    with pytest.raises(ParseError) as e:
        parse_coloring(text)
    assert (e.value.line, e.value.column) == (line, column)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("3 1\n1 4\n", 2, 3),
        ("3 1\n2 2\n", 2, 1),
        ("3 1\n1\n", 2, 1),
        ("3 2\n1 2\n", 3, 1),
    ],
)
def test_graph_parse_errors(text, line, column):
    with pytest.raises(ParseError) as e:
        parse_graph(text)
    assert (e.value.line, e.value.column) == (line, column)


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def report(argv):
    code, text, _ = run(argv)
    return code, json.loads(text)


def test_check_exit_codes(files):
    code, rep = report(["check", files("a1.txt", "1 3\n1 -2 1\n")])
    assert code == 0 and rep["regular"] and rep["C_squared"] == "1/6"
    assert list(rep)[0] == "command"
    code, rep = report(["check", files("b.txt", "1 3\n2 -3 0\n")])
    assert code == 1 and rep["failing_pair"] == [0, 1]
    code, rep = report(["check", files("bad.txt", "1 3\n1 -2\n")])
    assert code == 2 and "line 2" in rep["error"]
    code, rep = report(["check", "/nonexistent/matrix.txt"])
    assert code == 2


def test_usage_error_exit_code():
    assert run(["check"])[0] == 2
    assert run(["no-such-command"])[0] == 2


def test_fib_command_reports_lower_bound(files):
    code, rep = report(["fib", "--d", "4", "--tmax", "3"])
    assert rep["vertices_verified"] and rep["counts_verified"]
    assert rep["lower_bound"]["smallest_distinct_solution"] == [2, 1, 3, 4]
    assert code == (0 if rep["all_verified"] else 1)
    assert report(["fib", "--d", "3"])[0] == 2


def test_color_search_graph_round_trip(files, tmp_path):
    m = files("m.txt", "1 2\n1 -2\n")
    out = str(tmp_path / "c.txt")
    code, rep = report(["color", "--matrix", m, "--N", "12", "--k", "3", "--write", out])
    assert code == 0 and rep["equinumerous"] and not rep["rainbow_found"]
    code, rep = report(["search", m, "--coloring", out])
    assert code == 1 and not rep["found"]
    code, rep = report(["search", files("a1.txt", "1 3\n1 -2 1\n"), "--coloring", out, "--count"])
    assert code == 0 and rep["non_rainbow_count"] <= rep["bound"] == 144
    assert report(["color", "--matrix", files("s.txt", "1 2\n1 1\n"), "--N", "5", "--k", "2"])[0] == 1

    k4 = files("k4.txt", "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    rainbow = files("r.txt", "12 12\n" + " ".join(str(i) for i in range(1, 13)) + "\n")
    code, rep = report(["graph", k4, "--coloring", rainbow])
    assert code == 0 and rep["rainbow_regular"] and rep["rainbow_flow"] is not None
    code, rep = report(["graph", files("c5.txt", "5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n")])
    assert code == 1 and not rep["three_edge_connected"]


def test_enumerate_and_rainbow_number(files):
    code, rep = report(["enumerate-colorings", "--N", "4", "--k", "2"])
    assert code == 0 and rep["count"] == 3 and rep["colorings"] == [[1, 1, 2, 2], [1, 2, 1, 2], [1, 2, 2, 1]]
    assert report(["enumerate-colorings", "--N", "5", "--k", "2"])[0] == 2
    code, rep = report(["rainbow-number", files("a1.txt", "1 3\n1 -2 1\n"), "--kmax", "4", "--nmax", "3"])
    assert code == 0 and rep["smallest_clean_k"] == 3
    code, rep = report(["rainbow-number", files("b.txt", "1 2\n1 -2\n"), "--kmax", "3", "--nmax", "2"])
    assert code == 1 and "error" in rep


def test_ehrhart_and_robust(files, tmp_path):
    a1 = files("a1.txt", "1 3\n1 -2 1\n")
    out = tmp_path / "e.json"
    assert main(["--output", str(out), "ehrhart", a1, "--tmax", "4"]) == 0
    rep = json.loads(out.read_text())
    assert rep["nu"] == "1/2" and rep["C_squared"] == "1/6" and all(rep["reciprocity"].values())
    code, rep = report(["robust", a1, "--k", "16", "--N", "80", "--trials", "4", "--jobs", "2"])
    assert code == 0 and rep["found"] == 4
    code, rep = report(["robust", a1, "--k", "49", "--N", "20", "--trials", "1", "--eps", "0"])
    assert code == 2
    code, rep = report(["robust", files("s.txt", "1 2\n1 1\n"), "--k", "2", "--N", "4"])
    assert code == 1


def test_reports_are_deterministic(files):
    a1 = files("a1.txt", "1 3\n1 -2 1\n")
    for argv in (["check", a1], ["robust", a1, "--k", "16", "--N", "80", "--trials", "5"], ["ehrhart", a1]):
        assert run(argv) == run(argv)
    code, text, _ = run(["--timing", "check", a1])
    assert "timing_ms" in json.loads(text)
