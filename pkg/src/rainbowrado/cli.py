"""Command-line front end.

Every subcommand prints a JSON report (stable key order). Exit codes: 0 on
success / positive verdict, 1 on a negative verdict for predicate commands
(check, search, robust, ehrhart, fib, graph, selftest), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from decimal import Decimal
from fractions import Fraction
from itertools import islice
from pathlib import Path
from typing import Optional, Sequence

from . import acceptance
from .colorings import (
    enumerate_equinumerous,
    equinumerous_count,
    greedy_coloring,
    ratio_generator,
    multiplicative_partition,
    partition_stats,
)
from .formats import ParseError, dump_coloring, parse_coloring, parse_graph, parse_matrix
from .graphs import CorollaryMismatch, check_corollary, positive_flow, rainbow_flow
from .lattice import ehrhart, polytope, reciprocity_check
from .linalg import Matrix
from .rainbow_number import check_fibonacci_claims, estimate_rainbow_number
from .regularity import NotRainbowRegular, is_rainbow_regular, robust_constant
from .search import count_non_rainbow, find_rainbow, robust_experiment

DEFAULT_SEED = acceptance.DEFAULT_SEED


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None


def _load(path, parser):
    try:
        return parser(_read(path))
    except ParseError as e:
        raise InputError(f"{path}: {e}") from None


def _matrix_json(A: Matrix):
    return [[str(x) for x in row] for row in A.rows]


def _parse_number(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a number: {text!r}") from None


def cmd_check(args):
    A = _load(args.matrix, parse_matrix)
    v = is_rainbow_regular(A)
    report = {"inputs": {"matrix": _matrix_json(A)}, **v.to_dict()}
    if v.regular and A.ncols >= 2:
        rc = robust_constant(A)
        report["nu"] = str(rc.nu)
        report["C_squared"] = str(rc.C_squared)
        report["C"] = str(rc.C(20))
    return (0 if v.regular else 1), report


def cmd_rainbow_number(args):
    A = _load(args.matrix, parse_matrix)
    report = {"inputs": {"matrix": _matrix_json(A), "kmax": args.kmax, "nmax": args.nmax, "budget": args.budget}}
    try:
        est = estimate_rainbow_number(A, args.kmax, args.nmax, args.budget)
    except NotRainbowRegular as e:
        report["error"] = str(e)
        return 1, report
    report.update(est.to_dict())
    return 0, report


def cmd_color(args):
    A = _load(args.matrix, parse_matrix)
    report = {"inputs": {"matrix": _matrix_json(A), "N": args.N, "k": args.k}}
    if A.shape != (1, 2):
        raise InputError("color needs a 1 x 2 matrix")
    gen = ratio_generator(*A.rows[0])
    if gen is None:
        report["error"] = "no greedy construction: zero entry, equal signs or p = -q"
        return 1, report
    a, b = gen
    P = multiplicative_partition(a, b, args.N)
    try:
        c = greedy_coloring(P, args.k)
    except ValueError as e:
        raise InputError(str(e)) from None
    largest, singletons = partition_stats(P)
    report.update(
        generator=[a, b],
        classes=[list(cls) for cls in P.classes],
        largest_class=largest,
        singleton_classes=singletons,
        coloring=list(c.assign),
        class_sizes=list(c.class_sizes),
        equinumerous=c.equinumerous,
        rainbow_found=find_rainbow(A, c).found,
    )
    if args.write:
        Path(args.write).write_text(dump_coloring(c))
        report["written"] = args.write
    return 0, report


def cmd_enumerate(args):
    if args.k < 1 or args.N % args.k:
        raise InputError(f"k = {args.k} must divide N = {args.N}")
    colorings = [list(c.assign) for c in islice(enumerate_equinumerous(args.N, args.k), args.limit)]
    return 0, {
        "inputs": {"N": args.N, "k": args.k, "limit": args.limit},
        "count": equinumerous_count(args.N, args.k),
        "colorings": colorings,
    }


def cmd_search(args):
    A = _load(args.matrix, parse_matrix)
    c = _load(args.coloring, parse_coloring)
    rep = find_rainbow(A, c)
    report = {
        "inputs": {"matrix": _matrix_json(A), "N": c.N, "k": c.k},
        "found": rep.found,
        "witness": list(rep.witness) if rep.witness else None,
        "solutions_scanned": rep.solutions_scanned,
    }
    if args.count:
        count, bound = count_non_rainbow(A, c)
        report["non_rainbow_count"] = count
        report["bound"] = bound
    return (0 if rep.found else 1), report


def cmd_robust(args):
    A = _load(args.matrix, parse_matrix)
    report = {"inputs": {"matrix": _matrix_json(A), "k": args.k, "N": args.N, "trials": args.trials, "seed": args.seed}}
    try:
        rc = robust_constant(A)
    except NotRainbowRegular as e:
        report["error"] = str(e)
        return 1, report
    if args.eps is not None:
        eps = _parse_number(args.eps)
        report["inputs"]["eps"] = str(eps)
    else:
        frac = _parse_number(args.eps_frac)
        eps = rc.C(50) * Decimal(frac.numerator) / Decimal(frac.denominator)
        report["inputs"]["eps"] = f"{frac} * C"
    try:
        rep = robust_experiment(A, args.k, args.N, eps, args.trials, args.seed, args.jobs)
    except ValueError as e:
        raise InputError(str(e)) from None
    report.update(rep.to_dict())
    return (0 if rep.found == rep.trials else 1), report


def cmd_ehrhart(args):
    A = _load(args.matrix, parse_matrix)
    P = polytope(A)
    qp = ehrhart(P)
    recip = {str(t): reciprocity_check(qp, P, t) for t in range(1, args.tmax + 1)}
    report = {
        "inputs": {"matrix": _matrix_json(A), "tmax": args.tmax},
        "dim": P.dim,
        "vertices": [[str(x) for x in v] for v in P.vertices],
        "period": qp.period,
        "coefficients": {str(r): [str(c) for c in cs] for r, cs in enumerate(qp.coefficients)},
        "nu": str(qp.leading),
        "reciprocity": recip,
    }
    v = is_rainbow_regular(A)
    if v.regular and A.ncols >= 2:
        report["C_squared"] = str(qp.leading / (A.ncols * (A.ncols - 1) // 2))
    return (0 if all(recip.values()) else 1), report


def cmd_fib(args):
    if args.d < 4:
        raise InputError("fib needs --d >= 4")
    rep = check_fibonacci_claims(args.d, args.tmax)
    return (0 if rep["all_verified"] else 1), {"inputs": {"d": args.d, "tmax": args.tmax}, **rep}


def cmd_graph(args):
    G = _load(args.graph, parse_graph)
    try:
        rep = check_corollary(G)
    except CorollaryMismatch as e:
        return 1, {"error": str(e)}
    report = {"inputs": {"n": G.n, "edges": [[u + 1, v + 1] for u, v in G.edges]}, **rep}
    if args.coloring:
        c = _load(args.coloring, parse_coloring)
        pf = positive_flow(G)
        H = G.reoriented(pf[0]) if pf else G
        flow = rainbow_flow(H, c)
        report["rainbow_flow"] = list(flow) if flow else None
        report["rainbow_flow_orientation"] = [[u + 1, v + 1] for u, v in H.edges]
    return (0 if rep["three_edge_connected"] else 1), report


def cmd_selftest(args):
    only = None
    if args.only:
        only = {int(x) for x in args.only.split(",")}
    results = acceptance.run_all(args.seed, timing=args.timing, only=only)
    report = {
        "inputs": {"seed": args.seed},
        "summary": [f"criterion {r['criterion']}: {'PASS' if r['passed'] else 'FAIL'} ({r['name']})" for r in results],
        "criteria": results,
    }
    return (0 if all(r["passed"] for r in results) else 1), report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rainbowrado", description=__doc__.splitlines()[0])
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    p.add_argument("--timing", action="store_true", help="add wall-clock milliseconds to the report")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="decide rainbow regularity")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("rainbow-number", help="desk-scale rainbow number search")
    s.add_argument("matrix")
    s.add_argument("--kmax", type=int, required=True)
    s.add_argument("--nmax", type=int, required=True)
    s.add_argument("--budget", type=int, default=100_000, help="max canonical colorings per (k, n)")
    s.set_defaults(func=cmd_rainbow_number)

    s = sub.add_parser("color", help="greedy anti-rainbow coloring for a 1 x 2 matrix")
    s.add_argument("--matrix", required=True)
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--write", help="also write the coloring file here")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("enumerate-colorings", help="canonical equinumerous colorings of [N]")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--limit", type=int, default=20)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("search", help="rainbow kernel vector under a coloring")
    s.add_argument("matrix")
    s.add_argument("--coloring", required=True)
    s.add_argument("--count", action="store_true", help="also count non-rainbow vectors")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("robust", help="seeded bounded-coloring experiment")
    s.add_argument("matrix")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--eps", help="absolute epsilon (rational or decimal)")
    s.add_argument("--eps-frac", default="1/100", help="epsilon as a fraction of C when --eps is absent")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_robust)

    s = sub.add_parser("ehrhart", help="Ehrhart quasi-polynomial of [0,1]^d ∩ ker(A)")
    s.add_argument("matrix")
    s.add_argument("--tmax", type=int, default=6)
    s.set_defaults(func=cmd_ehrhart)

    s = sub.add_parser("fib", help="Fibonacci matrix checks")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--tmax", type=int, default=4)
    s.set_defaults(func=cmd_fib)

    s = sub.add_parser("graph", help="3-edge-connectivity and rainbow flows")
    s.add_argument("graph")
    s.add_argument("--coloring")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("selftest", help="run the acceptance criteria")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--only", help="comma-separated criterion numbers")
    s.set_defaults(func=cmd_selftest)
    return p


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str, Optional[str]]:
    """Run a command; returns (exit code, serialized report, output path)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (2 if e.code else 0), "", None
    t0 = time.perf_counter()
    try:
        code, report = args.func(args)
    except InputError as e:
        return 2, json.dumps({"command": args.command, "error": str(e)}, indent=2) + "\n", None
    report = {"command": args.command, **report}
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - t0) * 1000, 1)
    return code, json.dumps(report, indent=2, default=str) + "\n", args.output


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, text, output = run(argv)
    if output:
        Path(output).write_text(text)
    elif text:
        (sys.stderr if code == 2 else sys.stdout).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
