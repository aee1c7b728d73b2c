"""Command-line front end: construct, verify, triangle, search, bench, counterexample.

Exit codes: 0 success, 1 non-graceful verdict, 2 usage/input error,
3 search stopped by the time limit.  stdout carries data, stderr diagnostics.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Sequence, Tuple

from .core import (
    CollisionSite,
    GracefulnessReport,
    Ruler,
    build_difference_triangle,
    verify_graceful,
)
from .constructions import (
    QuadraticFamilyParams,
    TriangularParams,
    construct_cubic,
    construct_half_cubic,
    construct_powers_of_two,
    construct_triangular,
    cubic_bound,
    find_quadratic_collision,
    half_cubic_bound,
    quadratic_sequence,
)
from .search import SearchConfig, compare_constructions, search_optimal

SCHEMA = "golomb/1"

EXIT_OK = 0
EXIT_NOT_GRACEFUL = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3

SEARCH_MAX_ORDER = 15


class UsageError(Exception):
    pass


def _parse_duration(text: str) -> float:
    """Parse '250ms', '1.5s', '2m', or a bare number of seconds."""
    m = re.fullmatch(r"\s*([0-9]*\.?[0-9]+)\s*(us|ms|s|m)?\s*", text)
    if not m:
        raise UsageError("cannot parse duration %r" % text)
    value = float(m.group(1))
    unit = m.group(2) or "s"
    scale = {"us": 1e-6, "ms": 1e-3, "s": 1.0, "m": 60.0}[unit]
    return value * scale


def _witness_json(w: CollisionSite) -> dict:
    return {"first": list(w.first), "second": list(w.second), "value": w.value}


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def _render_report(report: GracefulnessReport, fmt: str, extra: dict) -> None:
    if fmt == "json":
        out = dict(extra)
        out["graceful"] = report.graceful
        if report.witness is not None:
            out["witness"] = _witness_json(report.witness)
        _emit(out)
    else:
        for key, val in extra.items():
            if key == "marks":
                print("marks: %s" % " ".join(str(m) for m in val))
            elif key != "schema":
                print("%s: %s" % (key, val))
        print("graceful: %s" % ("yes" if report.graceful else "no"))
        if report.witness is not None:
            w = report.witness
            print(
                "witness: value %d at (%d,%d) and (%d,%d)"
                % (w.value, w.first[0], w.first[1], w.second[0], w.second[1])
            )


def cmd_construct(args) -> int:
    method = args.method
    n = args.n
    if method == "triangular":
        if args.modulus is None:
            raise UsageError("--modulus is required for --method triangular")
        ruler = construct_triangular(TriangularParams(order=n, modulus=args.modulus))
        bound = None
    elif method == "pow2":
        if args.modulus is not None:
            raise UsageError("--modulus only applies to --method triangular")
        ruler = construct_powers_of_two(n)
        bound = None
    elif method == "cubic":
        if args.modulus is not None:
            raise UsageError("--modulus only applies to --method triangular")
        ruler = construct_cubic(n)
        bound = cubic_bound(n)
    else:  # halfcubic
        if args.modulus is not None:
            raise UsageError("--modulus only applies to --method triangular")
        ruler = construct_half_cubic(n)
        bound = half_cubic_bound(n)
    report = verify_graceful(ruler)
    extra = {
        "schema": SCHEMA,
        "n": n,
        "method": method,
        "marks": list(ruler.marks),
        "length": ruler.length(),
    }
    if bound is not None:
        extra["bound"] = bound
    _render_report(report, args.format, extra)
    return EXIT_OK if report.graceful else EXIT_NOT_GRACEFUL


def _read_mark_lines(path: str) -> List[List[int]]:
    rulers = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                rulers.append([int(tok) for tok in line.split()])
            except ValueError:
                raise UsageError("%s:%d: cannot parse marks" % (path, lineno))
    if not rulers:
        raise UsageError("%s: no rulers found" % path)
    return rulers


def _normalize_marks(raw: Sequence[int]) -> Tuple[Ruler, int]:
    if not raw:
        raise UsageError("need at least one mark")
    for a, b in zip(raw, raw[1:]):
        if b == a:
            raise UsageError("duplicate mark %d in input" % a)
        if b < a:
            raise UsageError("marks must be sorted increasing")
    shift = raw[0]
    return Ruler(tuple(m - shift for m in raw)), shift


def cmd_verify(args) -> int:
    if args.file is not None:
        if args.marks:
            raise UsageError("give marks as arguments or --file, not both")
        mark_lists = _read_mark_lines(args.file)
    else:
        if not args.marks:
            raise UsageError("no marks given")
        mark_lists = [args.marks]

    worst = EXIT_OK
    results = []
    for raw in mark_lists:
        ruler, shift = _normalize_marks(raw)
        report = verify_graceful(ruler)
        if not report.graceful:
            worst = EXIT_NOT_GRACEFUL
        results.append((raw, ruler, shift, report))

    if args.format == "json":
        objs = []
        for raw, ruler, shift, report in results:
            obj = {"schema": SCHEMA, "marks": list(ruler.marks), "graceful": report.graceful}
            if shift:
                obj["normalized_shift"] = shift
            if report.witness is not None:
                obj["witness"] = _witness_json(report.witness)
            objs.append(obj)
        _emit(objs[0] if args.file is None else {"schema": SCHEMA, "results": objs})
    else:
        for raw, ruler, shift, report in results:
            extra = {"marks": list(ruler.marks)}
            if shift:
                extra["normalized"] = "shifted by -%d" % shift
            _render_report(report, "text", extra)
    return worst


def cmd_triangle(args) -> int:
    if args.method is not None:
        if args.marks:
            raise UsageError("give marks or --method, not both")
        if args.n is None:
            raise UsageError("--method needs --n")
        if args.method == "triangular" and args.modulus is None:
            raise UsageError("--modulus is required for --method triangular")
        if args.method == "pow2":
            ruler = construct_powers_of_two(args.n)
        elif args.method == "cubic":
            ruler = construct_cubic(args.n)
        elif args.method == "halfcubic":
            ruler = construct_half_cubic(args.n)
        else:
            ruler = construct_triangular(TriangularParams(order=args.n, modulus=args.modulus))
    else:
        if not args.marks:
            raise UsageError("no marks given")
        ruler, _ = _normalize_marks(args.marks)
    if ruler.order < 2:
        raise UsageError("triangle needs at least 2 marks")
    tri = build_difference_triangle(ruler)
    if args.format == "json":
        _emit({"schema": SCHEMA, "marks": list(ruler.marks), "rows": tri.rows()})
    else:
        for row in tri.rows():
            print(" ".join(str(v) for v in row))
    return EXIT_OK


def cmd_search(args) -> int:
    n = args.n
    if not (2 <= n <= SEARCH_MAX_ORDER):
        raise UsageError(
            "order must be between 2 and %d; larger orders need project-scale "
            "distributed search, which this tool does not attempt" % SEARCH_MAX_ORDER
        )
    time_limit = _parse_duration(args.timeout) if args.timeout else None
    config = SearchConfig(order=n, time_limit=time_limit, parallelism=args.jobs)
    result = search_optimal(config)
    if args.format == "json":
        _emit(
            {
                "schema": SCHEMA,
                "n": n,
                "marks": list(result.ruler.marks),
                "length": result.length,
                "optimal": result.optimal,
                "nodes": result.nodes_explored,
                "elapsed_s": round(result.elapsed, 6),
            }
        )
    else:
        print("marks: %s" % " ".join(str(m) for m in result.ruler.marks))
        print("length: %d" % result.length)
        print("optimal: %s" % ("yes" if result.optimal else "no"))
        print("nodes: %d" % result.nodes_explored)
        print("elapsed: %.3fs" % result.elapsed)
    return EXIT_OK if result.optimal else EXIT_TIMEOUT


CSV_HEADER = "n,lower_bound,optimal,pow2,thm1,thm1_nminus2,thm2"


def cmd_bench(args) -> int:
    rows = compare_constructions(args.n_max, exact_cutoff=args.exact_cutoff)
    q = lambda v: "?" if v is None else str(v)
    if args.format == "csv":
        print(CSV_HEADER)
        for r in rows:
            print(
                "%d,%d,%s,%s,%d,%d,%d"
                % (r.n, r.lower_bound, q(r.optimal), q(r.pow2), r.cubic, r.cubic_shifted, r.half_cubic)
            )
    elif args.format == "json":
        _emit(
            {
                "schema": SCHEMA,
                "rows": [
                    {
                        "n": r.n,
                        "lower_bound": r.lower_bound,
                        "optimal": r.optimal,
                        "pow2": r.pow2,
                        "thm1": r.cubic,
                        "thm1_nminus2": r.cubic_shifted,
                        "thm2": r.half_cubic,
                    }
                    for r in rows
                ],
            }
        )
    else:
        header = CSV_HEADER.split(",")
        table = [header] + [
            [str(r.n), str(r.lower_bound), q(r.optimal), q(r.pow2), str(r.cubic), str(r.cubic_shifted), str(r.half_cubic)]
            for r in rows
        ]
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        for row in table:
            print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return EXIT_OK


def cmd_counterexample(args) -> int:
    params = QuadraticFamilyParams(a=args.a, b=args.b, c=args.c)
    witness = find_quadratic_collision(params)
    seq = quadratic_sequence(params, witness.n)
    if args.format == "json":
        _emit(
            {
                "schema": SCHEMA,
                "a": args.a,
                "b": args.b,
                "c": args.c,
                "n": witness.n,
                "sequence": seq,
                "first": [witness.i1, witness.j1],
                "second": [witness.i2, witness.j2],
                "value": witness.value,
                "verified": True,
            }
        )
    else:
        print("n: %d" % witness.n)
        print("sequence: %s" % " ".join(str(v) for v in seq))
        print(
            "collision: value %d at (%d,%d) and (%d,%d)"
            % (witness.value, witness.i1, witness.j1, witness.i2, witness.j2)
        )
        print("verified")
    return EXIT_OK


def _add_format(parser, choices=("text", "json")) -> None:
    parser.add_argument("--format", choices=list(choices), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="golomb",
        description="Construct, verify, and search Golomb rulers via difference triangles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a ruler from one of the explicit families")
    p.add_argument("--method", required=True, choices=["pow2", "cubic", "halfcubic", "triangular"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--modulus", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check that all pairwise differences are distinct")
    p.add_argument("marks", type=int, nargs="*")
    p.add_argument("--file", default=None, help="marks file: one ruler per line, # comments")
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("triangle", help="render the difference triangle")
    p.add_argument("marks", type=int, nargs="*")
    p.add_argument("--method", choices=["pow2", "cubic", "halfcubic", "triangular"], default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--modulus", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("search", help="exact optimal ruler by branch-and-bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--timeout", default=None, help="e.g. 500ms, 10s, 2m")
    p.add_argument("--jobs", type=int, default=1)
    _add_format(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bench", help="compare construction lengths against exact optima")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--exact-cutoff", type=int, default=9)
    _add_format(p, choices=("text", "json", "csv"))
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("counterexample", help="duplicated difference forced by any quadratic family")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_counterexample)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching our contract
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ValueError, OverflowError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
