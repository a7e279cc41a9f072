"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 eigensolver non-convergence, 4 an
audit check expected to hold failed (documented-fail findings never change
the exit code).
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from typing import Iterator

from . import audit as audit_mod
from . import conjecture
from ._format import dumps, fmt_value, format_polynomial
from ._pool import default_jobs
from .graphs import (
    FAMILIES,
    Graph,
    GraphError,
    GraphFormatError,
    enumerate_up_to,
    format_edge_list,
    generate_family,
    parse_edge_list,
    read_graph6,
    write_graph6,
)
from .graphs.enumeration import MAX_ENUMERATION_ORDER
from .indices import compute_indices
from .spectral import (
    EigenSolverError,
    PreconditionError,
    char_poly_numeric,
    dso_spectrum,
    energy,
    path_char_poly,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SOLVER = 3
EXIT_AUDIT = 4


class InputError(Exception):
    pass


def _env_float(name: str, fallback: float) -> float:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return float(raw)
    except ValueError:
        raise InputError(f"{name}={raw!r} is not a number") from None


def _graphs(args) -> Iterator[Graph]:
    if args.g6 is not None:
        if args.g6 == "-":
            yield from read_graph6(sys.stdin.buffer)
        else:
            yield from read_graph6(args.g6)
    elif args.edges is not None:
        text = sys.stdin.read() if args.edges == "-" else open(args.edges, encoding="utf-8").read()
        yield parse_edge_list(text)
    elif args.family is not None:
        yield generate_family(args.family, args.n, args.p, args.q)
    else:
        if not 1 <= args.enumerate <= MAX_ENUMERATION_ORDER:
            raise InputError(f"--enumerate takes 1..{MAX_ENUMERATION_ORDER}")
        yield from enumerate_up_to(args.enumerate)


def _g6(g: Graph) -> str:
    return write_graph6(g).decode("ascii")


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([fmt_value(v) for v in row])
    return buf.getvalue()


def _cmd_spectrum(args, out) -> int:
    if args.format == "csv":
        out.write("graph6,index,eigenvalue\n")
    for g in _graphs(args):
        s = dso_spectrum(g, args.tol)
        poly = char_poly_numeric(s)
        if args.format == "json":
            out.write(dumps({
                "graph6": _g6(g), "n": g.n, "m": g.m,
                "eigenvalues": list(s.eigenvalues), "t": s.t,
                "spectral_radius": s.eigenvalues[0] if s.eigenvalues else None,
                "energy": energy(s), "coefficients": list(poly.coefficients),
            }) + "\n")
        elif args.format == "csv":
            out.write(_csv_text((_g6(g), k, v) for k, v in enumerate(s.eigenvalues)))
        else:
            vals = " ".join(fmt_value(v) for v in s.eigenvalues)
            out.write(f"{_g6(g)} t={s.t} energy={fmt_value(energy(s))} eigenvalues={vals}\n")
    return EXIT_OK


def _cmd_energy(args, out) -> int:
    if args.format == "csv":
        out.write("graph6,n,m,energy\n")
    for g in _graphs(args):
        e = energy(dso_spectrum(g, args.tol))
        if args.format == "json":
            out.write(dumps({"graph6": _g6(g), "n": g.n, "m": g.m, "energy": e}) + "\n")
        elif args.format == "csv":
            out.write(_csv_text([(_g6(g), g.n, g.m, e)]))
        else:
            out.write(fmt_value(e) + "\n")
    return EXIT_OK


def _cmd_indices(args, out) -> int:
    if args.format == "csv":
        out.write("graph6,index_id,value\n")
    for g in _graphs(args):
        values = compute_indices(g)
        if args.format == "json":
            row = {"graph6": _g6(g), "n": g.n, "m": g.m}
            row.update((v.index_id, v.value) for v in values)
            out.write(dumps(row) + "\n")
        elif args.format == "csv":
            out.write(_csv_text((_g6(g), v.index_id, v.value) for v in values))
        else:
            out.write(" ".join(f"{v.index_id}={fmt_value(v.value)}" for v in values) + "\n")
    return EXIT_OK


def _cmd_charpoly(args, out) -> int:
    exact_path = args.family == "path"
    if args.format == "csv":
        out.write("graph6,power,coefficient\n")
    for g in _graphs(args):
        if exact_path and g.n >= 2:
            poly = path_char_poly(g.n)
        else:
            poly = char_poly_numeric(dso_spectrum(g, args.tol))
        if args.format == "json":
            out.write(dumps({
                "graph6": _g6(g), "n": g.n, "exact": poly.exact,
                "coefficients": list(poly.coefficients),
            }) + "\n")
        elif args.format == "csv":
            out.write(_csv_text((_g6(g), k, c) for k, c in enumerate(poly.coefficients)))
        else:
            out.write(format_polynomial(poly.coefficients) + "\n")
    return EXIT_OK


def _cmd_family(args, out) -> int:
    if args.format == "csv":
        out.write("i,j\n")
    for g in _graphs(args):
        if args.format == "json":
            out.write(dumps({"graph6": _g6(g), "n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]}) + "\n")
        elif args.format == "csv":
            out.write(_csv_text(g.edges))
        else:
            out.write(format_edge_list(g))
    return EXIT_OK


_AUDIT_CSV_HEADER = (
    "graph6,check_id,applicable,lhs,rhs,slack,holds,equality_expected,equality_observed\n"
)


def _cmd_audit(args, out) -> int:
    checks = args.checks.split(",") if args.checks else None
    try:
        selected = audit_mod.select_checks(checks)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    report = audit_mod.AuditReport(
        0, args.tol, [audit_mod.CheckAggregate(c.check_id, c.expectation) for c in selected]
    )
    if args.format == "csv":
        out.write(_AUDIT_CSV_HEADER)
    stream = audit_mod.iter_corpus_audit(
        _graphs(args), args.tol, checks, args.jobs, keep_rows=args.format == "csv"
    )
    for count, partial, rows in stream:
        report.graphs += count
        for agg, part in zip(report.checks, partial):
            agg.merge(part)
        if rows:
            out.write(_csv_text(
                (r.graph6, r.result.check_id, r.result.applicable, r.result.lhs, r.result.rhs,
                 r.result.slack, r.result.holds, r.result.equality_expected,
                 r.result.equality_observed)
                for r in rows
            ))
    if args.format == "json":
        for agg in report.checks:
            out.write(dumps(agg.to_dict()) + "\n")
    elif args.format == "text":
        out.write(f"graphs={report.graphs} tol={fmt_value(report.tol)}\n")
        for agg in report.checks:
            out.write(
                f"{agg.check_id:<20} {agg.expectation:<16} applicable={agg.applicable} "
                f"holds={agg.holds} fails={agg.fails} worst_slack={fmt_value(agg.worst_slack)} "
                f"witness={agg.witness_graph6 or '-'}\n"
            )
    bad = report.unexpected_failures
    for agg in bad:
        print(f"audit: {agg.check_id} expected to hold but failed on {agg.fails} graph(s), "
              f"e.g. {agg.witness_graph6}", file=sys.stderr)
    return EXIT_AUDIT if bad else EXIT_OK


def _cmd_search(args, out) -> int:
    result = conjecture.scan(_graphs(args), args.epsilon, args.top_k, args.dedup, args.jobs)
    rows = result.nearest if args.top_k else result.candidates
    if args.format == "csv":
        out.write("graph6,n,m,energy,gap\n")
        out.write(_csv_text((r.graph6, r.n, r.m, r.energy, r.gap) for r in rows))
    for r in rows:
        if args.format == "json":
            out.write(dumps({"graph6": r.graph6, "n": r.n, "m": r.m, "energy": r.energy, "gap": r.gap}) + "\n")
        elif args.format == "text":
            out.write(f"{r.graph6} n={r.n} m={r.m} energy={fmt_value(r.energy)} gap={fmt_value(r.gap)}\n")
    print("search: " + dumps(result.summary()), file=sys.stderr)
    return EXIT_OK


COMMANDS = {
    "spectrum": (_cmd_spectrum, "DSO eigenvalues, distinct count, energy and Vieta coefficients"),
    "energy": (_cmd_energy, "diminished Sombor energy"),
    "indices": (_cmd_indices, "DSO, GA, first Zagreb, M_{1,-2} and trace quantities"),
    "charpoly": (_cmd_charpoly, "characteristic polynomial (exact rationals for --family path)"),
    "family": (_cmd_family, "emit a generated or parsed graph"),
    "audit": (_cmd_audit, "evaluate the registered bounds over a corpus"),
    "search": (_cmd_search, "scan for near-integer energies"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_argument_group("input (exactly one)").add_mutually_exclusive_group(required=True)
    source.add_argument("--g6", metavar="FILE", help="graph6 file, one record per line ('-' for stdin)")
    source.add_argument("--edges", metavar="FILE", help="edge-list file: 'n m' then 'i j' lines")
    source.add_argument("--family", choices=FAMILIES, help="generated family")
    source.add_argument("--enumerate", type=int, metavar="N", help="all labeled graphs on 1..N vertices")
    common.add_argument("--n", type=int, help="order for --family")
    common.add_argument("--p", type=int, help="first part size for complete_bipartite")
    common.add_argument("--q", type=int, help="second part size for complete_bipartite")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    common.add_argument("--tol", type=float, default=None,
                        help="solver tolerance (audit: slack tolerance); default from DSO_TOL")

    parser = argparse.ArgumentParser(
        prog="dsomatrix", description="Diminished Sombor matrix spectra, bounds and energy search."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name in ("audit", "search"):
            p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all CPUs)")
        if name == "audit":
            p.add_argument("--checks", metavar="LIST", help="comma-separated check ids")
        if name == "search":
            p.add_argument("--epsilon", type=float, default=conjecture.DEFAULT_EPSILON)
            p.add_argument("--top-k", type=int, default=0, help="report the K nearest-integer energies instead")
            p.add_argument("--dedup", action="store_true", help="skip isomorphic duplicates (n <= 8)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        if args.tol is None:
            fallback = audit_mod.DEFAULT_AUDIT_TOL if args.command == "audit" else 1e-12
            args.tol = _env_float("DSO_TOL", fallback)
        if getattr(args, "jobs", 1) is None:
            args.jobs = default_jobs()
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as out:
                return handler(args, out)
        return handler(args, sys.stdout)
    except EigenSolverError as exc:
        print(f"dsomatrix: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (InputError, GraphError, GraphFormatError, PreconditionError, OSError) as exc:
        print(f"dsomatrix: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
