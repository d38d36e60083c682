"""Command-line interface.

Subcommands::

    rho       radius of one graph (edge-list file/stdin or inline graph6)
    matching  matching number, optionally with the deficiency witness
    bound     regime bound for (n, beta) at alpha
    classify  full regime verdict for (n, beta) at alpha
    verify    exhaustive check of one order, all feasible beta
    family    best join family for (n, beta) at alpha
    report    verification sweep over a range of orders and alphas

Alpha is accepted as a decimal or an exact rational like ``1/2``; the
rational form is preferred because the threshold regime is decided by
exact arithmetic.  Exit codes: 0 success / all pass, 1 verification
failure, 2 usage or parse error.  ALPHASPEC_JOBS sets the default worker
count for the scans.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .graphs import Graph, Graph6Error, parse_edge_list, parse_graph6
from .matching import matching_number, tutte_berge_witness
from .spectral import spectral_radius
from .theorem import classify_regime
from .verify import (
    REPORT_CSV_HEADER,
    FamilySearchResult,
    family_search,
    verify_order,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

_DESCRIPTOR_NAMES = {
    "COMPLETE": "K_n",
    "ODD_CLIQUE_PLUS_ISOLATES": "K_{2b+1} + isolated vertices",
    "COMPLETE_SPLIT": "K_b joined to an independent set",
    "EMPTY_GRAPH": "edgeless graph",
}


def sig12(value: float) -> str:
    """12 significant digits, trailing zeros kept; exact zero prints 0."""
    if value == 0:
        return "0"
    return format(value, "#.12g")


def _alpha_arg(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid alpha {text!r}: use a decimal or p/q")
    if value < 0:
        raise argparse.ArgumentTypeError("alpha must be nonnegative")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphaspec",
        description="alpha-spectral radius and extremal bounds for graphs with given matching number",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_alpha(p, default="0"):
        p.add_argument("--alpha", type=_alpha_arg, default=Fraction(default),
                       help="nonnegative alpha, decimal or p/q (default %(default)s)")

    def add_format(p, choices=("human", "json-lines", "csv")):
        p.add_argument("--format", choices=choices, default="human",
                       help="output format (default %(default)s)")

    def add_graph_input(p):
        p.add_argument("--input", metavar="PATH",
                       help="edge-list file ('n m' header then 'u v' lines); '-' reads stdin")
        p.add_argument("--graph6", metavar="G6", help="inline graph6 string")

    p = sub.add_parser("rho", help="alpha-spectral radius of one graph")
    add_graph_input(p)
    add_alpha(p)
    p.add_argument("--tol", type=_positive_float, default=1e-10,
                   help="residual tolerance (default %(default)s)")
    add_format(p)

    p = sub.add_parser("matching", help="matching number of one graph")
    add_graph_input(p)
    p.add_argument("--witness", action="store_true",
                   help="also print the deficiency witness set (order <= 24)")
    add_format(p)

    for name in ("bound", "classify"):
        p = sub.add_parser(name, help=f"{name} for (n, beta) at alpha")
        p.add_argument("n", type=int)
        p.add_argument("beta", type=int)
        add_alpha(p)
        add_format(p)

    p = sub.add_parser("verify", help="exhaustive verification of one order")
    p.add_argument("n", type=int)
    add_alpha(p)
    p.add_argument("--tol", type=_positive_float, default=1e-9,
                   help="value tolerance (default %(default)s)")
    p.add_argument("--graph6", metavar="FILE",
                   help="graph6 file with one class per line (required for n > 8)")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker count (default ALPHASPEC_JOBS or 1)")
    add_format(p)

    p = sub.add_parser("family", help="best join family for (n, beta) at alpha")
    p.add_argument("n", type=int)
    p.add_argument("beta", type=int)
    add_alpha(p)
    add_format(p)

    p = sub.add_parser("report", help="verification sweep over orders and alphas")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--alphas", default="0,1/2,1,2",
                   help="comma-separated alpha list (default %(default)s)")
    p.add_argument("--tol", type=_positive_float, default=1e-9)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--output", metavar="PATH", help="write records here instead of stdout")
    add_format(p)
    return parser


def _load_graph(args) -> Graph:
    if bool(args.input) == bool(args.graph6):
        raise SystemExit2("exactly one of --input or --graph6 is required")
    if args.graph6:
        return parse_graph6(args.graph6)
    if args.input == "-":
        return parse_edge_list(sys.stdin.read())
    with open(args.input, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


class SystemExit2(Exception):
    """Usage/parse error carrying its message (mapped to exit code 2)."""


def _emit(record: dict, fmt: str, human_lines: list[str]) -> None:
    if fmt == "json-lines":
        print(json.dumps(record))
    elif fmt == "csv":
        print(",".join(str(record[k]) for k in record))
    else:
        for line in human_lines:
            print(line)


def cmd_rho(args) -> int:
    g = _load_graph(args)
    result = spectral_radius(g, float(args.alpha), tol=args.tol)
    record = {
        "n": g.n,
        "alpha": str(args.alpha),
        "rho": result.rho,
        "residual": result.residual,
        "iterations": result.iterations,
    }
    _emit(record, args.format, [
        f"rho = {sig12(result.rho)}",
        f"residual = {result.residual:.3e}",
        f"iterations = {result.iterations}",
    ])
    return EXIT_OK


def cmd_matching(args) -> int:
    g = _load_graph(args)
    beta = matching_number(g)
    record = {"n": g.n, "beta": beta}
    human = [f"beta = {beta}"]
    if args.witness:
        witness = tutte_berge_witness(g)
        record.update(
            witness_set=list(witness.witness_set),
            s=witness.s,
            odd_components=witness.odd_components,
            q=witness.q,
        )
        human.append(
            f"witness S = {{{', '.join(map(str, witness.witness_set))}}} "
            f"(s={witness.s}, odd components={witness.odd_components}, q={witness.q})"
        )
    _emit(record, args.format, human)
    return EXIT_OK


def _verdict_record(verdict) -> dict:
    return {
        "n": verdict.n,
        "beta": verdict.beta,
        "alpha": str(verdict.alpha),
        "case": verdict.case_number,
        "case_id": verdict.case_id,
        "n_star": str(verdict.n_star),
        "bound": verdict.predicted_rho,
        "extremal": list(verdict.extremal_descriptors),
        "sampled_region": verdict.sampled_region,
    }


def _verdict_human(verdict) -> list[str]:
    lines = [
        f"case ({verdict.case_number}) {verdict.case_id}: "
        f"n={verdict.n} beta={verdict.beta} alpha={verdict.alpha}",
        f"n* = {verdict.n_star}"
        + (f" = {float(verdict.n_star):.6g}" if verdict.n_star.denominator != 1 else ""),
        f"bound = {sig12(verdict.predicted_rho)}",
    ]
    for d in verdict.extremal_descriptors:
        lines.append(f"extremal: {d} ({_DESCRIPTOR_NAMES[d]})")
    if verdict.sampled_region:
        lines.append("note: tight region, bound cross-checked by sampled positivity")
    return lines


def cmd_bound(args) -> int:
    verdict = classify_regime(args.n, args.beta, args.alpha)
    _emit(_verdict_record(verdict), args.format, _verdict_human(verdict))
    return EXIT_OK


def cmd_classify(args) -> int:
    return cmd_bound(args)


def cmd_verify(args) -> int:
    reports = verify_order(
        args.n, args.alpha, tol=args.tol, jobs=args.jobs, source=args.graph6
    )
    all_pass = all(r.passed for r in reports)
    for r in reports:
        if args.format == "json-lines":
            print(r.to_json_line())
        elif args.format == "csv":
            print(r.to_csv_row())
        else:
            print(r.to_human())
    if args.format == "human":
        print(f"{'all pass' if all_pass else 'FAILURES PRESENT'} "
              f"({len(reports)} records, n={args.n}, alpha={args.alpha})")
    return EXIT_OK if all_pass else EXIT_VERIFICATION_FAILED


def cmd_family(args) -> int:
    result: FamilySearchResult = family_search(args.n, args.beta, args.alpha)
    record = {
        "n": result.n,
        "beta": result.beta,
        "alpha": str(result.alpha),
        "s": result.best.s,
        "parts": list(result.best.parts),
        "rho": result.rho,
        "families_scanned": result.families_scanned,
        "canonical_shape": result.canonical_shape,
        "matches_prediction": result.matches_prediction,
    }
    _emit(record, args.format, [
        f"best family: core s={result.best.s}, parts={list(result.best.parts)}",
        f"rho = {sig12(result.rho)}",
        f"families scanned = {result.families_scanned}",
        f"one-big-clique shape = {result.canonical_shape}",
        f"matches prediction = {result.matches_prediction}",
    ])
    return EXIT_OK if (result.canonical_shape and result.matches_prediction) else EXIT_VERIFICATION_FAILED


def cmd_report(args) -> int:
    alphas = [Fraction(tok.strip()) for tok in args.alphas.split(",") if tok.strip()]
    for a in alphas:
        if a < 0:
            raise SystemExit2("alpha must be nonnegative")
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    all_pass = True
    count = 0
    try:
        if args.format == "csv":
            print(REPORT_CSV_HEADER, file=out)
        for n in range(args.n_min, args.n_max + 1):
            for a in alphas:
                for r in verify_order(n, a, tol=args.tol, jobs=args.jobs):
                    count += 1
                    all_pass = all_pass and r.passed
                    if args.format == "json-lines":
                        print(r.to_json_line(), file=out)
                    elif args.format == "csv":
                        print(r.to_csv_row(), file=out)
                    else:
                        print(r.to_human(), file=out)
    finally:
        if args.output:
            out.close()
    if args.format == "human" and not args.output:
        print(f"{'all pass' if all_pass else 'FAILURES PRESENT'} ({count} records)")
    return EXIT_OK if all_pass else EXIT_VERIFICATION_FAILED


_COMMANDS = {
    "rho": cmd_rho,
    "matching": cmd_matching,
    "bound": cmd_bound,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "family": cmd_family,
    "report": cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
