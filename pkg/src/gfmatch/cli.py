"""Command-line front end: solve, verify, params, generate, classify.

Exit codes: 0 match/pass/complete, 1 no-match/fail/incomplete, 2 usage or I/O
error, 3 resource limit, 4 algorithm not applicable.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import classifier, core, reductions, solvers

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_NOT_APPLICABLE = 4


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def cmd_solve(args: argparse.Namespace) -> int:
    instance = core.parse_instance(_read(args.instance))
    kwargs = {}
    if args.budget is not None:
        if args.algo in ("brute", "auto"):
            kwargs["node_budget"] = args.budget
        if args.algo in ("enum", "anchored", "auto"):
            kwargs["substitution_budget"] = args.budget
    if args.min_wildcards:
        result = solvers.min_wildcards(instance, args.algo, **kwargs)
    else:
        result = solvers.solver(args.algo)(instance, **kwargs)
    print("MATCH" if result.matched else "NOMATCH")
    if args.min_wildcards:
        opt = "infeasible" if result.min_wildcards is None else result.min_wildcards
        print(f"min_wildcards {opt}")
        print(f"budget {instance.bounds.wildcard_budget}")
    if args.witness_out:
        witness = result.witness if result.matched else None
        Path(args.witness_out).write_text(
            core.serialize_witness(instance, witness), encoding="utf-8"
        )
    return EXIT_OK if result.matched else EXIT_NEGATIVE


def cmd_verify(args: argparse.Namespace) -> int:
    instance = core.parse_instance(_read(args.instance))
    witness = core.parse_witness(_read(args.witness))
    if witness is None:
        print("FAIL: witness file says NOMATCH; nothing to verify")
        return EXIT_NEGATIVE
    report = core.verify_witness(
        instance, witness, strict_wildcard_injectivity=args.strict
    )
    if report.ok:
        print("PASS")
        return EXIT_OK
    print(f"FAIL: {report.detail}")
    return EXIT_NEGATIVE


def cmd_params(args: argparse.Namespace) -> int:
    instance = core.parse_instance(_read(args.instance))
    params = core.measure_parameters(instance)
    for name, value in params.as_dict().items():
        print(f"{name} {'inf' if value is None else value}")
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    graph = reductions.parse_graph(_read(args.graph))
    graph = reductions.normalize_graph(graph)
    output = reductions.generate(args.reduction, graph, args.variant)
    Path(args.out).write_text(core.serialize_instance(output.instance), encoding="utf-8")
    if args.emit_expected:
        clique = reductions.find_clique_bruteforce(graph)
        witness = (
            reductions.forward_witness(output, graph, clique) if clique is not None else None
        )
        Path(args.out + ".expected").write_text(
            core.serialize_witness(output.instance, witness), encoding="utf-8"
        )
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    rows = classifier.load_rows(_read(args.rows)) if args.rows else None
    problems = [core.GFM, core.GPM] if args.problem == "both" else [args.problem]
    reports = [classifier.check_completeness(problem, rows) for problem in problems]
    print("; ".join(report.summary() for report in reports))
    for report in reports:
        for c in report.uncovered:
            print(f"{report.problem} uncovered: {classifier.render_parameter_set(c)}")
        for c in report.conflicts:
            print(f"{report.problem} conflict: {classifier.render_parameter_set(c)}")
    return EXIT_OK if all(r.complete for r in reports) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gfmatch",
        description="Solvers and instance tooling for maximum generalized function/parameterized matching.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("-i", "--instance", required=True)
    p.add_argument("--algo", choices=("auto", "enum", "anchored", "brute"), default="auto")
    p.add_argument("--min-wildcards", action="store_true",
                   help="report the optimum wildcard count even beyond the declared budget")
    p.add_argument("-w", "--witness-out", metavar="OUT")
    p.add_argument("--budget", type=int, default=None,
                   help="node/substitution budget for the chosen algorithm")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="re-check a witness against an instance")
    p.add_argument("-i", "--instance", required=True)
    p.add_argument("-w", "--witness", required=True)
    p.add_argument("--strict", action="store_true",
                   help="extend the injectivity check to wildcard images")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("params", help="print the seven instance parameters")
    p.add_argument("-i", "--instance", required=True)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("generate", help="generate an instance from a multicolored graph")
    p.add_argument("--reduction", required=True, choices=reductions.REDUCTION_KINDS)
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--variant", choices=(core.GFM, core.GPM), default=core.GFM)
    p.add_argument("--emit-expected", action="store_true",
                   help="also write the canonical witness (or NOMATCH) next to the instance")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("classify", help="run the parameter-lattice coverage report")
    p.add_argument("--problem", choices=(core.GFM, core.GPM, "both"), default="both")
    p.add_argument("--rows", default=None, help="row file overriding the built-in table")
    p.set_defaults(func=cmd_classify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except solvers.ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except solvers.NotApplicableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except (core.GfmError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:  # console_scripts hook
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
