"""
Command-line driver.

    itc compile <file.iasm | --bench NAME> [options]
    itc suite [--out report.json] [--csv PATH] [--figures DIR]

Exit codes: 0 success, 1 usage error, 2 compile error, 3 validation failure.
"""

import argparse
import json
import sys

from .asm import AsmError, parse_asm, print_asm
from .benchmarks import BENCHMARKS, build_benchmark
from .compiler import CompileConfig, ValidationError, compile_circuit, validate
from .ir import CircuitError
from .report import report_csv, report_json, report_text, run_suite
from .schedule import format_table
from .sim import format_distribution, marginal, sample, simulate_table
from .synth import DecompositionFailed, OptFlags


def _parse_opts(value: str) -> OptFlags:
    if value == "all":
        return OptFlags.all()
    if value == "none":
        return OptFlags.none()
    names = [s.strip() for s in value.split(",") if s.strip()]
    bad = [n for n in names if n not in OptFlags.NAMES]
    if bad:
        raise argparse.ArgumentTypeError(
            f"unknown optimization(s) {bad}; choose from {OptFlags.NAMES}")
    return OptFlags(**{n: True for n in names})


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="itc", description="ion-trap circuit compiler")
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compile", help="compile a circuit to native ops")
    comp.add_argument("input", nargs="?", help="assembly file (.iasm)")
    comp.add_argument("--bench", choices=BENCHMARKS,
                      help="compile a built-in benchmark instead of a file")
    comp.add_argument("--connectivity", choices=("linear", "full"),
                      default="linear")
    comp.add_argument("--parallel-1q", action="store_true",
                      help="pack rotations on distinct ions into shared rows")
    comp.add_argument("--legacy", action="store_true",
                      help="emulate the pre-existing compiler")
    comp.add_argument("--opts", type=_parse_opts, default=OptFlags.all(),
                      metavar="all|none|LIST",
                      help="comma-separated optimization flags "
                           f"({', '.join(OptFlags.NAMES)})")
    comp.add_argument("--tolerance", type=float, default=1e-4)
    comp.add_argument("--seed", type=int, default=0)
    comp.add_argument("--emit", choices=("table", "asm", "json"),
                      default="table")
    comp.add_argument("--simulate", action="store_true",
                      help="print the compiled circuit's measurement "
                           "distribution and check it against the source")
    comp.add_argument("--shots", type=int, default=0,
                      help="with --simulate, also print sampled counts")
    comp.add_argument("--out", help="write output to a file instead of stdout")

    suite = sub.add_parser("suite", help="compile and validate all benchmarks")
    suite.add_argument("--out", help="write the JSON report here")
    suite.add_argument("--csv", help="write per-(benchmark, config) CSV rows here")
    suite.add_argument("--figures", metavar="DIR",
                       help="render bar charts of the reductions into DIR")
    suite.add_argument("--seed", type=int, default=0)
    suite.add_argument("--tolerance", type=float, default=1e-4)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_compile(args) -> int:
    if bool(args.input) == bool(args.bench):
        print("compile needs exactly one of: an input file, or --bench",
              file=sys.stderr)
        return 1
    try:
        if args.bench:
            circuit = build_benchmark(args.bench)
        else:
            with open(args.input) as fh:
                circuit = parse_asm(fh.read())
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 1
    except (AsmError, CircuitError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1

    config = CompileConfig(connectivity=args.connectivity,
                           parallel_1q=args.parallel_1q,
                           legacy_mode=args.legacy, opts=args.opts,
                           tolerance=args.tolerance, seed=args.seed)
    try:
        result = compile_circuit(circuit, config)
    except (DecompositionFailed, CircuitError, ValueError) as exc:
        print(f"compile error: {exc}", file=sys.stderr)
        return 2

    if args.emit == "table":
        text = format_table(result.table)
    elif args.emit == "asm":
        text = print_asm(result.native_circuit)
    else:
        payload = {
            "n_ions": result.table.n_ions,
            "rows": [[{"kind": op.kind, "ions": list(op.ions)}
                      | ({"phi": op.phi} if op.phi is not None else {})
                      for op in row] for row in result.table.rows],
            "measured_ions": result.table.measured,
            "placement": result.placement,
            "stats": result.stats,
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    _emit(text, args.out)

    if args.simulate:
        try:
            d = validate(circuit, result)
        except ValidationError as exc:
            print(f"validation failure: {exc}", file=sys.stderr)
            return 3
        measured = result.measured_logical
        if measured:
            dist = marginal(simulate_table(result.table), measured,
                            relabel=result.placement)
            print(f"measured qubits {measured}: {format_distribution(dist)}")
            print(f"validation tvd vs source: {d:.3e}")
            if args.shots:
                counts = sample(dist, args.shots, seed=args.seed)
                print(f"{args.shots} shots: {json.dumps(counts, sort_keys=True)}")
        else:
            print("no measured qubits: nothing to validate")
    return 0


def _cmd_suite(args) -> int:
    try:
        report = run_suite(seed=args.seed, tolerance=args.tolerance)
    except ValidationError as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return 3
    except (DecompositionFailed, ValueError) as exc:
        print(f"compile error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report_json(report))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report_csv(report))
    if args.figures:
        from .figures import render_figures
        for path in render_figures(report, args.figures):
            print(f"wrote {path}")
    sys.stdout.write(report_text(report))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    if args.command == "compile":
        return _cmd_compile(args)
    return _cmd_suite(args)


if __name__ == "__main__":
    sys.exit(main())
