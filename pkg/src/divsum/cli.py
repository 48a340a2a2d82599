"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 overflow or capacity error. Diagnostics go to stderr; stdout carries only
results, line by line, so outputs can be diffed against golden files.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from divsum import bench, core, recurrence, verify
from divsum.natural import CapacityError, DomainError, NaturalOverflowError, natural

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def parse_natural(text: str, *, name: str = "n", minimum: int = 1) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise DomainError(f"{name} must be a decimal integer, got {text!r}") from None
    return natural(value, name=name, minimum=minimum)


def _emit(lines) -> None:
    out = sys.stdout
    for line in lines:
        out.write(line)
        out.write("\n")


def _json(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def cmd_sigma(args) -> int:
    n = parse_natural(args.n)
    method = args.method
    if args.explain:
        if method not in (None, "recurrence"):
            raise DomainError("--explain is only available with --method recurrence")
        method = "recurrence"
    method = method or "factor"

    record: dict = {"n": n}
    trace = None
    if method == "factor":
        record["sigma"] = core.sigma(n)
    elif method == "trial":
        record["sigma"] = core.sigma_trial(n)
    elif args.explain:
        trace = recurrence.explain(n)
        record["sigma"] = trace.total
        record["trace"] = [t.as_dict() for t in trace.terms]
    else:
        record["sigma"] = recurrence.sigma_recurrence(n)
    if args.divisors:
        record["divisors"] = core.divisors(n)

    if args.format == "json":
        _emit([_json(record)])
        return EXIT_OK
    lines = recurrence.format_trace(trace) if trace is not None else [str(record["sigma"])]
    if args.divisors:
        lines.append("divisors " + " ".join(map(str, record["divisors"])))
    _emit(lines)
    return EXIT_OK


def table_lines(values: Sequence[int], fmt: str):
    if fmt == "csv":
        yield "n,sigma"
        for n, s in enumerate(values, 1):
            yield f"{n},{s}"
    elif fmt == "json":
        for n, s in enumerate(values, 1):
            yield _json({"n": n, "sigma": s})
    else:
        wn = max(len(str(len(values))), 1)
        ws = max(len(str(max(values))), 5)
        yield f"{'n':>{wn}} {'sigma':>{ws}}"
        for n, s in enumerate(values, 1):
            yield f"{n:>{wn}} {s:>{ws}}"


def cmd_table(args) -> int:
    n_max = parse_natural(args.n, name="N")
    if args.method == "recurrence":
        table = recurrence.build_sigma_table_recurrence(n_max)
    else:
        table = core.sigma_table_sieve(n_max)
    _emit(table_lines(table.tolist(), args.format))
    return EXIT_OK


def cmd_classify(args) -> int:
    c = core.classify(parse_natural(args.n))
    if args.format == "json":
        _emit([_json({"n": c.n, "sigma": c.sigma, "kind": c.kind.value})])
    else:
        _emit([f"{c.n} {c.kind.value} sigma={c.sigma}"])
    return EXIT_OK


def cmd_verify(args) -> int:
    order = parse_natural(args.order, name="order", minimum=0)
    result = verify.run_check(args.check, order)
    if result.passed:
        _emit([result.summary()])
        return EXIT_OK
    print(result.summary(), file=sys.stderr)
    _emit([result.summary()])
    return EXIT_FAILED


def cmd_bench(args) -> int:
    n_max = parse_natural(args.max, name="max")
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    unknown = [m for m in methods if m not in bench.BUILDERS]
    if not methods or unknown:
        raise DomainError(f"--methods must list some of {', '.join(bench.BUILDERS)}")
    repeat = parse_natural(args.repeat, name="repeat")
    try:
        rows = bench.run_bench(n_max, methods, repeat)
    except bench.BenchMismatch as exc:
        print(f"divsum: cross-check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if args.format == "csv":
        _emit([bench.CSV_HEADER] + [r.as_csv() for r in rows])
    else:
        lines = [f"{'method':<11} {'max_n':>10} {'best_s':>10} {'checksum':>20}"]
        lines += [f"{r.method:<11} {r.max_n:>10} {r.best_seconds:>10.4f} {r.checksum:>20}" for r in rows]
        _emit(lines)
    return EXIT_OK


def cmd_amicable(args) -> int:
    n_max = parse_natural(args.max, name="max", minimum=2)
    pairs = core.amicable_pairs(n_max)
    if args.format == "json":
        _emit(_json({"m": m, "n": n, "sigma": m + n}) for m, n in pairs)
    else:
        _emit(f"{m} {n}" for m, n in pairs)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divsum",
        description="Sum-of-divisors function by factorization, pentagonal recurrence and power series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma", help="sigma(n) for a single n")
    p.add_argument("n")
    p.add_argument("--method", choices=("factor", "trial", "recurrence"), default=None)
    p.add_argument("--explain", action="store_true", help="print the recurrence trace")
    p.add_argument("--divisors", action="store_true", help="also list the divisors")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("table", help="sigma(1..N)")
    p.add_argument("n", metavar="N")
    p.add_argument("--method", choices=("sieve", "recurrence"), default="sieve")
    p.add_argument("--format", choices=("text", "csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("classify", help="unit / prime / perfect / abundant / deficient")
    p.add_argument("n")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run a named cross-check")
    p.add_argument("--check", choices=verify.CHECKS, required=True)
    p.add_argument("--order", default="500", help="truncation order / table size (default 500)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the sigma-table builders")
    p.add_argument("--max", required=True)
    p.add_argument("--methods", default="sieve,recurrence,factor")
    p.add_argument("--repeat", default="3")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("amicable", help="amicable pairs up to N")
    p.add_argument("--max", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_amicable)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"divsum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NaturalOverflowError, CapacityError) as exc:
        print(f"divsum: error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
