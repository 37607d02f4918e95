"""Command-line front end.

Every sub-command streams JSON-lines OutputRecords to stdout: one object per
line with keys in the fixed order command, inputs, result, provenance.
Numeric output is exact; rationals are rendered "numerator/denominator", and
a decimal field appears only behind --decimal and is flagged approximate.
The `table` sub-command can emit CSV instead.

Exit status: 0 success, 1 usage error, 2 domain error (bad modulus, monic
required, budget exceeded), 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import census, oracle
from .arith import DomainError, Modulus, factorize
from .poly import PolyParseError, parse
from .septest import discriminant, is_separable, trace_form


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(command: str, inputs: dict, result: dict, provenance: str,
          stream=None):
    record = {"command": command, "inputs": inputs, "result": result,
              "provenance": provenance}
    print(json.dumps(record), file=stream or sys.stdout)


def _decimal_str(value: Fraction, digits: int) -> str:
    whole, rest = divmod(value.numerator, value.denominator)
    if digits <= 0:
        return str(whole)
    frac = rest * 10**digits // value.denominator
    return f"{whole}.{frac:0{digits}d}"


def _rational_result(value: Fraction, decimal: int | None) -> dict:
    result = {"type": "rational",
              "value": f"{value.numerator}/{value.denominator}"}
    if decimal is not None:
        result["decimal"] = _decimal_str(value, decimal)
        result["approximate"] = True
    return result


def _cmd_factor(args) -> int:
    m = Modulus(args.n)
    _emit("factor", {"n": m.n},
          {"type": "factorization", "factors": [list(f) for f in m.factors]},
          "formula")
    return 0


def _cmd_check(args) -> int:
    m = Modulus(args.n)
    f = parse(args.poly, m)
    _emit("check", {"n": m.n, "polynomial": str(f)},
          {"type": "bool", "value": is_separable(f)}, "formula")
    return 0


def _cmd_disc(args) -> int:
    m = Modulus(args.n)
    f = parse(args.poly, m)
    d = discriminant(f)
    _emit("disc", {"n": m.n, "polynomial": str(f)},
          {"type": "residue", "value": d.value, "modulus": m.n}, "formula")
    return 0


def _cmd_trace_form(args) -> int:
    m = Modulus(args.n)
    f = parse(args.poly, m)
    form = trace_form(f)
    _emit("trace-form", {"n": m.n, "polynomial": str(f)},
          {"type": "matrix", "modulus": m.n,
           "entries": [list(row) for row in form.entries]}, "formula")
    return 0


def _census_count(m: Modulus, d: int, mode: oracle.Mode) -> census.CountResult:
    if mode is oracle.Mode.MONIC:
        return census.CountResult.of(census.count_monic_separable(m, d), m.n**d)
    if mode is oracle.Mode.LEQ:
        return census.count_separable_leq(m, d)
    return census.CountResult.of(census.count_separable_exact(m, d),
                                 (m.n - 1) * m.n**d)


def _cmd_count(args) -> int:
    m = Modulus(args.n)
    mode = oracle.Mode(args.mode)
    r = _census_count(m, args.d, mode)
    result = {"type": "count", "value": r.count, "total": r.total,
              "proportion": f"{r.proportion.numerator}/{r.proportion.denominator}"}
    if args.decimal is not None:
        result["decimal"] = _decimal_str(r.proportion, args.decimal)
        result["approximate"] = True
    _emit("count", {"n": m.n, "d": args.d, "mode": mode.value}, result,
          "formula")
    return 0


def _cmd_proportion(args) -> int:
    m = Modulus(args.n)
    value = census.proportion_monic_separable(m, args.d)
    _emit("proportion", {"n": m.n, "d": args.d},
          _rational_result(value, args.decimal), "formula")
    return 0


def _cmd_enumerate(args) -> int:
    m = Modulus(args.n)
    mode = oracle.Mode(args.mode)
    if args.crt:
        count = oracle.crt_product_count(m, args.d, mode, budget=args.budget,
                                         workers=args.workers)
    else:
        q = oracle.EnumerationQuery(m, args.d, mode)
        count = oracle.enumerate_count(q, budget=args.budget,
                                       workers=args.workers)
    _emit("enumerate",
          {"n": m.n, "d": args.d, "mode": mode.value, "crt": args.crt},
          {"type": "count", "value": count}, "enumeration")
    return 0


def _cmd_verify(args) -> int:
    m = Modulus(args.n)
    reports = oracle.verify(m, args.d_max, budget=args.budget,
                            workers=args.workers)
    mismatch = False
    for r in reports:
        _emit("verify",
              {"n": m.n, "d": r.query.degree_bound, "mode": r.query.mode.value},
              {"type": "verification", "oracle": r.oracle_count,
               "formula": r.formula_count, "match": r.match,
               "skipped": r.skipped, "elapsed": r.elapsed}, "both")
        if r.match is False:
            mismatch = True
    return 3 if mismatch else 0


def _cmd_table(args) -> int:
    mode = oracle.Mode(args.mode)
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        m = Modulus(n)
        for d in range(args.d_min, args.d_max + 1):
            r = _census_count(m, d, mode)
            rows.append((n, d, mode.value, r.count,
                         f"{r.proportion.numerator}/{r.proportion.denominator}"))
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "d", "mode", "count", "proportion"])
        writer.writerows(rows)
    else:
        for n, d, mode_value, count, proportion in rows:
            _emit("table", {"n": n, "d": d, "mode": mode_value},
                  {"type": "count", "value": count, "proportion": proportion},
                  "formula")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sepzn",
                     description="Separable polynomials over Z/n: decision "
                                 "procedures, counting formulas, and a "
                                 "brute-force verification oracle.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("factor", _cmd_factor, help="prime factorization of n")
    p.add_argument("-n", type=int, required=True)

    for name, func, text in [
            ("check", _cmd_check, "decide separability of a polynomial"),
            ("disc", _cmd_disc, "trace-form discriminant of a monic polynomial"),
            ("trace-form", _cmd_trace_form, "trace-form matrix of a monic polynomial")]:
        p = add(name, func, help=text)
        p.add_argument("-n", type=int, required=True)
        p.add_argument("-f", dest="poly", required=True,
                       help="polynomial, e.g. '3x^2+x+5' or '5,1,3'")

    p = add("count", _cmd_count, help="closed-form separable count")
    p.add_argument("--mode", choices=[m.value for m in oracle.Mode],
                   default="leq")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--decimal", type=int, default=None, metavar="DIGITS")

    p = add("proportion", _cmd_proportion,
            help="proportion of monic degree-d polynomials that are separable")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, default=2)
    p.add_argument("--decimal", type=int, default=None, metavar="DIGITS")

    p = add("enumerate", _cmd_enumerate, help="brute-force separable count")
    p.add_argument("--mode", choices=[m.value for m in oracle.Mode],
                   default="leq")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--crt", action="store_true",
                   help="enumerate prime-power components and multiply")

    p = add("verify", _cmd_verify,
            help="compare formulas against the oracle for all d <= d-max")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)

    p = add("table", _cmd_table, help="counts over ranges of n and d")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in oracle.Mode],
                   default="leq")
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    except SystemExit as e:  # --help
        return int(e.code or 0)
    try:
        return args.func(args)
    except PolyParseError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except (DomainError, oracle.BudgetExceeded) as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
