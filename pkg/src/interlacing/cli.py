"""
Command-line front end.

    python3 -m interlacing blambda --shape 3,3,1
    python3 -m interlacing oracle --p 5 --n 4 --compare
    python3 -m interlacing verify --suite all

Exit status: 0 on success, 1 on bad input, 2 when a check finds a mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from math import comb

from . import blambda as bl
from .bijections import theta, theta_inverse
from .gfq import DEFAULT_BUDGET, BudgetExceeded, census
from .partitions import parse_partition
from .poly import Polynomial, to_json_obj, to_text
from .profiles import METHODS as PROFILE_METHODS
from .profiles import anti_invariant_count, pi, pi_pivots, r_locus_count, sigma, sigma_pivots, splitting_count
from .qstirling import METHODS as S_METHODS
from .qstirling import s_q
from .setpart import (enumerate_by_shape, fibre_generate, format_set_partition, interlacing_number,
                      parse_set_partition)
from .shifted import count_shifted, distinct_parts_hypothesis
from .tableaux import c_weight, format_tableau, generate_tableaux, parse_tableau
from .verify import SUITES, run_suite

log = logging.getLogger("interlacing")


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    """argparse, but bad usage exits 1 with a single line."""

    def error(self, message):
        raise UsageError(message)


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"malformed integer list {text!r}: expected e.g. 1,3")


def _emit_poly(args, poly: Polynomial, extra: dict | None = None) -> None:
    if args.json:
        obj = dict(extra or {})
        obj["poly"] = to_json_obj(poly)
        if args.eval is not None:
            obj["value"] = str(poly(args.eval))
        print(json.dumps(obj, sort_keys=True))
    elif args.eval is not None:
        print(poly(args.eval))
    else:
        print(to_text(poly))


def _emit_rows(args, header: list[str], rows: list[list]) -> None:
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        for row in rows:
            print("\t".join(str(x) for x in row))


def _load_cache(args) -> bl.BLambdaCache:
    return bl.BLambdaCache.load_or_new(args.cache)


def _save_cache(args, cache: bl.BLambdaCache, before: int) -> None:
    path = args.cache or os.environ.get(bl.CACHE_ENV)
    if path and len(cache) != before:
        cache.dump(path)


def cmd_blambda(args) -> int:
    shape = parse_partition(args.shape)
    if shape.size > args.max_size:
        raise ValueError(f"|shape| = {shape.size} exceeds --max-size {args.max_size}; raise it to proceed")
    cache = _load_cache(args)
    before = len(cache)
    if args.n is not None:
        if args.n < shape.size:
            raise ValueError(f"--n {args.n} is smaller than |shape| = {shape.size}")
        poly = comb(args.n, shape.size) * bl.b_lambda(shape, args.method, cache)
    else:
        poly = bl.b_lambda(shape, args.method, cache)
    _save_cache(args, cache, before)
    _emit_poly(args, poly, {"shape": list(shape), "method": args.method})
    return 0


def cmd_sigma(args) -> int:
    mu = parse_partition(args.profile)
    if args.pivots is not None:
        poly = sigma_pivots(args.n, _ints(args.pivots), mu, args.method)
    else:
        poly = sigma(args.n, mu)
    _emit_poly(args, poly, {"n": args.n, "profile": list(mu)})
    return 0


def cmd_pi(args) -> int:
    mu = parse_partition(args.profile)
    if args.pivots is not None:
        poly = pi_pivots(args.n, _ints(args.pivots), mu, args.method)
    else:
        poly = pi(args.n, mu)
    _emit_poly(args, poly, {"n": args.n, "profile": list(mu)})
    return 0


def cmd_anti(args) -> int:
    _emit_poly(args, anti_invariant_count(args.n, args.m, args.l), {"n": args.n, "m": args.m, "l": args.l})
    return 0


def cmd_splitting(args) -> int:
    _emit_poly(args, splitting_count(args.m, args.d), {"m": args.m, "d": args.d})
    return 0


def cmd_rlocus(args) -> int:
    _emit_poly(args, r_locus_count(args.n, args.m, args.r), {"n": args.n, "m": args.m, "r": args.r})
    return 0


def cmd_qstirling(args) -> int:
    if args.n < 0:
        raise ValueError("--n must be nonnegative")
    cache = _load_cache(args)
    ms = [args.m] if args.m is not None else list(range(args.n + 1))
    row = [s_q(args.n, m, args.method, cache) for m in ms]
    if args.json:
        print(json.dumps([to_json_obj(p) for p in row]))
    else:
        for m, p in zip(ms, row):
            print(f"{m}\t{to_text(p) if args.eval is None else p(args.eval)}")
    return 0


def cmd_setpartitions(args) -> int:
    if (args.tableau is None) == (args.shape is None):
        raise ValueError("give exactly one of --tableau or --shape")
    if args.tableau is not None:
        items = list(fibre_generate(parse_tableau(args.tableau)))
    else:
        shape = parse_partition(args.shape)
        items = list(enumerate_by_shape(range(1, shape.size + 1), shape))
    rows = [[format_set_partition(a), interlacing_number(a)] for a in items]
    if args.json:
        print(json.dumps([{"partition": p, "v": v} for p, v in rows]))
    else:
        _emit_rows(args, ["partition", "v"], rows)
    return 0


def cmd_tableaux(args) -> int:
    shape = parse_partition(args.shape)
    n = shape.size if args.n is None else args.n
    items = list(generate_tableaux(shape, n=n))
    if args.json:
        out = []
        for t in items:
            c, cq = c_weight(t)
            obj = t.to_json_obj()
            obj.update(c=c, c_q=to_json_obj(cq))
            out.append(obj)
        print(json.dumps(out))
    else:
        rows = []
        for t in items:
            c, cq = c_weight(t)
            rows.append([format_tableau(t), c, to_text(cq)])
        _emit_rows(args, ["tableau", "c", "c_q"], rows)
    return 0


def cmd_shifted(args) -> int:
    shape = parse_partition(args.shape)
    count = count_shifted(shape)
    at_minus_one = bl.b_lambda(shape)(-1)
    holds = distinct_parts_hypothesis(shape)
    if args.json:
        print(json.dumps({"shape": list(shape), "shifted": count, "b_at_minus_one": at_minus_one,
                          "hypothesis": holds, "agree": count == at_minus_one}, sort_keys=True))
    else:
        print(count)
    if count != at_minus_one:
        note = "expected, the distinct-parts hypothesis fails" if not holds else "UNEXPECTED"
        print(f"note: shifted count {count} differs from b(-1) = {at_minus_one} ({note})", file=sys.stderr)
        if holds:
            return 2
    return 0


def cmd_theta(args) -> int:
    a = parse_set_partition(args.partition)
    t = theta(a)
    v = interlacing_number(a)
    if args.json:
        print(json.dumps({"tableau": t.to_json_obj(), "i": v}, sort_keys=True))
    else:
        print(format_tableau(t))
        print(f"i={v}")
    return 0


def cmd_theta_inv(args) -> int:
    a = theta_inverse(parse_tableau(args.tableau), args.i)
    if args.json:
        print(json.dumps({"partition": format_set_partition(a)}))
    else:
        print(format_set_partition(a))
    return 0


def cmd_oracle(args) -> int:
    diag = _ints(args.diag) if args.diag is not None else None
    report = census(args.p, args.n, diag=diag, compare=args.compare, budget=args.budget,
                    workers=args.workers)
    rows = report.csv_rows()
    if args.json:
        obj = report.to_json_obj()
        if not args.compare:
            obj.pop("mismatches")
            obj.pop("checks")
        print(json.dumps(obj, sort_keys=True))
    elif args.csv:
        _emit_rows(args, ["kind", "key", "observed", "expected"], [list(r) for r in rows])
    else:
        print(f"p={report.p} n={report.n} diag={','.join(map(str, report.diag))} subspaces={report.total}")
        for _, key, observed, expected in rows:
            if observed or expected:
                print(f"profile {key or '-'}\t{observed}\t(formula {expected})")
        if args.compare:
            print(f"checks={report.checks} mismatches={len(report.mismatches)}")
    for mm in report.mismatches:
        print(f"mismatch {mm['kind']} {mm['key']}: observed {mm['observed']} expected {mm['expected']}",
              file=sys.stderr)
    return 2 if report.mismatches else 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cache = _load_cache(args)
    failed = False
    results = []
    for name in names:
        res = run_suite(name, args.max_n, cache)
        results.append(res)
        failed |= not res.ok
    if args.json:
        print(json.dumps([{"suite": r.name, "checks": r.checks, "failures": r.failures} for r in results]))
    else:
        for r in results:
            print(r.summary())
            for f in r.failures:
                print(f"  {f}")
    return 2 if failed else 0


def cmd_cache(args) -> int:
    cache = _load_cache(args)
    if args.action == "warm":
        if args.max_n is None:
            raise ValueError("cache warm needs --max-n")
        path = args.cache or os.environ.get(bl.CACHE_ENV)
        if not path:
            raise ValueError(f"cache warm needs --cache PATH or ${bl.CACHE_ENV}")
        bl.warm_cache(args.max_n, cache)
        cache.dump(path)
        print(f"{len(cache)} entries written to {path}")
    else:
        sys.stdout.write(cache.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--csv", action="store_true", help="CSV output for tables")
    common.add_argument("--cache", help=f"b_lambda cache file (default: ${bl.CACHE_ENV})")
    common.add_argument("--eval", type=int, help="print the value at this integer instead of the polynomial")

    parser = Parser(prog="interlacing", description=__doc__.split("\n")[1],
                    formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    p = sub.add_parser("blambda", parents=[common], help="b_lambda(q)")
    p.add_argument("--shape", required=True)
    p.add_argument("--method", choices=bl.METHODS, default="recursion")
    p.add_argument("--n", type=int, help="count inside [n] instead of [|shape|]")
    p.add_argument("--max-size", type=int, default=30, help="refuse larger shapes (default: 30)")
    p.set_defaults(func=cmd_blambda)

    for name, func, help_ in (("sigma", cmd_sigma, "subspaces with a given profile"),
                              ("pi", cmd_pi, "subspaces with a given partial profile")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--profile", required=True)
        p.add_argument("--pivots", help="restrict to these pivot columns, e.g. 1,3")
        p.add_argument("--method", choices=PROFILE_METHODS, default="tableau_sum")
        p.set_defaults(func=func)

    p = sub.add_parser("anti", parents=[common], help="l-fold anti-invariant subspaces")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=cmd_anti)

    p = sub.add_parser("splitting", parents=[common], help="splitting subspaces, n = m*d")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_splitting)

    p = sub.add_parser("rlocus", parents=[common], help="m-dim subspaces whose invariant closure has dim r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_rlocus)

    p = sub.add_parser("qstirling", parents=[common], help="q-Stirling numbers S_q(n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--method", choices=S_METHODS, default="recurrence")
    p.set_defaults(func=cmd_qstirling)

    p = sub.add_parser("setpartitions", parents=[common], help="fibre of a tableau, or all of a shape")
    p.add_argument("--tableau")
    p.add_argument("--shape")
    p.set_defaults(func=cmd_setpartitions)

    p = sub.add_parser("tableaux", parents=[common], help="multilinear tableaux with c and c_q")
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, help="entries drawn from [n] (default |shape|)")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("shifted", parents=[common], help="standard shifted tableaux count")
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_shifted)

    p = sub.add_parser("theta", parents=[common], help="two-block partition -> two-row tableau")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("theta-inv", parents=[common], help="two-row tableau -> two-block partition")
    p.add_argument("--tableau", required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_theta_inv)

    p = sub.add_parser("oracle", parents=[common], help="brute-force census over F_p^n")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--compare", action="store_true", help="check every closed form")
    p.add_argument("--diag", help="diagonal entries (default 0,1,...,n-1)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cache", parents=[common], help="warm or dump the b_lambda cache")
    p.add_argument("action", choices=["warm", "dump"])
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    if args.json and args.csv:
        print("error: --json and --csv are exclusive", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"error: {e} (use --budget)", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
