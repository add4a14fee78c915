"""Command-line front end.

    prefixavoid count --n 6 --prefix 3,1,2 --patterns 231
    prefixavoid enumerate --n 5 --patterns 123 --witnesses
    prefixavoid verify --suite pairs --n-max 7 --prefix-max 2
    prefixavoid classify --r 5 --patterns vincular --n-max 8
    prefixavoid seq --name schroder --terms 11
    prefixavoid tables --table 3 --r 5 --oracle-check

Exit status: 0 on success, 1 when a verification or oracle check fails,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import formulas, wilf
from .core import Pattern, Permutation, PermutationError, PrefixQuery
from .oracle import DEFAULT_CAP, JOBS_ENV, default_jobs, enumerate_avoiders, oracle_count
from .sequences import SEQUENCES, bell, catalan, schroder
from .verify import SUITES, run_suite


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_query(parser, args) -> PrefixQuery:
    try:
        prefix = Permutation.parse(args.prefix)
    except PermutationError as e:
        parser.error(f"--prefix: {e}")
    try:
        patterns = tuple(Pattern.parse(p) for p in args.patterns)
    except PermutationError as e:
        parser.error(f"--patterns: {e}")
    try:
        return PrefixQuery(args.n, prefix, patterns)
    except PermutationError as e:
        flag = "--n" if "n must" in str(e) else "--prefix"
        parser.error(f"{flag}: {e}")


def _expand_patterns(tokens) -> list[str]:
    out = []
    for tok in tokens:
        if tok == "classical":
            out.extend(wilf.CLASSICAL_S3)
        elif tok == "vincular":
            out.extend(wilf.VINCULAR_S3)
        else:
            out.append(tok)
    return out


def cmd_count(parser, args, out) -> int:
    q = _parse_query(parser, args)
    res = formulas.count(q.n, q.prefix, q.patterns)
    out.write(_dumps(res.to_dict()) + "\n")
    return 0


def cmd_enumerate(parser, args, out) -> int:
    q = _parse_query(parser, args)
    if args.cap < 1:
        parser.error("--cap: must be positive")
    start = time.perf_counter()
    res = enumerate_avoiders(q, collect=args.witnesses, cap=args.cap, jobs=args.jobs,
                             prune=not args.no_prune)
    payload = {"query": q.to_dict(), "count": str(res.count)}
    if args.witnesses:
        payload["witnesses"] = [list(w.entries) for w in res.witnesses]
    payload["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    out.write(_dumps(payload) + "\n")
    return 0


def cmd_verify(parser, args, out) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    ok = True
    for name in suites:
        rep = run_suite(name, args.n_max, args.prefix_max, args.jobs)
        out.write("\n".join(rep.lines()) + "\n")
        ok = ok and rep.ok
    out.write("RESULT " + ("PASS" if ok else "FAIL") + "\n")
    return 0 if ok else 1


def cmd_classify(parser, args, out) -> int:
    if args.n_max < args.r:
        parser.error(f"--n-max: must be at least --r ({args.r})")
    try:
        pats = [Pattern.parse(p) for p in _expand_patterns(args.patterns)]
    except PermutationError as e:
        parser.error(f"--patterns: {e}")
    res = wilf.classify_r_wilf(args.r, pats, args.n_max, jobs=args.jobs)
    out.write(_dumps(res.to_dict()) + "\n")
    return 0


def cmd_seq(parser, args, out) -> int:
    if args.terms < 0:
        parser.error("--terms: must be nonnegative")
    fn = SEQUENCES[args.name]
    values = [fn(i) for i in range(args.terms)]
    if args.format == "csv":
        out.write(",".join(map(str, values)) + "\n")
    else:
        for i, v in enumerate(values):
            out.write(_dumps({"n": i, "value": str(v)}) + "\n")
    return 0


def _table_rows(which, args):
    if which == "1":
        header = ["sequence"] + [str(i) for i in range(args.terms)]
        rows = [[name] + [str(fn(i)) for i in range(args.terms)]
                for name, fn in (("catalan", catalan), ("bell", bell), ("schroder", schroder))]
        return header, rows, []
    if which == "2":
        header, rows, checks = ["n", "r", "pattern", "count"], [], []
        for (r, p), v in sorted(wilf.table2(args.n).items()):
            rows.append([str(args.n), str(r), p, str(v)])
            checks.append((rows[-1], args.n, r, p, v))
        return header, rows, checks
    header, rows, checks = ["r", "n", "pattern", "count"], [], []
    for (p, n), v in wilf.table3(args.r).items():
        rows.append([str(args.r), str(n), p, "" if v is None else str(v)])
        if v is not None:
            checks.append((rows[-1], n, args.r, p, v))
    return header, rows, checks


def cmd_tables(parser, args, out) -> int:
    if args.n < 2:
        parser.error("--n: table 2 needs n >= 2")
    if args.r < 3:
        parser.error("--r: table 3 needs r >= 3")
    which = ("1", "2", "3") if args.table == "all" else (args.table,)
    ok = True
    for w in which:
        header, rows, checks = _table_rows(w, args)
        if args.oracle_check and w != "1":
            header = header + ["oracle", "ok"]
            for row in rows:
                row.extend(["", ""])
            for row, n, r, p, v in checks:
                got = oracle_count(n, (r,), (p,), jobs=args.jobs)
                row[-2:] = [str(got), "yes" if got == v else "no"]
                ok = ok and got == v
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"# table {w}"])
        writer.writerow(header)
        writer.writerows(rows)
        out.write(buf.getvalue())
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefixavoid",
        description="Count pattern-avoiding permutations with a fixed prefix.",
    )
    parser.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def query_flags(p):
        p.add_argument("--n", type=int, required=True, help="permutation size")
        p.add_argument("--prefix", default="", help='fixed leading entries, "3,1,2" or "312"')
        p.add_argument("--patterns", nargs="+", required=True,
                       help='patterns to avoid, e.g. 123 or vincular "1-32"')

    jobs_help = f"worker processes (default ${JOBS_ENV} or 1)"

    p = sub.add_parser("count", help="closed-form count with the rule that produced it")
    query_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="exhaustive count, optionally listing witnesses")
    query_flags(p)
    p.add_argument("--witnesses", action="store_true", help="include avoiders in the output")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum witnesses listed")
    p.add_argument("--jobs", type=int, default=None, help=jobs_help)
    p.add_argument("--no-prune", action="store_true", help="test full words only")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="sweep closed forms against the oracle")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--prefix-max", type=int, default=3)
    p.add_argument("--jobs", type=int, default=None, help=jobs_help)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="r-Wilf classes from count vectors")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--patterns", nargs="+", default=["classical"],
                   help='patterns, or the shorthands "classical" / "vincular"')
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--jobs", type=int, default=None, help=jobs_help)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("seq", help="first terms of a sequence")
    p.add_argument("--name", choices=sorted(SEQUENCES), required=True)
    p.add_argument("--terms", type=int, default=11)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("tables", help="regenerate the sequence and leading-term tables as CSV")
    p.add_argument("--table", choices=("1", "2", "3", "all"), default="all")
    p.add_argument("--terms", type=int, default=11, help="columns of table 1")
    p.add_argument("--n", type=int, default=8, help="n for table 2")
    p.add_argument("--r", type=int, default=5, help="r for table 3")
    p.add_argument("--oracle-check", action="store_true")
    p.add_argument("--jobs", type=int, default=None, help=jobs_help)
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
        args.jobs = default_jobs()
    if args.out:
        with open(args.out, "w") as fh:
            return args.func(parser, args, fh)
    return args.func(parser, args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
