"""Command-line harness: compute tables, verify statements, run sweeps,
and manage the on-disk Franel cache.

Exit codes: 0 all pass, 1 mathematical failure (or corrupt cache),
2 usage/configuration error.  Reports stream to stdout, one record per
line; diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import sys

from . import registry
from .cache import CacheError, load_table, store_table
from .combinatorics import ROUTES, build_franel_table
from .harness import run_sweep
from .reports import serialize

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"range must look like LO..HI, got {text!r}"
        ) from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _parse_routes(text: str) -> list[str]:
    routes = [r.strip() for r in text.split(",") if r.strip()]
    for r in routes:
        if r not in ROUTES:
            raise argparse.ArgumentTypeError(
                f"unknown route {r!r}; expected one of {ROUTES}"
            )
    return routes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="franel",
        description="Exact computation and verification of Franel-number "
        "identities, congruences, and conjectures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="print (n, f_n) for a range")
    p_compute.add_argument("--n-range", type=_parse_range, required=True)
    p_compute.add_argument("--route", type=_parse_routes, default=["recurrence"])
    p_compute.add_argument("--cross-check", action="store_true",
                           help="fail unless all requested routes agree")
    p_compute.add_argument("--cache", metavar="PATH",
                           help="also write/extend the cache file atomically")

    p_verify = sub.add_parser("verify", help="run named checks over ranges")
    p_verify.add_argument("--statements", required=True,
                          help="comma-separated statement ids")
    p_verify.add_argument("--n-range", type=_parse_range)
    p_verify.add_argument("--p-range", type=_parse_range)
    p_verify.add_argument("--format", choices=("json-lines", "tsv"),
                          default="json-lines")
    p_verify.add_argument("--workers", type=int, default=1)

    p_sweep = sub.add_parser("sweep", help="run the full verification grid")
    p_sweep.add_argument("--statements",
                         help="optional comma-separated subset of the grid")
    p_sweep.add_argument("--n-range", type=_parse_range)
    p_sweep.add_argument("--p-range", type=_parse_range)
    p_sweep.add_argument("--format", choices=("json-lines", "tsv"),
                         default="json-lines")
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument("--quiet", action="store_true",
                         help="emit only the summary, not per-cell records")

    p_cache = sub.add_parser("cache", help="build or validate a cache file")
    p_cache.add_argument("--cache", metavar="PATH", required=True)
    p_cache.add_argument("--n-range", type=_parse_range,
                         help="build f_0..f_HI and write (LO must be 0)")

    return parser


def _resolve_statements(text: str) -> list[str] | None:
    ids = [s.strip() for s in text.split(",") if s.strip()]
    for sid in ids:
        if sid not in registry.STATEMENTS:
            print(
                f"error: unknown statement id {sid!r}; known ids: "
                f"{', '.join(registry.statement_ids())}",
                file=sys.stderr,
            )
            return None
    return ids


def _cmd_compute(args) -> int:
    lo, hi = args.n_range
    if lo < 0:
        print("error: n-range must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    tables = {route: build_franel_table(hi, route) for route in args.route}
    primary = tables[args.route[0]]
    if args.cross_check:
        for route, table in tables.items():
            for n in range(hi + 1):
                if table[n] != primary[n]:
                    print(
                        f"error: route disagreement at n={n}: "
                        f"{args.route[0]}={primary[n]} {route}={table[n]}",
                        file=sys.stderr,
                    )
                    return EXIT_FAIL
    for n in range(lo, hi + 1):
        print(f"{n} {primary[n]}")
    if args.cache:
        try:
            store_table(args.cache, primary)
        except OSError as exc:
            print(f"error: cannot write cache {args.cache!r}: {exc}",
                  file=sys.stderr)
            return EXIT_USAGE
    return EXIT_OK


def _run_and_stream(args, statement_ids, quiet=False) -> int:
    first_failure = {}

    def on_report(sid, report):
        if report.verdict == "fail" and not first_failure:
            first_failure["sid"] = sid
            first_failure["line"] = serialize(report, args.format)
        if not quiet:
            print(serialize(report, args.format))

    summary = run_sweep(
        statement_ids=statement_ids,
        n_range=getattr(args, "n_range", None),
        p_range=getattr(args, "p_range", None),
        workers=args.workers,
        on_report=on_report,
    )
    _print_summary(summary, args.format)
    if summary["total"]["fail"]:
        print(
            f"FAILED: {summary['total']['fail']} failing record(s); first: "
            f"{first_failure.get('line', '?')}",
            file=sys.stderr,
        )
        return EXIT_FAIL
    return EXIT_OK


def _print_summary(summary: dict, fmt: str) -> None:
    if fmt == "json-lines":
        import json

        print(json.dumps({"record_type": "summary", **summary}, sort_keys=True))
    else:
        for sid, c in summary["statements"].items():
            print(f"summary\t{sid}\t{c['pass']}\t{c['fail']}\t{c['skipped']}")
        t = summary["total"]
        print(f"summary\tTOTAL\t{t['pass']}\t{t['fail']}\t{t['skipped']}")


def _cmd_verify(args) -> int:
    ids = _resolve_statements(args.statements)
    if ids is None:
        return EXIT_USAGE
    return _run_and_stream(args, ids)


def _cmd_sweep(args) -> int:
    ids = None
    if args.statements:
        ids = _resolve_statements(args.statements)
        if ids is None:
            return EXIT_USAGE
    return _run_and_stream(args, ids, quiet=args.quiet)


def _cmd_cache(args) -> int:
    if args.n_range is not None:
        lo, hi = args.n_range
        if lo != 0:
            print("error: cache files start at index 0", file=sys.stderr)
            return EXIT_USAGE
        table = build_franel_table(hi, "recurrence")
        try:
            store_table(args.cache, table)
        except OSError as exc:
            print(f"error: cannot write cache {args.cache!r}: {exc}",
                  file=sys.stderr)
            return EXIT_USAGE
        print(f"wrote franel-cache v1 N={hi}")
        return EXIT_OK
    try:
        table = load_table(args.cache)
    except CacheError as exc:
        print(f"error: corrupt cache: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: cannot read cache {args.cache!r}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"franel-cache v1 N={table.n_max} ok")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compute":
        return _cmd_compute(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "sweep":
        return _cmd_sweep(args)
    return _cmd_cache(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
