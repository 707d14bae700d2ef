"""Command line interface: ``g2quat <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 internal consistency error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import selftest
from .counts import FORMATTERS, count_range, verify_fixture
from .errors import ConsistencyError, FixtureMalformed, FixtureMissing
from .gammaclasses import default_datafile, invariant_dim, load_classes, power_map_consistent, records_to_json, regenerate
from .modforms import dim_cusp_forms
from .rootlattice import Weight, is_dominant
from .weylchar import char_at, weyl_dim

log = logging.getLogger("g2quat")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="g2quat", description="Counts of level-1 quaternionic representations on G2.")
    p.add_argument("--data", type=Path, default=None, help="class datafile (default: the shipped copy)")
    p.add_argument("--regenerate", action="store_true", help="rebuild class data from the octonion oracle")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes (default: %(default)s)")
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count representations for a range of weights")
    c.add_argument("--from", dest="k_from", type=int, required=True)
    c.add_argument("--to", dest="k_to", type=int, required=True)
    c.add_argument("--format", choices=sorted(FORMATTERS), default="table")

    c = sub.add_parser("invariant", help="dimension of G2(Z)-invariants in V_lambda")
    c.add_argument("--weight", nargs=2, type=int, metavar=("A", "B"), required=True)

    c = sub.add_parser("classes", help="emit or verify the conjugacy class datafile")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--emit", type=Path, metavar="PATH")
    g.add_argument("--verify", action="store_true")

    c = sub.add_parser("dims", help="Weyl dimension of V_lambda")
    c.add_argument("--weight", nargs=2, type=int, metavar=("A", "B"), required=True)

    c = sub.add_parser("modforms", help="number of level-1 cusp eigenforms of weight k")
    c.add_argument("--k", type=int, required=True)

    c = sub.add_parser("verify", help="compare counts against a JSON fixture")
    c.add_argument("--fixture", type=Path, default=None)

    sub.add_parser("selftest", help="run the invariant suite")
    return p


def _weight(ab) -> Weight:
    try:
        w = Weight(*ab)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not is_dominant(w):
        raise UsageError(f"{tuple(ab)} is not dominant")
    return w


def _classes(args):
    if args.regenerate:
        return regenerate()
    return load_classes(args.data)


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "count":
        if args.k_from <= 2 or args.k_to <= 2:
            raise UsageError("weights must satisfy k > 2")
        if args.k_to < args.k_from:
            raise UsageError(f"empty range {args.k_from}..{args.k_to}")
        reports = count_range(args.k_from, args.k_to, _classes(args), args.jobs)
        out.write(FORMATTERS[args.format](reports))
        return EXIT_OK
    if cmd == "invariant":
        print(invariant_dim(_weight(args.weight), _classes(args)), file=out)
        return EXIT_OK
    if cmd == "dims":
        print(weyl_dim(_weight(args.weight)), file=out)
        return EXIT_OK
    if cmd == "modforms":
        if args.k < 0:
            raise UsageError("k must be >= 0")
        print(dim_cusp_forms(args.k), file=out)
        return EXIT_OK
    if cmd == "classes":
        if args.emit is not None:
            args.emit.write_text(records_to_json(regenerate()))
            log.info("wrote %s", args.emit)
            return EXIT_OK
        return _verify_classes(args, out)
    if cmd == "verify":
        ok, diffs = verify_fixture(args.fixture, _classes(args), args.jobs)
        for d in diffs:
            print(f"k={d.k}: expected {d.expected}, computed {d.computed}", file=sys.stderr)
        print("PASS" if ok else "FAIL", file=out)
        return EXIT_OK if ok else EXIT_FAIL
    if cmd == "selftest":
        return EXIT_OK if selftest.run(_classes(args), out) else EXIT_FAIL
    raise UsageError(f"unknown command {cmd}")


def _verify_classes(args, out) -> int:
    """Rerun the oracle and compare with the datafile byte for byte."""
    path = args.data or default_datafile()
    fresh = regenerate()
    ok = records_to_json(fresh) == Path(path).read_text()
    ok &= power_map_consistent(fresh)
    for r in fresh:
        ok &= char_at(Weight(1, 1), r.torus) == r.representative.trace7()
    print("PASS" if ok else "FAIL", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s")
    try:
        return _run(args, sys.stdout)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FixtureMissing, FixtureMalformed, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
