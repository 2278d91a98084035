"""Command-line front end.

Two subcommands:

  analyze  -- run the full weight/moment pipeline for (n, d)
  mincomb  -- minimal combinations of a point set read from a JSON file

Exit codes: 0 success, 1 input parse error, 2 oracle failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .mincomb import OracleFailedError, PointSet
from .report import TooLargeError, analyze, render, render_mincomb, run_mincomb


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mincombs",
        description="Minimal combinations of weights and moment maps of hypersurfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="full pipeline for degree-d forms in n variables")
    pa.add_argument("--vars", type=int, required=True, metavar="N")
    pa.add_argument("--degree", type=int, required=True, metavar="D")
    pa.add_argument("--weyl-only", action="store_true")
    pa.add_argument("--interior-only", action="store_true")
    pa.add_argument("--k-max", type=int, default=None, metavar="K")
    pa.add_argument("--format", choices=("json", "table", "latex"), default="json")
    pa.add_argument("--out", default=None, metavar="PATH")
    pa.add_argument("--reproducible", action="store_true", help="omit the timestamp")
    pa.add_argument("--max-monomials", type=int, default=35)

    pm = sub.add_parser("mincomb", help="minimal combinations of a point-set file")
    pm.add_argument("--input", required=True, metavar="FILE")
    pm.add_argument("--format", choices=("json", "table", "latex"), default="json")
    pm.add_argument("--oracle", action="store_true", help="cross-check with the float oracle")
    pm.add_argument("--tol", type=float, default=1e-9)
    pm.add_argument("--out", default=None, metavar="PATH")

    return parser


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        try:
            report = analyze(
                n=args.vars,
                d=args.degree,
                weyl_only=args.weyl_only,
                k_max=args.k_max,
                interior_only=args.interior_only,
                max_monomials=args.max_monomials,
                reproducible=args.reproducible,
            )
        except (TooLargeError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        _emit(render(report, args.format), args.out)
        return 0

    try:
        points = PointSet.load(args.input)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: cannot read point set: {exc}", file=sys.stderr)
        return 1
    try:
        results, deltas = run_mincomb(points, oracle=args.oracle, tol=args.tol)
    except OracleFailedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(render_mincomb(results, args.format, deltas), args.out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
