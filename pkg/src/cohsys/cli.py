"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` finds a failing check, 2 on
usage errors.  Rationals may be given as ``p/q`` or as decimals (converted
exactly, so ``1.9`` is ``19/10``).  Class vectors are ``r,d,n``.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import brillnoether as bn
from .charge import central_charge, heart_slope
from .klattice import euler_pairing, parse_class
from .rational import as_fraction, fmt
from .support import GENUS4_PARAMS, PreconditionError, QuadFormParams, qform
from .verify import run_all
from .walls import SearchBounds, chamber_scan

DEFAULT_W_RANGE = (Fraction(2), Fraction(10))
GENUS4_OVERLAY = (Fraction(1), Fraction(3), Fraction(19, 10))

# "-1,-2,-1" or "-1/2" would otherwise be taken for an option
_NEGATIVE_ARG = re.compile(r"^-\d[\d/.,\-]*$")


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _class(text: str):
    try:
        return parse_class(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _pair(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated rationals, got {text!r}")
    return _rational(parts[0]), _rational(parts[1])


def _emit(out: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def cmd_pairing(args) -> int:
    print(euler_pairing(args.v1, args.v2, args.genus))
    return 0


def cmd_bn(args) -> int:
    if args.refined:
        if args.genus != 4:
            raise UsageError("the refined bound exists for genus 4 only")
        bound = bn.genus4_bound()
    else:
        bound = bn.general_bound(args.genus)
    print(fmt(bn.evaluate(bound, args.x)))
    return 0


def cmd_charge(args) -> int:
    z = central_charge(args.v, (args.b, args.w))
    s = heart_slope(args.v, (args.b, args.w))
    if args.output == "json":
        _emit(_dumps({"class": args.v.to_json(), **z.to_json(), "slope": s.tag()}), None)
    else:
        print(f"Z = {fmt(z.re)} + ({fmt(z.im)})i  slope {s.tag()}")
    return 0


def cmd_qform(args) -> int:
    q = GENUS4_PARAMS if args.params is None else QuadFormParams(*args.params)
    print(fmt(qform(args.v, q)))
    return 0


def cmd_scan(args) -> int:
    w_min, w_max = args.w_range
    try:
        sb = SearchBounds(args.r_max, args.n_window, w_min, w_max)
        res = chamber_scan(args.v, args.b, GENUS4_PARAMS, sb)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.output == "text":
        lines = [f"class {args.v} at b = {fmt(args.b)}, w in ({fmt(w_min)}, {fmt(w_max)}]"]
        for r in res.walls:
            tag = " (boundary)" if r.boundary else ""
            lines.append(f"  wall w = {fmt(r.wall_w)} vs {r.destabilizer}{tag}")
        for r in res.kernel_boundaries:
            lines.append(f"  kernel boundary at w = {fmt(r.vanishes_at)}: {r.destabilizer}")
        lines.append(f"  phase-1 candidates: {len(res.phase1_families)}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dumps(res.to_json()), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.genus != 4:
        raise UsageError("the refined verification suite is genus-4 only")
    w_min, w_max = args.w_range
    results = run_all(args.r_max, SearchBounds(3, args.n_window, w_min, w_max))
    for check in results:
        print(check.line())
    failed = sum(not c.passed for c in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def cmd_plot(args) -> int:
    x_min, x_max = args.range
    if args.step <= 0:
        raise UsageError("--step must be positive")
    if x_min > x_max:
        raise UsageError("empty range")
    overlay = GENUS4_OVERLAY if args.overlay else None
    rows = bn.emit_plot_data(bn.genus4_bound(), x_min, x_max, args.step, overlay)
    if args.output == "json":
        out = bn.plot_json(rows, args.float) + "\n"
    else:
        out = bn.plot_csv(rows, args.float)
    _emit(out, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohsys",
        description="Exact stability-condition arithmetic for coherent systems on curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pairing", help="Euler pairing of two classes")
    p.add_argument("v1", type=_class)
    p.add_argument("v2", type=_class)
    p.add_argument("--genus", type=int, default=4)
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("bn", help="evaluate a Brill-Noether bound")
    p.add_argument("x", type=_rational)
    p.add_argument("--genus", type=int, default=4)
    p.add_argument("--refined", action="store_true", help="genus-4 refined bound")
    p.set_defaults(func=cmd_bn)

    p = sub.add_parser("charge", help="central charge and slope of a class")
    p.add_argument("v", type=_class)
    p.add_argument("--b", type=_rational, default=Fraction(3))
    p.add_argument("--w", type=_rational, default=Fraction(2))
    p.add_argument("--output", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_charge)

    p = sub.add_parser("qform", help="support quadratic form of a class")
    p.add_argument("v", type=_class)
    p.add_argument("--params", type=_rational, nargs=4, metavar=("B0", "W0", "S", "T"))
    p.set_defaults(func=cmd_qform)

    p = sub.add_parser("scan", help="numerical walls along b = const")
    p.add_argument("v", type=_class)
    p.add_argument("--b", type=_rational, default=Fraction(3))
    p.add_argument("--r-max", type=int, default=3)
    p.add_argument("--n-window", type=int, default=3)
    p.add_argument("--w-range", type=_pair, default=DEFAULT_W_RANGE)
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run the genus-4 verification suite")
    p.add_argument("--genus", type=int, default=4)
    p.add_argument("--r-max", type=int, default=1000, help="rank bound for the moduli arithmetic")
    p.add_argument("--n-window", type=int, default=3)
    p.add_argument("--w-range", type=_pair, default=DEFAULT_W_RANGE)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="sample the genus-4 bound as CSV/JSON")
    p.add_argument("--range", type=_pair, default=(Fraction(-1), Fraction(7)))
    p.add_argument("--step", type=_rational, default=Fraction(1, 20))
    p.add_argument("--overlay", action="store_true", help="add the parabola (x-3)^2 + 19/10")
    p.add_argument("--float", action="store_true", help="also emit lossy decimal columns")
    p.add_argument("--output", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = [" " + a if _NEGATIVE_ARG.match(a) else a for a in argv]
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
