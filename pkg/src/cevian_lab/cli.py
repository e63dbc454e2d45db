"""``cevian-lab`` command line.

Exit codes: 0 success, 1 usage error, 2 mathematical degeneracy,
3 verification disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cevians import RouthConfig, generalized_routh_points
from .errors import PairError
from .figures import FigureSpec, emit_svg
from .formulas import cevial_ratio, generalized_ratio, routh_ratio
from .oracle import config_corpus, verify_config
from .param_line import parse_param
from .projective import Triangle
from .search import (
    is_digit_reciprocal,
    scan_digit_triples,
    scan_equal_integer,
    scan_generalized_pairs,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DEGENERATE = 2
EXIT_DISAGREE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cevian-lab", description="Exact generalized Routh triangles.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    ratio = sub.add_parser("ratio", help="signed area ratio of PQR to ABC")
    ratio.add_argument("params", nargs="*", help="x y z u v w ('3', '-4/7', 'inf')")
    ratio.add_argument("--mode", choices=("general", "routh", "cevial"), default="general")
    ratio.add_argument("--json", action="store_true")

    points = sub.add_parser("points", help="exact coordinates of P, Q, R on the canonical triangle")
    points.add_argument("params", nargs="*")
    points.add_argument("--mode", choices=("general", "routh", "cevial"), default="general")
    points.add_argument("--json", action="store_true")

    check = sub.add_parser("check", help="closed form against the coordinate oracle")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--count", type=int, default=1000)
    check.add_argument("--json", action="store_true")

    search = sub.add_parser("search", help="exhaustive coefficient scans")
    search.add_argument("--family", choices=("equal-int", "digit-triples", "pairs"), required=True)
    search.add_argument("--range", dest="range_", default="-10000..10000", metavar="A..B")
    search.add_argument("--reciprocals", action="store_true")
    search.add_argument("--both-reciprocals", action="store_true")
    search.add_argument("--json", action="store_true")

    figure = sub.add_parser("figure", help="SVG drawing of the construction")
    figure.add_argument("params", nargs="*")
    figure.add_argument("--mode", choices=("general", "routh", "cevial"), default="general")
    figure.add_argument("--svg-out", metavar="PATH")
    figure.add_argument("--width", type=int, default=600)
    figure.add_argument("--height", type=int, default=600)
    return parser


def _config(args) -> RouthConfig:
    want = 6 if args.mode == "general" else 3
    if len(args.params) != want:
        raise UsageError(f"{args.command} --mode {args.mode} takes {want} parameters, got {len(args.params)}")
    try:
        params = [parse_param(p) for p in args.params]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.mode == "routh":
        return RouthConfig.routh(*params)
    if args.mode == "cevial":
        return RouthConfig.cevial(*params)
    return RouthConfig(*params)


def _emit(record: dict) -> None:
    print(json.dumps(record, sort_keys=True))


def _degenerate_record(exc: PairError) -> dict:
    return {"which": exc.which, "class": exc.pair_class.name}


def _cmd_ratio(args) -> int:
    cfg = _config(args)
    fn = {
        "general": lambda: generalized_ratio(cfg),
        "routh": lambda: routh_ratio(cfg.x, cfg.y, cfg.z),
        "cevial": lambda: cevial_ratio(cfg.x, cfg.y, cfg.z),
    }[args.mode]
    try:
        res = fn()
    except PairError as exc:
        if args.json:
            _emit({"command": "ratio", "inputs": args.params, "result": None,
                   "degenerate": _degenerate_record(exc)})
        print(f"degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    if args.json:
        _emit({"command": "ratio", "inputs": args.params, "result": res.to_json(),
               "degenerate": res.degenerate_numerator})
    else:
        print(res.value)
    return EXIT_OK


def _cmd_points(args) -> int:
    cfg = _config(args)
    try:
        pts = generalized_routh_points(Triangle.canonical(), cfg)
    except PairError as exc:
        if args.json:
            _emit({"command": "points", "inputs": args.params, "result": None,
                   "degenerate": _degenerate_record(exc)})
        print(f"degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    if args.json:
        result = {}
        for name, p in zip("PQR", pts):
            x, y = p.xy
            result[name] = {**p.to_json(), "x": str(x), "y": str(y)}
        _emit({"command": "points", "inputs": args.params, "result": result, "degenerate": False})
    else:
        for name, p in zip("PQR", pts):
            x, y = p.xy
            print(f"{name} = ({x}, {y})")
    return EXIT_OK


def _cmd_check(args) -> int:
    if args.count < 1:
        raise UsageError("--count must be positive")
    tri = Triangle.canonical()
    failures = []
    n_ok = n_degenerate = 0
    for cfg in config_corpus(args.seed, args.count)[: args.count]:
        rep = verify_config(tri, cfg)
        if not rep.agree:
            failures.append(str(cfg))
        elif rep.ok:
            n_ok += 1
        else:
            n_degenerate += 1
    if args.json:
        _emit({"command": "check", "inputs": {"seed": args.seed, "count": args.count},
               "result": {"agree": n_ok, "degenerate_agree": n_degenerate, "disagree": failures},
               "degenerate": False})
    else:
        print(f"{args.count} configs: {n_ok} agree, {n_degenerate} degenerate (same diagnosis), "
              f"{len(failures)} disagree")
        for f in failures:
            print(f"  disagreement: {f}")
    return EXIT_DISAGREE if failures else EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"bad --range {text!r}, expected A..B") from None
    if lo > hi:
        raise UsageError(f"empty --range {text!r}")
    return lo, hi


def _cmd_search(args) -> int:
    if args.family == "equal-int":
        lo, hi = _parse_range(args.range_)
        hits = scan_equal_integer(lo, hi)
        if args.json:
            _emit({"command": "search", "inputs": {"family": args.family, "range": [lo, hi]},
                   "result": [h.to_json() for h in hits], "degenerate": False})
        else:
            for h in hits:
                flag = "  (trivial)" if h.trivial else ""
                print(f"n = {h.coefficients[0]}: {h.ratio}{flag}")
        return EXIT_OK

    if args.family == "digit-triples":
        found = scan_digit_triples()
        inputs = {"family": args.family}
    else:
        found = scan_generalized_pairs(args.reciprocals or args.both_reciprocals, args.both_reciprocals)
        inputs = {"family": args.family, "reciprocals": args.reciprocals,
                  "both_reciprocals": args.both_reciprocals}

    if args.json:
        if args.family == "pairs":
            result = {
                group: {str(r): [h.to_json() for h in hits] for r, hits in found.items()
                        if is_digit_reciprocal(r) == (group == "reciprocal")}
                for group in ("reciprocal", "digit_fraction")
            }
        else:
            result = {str(r): [h.to_json() for h in hits] for r, hits in found.items()}
        _emit({"command": "search", "inputs": inputs, "result": result, "degenerate": False})
        return EXIT_OK

    for r, hits in found.items():
        if args.family == "digit-triples":
            reps = [h for h in hits if h.orbit_representative]
            shown = ", ".join("(" + ", ".join(map(str, h.coefficients)) + ")" for h in reps)
            print(f"{r}: {shown}")
        else:
            shown = ", ".join(
                f"(u={h.coefficients[0]}, x={h.coefficients[1]}{', scaled' if h.scaled_image else ''})"
                for h in hits
            )
            tag = "" if is_digit_reciprocal(r) else "  [not a digit reciprocal]"
            print(f"{r}: {shown}{tag}")
    return EXIT_OK


def _cmd_figure(args) -> int:
    cfg = _config(args)
    try:
        spec = FigureSpec(Triangle.canonical(), cfg, width=args.width, height=args.height)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    svg = emit_svg(spec)
    if args.svg_out:
        with open(args.svg_out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


_COMMANDS = {
    "ratio": _cmd_ratio,
    "points": _cmd_points,
    "check": _cmd_check,
    "search": _cmd_search,
    "figure": _cmd_figure,
}


def run_cli(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command is None:
            raise UsageError(parser.format_usage())
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(str(exc).rstrip(), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
