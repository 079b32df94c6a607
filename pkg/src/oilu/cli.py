"""``oilu`` command line.

Every invocation prints one JSON document on stdout.  Exit status is 0 on
success, 1 for usage errors and 2 for domain errors (bad digits, unknown pairs,
unreadable markers).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import markers
from .errors import OiluError
from .numbers import canonical, display_energy, facet, format_number, parse_number, related_set, sevenseg_energy
from .series import DEFAULT_MAX_LENGTH, NavRule, SeriesConfig, generate
from .sevenseg import HEX_DIGITS, Strategy, merge_number, parse_digits, split_digit, split_table

BASES = {"dec": 10, "hex": 16}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dump(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))


def _pair_row(d, p):
    return {"digit": HEX_DIGITS[d], "upper": p.upper, "lower": p.lower, "replaced": p.replaced}


def cmd_facets(args):
    n = parse_number(args.digits)
    facets = related_set(n).strings()
    if args.plain:
        return "\n".join(facets)
    return {"input": args.digits, "facets": facets, "canonical": format_number(canonical(n)[0])}


def cmd_rotate(args):
    out = format_number(facet(parse_number(args.digits), args.k))
    return {"input": args.digits, "k": args.k, "output": out}


def cmd_energy(args):
    return {
        "input": args.digits,
        "oilu": display_energy(parse_number(args.digits)),
        "sevenseg": sevenseg_energy(args.digits),
    }


def cmd_split(args):
    base = BASES[args.base]
    pairs = []
    oilu = []
    for d in parse_digits(args.digits, base):
        p = split_digit(d, args.strategy, base)
        pairs.append(_pair_row(d, p))
        oilu.append(f"{p.upper}{p.lower}")
    return {"input": args.digits, "pairs": pairs, "oilu": "".join(oilu)}


def cmd_join(args):
    out = merge_number(parse_number(args.digits), args.strategy, BASES[args.base])
    return {"input": args.digits, "output": out}


def cmd_table(args):
    base = BASES[args.base]
    rows = [_pair_row(d, p) for d, p in enumerate(split_table(args.strategy, base))]
    return {"strategy": args.strategy.value, "base": args.base, "rows": rows}


def cmd_series(args):
    try:
        rule = NavRule.parse(args.rule)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    base = BASES[args.base]
    parse_digits(args.seed, base)
    if args.max_length < len(args.seed):
        raise UsageError("--max-length is shorter than the seed")
    res = generate(SeriesConfig(args.seed, rule, args.steps, base, args.max_length))
    if res.error is not None:
        raise res.error
    if args.plain:
        return "\n".join(res.values)
    return {
        "seed": args.seed,
        "rule": str(rule),
        "base": args.base,
        "series": res.values,
        "stopped": res.stop_reason,
    }


def cmd_marker_render(args):
    out = Path(args.out)
    fmt = out.suffix.lower().lstrip(".")
    if fmt not in ("svg", "pgm"):
        raise UsageError(f"--out must end in .svg or .pgm, got {args.out!r}")
    if args.size < markers.MIN_SIZE:
        raise UsageError(f"--size must be at least {markers.MIN_SIZE}")
    n = parse_number(args.digits)
    if len(n) > markers.MAX_LEVELS:
        raise UsageError(f"marker ids have at most {markers.MAX_LEVELS} digits")
    scene = markers.layout_marker(n)
    if fmt == "svg":
        out.write_text(markers.scene_to_svg(scene, args.size))
    else:
        markers.write_pgm(markers.rasterize(scene, args.size), out)
    return {"id": args.digits, "levels": len(n), "size": args.size, "format": fmt, "out": str(out)}


def cmd_marker_decode(args):
    if not 1 <= args.levels <= markers.MAX_LEVELS:
        raise UsageError(f"--levels must be in 1..{markers.MAX_LEVELS}")
    try:
        img = markers.read_pgm(args.path)
    except OSError as exc:
        raise markers.BadImage(f"cannot read {args.path}: {exc.strerror}") from None
    n = markers.decode_marker(img, args.levels)
    canon, k = markers.canonical_id(n)
    return {"id": format_number(n), "canonical": format_number(canon), "k": k}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="oilu", description="OILU numeral toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def strategy(text):
        try:
            return Strategy.parse(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    def add_split_opts(sp):
        sp.add_argument("--strategy", type=strategy, required=True, help="a, b or c")
        sp.add_argument("--base", choices=BASES, default="dec")

    sp = sub.add_parser("facets", help="related numbers and canonical facet")
    sp.add_argument("digits")
    sp.add_argument("--plain", action="store_true", help="one facet per line")
    sp.set_defaults(func=cmd_facets)

    sp = sub.add_parser("rotate", help="facet after k quarter turns")
    sp.add_argument("digits")
    sp.add_argument("--k", type=int, choices=range(4), required=True)
    sp.set_defaults(func=cmd_rotate)

    sp = sub.add_parser("energy", help="OILU vs seven-segment stroke counts")
    sp.add_argument("digits")
    sp.set_defaults(func=cmd_energy)

    sp = sub.add_parser("split", help="Dec/Hex digits to OILU pairs")
    sp.add_argument("digits")
    add_split_opts(sp)
    sp.set_defaults(func=cmd_split)

    sp = sub.add_parser("join", help="OILU pairs back to Dec/Hex digits")
    sp.add_argument("digits")
    add_split_opts(sp)
    sp.set_defaults(func=cmd_join)

    sp = sub.add_parser("table", help="full split table")
    add_split_opts(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("series", help="generate a number series")
    sp.add_argument("--seed", required=True)
    sp.add_argument("--rule", required=True, help="e.g. split:a,facet:1,merge:a")
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--base", choices=BASES, default="dec")
    sp.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH)
    sp.add_argument("--plain", action="store_true", help="one value per line")
    sp.set_defaults(func=cmd_series)

    mk = sub.add_parser("marker", help="render or decode markers")
    msub = mk.add_subparsers(dest="marker_command", required=True, parser_class=_Parser)
    sp = msub.add_parser("render")
    sp.add_argument("digits")
    sp.add_argument("--size", type=int, default=256)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_marker_render)
    sp = msub.add_parser("decode")
    sp.add_argument("path")
    sp.add_argument("--levels", type=int, required=True)
    sp.set_defaults(func=cmd_marker_decode)
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        print(_dump({"status": "error", "error": {"code": "usage", "message": str(exc)}}), file=stdout)
        return 1
    except OiluError as exc:
        err = {"code": exc.code, "message": str(exc)}
        if exc.position is not None:
            err["position"] = exc.position
        if getattr(exc, "iteration", None) is not None:
            err["iteration"] = exc.iteration
        print(_dump({"status": "error", "error": err}), file=stdout)
        return 2
    print(result if isinstance(result, str) else _dump(result), file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
