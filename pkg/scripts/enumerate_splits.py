"""Brute-force oracle for the seven-segment split tables and the split-series goldens.

Shares no code with the ``oilu`` package.  Glyphs are built geometrically: the
L and U stroke sets are rotated a quarter turn at a time with (x, y) -> (-y, x)
and every half of a seven-segment digit is matched against that catalogue by
plain set comparison.

    python scripts/enumerate_splits.py            # print tables
    python scripts/enumerate_splits.py --write    # refresh tests/goldens/oracle.json
"""
import argparse
import json
from pathlib import Path

# Unit-square edges as endpoint pairs, y up.
TOP = frozenset({(-1, 1), (1, 1)})
BOTTOM = frozenset({(-1, -1), (1, -1)})
LEFT = frozenset({(-1, -1), (-1, 1)})
RIGHT = frozenset({(1, -1), (1, 1)})


def rot(edge):
    return frozenset((-y, x) for x, y in edge)


def rot_shape(shape):
    return frozenset(rot(e) for e in shape)


def catalogue():
    """Map frozenset-of-edges -> digit, built from the rotation rule alone."""
    shapes = {}
    shapes[frozenset({TOP, BOTTOM, LEFT, RIGHT})] = 0
    # a lone vertical stroke reads as the bar wherever it sits
    shapes[frozenset({LEFT})] = 1
    shapes[frozenset({RIGHT})] = 1
    ell = frozenset({LEFT, BOTTOM})
    cup = frozenset({LEFT, BOTTOM, RIGHT})
    for k, digit in enumerate((2, 4, 6, 8)):
        s = ell
        for _ in range(k):
            s = rot_shape(s)
        shapes[s] = digit
    for k, digit in enumerate((3, 5, 7, 9)):
        s = cup
        for _ in range(k):
            s = rot_shape(s)
        shapes[s] = digit
    return shapes


SEGMENTS = {
    0: "abcdef", 1: "bc", 2: "abged", 3: "abgcd", 4: "fgbc", 5: "afgcd",
    6: "afgecd", 7: "abc", 8: "abcdefg", 9: "abcdfg", 10: "abcefg",
    11: "cdefg", 12: "adef", 13: "bcdeg", 14: "adefg", 15: "aefg",
}
UPPER = {"a": TOP, "f": LEFT, "b": RIGHT, "g": BOTTOM}
LOWER = {"g": TOP, "e": LEFT, "c": RIGHT, "d": BOTTOM}


def halves(digit, strategy):
    segs = set(SEGMENTS[digit])
    up_segs = set(segs)
    lo_segs = set(segs)
    if strategy == "b":
        lo_segs.discard("g")
    elif strategy == "c":
        up_segs.discard("g")
    up = frozenset(UPPER[s] for s in up_segs if s in UPPER)
    lo = frozenset(LOWER[s] for s in lo_segs if s in LOWER)
    return up, lo


def table(strategy, base):
    shapes = catalogue()

    def lookup(digit, strat):
        up, lo = halves(digit, strat)
        return shapes.get(up), shapes.get(lo)

    raw = {d: lookup(d, strategy) for d in range(base)}
    counts = {}
    for pair in raw.values():
        if None not in pair:
            counts[pair] = counts.get(pair, 0) + 1
    rows = []
    for d in range(base):
        pair = raw[d]
        bad = None in pair or counts[pair] > 1
        if bad:
            pair = lookup(d, "a")
        rows.append({"digit": d, "upper": pair[0], "lower": pair[1], "replaced": bad})
    return rows


def split_series(seed, steps):
    tab = {r["digit"]: (r["upper"], r["lower"]) for r in table("a", 10)}
    out = [seed]
    for _ in range(steps):
        out.append("".join(f"{tab[int(c)][0]}{tab[int(c)][1]}" for c in out[-1]))
    return out


def build():
    tables = {}
    for strategy in "abc":
        for base in (10, 16):
            tables[f"{strategy}{base}"] = table(strategy, base)
    return {"tables": tables, "series_8_split_a": split_series("8", 4)}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--write", action="store_true")
    args = ap.parse_args()
    data = build()
    for key, rows in data["tables"].items():
        pairs = [(r["upper"], r["lower"]) for r in rows]
        flag = "ok" if len(set(pairs)) == len(pairs) else "NOT INJECTIVE"
        cells = " ".join(
            f"{r['digit']:X}:{r['upper']}{r['lower']}{'*' if r['replaced'] else ''}" for r in rows
        )
        print(f"{key:>4} [{flag}] {cells}")
    print("series:", data["series_8_split_a"])
    if args.write:
        path = Path(__file__).resolve().parent.parent / "tests" / "goldens" / "oracle.json"
        path.write_text(json.dumps(data, indent=1) + "\n")
        print("wrote", path)


if __name__ == "__main__":
    main()
