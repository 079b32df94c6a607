"""Seven-segment digits cut into (upper, lower) OILU symbol pairs.

Segments follow the usual lettering: a top, b upper-right, c lower-right,
d bottom, e lower-left, f upper-left, g middle.  The upper half sees a/f/b/g
as its top/left/right/bottom sides and the lower half sees g/e/c/d.  The
strategy decides who owns g: both halves (A), the upper one (B) or the lower
one (C).

A digit whose raw halves are not both OILU glyphs, or whose raw pair is shared
with another digit of the same base, falls back to its strategy-A pair.  That
keeps every table injective, so splitting is always reversible.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidDigit, OddLength, UnknownPair
from .numbers import OiluNumber, _as_number
from .symbolic import EXTRA, Side, SideSet, classify_side_set, digit_of_glyph

SEGMENT_NAMES = "abcdefg"

SEGMENTS = {
    0x0: frozenset("abcdef"),
    0x1: frozenset("bc"),
    0x2: frozenset("abged"),
    0x3: frozenset("abgcd"),
    0x4: frozenset("fgbc"),
    0x5: frozenset("afgcd"),
    0x6: frozenset("afgecd"),
    0x7: frozenset("abc"),
    0x8: frozenset("abcdefg"),
    0x9: frozenset("abcdfg"),
    0xA: frozenset("abcefg"),
    0xB: frozenset("cdefg"),
    0xC: frozenset("adef"),
    0xD: frozenset("bcdeg"),
    0xE: frozenset("adefg"),
    0xF: frozenset("aefg"),
}

_UPPER_SIDES = {"a": Side.TOP, "f": Side.LEFT, "b": Side.RIGHT, "g": Side.BOTTOM}
_LOWER_SIDES = {"g": Side.TOP, "e": Side.LEFT, "c": Side.RIGHT, "d": Side.BOTTOM}

HEX_DIGITS = "0123456789ABCDEF"


class Strategy(enum.Enum):
    A = "a"  # middle segment shared
    B = "b"  # middle segment goes to the upper half
    C = "c"  # middle segment goes to the lower half

    @classmethod
    def parse(cls, text: "str | Strategy") -> "Strategy":
        if isinstance(text, Strategy):
            return text
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown split strategy {text!r}; expected a, b or c") from None


@dataclass(frozen=True)
class SplitPair:
    upper: int
    lower: int
    replaced: bool = False

    @property
    def pair(self) -> tuple[int, int]:
        return (self.upper, self.lower)


def _check_base(base: int) -> None:
    if base not in (10, 16):
        raise ValueError(f"base must be 10 or 16, got {base!r}")


def _check_seg_digit(d: int, base: int = 16) -> None:
    if not isinstance(d, int) or not 0 <= d < base:
        raise InvalidDigit(f"{d!r} is not a base-{base} digit")


def raw_halves(d: int, s: Strategy | str) -> tuple[SideSet, SideSet]:
    s = Strategy.parse(s)
    _check_seg_digit(d)
    segs = SEGMENTS[d]
    upper = {_UPPER_SIDES[x] for x in segs if x in _UPPER_SIDES}
    lower = {_LOWER_SIDES[x] for x in segs if x in _LOWER_SIDES}
    if "g" in segs:
        if s is Strategy.B:
            lower.discard(Side.TOP)
        elif s is Strategy.C:
            upper.discard(Side.BOTTOM)
    return SideSet(frozenset(upper)), SideSet(frozenset(lower))


def _raw_pair(d: int, s: Strategy):
    up, lo = (classify_side_set(h) for h in raw_halves(d, s))
    if up is EXTRA or lo is EXTRA:
        return None
    return digit_of_glyph(up), digit_of_glyph(lo)


@lru_cache(maxsize=None)
def _table(s: Strategy, base: int) -> tuple[SplitPair, ...]:
    raw = [_raw_pair(d, s) for d in range(base)]
    seen = {}
    for p in raw:
        if p is not None:
            seen[p] = seen.get(p, 0) + 1
    rows = []
    for d, p in enumerate(raw):
        if p is None or seen[p] > 1:
            fallback = _raw_pair(d, Strategy.A)
            rows.append(SplitPair(*fallback, replaced=True))
        else:
            rows.append(SplitPair(*p))
    pairs = {r.pair for r in rows}
    # strategy A is collision-free, so this only guards against table edits
    assert len(pairs) == base, f"split table for {s}/{base} is not injective"
    return tuple(rows)


@lru_cache(maxsize=None)
def _inverse(s: Strategy, base: int) -> dict:
    return {row.pair: d for d, row in enumerate(_table(s, base))}


def split_table(s: Strategy | str, base: int = 16) -> list[SplitPair]:
    _check_base(base)
    return list(_table(Strategy.parse(s), base))


def split_digit(d: int, s: Strategy | str, base: int = 16) -> SplitPair:
    """Cut digit ``d`` into an (upper, lower) OILU pair.

    Rows for 0-9 are the same in both bases; ``base`` only matters for which
    digits may collide.
    """
    _check_base(base)
    _check_seg_digit(d, base)
    return _table(Strategy.parse(s), base)[d]


def join_pair(p: tuple[int, int], s: Strategy | str, base: int = 10) -> int:
    _check_base(base)
    s = Strategy.parse(s)
    try:
        return _inverse(s, base)[tuple(p)]
    except KeyError:
        raise UnknownPair(
            f"pair {tuple(p)} is not produced by strategy {s.value} in base {base}"
        ) from None


def parse_digits(text: str, base: int) -> list[int]:
    """Parse a Dec/Hex digit string; hex letters are accepted in either case."""
    _check_base(base)
    if not text:
        raise InvalidDigit("empty digit string", 0)
    out = []
    for i, ch in enumerate(text):
        v = HEX_DIGITS.find(ch.upper())
        if v < 0 or v >= base:
            raise InvalidDigit(f"character {ch!r} at position {i} is not a base-{base} digit", i)
        out.append(v)
    return out


def format_digits(values) -> str:
    return "".join(HEX_DIGITS[v] for v in values)


def split_number(t: str, s: Strategy | str, base: int = 10) -> OiluNumber:
    s = Strategy.parse(s)
    out = []
    for d in parse_digits(t, base):
        p = split_digit(d, s, base)
        out.extend(p.pair)
    return OiluNumber(tuple(out))


def merge_number(n, s: Strategy | str, base: int = 10) -> str:
    """Inverse of :func:`split_number`; returns the Dec/Hex digit string (uppercase)."""
    n = _as_number(n)
    s = Strategy.parse(s)
    digits = n.digits
    if len(digits) % 2:
        raise OddLength(f"cannot pair up {len(digits)} digits", len(digits) - 1)
    out = []
    for i in range(0, len(digits), 2):
        try:
            out.append(join_pair(digits[i : i + 2], s, base))
        except UnknownPair as exc:
            raise UnknownPair(str(exc), i) from None
    return format_digits(out)
