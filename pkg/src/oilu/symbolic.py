"""The ten OILU glyphs, their digit values and the quarter-turn rotation group.

Rotations are counterclockwise quarter turns.  The bar and the square are
fixed points; corners cycle BL -> BR -> TR -> TL and cups cycle
up -> left -> down -> right (named by the direction the cup opens).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass


class Kind(enum.Enum):
    BAR = "bar"
    SQUARE = "square"
    CORNER = "corner"
    CUP = "cup"


class Corner(enum.IntEnum):
    # value = quarter turns from BL
    BL = 0
    BR = 1
    TR = 2
    TL = 3


class Cup(enum.IntEnum):
    # value = quarter turns from OPENS_UP
    OPENS_UP = 0
    OPENS_LEFT = 1
    OPENS_DOWN = 2
    OPENS_RIGHT = 3


class Side(enum.IntEnum):
    # listed in counterclockwise order so a quarter turn is +1
    TOP = 0
    LEFT = 1
    BOTTOM = 2
    RIGHT = 3

    def rotated(self, k: int) -> "Side":
        return Side((self.value + k) % 4)


@dataclass(frozen=True)
class Glyph:
    kind: Kind
    orientation: Corner | Cup | None = None

    def __post_init__(self):
        if self.kind is Kind.CORNER and not isinstance(self.orientation, Corner):
            raise TypeError("corner glyph needs a Corner orientation")
        if self.kind is Kind.CUP and not isinstance(self.orientation, Cup):
            raise TypeError("cup glyph needs a Cup orientation")
        if self.kind in (Kind.BAR, Kind.SQUARE) and self.orientation is not None:
            raise TypeError(f"{self.kind.value} glyph takes no orientation")

    def __str__(self):
        if self.orientation is None:
            return self.kind.value
        return f"{self.kind.value}({self.orientation.name})"


class _Extra:
    """Marker for a side set that is not one of the ten glyphs."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EXTRA"

    def __reduce__(self):
        return (_Extra, ())


EXTRA = _Extra()

BAR = Glyph(Kind.BAR)
SQUARE = Glyph(Kind.SQUARE)

_DIGIT_TO_GLYPH = {
    0: SQUARE,
    1: BAR,
    2: Glyph(Kind.CORNER, Corner.BL),
    4: Glyph(Kind.CORNER, Corner.BR),
    6: Glyph(Kind.CORNER, Corner.TR),
    8: Glyph(Kind.CORNER, Corner.TL),
    3: Glyph(Kind.CUP, Cup.OPENS_UP),
    5: Glyph(Kind.CUP, Cup.OPENS_LEFT),
    7: Glyph(Kind.CUP, Cup.OPENS_DOWN),
    9: Glyph(Kind.CUP, Cup.OPENS_RIGHT),
}
_GLYPH_TO_DIGIT = {g: d for d, g in _DIGIT_TO_GLYPH.items()}

GLYPHS = tuple(_DIGIT_TO_GLYPH[d] for d in range(10))

_STROKES = {Kind.BAR: 1, Kind.CORNER: 2, Kind.CUP: 3, Kind.SQUARE: 4}


def _check_digit(d: int) -> None:
    if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d <= 9:
        raise ValueError(f"OILU digit must be an integer in [0, 9], got {d!r}")


def glyph_of_digit(d: int) -> Glyph:
    _check_digit(d)
    return _DIGIT_TO_GLYPH[d]


def digit_of_glyph(g: Glyph) -> int:
    return _GLYPH_TO_DIGIT[g]


def rotate_glyph(g: Glyph, k: int) -> Glyph:
    """Turn ``g`` by ``k`` counterclockwise quarter turns (any integer ``k``)."""
    if g.orientation is None:
        return g
    cls = type(g.orientation)
    return Glyph(g.kind, cls((g.orientation + k) % 4))


# Digit-level cycles, one step per quarter turn.
_EVEN = (2, 4, 6, 8)
_ODD = (3, 5, 7, 9)


def rotate_digit(d: int, k: int) -> int:
    _check_digit(d)
    if d in (0, 1):
        return d
    cycle = _EVEN if d % 2 == 0 else _ODD
    return cycle[(cycle.index(d) + k) % 4]


def stroke_count(g: Glyph) -> int:
    return _STROKES[g.kind]


@dataclass(frozen=True)
class SideSet:
    """Strokes present on the sides of a unit cell, plus an optional central vertical bar."""

    sides: frozenset = frozenset()
    center_bar: bool = False

    @classmethod
    def of(cls, *sides: Side, center_bar: bool = False) -> "SideSet":
        return cls(frozenset(sides), center_bar)

    def rotated(self, k: int) -> "SideSet":
        return SideSet(frozenset(s.rotated(k) for s in self.sides), self.center_bar)


# Adjacent side pairs -> corner they share.
_CORNERS = {
    frozenset({Side.BOTTOM, Side.LEFT}): Corner.BL,
    frozenset({Side.BOTTOM, Side.RIGHT}): Corner.BR,
    frozenset({Side.TOP, Side.RIGHT}): Corner.TR,
    frozenset({Side.TOP, Side.LEFT}): Corner.TL,
}
# Missing side -> direction the cup opens.
_CUPS = {
    Side.TOP: Cup.OPENS_UP,
    Side.LEFT: Cup.OPENS_LEFT,
    Side.BOTTOM: Cup.OPENS_DOWN,
    Side.RIGHT: Cup.OPENS_RIGHT,
}
_ALL_SIDES = frozenset(Side)


def classify_side_set(s: SideSet) -> Glyph | _Extra:
    sides = frozenset(s.sides)
    if s.center_bar:
        return BAR if not sides else EXTRA
    n = len(sides)
    if n == 4:
        return SQUARE
    if n == 3:
        (missing,) = _ALL_SIDES - sides
        return Glyph(Kind.CUP, _CUPS[missing])
    if n == 2:
        corner = _CORNERS.get(sides)
        return Glyph(Kind.CORNER, corner) if corner is not None else EXTRA
    if n == 1 and sides & {Side.LEFT, Side.RIGHT}:
        return BAR
    return EXTRA
