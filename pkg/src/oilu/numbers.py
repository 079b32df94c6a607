"""OILU numbers: digit stacks read outermost-first, and their four facets.

A number is a sequence of symbols, not an integer, so leading zeros are kept
("007" and "7" are different stacks).  Most functions accept either an
:class:`OiluNumber` or its digit string.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyInput, InvalidCharacter
from .symbolic import glyph_of_digit, rotate_digit, stroke_count


@dataclass(frozen=True, order=True)
class OiluNumber:
    digits: tuple

    def __post_init__(self):
        digits = tuple(self.digits)
        if not digits:
            raise EmptyInput("an OILU number needs at least one digit")
        for i, d in enumerate(digits):
            if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d <= 9:
                raise InvalidCharacter(f"digit {d!r} at position {i} is not in [0, 9]", i)
        object.__setattr__(self, "digits", digits)

    def __str__(self):
        return format_number(self)

    def __len__(self):
        return len(self.digits)


@dataclass(frozen=True)
class FacetSet:
    base: OiluNumber
    members: frozenset

    def strings(self) -> list[str]:
        return sorted(format_number(m) for m in self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, item):
        return _as_number(item) in self.members


def parse_number(text: str) -> OiluNumber:
    if not text:
        raise EmptyInput("empty digit string")
    for i, ch in enumerate(text):
        if ch not in "0123456789":
            raise InvalidCharacter(f"character {ch!r} at position {i} is not a decimal digit", i)
    return OiluNumber(tuple(int(ch) for ch in text))


def format_number(n: OiluNumber) -> str:
    return "".join(str(d) for d in n.digits)


def _as_number(n) -> OiluNumber:
    return n if isinstance(n, OiluNumber) else parse_number(n)


def facet(n, k: int) -> OiluNumber:
    """Read the stack after ``k`` counterclockwise quarter turns."""
    n = _as_number(n)
    return OiluNumber(tuple(rotate_digit(d, k) for d in n.digits))


def related_set(n) -> FacetSet:
    n = _as_number(n)
    return FacetSet(n, frozenset(facet(n, k) for k in range(4)))


def canonical(n) -> tuple[OiluNumber, int]:
    """Smallest facet by digit string, with the smallest ``k`` such that ``facet(n, k)`` reaches it."""
    n = _as_number(n)
    best = None
    for k in range(4):
        f = facet(n, k)
        if best is None or format_number(f) < format_number(best[0]):
            best = (f, k)
    return best


def display_energy(n) -> int:
    """Total strokes needed to draw ``n`` with OILU glyphs."""
    n = _as_number(n)
    return sum(stroke_count(glyph_of_digit(d)) for d in n.digits)


def sevenseg_energy(text: str) -> int:
    """Total lit segments needed to show ``text`` on a seven-segment display."""
    from .sevenseg import SEGMENTS

    n = parse_number(text)
    return sum(len(SEGMENTS[d]) for d in n.digits)
