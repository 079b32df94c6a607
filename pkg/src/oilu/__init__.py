"""OILU line-based numeral system: glyph algebra, seven-segment splitting,
series generation and concentric fiducial markers."""

from .symbolic import EXTRA, Cup, Corner, Glyph, Kind, Side, SideSet
from .numbers import OiluNumber, canonical, facet, format_number, parse_number, related_set
from .sevenseg import SplitPair, Strategy, join_pair, merge_number, split_digit, split_number, split_table

__all__ = [
    "EXTRA", "Cup", "Corner", "Glyph", "Kind", "Side", "SideSet",
    "OiluNumber", "canonical", "facet", "format_number", "parse_number", "related_set",
    "SplitPair", "Strategy", "join_pair", "merge_number", "split_digit", "split_number",
    "split_table",
]
