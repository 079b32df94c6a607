import json

import pytest
from hypothesis import given, strategies as st

from oilu.errors import InvalidDigit, OddLength, UnknownPair
from oilu.numbers import format_number, parse_number
from oilu.sevenseg import (
    SEGMENTS, SplitPair, Strategy, join_pair, merge_number, raw_halves, split_digit, split_number,
    split_table,
)
from oilu.symbolic import EXTRA, Side, SideSet, classify_side_set

T, B, L, R = Side.TOP, Side.BOTTOM, Side.LEFT, Side.RIGHT
COMBOS = [(s, b) for s in Strategy for b in (10, 16)]


def test_segment_table():
    assert len(SEGMENTS) == 16
    assert sum(len(SEGMENTS[d]) for d in range(10)) == 49


@pytest.mark.parametrize(
    "d, s, upper, lower",
    [
        (8, "a", {T, L, R, B}, {T, L, R, B}),
        (1, "a", {R}, {R}),
        (4, "c", {L, R}, {T, R}),
        (4, "b", {L, R, B}, {R}),
    ],
)
def test_raw_halves(d, s, upper, lower):
    assert raw_halves(d, s) == (SideSet(frozenset(upper)), SideSet(frozenset(lower)))


def test_strategy_a_has_no_extra():
    for d in range(16):
        assert EXTRA not in [classify_side_set(h) for h in raw_halves(d, Strategy.A)]


@pytest.mark.parametrize(
    "d, s, expected",
    [
        (8, "a", SplitPair(0, 0)),
        (4, "c", SplitPair(3, 6, replaced=True)),
        (0, "a", SplitPair(7, 3)),
        (11, "c", SplitPair(2, 0, replaced=True)),
        (13, "c", SplitPair(4, 0, replaced=True)),
    ],
)
def test_split_digit(d, s, expected):
    assert split_digit(d, s) == expected


def test_split_table_hex_a():
    got = [p.pair for p in split_table("a", 16)]
    assert got == [
        (7, 3), (1, 1), (5, 9), (5, 5), (3, 6), (9, 5), (9, 0), (6, 1),
        (0, 0), (0, 5), (0, 7), (2, 0), (8, 2), (4, 0), (9, 9), (9, 8),
    ]


def test_strategy_examples():
    assert split_table("b", 10)[4].pair == (3, 1)
    assert split_table("c", 10)[2].pair == (6, 9)


@pytest.mark.parametrize("s, base", COMBOS)
def test_tables_match_oracle(oracle, goldens_dir, s, base):
    frozen = json.loads((goldens_dir / "oracle.json").read_text())["tables"][f"{s.value}{base}"]
    live = oracle.table(s.value, base)
    assert live == frozen
    got = [{"digit": d, "upper": p.upper, "lower": p.lower, "replaced": p.replaced} for d, p in enumerate(split_table(s, base))]
    assert got == frozen


@pytest.mark.parametrize("s, base", COMBOS)
def test_tables_injective_and_joinable(s, base):
    table = split_table(s, base)
    assert len({p.pair for p in table}) == base
    for d, p in enumerate(table):
        assert join_pair(p.pair, s, base) == d


def test_join_examples():
    assert join_pair((0, 0), "a", 10) == 8
    assert join_pair((7, 3), "a", 10) == 0
    with pytest.raises(UnknownPair):
        join_pair((2, 2), "a", 10)


def test_split_and_merge_examples():
    assert format_number(split_number("8", "a")) == "00"
    assert format_number(split_number("31", "a")) == "5511"
    assert merge_number(parse_number("7373"), "a", 10) == "00"
    assert merge_number("0720", "a", 16) == "AB"
    assert format_number(split_number("ab", "a", 16)) == format_number(split_number("AB", "a", 16))


def test_split_errors():
    with pytest.raises(InvalidDigit) as info:
        split_number("1A", "a", 10)
    assert info.value.position == 1
    with pytest.raises(InvalidDigit):
        split_digit(10, "a", 10)
    with pytest.raises(ValueError):
        Strategy.parse("d")


def test_merge_errors():
    with pytest.raises(OddLength):
        merge_number("737", "a", 10)
    with pytest.raises(UnknownPair) as info:
        merge_number("7322", "a", 10)
    assert info.value.position == 2


@pytest.mark.parametrize("s, base", COMBOS)
@given(data=st.data())
def test_number_round_trip(s, base, data):
    alphabet = "0123456789ABCDEF"[:base]
    t = data.draw(st.text(alphabet=alphabet, min_size=1, max_size=16))
    n = split_number(t, s, base)
    assert len(n) == 2 * len(t)
    assert merge_number(n, s, base) == t
