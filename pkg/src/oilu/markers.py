"""Concentric OILU fiducial markers.

A marker id of K digits is drawn as K nested squares, outermost digit on the
outside.  Level ``i`` sits on a square of half-size ``r_i = R0 * (K - i) / K``
around the canvas center, with strokes ``w = 0.4 * R0 / K`` thick.  The bar is
drawn as two short vertical ticks at the top and bottom of its ring so that it
never crosses the inner levels; each tick reaches from the outer edge of the
ring band to ``tick = 0.8 * R0 / K`` inside the ring line.

Coordinates are unit-square fractions with y pointing down (top row first),
matching both SVG and raster row order.

Decoding is plain point sampling on a clean, upright or quarter-turned raster;
there is no detection or rectification.  ``np.rot90`` turns an image a quarter
counterclockwise, and decoding the result yields ``facet(id, 1)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import BadImage, SizeTooSmall, UnreadableLevel
from .numbers import OiluNumber, _as_number, canonical
from .symbolic import EXTRA, Kind, Side, SideSet, classify_side_set, digit_of_glyph, glyph_of_digit

OUTER_HALF_SIZE = 0.45
MAX_LEVELS = 8
MIN_SIZE = 64
THRESHOLD = 128
# fraction of r_i, along the side, of each of the two side samples
SIDE_SAMPLE_OFFSET = 0.4


@dataclass(frozen=True)
class MarkerLayout:
    levels: int
    outer: float = OUTER_HALF_SIZE

    def __post_init__(self):
        if not 1 <= self.levels <= MAX_LEVELS:
            raise ValueError(f"marker needs 1..{MAX_LEVELS} levels, got {self.levels}")

    @property
    def stroke(self) -> float:
        return 0.4 * self.outer / self.levels

    @property
    def tick(self) -> float:
        return 0.8 * self.outer / self.levels

    def radius(self, i: int) -> float:
        return self.outer * (self.levels - i) / self.levels


@dataclass(frozen=True)
class Rect:
    cx: float
    cy: float
    width: float
    height: float

    @property
    def bounds(self):
        return (
            self.cx - self.width / 2,
            self.cy - self.height / 2,
            self.cx + self.width / 2,
            self.cy + self.height / 2,
        )


@dataclass(frozen=True)
class MarkerScene:
    strokes: tuple = ()


@dataclass(frozen=True)
class RasterImage:
    width: int
    height: int
    pixels: bytes

    def __post_init__(self):
        if len(self.pixels) != self.width * self.height:
            raise BadImage(f"expected {self.width * self.height} pixels, got {len(self.pixels)}")

    @classmethod
    def from_array(cls, arr) -> "RasterImage":
        arr = np.ascontiguousarray(arr, dtype=np.uint8)
        h, w = arr.shape
        return cls(w, h, arr.tobytes())

    def to_array(self) -> np.ndarray:
        return np.frombuffer(self.pixels, dtype=np.uint8).reshape(self.height, self.width)


def _marker_id(id_) -> OiluNumber:
    n = _as_number(id_)
    if not 1 <= len(n) <= MAX_LEVELS:
        raise ValueError(f"marker ids have 1..{MAX_LEVELS} digits, got {len(n)}")
    return n


def _side_rect(side: Side, r: float, w: float) -> Rect:
    full = 2 * r + w
    if side is Side.TOP:
        return Rect(0.5, 0.5 - r, full, w)
    if side is Side.BOTTOM:
        return Rect(0.5, 0.5 + r, full, w)
    if side is Side.LEFT:
        return Rect(0.5 - r, 0.5, w, full)
    return Rect(0.5 + r, 0.5, w, full)


# sides drawn for each oriented glyph, derived from the classifier's inverse
def _glyph_sides(glyph) -> list[Side]:
    for mask in range(16):
        sides = [s for s in Side if mask >> s & 1]
        if classify_side_set(SideSet(frozenset(sides))) == glyph and len(sides) > 1:
            return sorted(sides)
    raise AssertionError(glyph)


def layout_marker(id_) -> MarkerScene:
    n = _marker_id(id_)
    lay = MarkerLayout(len(n))
    w, tick = lay.stroke, lay.tick
    strokes = []
    for i, d in enumerate(n.digits):
        r = lay.radius(i)
        g = glyph_of_digit(d)
        if g.kind is Kind.BAR:
            # ticks cover the ring band like side strokes: from r + w/2 in to r - tick
            span = tick + w / 2
            strokes.append(Rect(0.5, 0.5 - r - w / 2 + span / 2, w, span))
            strokes.append(Rect(0.5, 0.5 + r + w / 2 - span / 2, w, span))
        else:
            strokes.extend(_side_rect(s, r, w) for s in _glyph_sides(g))
    return MarkerScene(tuple(_clip(r) for r in strokes))


def _clip(rect: Rect) -> Rect:
    # single-level markers are thick enough to poke past the canvas edge
    x0, y0, x1, y1 = rect.bounds
    x0, y0, x1, y1 = max(x0, 0.0), max(y0, 0.0), min(x1, 1.0), min(y1, 1.0)
    return Rect((x0 + x1) / 2, (y0 + y1) / 2, x1 - x0, y1 - y0)


def _check_size(size: int) -> None:
    if size < MIN_SIZE:
        raise SizeTooSmall(f"image size must be at least {MIN_SIZE} px, got {size}")


def scene_to_svg(scene: MarkerScene, size: int = 256) -> str:
    _check_size(size)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0.00" y="0.00" width="{size:.2f}" height="{size:.2f}" fill="#ffffff"/>',
    ]
    for rect in scene.strokes:
        x0, y0, _, _ = rect.bounds
        lines.append(
            f'<rect x="{x0 * size:.2f}" y="{y0 * size:.2f}" '
            f'width="{rect.width * size:.2f}" height="{rect.height * size:.2f}" fill="#000000"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def rasterize(scene: MarkerScene, size: int = 256) -> RasterImage:
    """Black wherever a pixel center falls inside a stroke (edges inclusive)."""
    _check_size(size)
    centers = (np.arange(size) + 0.5) / size
    img = np.full((size, size), 255, dtype=np.uint8)
    for rect in scene.strokes:
        x0, y0, x1, y1 = rect.bounds
        cols = (centers >= x0) & (centers <= x1)
        rows = (centers >= y0) & (centers <= y1)
        img[np.ix_(rows, cols)] = 0
    return RasterImage.from_array(img)


def rotate_image(img: RasterImage, k: int = 1) -> RasterImage:
    """Quarter turns counterclockwise, as displayed."""
    return RasterImage.from_array(np.rot90(img.to_array(), k))


def sample_points(levels: int, i: int) -> dict:
    """Unit-square sample coordinates used for level ``i``, keyed by what they probe."""
    r = MarkerLayout(levels).radius(i)
    o = SIDE_SAMPLE_OFFSET * r
    return {
        Side.TOP: [(0.5 - o, 0.5 - r), (0.5 + o, 0.5 - r)],
        Side.BOTTOM: [(0.5 - o, 0.5 + r), (0.5 + o, 0.5 + r)],
        Side.LEFT: [(0.5 - r, 0.5 - o), (0.5 - r, 0.5 + o)],
        Side.RIGHT: [(0.5 + r, 0.5 - o), (0.5 + r, 0.5 + o)],
        "vbar": [(0.5, 0.5 - r), (0.5, 0.5 + r)],
        "hbar": [(0.5 - r, 0.5), (0.5 + r, 0.5)],
    }


def decode_marker(img: RasterImage, levels: int) -> OiluNumber:
    """Read a K-level marker, outermost digit first.

    A bar drawn on a quarter-turned image shows up as horizontal ticks, so the
    center-bar probe checks both axes.
    """
    if img.width != img.height:
        raise BadImage(f"marker images are square, got {img.width}x{img.height}")
    if img.width < MIN_SIZE:
        raise BadImage(f"image size must be at least {MIN_SIZE} px, got {img.width}")
    if not 1 <= levels <= MAX_LEVELS:
        raise ValueError(f"levels must be in 1..{MAX_LEVELS}, got {levels}")
    arr = img.to_array()
    size = img.width

    def black(pt):
        x, y = pt
        px = min(int(x * size), size - 1)
        py = min(int(y * size), size - 1)
        return arr[py, px] < THRESHOLD

    digits = []
    for i in range(levels):
        pts = sample_points(levels, i)
        sides = frozenset(s for s in Side if all(black(p) for p in pts[s]))
        vbar = all(black(p) for p in pts["vbar"]) and not sides & {Side.TOP, Side.BOTTOM}
        hbar = all(black(p) for p in pts["hbar"]) and not sides & {Side.LEFT, Side.RIGHT}
        g = classify_side_set(SideSet(sides, vbar or hbar))
        if g is EXTRA:
            raise UnreadableLevel(i)
        digits.append(digit_of_glyph(g))
    return OiluNumber(tuple(digits))


def canonical_id(id_) -> tuple[OiluNumber, int]:
    return canonical(_marker_id(id_))


def write_pgm(img: RasterImage, path) -> None:
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    Path(path).write_bytes(header + img.pixels)


_PGM_TOKEN = re.compile(rb"(?:\s|#[^\n\r]*[\n\r])*(\S+)")


def read_pgm(path) -> RasterImage:
    """Read a binary (P5, maxval 255) PGM; header comments are skipped."""
    data = Path(path).read_bytes()
    pos = 0
    fields = []
    for _ in range(4):
        m = _PGM_TOKEN.match(data, pos)
        if not m:
            raise BadImage("truncated PGM header")
        fields.append(m.group(1))
        pos = m.end()
    magic, w, h, maxval = fields
    if magic != b"P5":
        raise BadImage(f"not a binary PGM (magic {magic!r})")
    try:
        w, h, maxval = int(w), int(h), int(maxval)
    except ValueError:
        raise BadImage("malformed PGM header") from None
    if maxval != 255:
        raise BadImage(f"only maxval 255 is supported, got {maxval}")
    # exactly one whitespace byte separates the header from the raster
    pos += 1
    pixels = data[pos : pos + w * h]
    if len(pixels) != w * h:
        raise BadImage("truncated PGM raster")
    return RasterImage(w, h, pixels)
