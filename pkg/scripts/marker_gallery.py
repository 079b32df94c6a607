"""Render every facet of a marker id as SVG + PGM and check each decodes back.

    python scripts/marker_gallery.py 3172 --out gallery/
"""
import argparse
from pathlib import Path

from oilu import markers
from oilu.numbers import format_number, parse_number, related_set


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("id")
    ap.add_argument("--out", default="gallery")
    ap.add_argument("--size", type=int, default=256)
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    n = parse_number(args.id)
    for member in sorted(related_set(n).members):
        name = format_number(member)
        scene = markers.layout_marker(member)
        (out / f"{name}.svg").write_text(markers.scene_to_svg(scene, args.size))
        img = markers.rasterize(scene, args.size)
        markers.write_pgm(img, out / f"{name}.pgm")
        back = format_number(markers.decode_marker(img, len(member)))
        canon, k = markers.canonical_id(member)
        print(f"{name}: decoded {back}  canonical {format_number(canon)} (k={k})")


if __name__ == "__main__":
    main()
