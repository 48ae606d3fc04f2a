"""Build the two extremal point sets and audit them with a full census.

maxfodt(n) has n - 3 flippable quadrilaterals, the most possible.
only1(n) has the Delaunay triangulation as its only order-k triangulation
for every k up to n // 3 - 1.

    python3 demos/extremal_sets.py --svg-dir /tmp
"""
import argparse
from pathlib import Path

from hodt.census import enumerate_all_triangulations
from hodt.delaunay import delaunay_triangulate
from hodt.generators import gen_maxfodt, only1_layout
from hodt.quads import count_order1
from hodt.svg import render_svg


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--svg-dir", help="write pictures of both sets here")
    args = ap.parse_args()

    for n in (8, 12, 16, 20):
        q, total = count_order1(gen_maxfodt(n))
        print(f"maxfodt({n}): q = {q} (n - 3 = {n - 3}), {total} order-1 triangulations")
    census = enumerate_all_triangulations(gen_maxfodt(8))
    print(f"census of maxfodt(8): {census.count_at_most(1)} triangulations of order <= 1")

    lay = only1_layout(9, k=2)
    for name, ok in lay.property_checks().items():
        print(f"only1(9): {name}: {ok}")
    census = enumerate_all_triangulations(lay.points)
    print(f"census of only1(9): orders {census.counts}; order <= 2 count = {census.count_at_most(2)}")

    if args.svg_dir:
        out = Path(args.svg_dir)
        for name, pts in (("maxfodt8", gen_maxfodt(8)), ("only1_9", lay.points)):
            T = delaunay_triangulate(pts)
            (out / f"{name}.svg").write_text(render_svg(pts, T.triangle_list()))
            print(f"wrote {out / name}.svg")


if __name__ == "__main__":
    main()
