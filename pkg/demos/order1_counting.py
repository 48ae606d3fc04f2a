"""Count order-1 Delaunay triangulations of a random point set two ways.

The fast count flips independent quadrilaterals; the slow count enumerates
every triangulation. On small sets they must agree.

    python3 demos/order1_counting.py --n 9 --seed 4
"""
import argparse

from hodt.census import enumerate_all_triangulations
from hodt.generators import gen_uniform
from hodt.quads import count_order1, flippable_quads


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--seed", type=int, default=4)
    args = ap.parse_args()

    pts = gen_uniform(args.n, args.seed)
    quads = flippable_quads(pts)
    print(f"{args.n} uniform points, seed {args.seed}")
    for q in quads:
        print(f"  flippable quad {q.quad}: Delaunay diagonal {q.delaunay_diagonal}, "
              f"alternative {q.alternative_diagonal}")
    q, total = count_order1(pts)
    print(f"q = {q}, so there are 2^{q} = {total} order-1 triangulations")

    census = enumerate_all_triangulations(pts)
    print(f"full census: {census.total} triangulations, orders {census.counts}")
    print(f"census count with order <= 1: {census.count_at_most(1)}")


if __name__ == "__main__":
    main()
