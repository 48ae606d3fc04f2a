"""Certify a lower bound on order-2 triangulations and check it by census.

Useful-2 edges with triangle-disjoint hulls can be inserted independently,
so s picked edges give 2^s - 1 distinct order-2 triangulations.

    python3 demos/lower_bound.py --n 11 --seed 3
"""
import argparse
import itertools

from hodt.census import enumerate_all_triangulations
from hodt.delaunay import delaunay_triangulate
from hodt.generators import gen_uniform
from hodt.hulls import construct_orderk, select_disjoint_hulls
from hodt.orders import triangulation_order, useful_k_edges


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=11)
    ap.add_argument("--seed", type=int, default=3)
    args = ap.parse_args()

    pts = gen_uniform(args.n, args.seed)
    T = delaunay_triangulate(pts)
    edges = useful_k_edges(pts, 2, T=T)
    cert = select_disjoint_hulls(edges, T, 2)
    print(f"useful-2 edges: {[e for e, _ in edges]}")
    for e in cert.selected:
        h = cert.hulls[e]
        print(f"  picked {e}: hull of {len(h.triangles)} triangles, boundary {h.boundary}")
    print(f"certified: at least {cert.bound} order-2 triangulations")

    for subset in itertools.combinations(cert.selected, 1):
        R = construct_orderk(T, cert, subset)
        print(f"  inserting {subset[0]} gives a triangulation of order {triangulation_order(R)}")

    census = enumerate_all_triangulations(pts)
    print(f"census: {census.count_exactly(2)} triangulations of order exactly 2")


if __name__ == "__main__":
    main()
