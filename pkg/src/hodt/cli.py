"""Command-line front end.

Subcommands: generate, analyze, enumerate, expect, integrate. Every
command except generate prints a JSON report with a fixed key order; the
same inputs, flags and seed give byte-identical output unless --timing is
set.

Exit codes: 0 success, 2 bad input or parameters, 3 degenerate input,
4 cap exceeded, 5 numerical non-convergence.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np

from . import __version__
from .census import enumerate_all_triangulations
from .delaunay import delaunay_triangulate
from .errors import CapExceededError, DegenerateInputError, NonConvergenceError
from .expectation import (
    IntegralConfig,
    compute_d1,
    expected_count_bound,
    integrate_dk,
    monte_carlo_uk,
)
from .generators import GeneratorSpec, audit_general_position
from .hulls import edge_hull, select_disjoint_hulls
from .io import format_points, points_digest, read_points, write_points
from .orders import triangulation_order, useful_edges
from .quads import enumerate_order1, flippable_quads
from .svg import render_svg

EXIT_OK, EXIT_PARAM, EXIT_DEGENERATE, EXIT_CAP, EXIT_NONCONVERGENCE = 0, 2, 3, 4, 5
CENSUS_CAP = 12
ORDER1_CAP = 30


class ParameterError(ValueError):
    pass


def _report(command: str, digest: Optional[str], parameters: dict, results: dict,
            timing: Optional[float], seed: Optional[int]) -> dict:
    return {
        "command": command,
        "input_digest": digest,
        "parameters": parameters,
        "results": results,
        "timing": None if timing is None else {"seconds": round(timing, 6)},
        "tool_version": __version__,
        "seed": seed,
    }


def _params_digest(params: dict) -> str:
    text = json.dumps(params, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def _cap(args, default: int) -> int:
    cap = default if args.cap is None else args.cap
    if cap < 1:
        raise ParameterError("--cap must be positive")
    if cap > default and not args.unsafe_cap:
        raise ParameterError(f"--cap above the default of {default} requires --unsafe-cap")
    return cap


def _emit(report: dict, out: Optional[str]) -> None:
    text = json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands

def cmd_generate(args) -> int:
    spec = GeneratorSpec(args.kind, args.n, args.k, args.seed, args.epsilon)
    try:
        spec.validate()
    except ValueError as exc:
        raise ParameterError(str(exc)) from None
    pts = spec.generate()
    T = delaunay_triangulate(pts)
    audit_general_position(pts, seed=args.seed, T=T)
    q = len(flippable_quads(T))
    lines = [f"points={len(pts)}", f"flippable_quads={q}", f"hull_size={len(T.hull_vertices())}",
             "general_position=ok"]
    if args.kind == "only1":
        K = args.n // 3 - 1
        lines.append(f"useful_k_edges(k≤{K})={len(useful_edges(T, K))}")
    comments = [f"kind={args.kind} n={args.n} k={args.k} seed={args.seed} epsilon={args.epsilon}"]
    if args.out:
        write_points(args.out, pts, comments)
    else:
        sys.stdout.write(format_points(pts, comments))
    if args.svg:
        Path(args.svg).write_text(render_svg(pts, T.triangle_list()), encoding="utf-8")
    for line in lines:
        print(line, file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def _load(path: str) -> np.ndarray:
    try:
        pts = read_points(path)
    except OSError as exc:
        raise ParameterError(f"cannot read {path}: {exc.strerror}") from None
    if len(pts) < 3:
        raise ParameterError("need at least 3 points")
    return pts


def cmd_analyze(args) -> int:
    t0 = time.perf_counter()
    if args.k < 1:
        raise ParameterError("--k must be at least 1")
    pts = _load(args.input)
    T = delaunay_triangulate(pts)
    T.validate()
    audit_general_position(pts, T=T)
    quads = flippable_quads(T)
    found = useful_edges(T, args.k, mode=args.mode)
    edges = sorted(found)
    exact_k = [e for e in edges if found[e].useful_order == args.k]
    hull_sizes = {f"{u}-{v}": edge_hull((u, v), T).n_vertices for u, v in edges}
    cert = select_disjoint_hulls(exact_k, T, args.k)
    results: Dict[str, object] = {
        "n": len(pts),
        "delaunay": {
            "triangles": len(T),
            "edges": len(T.edges()),
            "hull_size": len(T.hull_vertices()),
            "audit": "ok",
        },
        "flippable_quads": len(quads),
        "count_order1": 2 ** len(quads),
        "useful_edges": [
            {"edge": [u, v], "order": found[(u, v)].useful_order,
             "s1": found[(u, v)].s1, "s2": found[(u, v)].s2}
            for u, v in edges
        ],
        "hull_sizes": hull_sizes,
        "max_hull_size": max(hull_sizes.values(), default=0),
        "lower_bound_certificate": {
            "useful_exactly_k": len(exact_k),
            "selected": [list(e) for e in cert.selected],
            "C_k": cert.C_k,
        },
        "lower_bound": cert.bound,
    }
    if args.census:
        census = enumerate_all_triangulations(pts, cap=_cap(args, CENSUS_CAP))
        at_most = census.count_at_most(args.k)
        results["census"] = {
            "total": census.total,
            "R": {str(k): v for k, v in census.counts.items()},
            "at_most_k": at_most,
            "checks": {
                "count_order1": census.count_at_most(1) == 2 ** len(quads),
                "lower_bound": census.count_exactly(args.k) >= cert.bound,
            },
        }
    if args.svg:
        Path(args.svg).write_text(render_svg(pts, T.triangle_list(), highlight=edges), encoding="utf-8")
    params = {"input": Path(args.input).name, "k": args.k, "mode": args.mode, "census": args.census}
    elapsed = time.perf_counter() - t0 if args.timing else None
    _emit(_report("analyze", points_digest(pts), params, results, elapsed, None), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    t0 = time.perf_counter()
    pts = _load(args.input)
    items: List[dict] = []
    results: Dict[str, object] = {}
    if args.mode == "order1":
        cap = _cap(args, ORDER1_CAP)
        T = delaunay_triangulate(pts)
        for tri in enumerate_order1(T, cap=cap):
            items.append({"triangles": [list(t) for t in sorted(tri.triangle_set())],
                          "order": triangulation_order(tri)})
        results["count"] = len(items)
    else:
        census = enumerate_all_triangulations(pts, cap=_cap(args, CENSUS_CAP))
        for tris, order in zip(census.triangulations, census.orders):
            items.append({"triangles": [list(t) for t in tris], "order": order})
        results["count"] = census.total
        results["R"] = {str(k): v for k, v in census.counts.items()}
    if args.stream:
        with open(args.stream, "w", encoding="utf-8") as fh:
            for item in items:
                fh.write(json.dumps(item, separators=(",", ":")) + "\n")
    else:
        results["triangulations"] = items
    params = {"input": Path(args.input).name, "mode": args.mode, "cap": args.cap}
    elapsed = time.perf_counter() - t0 if args.timing else None
    _emit(_report("enumerate", points_digest(pts), params, results, elapsed, None), args.out)
    return EXIT_OK


def _parse_sizes(text: str) -> List[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise ParameterError(f"--sweep expects comma-separated integers, got {text!r}") from None
    if not sizes:
        raise ParameterError("--sweep is empty")
    return sizes


def cmd_expect(args) -> int:
    t0 = time.perf_counter()
    if args.k < 1 or args.trials < 1 or args.n < 10:
        raise ParameterError("need --n >= 10, --k >= 1 and --trials >= 1")
    consts = integrate_dk(args.k, IntegralConfig(tolerance=args.tolerance))
    bound = expected_count_bound(args.k, consts.d, consts.errors["d"])
    sizes = _parse_sizes(args.sweep) if args.sweep else [args.n]
    runs = []
    for n in sizes:
        rep = monte_carlo_uk(n, args.k, args.trials, args.seed, target=consts.d)
        runs.append(rep.to_dict())
    results = {
        "d_k": consts.d,
        "d_k_error": consts.errors["d"],
        "rho_k": bound.rho,
        "C_k": bound.C_k,
        "statement": bound.statement,
        "runs": runs,
    }
    if len(runs) > 1:
        results["trend"] = [{"n": r["n"], "abs_deviation": abs(r["deviation"])} for r in runs]
    params = {"n": sizes if args.sweep else args.n, "k": args.k, "trials": args.trials,
              "tolerance": args.tolerance}
    elapsed = time.perf_counter() - t0 if args.timing else None
    _emit(_report("expect", _params_digest(params), params, results, elapsed, args.seed), args.out)
    return EXIT_OK


def cmd_integrate(args) -> int:
    t0 = time.perf_counter()
    if args.k < 1:
        raise ParameterError("--k must be at least 1")
    config = IntegralConfig(tolerance=args.tolerance, method=args.method)
    params = {"k": args.k, "tolerance": args.tolerance, "method": args.method}
    try:
        consts = compute_d1(config=config) if args.k == 1 else integrate_dk(args.k, config)
    except NonConvergenceError as exc:
        results = {"partial": True, "message": str(exc), "partial_result": exc.partial}
        _emit(_report("integrate", _params_digest(params), params, results, None, None), args.out)
        raise
    bound = expected_count_bound(args.k, consts.d, consts.errors["d"])
    if args.k == 1:
        results = {"c1": consts.c1, "c2": consts.c2, "d1": consts.d, "rho1": consts.rho,
                   "errors": consts.errors, "statement": bound.statement}
    else:
        results = {"event1": consts.c1, "event2": consts.c2, "d_k": consts.d, "rho_k": consts.rho,
                   "C_k": bound.C_k, "errors": consts.errors, "statement": bound.statement}
    results["partial"] = False
    elapsed = time.perf_counter() - t0 if args.timing else None
    _emit(_report("integrate", _params_digest(params), params, results, elapsed, None), args.out)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hodt", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, caps=False):
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
        if caps:
            p.add_argument("--cap", type=int, help="size cap (lowering is always allowed)")
            p.add_argument("--unsafe-cap", action="store_true", help="allow --cap above the default")

    g = sub.add_parser("generate", help="write a generated point set")
    g.add_argument("--kind", required=True, choices=["only1", "maxfodt", "uniform"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, help="order for only1 (default 1)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--epsilon", type=float, help="perturbation as a fraction of the local feature size")
    g.add_argument("--out", help="point file to write (stdout if omitted)")
    g.add_argument("--svg", help="also render the Delaunay triangulation to this SVG file")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="order-k analysis of a point file")
    a.add_argument("input")
    a.add_argument("--k", type=int, default=1)
    a.add_argument("--mode", choices=["auto", "pruned", "exhaustive"], default="auto")
    a.add_argument("--census", action="store_true", help="cross-check against full enumeration")
    a.add_argument("--svg", help="render Delaunay edges plus useful edges (dashed)")
    common(a, caps=True)
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="list order-1 triangulations or all triangulations")
    e.add_argument("input")
    e.add_argument("--mode", choices=["order1", "census"], default="order1")
    e.add_argument("--stream", help="write one JSON line per triangulation here instead of the report")
    common(e, caps=True)
    e.set_defaults(func=cmd_enumerate)

    x = sub.add_parser("expect", help="Monte Carlo density of useful-k edges")
    x.add_argument("--n", type=int, default=2000)
    x.add_argument("--k", type=int, default=1)
    x.add_argument("--trials", type=int, default=20)
    x.add_argument("--seed", type=int, default=0)
    x.add_argument("--sweep", help="comma-separated sizes, overrides --n")
    x.add_argument("--tolerance", type=float, default=1e-9)
    common(x)
    x.set_defaults(func=cmd_expect)

    i = sub.add_parser("integrate", help="asymptotic constants by quadrature")
    i.add_argument("--k", type=int, default=1)
    i.add_argument("--tolerance", type=float, default=1e-9)
    i.add_argument("--method", choices=["reduced", "direct"], default="reduced")
    common(i)
    i.set_defaults(func=cmd_integrate)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegenerateInputError as exc:
        print(f"error: degenerate input: {exc} (indices {list(exc.indices)})", file=sys.stderr)
        return EXIT_DEGENERATE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())
