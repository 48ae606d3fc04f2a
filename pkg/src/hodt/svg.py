"""Static SVG rendering of a point set and optional triangles."""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = ["render_svg"]


def render_svg(points, triangles: Optional[Iterable[Sequence[int]]] = None,
               highlight: Iterable[Sequence[int]] = (), size: int = 600) -> str:
    """SVG text with the points scaled to fit a ``size`` square; y points up."""
    pts = np.asarray(points, dtype=float)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = float(max(hi - lo)) or 1.0
    pad = 0.05 * size
    scale = (size - 2 * pad) / span

    def xy(i):
        x, y = pts[i]
        return pad + (x - lo[0]) * scale, size - pad - (y - lo[1]) * scale

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">', '<rect width="100%" height="100%" fill="white"/>']
    edges = set()
    for t in triangles or ():
        a, b, c = (int(v) for v in t)
        edges |= {tuple(sorted(e)) for e in ((a, b), (b, c), (c, a))}
    for a, b in sorted(edges):
        (x1, y1), (x2, y2) = xy(a), xy(b)
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="#555" stroke-width="1"/>')
    for a, b in highlight:
        (x1, y1), (x2, y2) = xy(int(a)), xy(int(b))
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="#c22" '
                   'stroke-width="1.5" stroke-dasharray="4 3"/>')
    for i in range(len(pts)):
        x, y = xy(i)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5" fill="#1f4e9c"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
