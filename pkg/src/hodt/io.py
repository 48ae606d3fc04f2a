"""Point-set text files.

One point per line as two whitespace-separated decimals; lines starting
with '#' are comments. Coordinates are written with 17 significant digits,
which round-trips every double exactly.
"""
from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Iterable, Union

import numpy as np

__all__ = ["HEADER", "format_points", "parse_points", "read_points", "write_points", "points_digest"]

HEADER = "# hodt-points v1"
PathLike = Union[str, Path]


def format_points(points, comments: Iterable[str] = ()) -> str:
    pts = np.asarray(points, dtype=float)
    lines = [HEADER] + [f"# {c}" for c in comments]
    lines += [f"{x:.17g} {y:.17g}" for x, y in pts.tolist()]
    return "\n".join(lines) + "\n"


def parse_points(text: str) -> np.ndarray:
    """Parse the point format; raises ValueError with the line number on bad input."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two coordinates, got {len(parts)} fields")
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: not a number: {s!r}") from None
        if not (np.isfinite(x) and np.isfinite(y)):
            raise ValueError(f"line {lineno}: coordinates must be finite")
        rows.append((x, y))
    return np.array(rows, dtype=float).reshape(-1, 2)


def read_points(path: PathLike) -> np.ndarray:
    return parse_points(Path(path).read_text(encoding="utf-8"))


def write_points(path: PathLike, points, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_points(points, comments), encoding="utf-8")


def points_digest(points) -> str:
    """SHA-256 of the canonical serialization, independent of comments in the source file."""
    return "sha256:" + hashlib.sha256(format_points(points).encode("ascii")).hexdigest()
