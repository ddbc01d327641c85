"""Alternating {x,y} paths: tracing, flipping, and the length census."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import PartialColoring
from .errors import ColoringError


@dataclass
class AltPath:
    """A traced maximal {x,y}-alternating path, or a truncated prefix.

    `vertices` has one more entry than `edges`.  When `truncated` is set the
    prefix has cap+1 edges, enough to witness that the full path is longer
    than the cap.  An empty path (start missing both colors) has one vertex
    and no edges.
    """

    x: int
    y: int
    vertices: np.ndarray
    edges: np.ndarray
    truncated: bool

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def start(self) -> int:
        return int(self.vertices[0])

    @property
    def end(self) -> int:
        return int(self.vertices[-1])


def trace_path(c: PartialColoring, start: int, x: int, y: int, cap=None) -> AltPath:
    """Trace the maximal {x,y}-path from `start` (must miss x or y).

    With a finite cap, tracing stops after cap+1 edges and marks the result
    truncated.  Cost O(min(path length, cap)).
    """
    verts, edges, truncated = c.core.trace_path(start, x, y,
                                                -1 if cap is None else cap)
    return AltPath(x, y, verts, edges, truncated)


def flip_path(c: PartialColoring, p: AltPath) -> None:
    """Exchange colors x and y along the path (journaled, properness-safe)."""
    if p.truncated:
        raise ColoringError("cannot flip a truncated path")
    c.core.flip_path(p.vertices, p.edges, p.x, p.y)


def path_length_census(c: PartialColoring, x: int) -> np.ndarray:
    """Total length L_{x,y} of all {x,y}-paths with >= 2 edges, per color y.

    Walks every {x,y} component containing a y-colored edge; cycles and
    length-1 paths are excluded.  Worst case O(m * Delta) (an x-colored edge
    may be traversed once per adjacent color pair); this is a test and
    metrics oracle, not part of any algorithm's hot path.
    """
    g = c.graph
    K = c.palette_size
    core = c.core
    out = np.zeros(K + 1, dtype=np.int64)
    colors = c.edge_colors()
    seen = np.zeros(g.m, dtype=bool)

    for e0 in range(g.m):
        y = int(colors[e0])
        if y == 0 or y == x or seen[e0]:
            continue
        # walk both directions from e0 within its {x,y} component
        a, b = g.endpoints(e0)
        seen[e0] = True
        length = 1
        is_cycle = False
        for start in (a, b):
            v = start
            col = x
            while True:
                e = core.colored_edge_via(v, col)
                if e < 0:
                    break
                if e == e0 or (int(colors[e]) == y and seen[e]):
                    is_cycle = True
                    break
                if int(colors[e]) == y:
                    seen[e] = True
                length += 1
                v = g.other_endpoint(e, v)
                col = y if col == x else x
            if is_cycle:
                break
        if not is_cycle and length >= 2:
            out[y] += length
    return out
