"""Mutable partial edge coloring over palette {1..K} with journaling.

`PartialColoring` is a thin wrapper over the selected kernel backend; it owns
the incremental structures (color-indexed neighbor lookup, missing-color
bitsets, designated colors, journal).  The full verification routines here
(`is_proper`, `uses_at_most`, `count_uncolored`) deliberately bypass the
kernel's incremental state and recompute everything from the raw edge colors
with numpy, so they can serve as an independent check of kernel outputs.
"""

from __future__ import annotations

import numpy as np

from .errors import ColoringError
from .graph import Graph


def _backend():
    from . import _core
    return _core


class PartialColoring:
    """Partial edge coloring of a graph; colors 1..palette_size, 0 = uncolored."""

    def __init__(self, graph: Graph, palette_size: int, backend=None):
        self.graph = graph
        self.palette_size = int(palette_size)
        core_mod = backend if backend is not None else _backend()
        self.core = core_mod.ColoringCore(graph, self.palette_size)

    # -- basic ops (journaled) --------------------------------------------

    def assign(self, e: int, y: int) -> None:
        self.core.assign(e, y)

    def unassign(self, e: int) -> None:
        self.core.unassign(e)

    def recolor(self, e: int, y: int) -> None:
        self.core.recolor(e, y)

    def color_of(self, e: int) -> int:
        return self.core.color_of(e)

    def colored_neighbor_via(self, v: int, y: int):
        """Neighbor across the y-colored edge at v, or None."""
        w = self.core.colored_neighbor_via(v, y)
        return None if w < 0 else w

    def missing_colors(self, v: int) -> set[int]:
        return set(int(c) for c in self.core.miss_list(v))

    def designated_color(self, v: int) -> int:
        return self.core.designated(v)

    # -- journal ------------------------------------------------------------

    def journal_mark(self) -> int:
        return self.core.journal_mark()

    def journal_entries(self, since: int = 0):
        """(edges, old_colors, new_colors) arrays from `since` to the end."""
        return self.core.journal_entries(since)

    def journal_release(self, upto: int) -> None:
        self.core.journal_release(upto)

    def rollback(self, mark: int) -> None:
        self.core.rollback(mark)

    @property
    def mutations(self) -> int:
        """Monotone count of elementary color writes (incl. rollback undo)."""
        return self.core.mutations()

    # -- full-scan verification (independent of incremental state) ----------

    def edge_colors(self) -> np.ndarray:
        return self.core.edge_colors()

    def count_uncolored(self) -> int:
        return int(np.count_nonzero(self.edge_colors() == 0))

    def is_proper(self) -> bool:
        """O(m) properness check recomputed from raw edge colors."""
        g = self.graph
        colors = self.edge_colors()
        if colors.size and (colors.min() < 0 or colors.max() > self.palette_size):
            return False
        ends = np.concatenate([g.edge_u, g.edge_v]).astype(np.int64)
        cols = np.concatenate([colors, colors]).astype(np.int64)
        keep = cols != 0
        ends, cols = ends[keep], cols[keep]
        if not ends.size:
            return True
        key = ends * (self.palette_size + 1) + cols
        key.sort()
        return bool(np.all(np.diff(key) != 0))

    def uses_at_most(self, k: int) -> bool:
        colors = self.edge_colors()
        used = np.unique(colors[colors != 0])
        return len(used) <= k

    def distinct_colors(self) -> int:
        colors = self.edge_colors()
        return int(np.unique(colors[colors != 0]).size)

    def is_complete_proper(self, max_colors=None) -> bool:
        if max_colors is None:
            max_colors = self.graph.max_degree + 1
        return (self.count_uncolored() == 0 and self.is_proper()
                and self.uses_at_most(max_colors))

    def copy_state(self) -> np.ndarray:
        return self.edge_colors()

    def snapshot(self) -> tuple:
        """Full logical state for bit-exactness checks in tests."""
        core = self.core
        n = self.graph.n
        return (tuple(core.edge_colors().tolist()),
                tuple(core.designated(v) for v in range(n)),
                tuple(tuple(core.miss_list(v).tolist()) for v in range(n)))


def new_coloring(graph: Graph, palette_size=None, backend=None) -> PartialColoring:
    """Fresh all-uncolored coloring; default palette is Delta+1 (min 1)."""
    if palette_size is None:
        palette_size = max(1, graph.max_degree + 1)
    return PartialColoring(graph, palette_size, backend=backend)


# -- text format: one line "<u> <v> <color>" per edge in edge-id order ------

def write_coloring(c: PartialColoring, path) -> None:
    g = c.graph
    colors = c.edge_colors()
    with open(path, "w") as fh:
        for e in range(g.m):
            fh.write(f"{g.edge_u[e]} {g.edge_v[e]} {colors[e]}\n")


def read_coloring(graph: Graph, path, palette_size=None) -> PartialColoring:
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            u, v, col = map(int, line.split())
            rows.append((u, v, col))
    if len(rows) != graph.m:
        raise ColoringError(
            f"coloring file has {len(rows)} lines for a graph with {graph.m} edges")
    if palette_size is None:
        palette_size = max([graph.max_degree + 1] + [col for _, _, col in rows])
    out = PartialColoring(graph, palette_size)
    for e, (u, v, col) in enumerate(rows):
        gu, gv = graph.endpoints(e)
        if {u, v} != {gu, gv}:
            raise ColoringError(f"line {e + 1} endpoints do not match edge {e}")
        if col:
            out.assign(e, col)
    return out
