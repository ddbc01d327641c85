"""Eulerian degree-splitting partition and the recursive slack coloring.

The partition alternates edges along Euler circuits (odd-degree vertices
paired through a virtual super-vertex), so each side's maximum degree lands
in [floor(Delta/2), ceil(Delta/2)] and per-vertex degrees split within one
of each other, except in a component whose degrees are all even and whose
edge count is odd, where that is impossible (see the census in the tests).

The slack coloring recurses on the partition while the working degree stays
above Delta/2^(l-3)+1 (d in [2^l, 2^(l+1))) and colors the leaf subgraphs
with the classical driver on contiguous disjoint palette windows, staying
within Delta+d colors overall.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import PartialColoring, new_coloring
from .errors import ColoringError
from .graph import Graph
from .vizing import color_all_vizing


@dataclass
class Partition:
    """Per-edge binary side labels inducing edge-disjoint G1, G2."""

    graph: Graph
    side: np.ndarray

    def edge_ids(self, which: int) -> np.ndarray:
        return np.flatnonzero(self.side == which)

    def subgraphs(self):
        """(G1, orig_ids1), (G2, orig_ids2) on the same vertex set."""
        return (self.graph.subgraph_from_edges(self.edge_ids(0)),
                self.graph.subgraph_from_edges(self.edge_ids(1)))

    def side_degrees(self, which: int) -> np.ndarray:
        g = self.graph
        deg = np.zeros(g.n, dtype=np.int64)
        ids = self.edge_ids(which)
        np.add.at(deg, g.edge_u[ids], 1)
        np.add.at(deg, g.edge_v[ids], 1)
        return deg


def euler_partition(g: Graph) -> Partition:
    """Split g into two edge-disjoint subgraphs with halved max degrees."""
    from . import _core
    side = _core.euler_split(g.n, g.m, g.edge_u, g.edge_v)
    return Partition(g, side)


def slack_color(g: Graph, d: int, metrics=None, backend=None) -> PartialColoring:
    """Complete proper coloring of g with at most Delta+d distinct colors."""
    delta = g.max_degree
    if not 1 <= d < max(delta, 2):
        raise ColoringError(f"slack d={d} outside [1, Delta)")
    l = d.bit_length() - 1  # d in [2^l, 2^(l+1))
    # leaves get contiguous palette windows in discovery (DFS) order
    leaves = []

    def recurse(sub: Graph, orig_ids: np.ndarray, depth: int):
        if depth > 40:
            raise ColoringError("slack recursion too deep")
        delta0 = sub.max_degree
        if l >= 4 and delta0 * (1 << (l - 3)) >= delta + (1 << (l - 3)):
            # split while Delta0 >= Delta / 2^(l-3) + 1
            part = euler_partition(sub)
            (g1, ids1), (g2, ids2) = part.subgraphs()
            recurse(g1, orig_ids[ids1], depth + 1)
            recurse(g2, orig_ids[ids2], depth + 1)
        else:
            leaves.append((sub, orig_ids, depth))

    recurse(g, np.arange(g.m, dtype=np.int64), 0)

    offset = 0
    palette_needed = 0
    assignments = np.zeros(g.m, dtype=np.int64)
    max_depth = 0
    for sub, orig_ids, depth in leaves:
        max_depth = max(max_depth, depth)
        leaf = color_all_vizing(sub, backend=backend)
        if metrics is not None:
            metrics.add_cost(leaf.mutations)
        cols = leaf.edge_colors().astype(np.int64)
        assignments[orig_ids] = cols + offset
        offset += max(1, sub.max_degree + 1)
    palette_needed = offset

    merged = new_coloring(g, max(1, palette_needed), backend=backend)
    merged.core.import_colors(assignments)
    if metrics is not None:
        metrics.combine_stats.append({
            "op": "slack",
            "leaves": len(leaves),
            "depth": max_depth,
            "palette": palette_needed,
            "bound": delta + d,
        })
    return merged
