"""Classical single-edge color extension (fan + alternating path) and the
full-graph driver.  Every other algorithm in the package falls back on these.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _core_py
from .coloring import PartialColoring, new_coloring
from .errors import ColoringError
from .graph import Graph

EXTENDED = "extended"
TRUNCATED = "truncated-and-rolled-back"


@dataclass
class Fan:
    """Vizing fan around `center`: sequence[0] is the uncolored client.

    Exactly one terminal case holds: `shared_color` > 0 (a color missing at
    both the center and the last client) or `foldback_index` >= 1 (the next
    wanted color already sits on fan edge j).
    """

    center: int
    sequence: np.ndarray
    edges: np.ndarray
    shared_color: int = 0
    foldback_index: int = -1

    @property
    def terminal_case(self) -> str:
        return "shared" if self.shared_color else "foldback"


def build_fan(c: PartialColoring, u: int, v: int, first_color: int = 0) -> Fan:
    """Greedy fan for the uncolored edge (u, v), following designated colors."""
    seq, edges, kind, aux = c.core.build_fan(u, v, first_color)
    if kind == _core_py.FAN_SHARED:
        return Fan(u, np.asarray(seq, dtype=np.int32),
                   np.asarray(edges, dtype=np.int32), shared_color=aux)
    return Fan(u, np.asarray(seq, dtype=np.int32),
               np.asarray(edges, dtype=np.int32), foldback_index=aux)


def rotate_fan(c: PartialColoring, fan: Fan, upto: int) -> None:
    """Shift colors toward the fan base; edge (u, sequence[upto]) ends uncolored."""
    if upto > len(fan.sequence) - 1:
        raise ColoringError("rotation index beyond fan end")
    c.core.rotate_fan(fan.center, fan.edges, upto)


def extend_edge_vizing(c: PartialColoring, u: int, v: int, cap=None,
                       preferred_x: int = 0, first_color: int = 0) -> str:
    """Extend the coloring to the uncolored edge (u, v).

    Unbounded cap always succeeds (Vizing's theorem).  A finite cap returns
    TRUNCATED when the needed alternating path is longer, with the state
    rolled back bit-exact.
    """
    status = c.core.extend_edge_vizing(u, v, -1 if cap is None else cap,
                                       preferred_x, first_color)
    return EXTENDED if status == _core_py.EXTENDED else TRUNCATED


def color_all_vizing(g: Graph, order="input", seed=0, metrics=None,
                     backend=None, keep_journal=False) -> PartialColoring:
    """Complete (Delta+1)-edge coloring via one classical extension per edge.

    `order` is "input" or "random" (seeded shuffle; this is what the random
    sampling baseline runs, since an extension colors exactly its edge).
    The journal is released as it goes unless `keep_journal` is set (tests
    use retained journals as a replay oracle).
    """
    c = new_coloring(g, max(1, g.max_degree + 1), backend=backend)
    color_into_vizing(c, g, order=order, seed=seed, metrics=metrics,
                      keep_journal=keep_journal)
    return c


def color_into_vizing(c: PartialColoring, g: Graph, order="input", seed=0,
                      metrics=None, keep_journal=False, edge_ids=None) -> None:
    """Drive classical extensions over `edge_ids` (default: all, in order)."""
    if edge_ids is None:
        edge_ids = np.arange(g.m, dtype=np.int64)
    else:
        edge_ids = np.asarray(edge_ids, dtype=np.int64)
    if order == "random":
        rng = np.random.default_rng(seed)
        edge_ids = edge_ids.copy()
        rng.shuffle(edge_ids)
    elif order != "input":
        raise ValueError(f"unknown edge order {order!r}")
    core = c.core
    per_iter = [] if metrics is not None and metrics.keep_iteration_costs else None
    for e in edge_ids:
        if core.color_of(int(e)) != 0:
            continue
        u, v = g.endpoints(int(e))
        before = core.mutations()
        status = core.extend_edge_vizing(u, v, -1, 0, 0)
        if status != _core_py.EXTENDED:
            raise ColoringError("unbounded extension failed")
        if per_iter is not None:
            per_iter.append(core.mutations() - before)
        if not keep_journal:
            core.journal_release(core.journal_mark())
    if per_iter is not None:
        metrics.iteration_costs.extend(per_iter)
