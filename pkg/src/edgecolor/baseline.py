"""The randomized m*sqrt(n)-style baseline: random uncolored-edge sampling
plus Euler-split divide, conquer and combine.
"""

from __future__ import annotations

import math

import numpy as np

from .coloring import PartialColoring, new_coloring
from .errors import ColoringError
from .euler import euler_partition
from .graph import Graph
from .vizing import color_all_vizing, color_into_vizing


def color_random_sampling(g: Graph, seed=0, metrics=None, backend=None,
                          keep_journal=False) -> PartialColoring:
    """Extend one uniformly random uncolored edge per iteration until done.

    An extension colors exactly the chosen edge and never uncolors another,
    so sampling uniformly among uncolored edges is the same process as
    walking a seeded uniform permutation of the edges; that is how it runs.
    """
    return color_all_vizing(g, order="random", seed=seed, metrics=metrics,
                            backend=backend, keep_journal=keep_journal)


def _two_least_popular(colors: np.ndarray, palette: int):
    """(two least-assigned used colors, per-color counts); ties to smaller id."""
    counts = np.bincount(colors[colors > 0], minlength=palette + 1)
    used = np.flatnonzero(counts[1:]) + 1
    order = sorted(used, key=lambda c: (counts[c], c))
    return order[:2], counts


def color_divide_conquer(g: Graph, truncate_at=None, seed=0, metrics=None,
                         backend=None) -> PartialColoring:
    """Recursive Euler-split coloring with leftover re-extension.

    Recursion splits while Delta exceeds `truncate_at` (default ceil(sqrt(n)));
    below it the random sampling baseline takes over.  At each combine the
    two least-assigned colors are uncolored and the survivors renamed into a
    dense [1, Delta0+1] palette, then the leftovers are re-extended with the
    classical procedure.
    """
    if truncate_at is None:
        root = math.isqrt(g.n)
        truncate_at = max(1, root + (1 if root * root < g.n else 0))
    if truncate_at < 1:
        raise ColoringError("truncate_at must be >= 1")
    seed_seq = np.random.SeedSequence(seed)
    return _divide(g, int(truncate_at), seed_seq, metrics, backend)


def _divide(g: Graph, truncate_at: int, seed_seq, metrics, backend) -> PartialColoring:
    delta = g.max_degree
    if delta <= truncate_at:
        child = seed_seq.spawn(1)[0]
        return color_random_sampling(g, seed=child, metrics=metrics,
                                     backend=backend)
    left_seq, right_seq = seed_seq.spawn(2)
    part = euler_partition(g)
    (g1, ids1), (g2, ids2) = part.subgraphs()
    c1 = _divide(g1, truncate_at, left_seq, metrics, backend)
    c2 = _divide(g2, truncate_at, right_seq, metrics, backend)

    # merge with disjoint palettes
    shift = c1.palette_size
    merged_cols = np.zeros(g.m, dtype=np.int64)
    merged_cols[ids1] = c1.edge_colors().astype(np.int64)
    cols2 = c2.edge_colors().astype(np.int64)
    cols2[cols2 > 0] += shift
    merged_cols[ids2] = cols2
    if metrics is not None:
        metrics.add_cost(c1.mutations)
        metrics.add_cost(c2.mutations)

    # uncolor the two least popular colors; if the merged palette still
    # exceeds Delta0+1 distinct colors (possible only through the odd-circuit
    # Euler anomaly), keep removing least-popular colors
    target = delta + 1
    removed, counts = _two_least_popular(merged_cols, shift + c2.palette_size)
    leftover_count = int(sum(counts[c] for c in removed))
    drop = set(removed)
    remaining = [c for c in np.flatnonzero(counts[1:]) + 1 if c not in drop]
    while len(remaining) > target:
        extra = min(remaining, key=lambda c: (counts[c], c))
        drop.add(extra)
        remaining.remove(extra)
    if metrics is not None:
        metrics.combine_stats.append({
            "op": "combine",
            "m": g.m,
            "delta": delta,
            "leftover": leftover_count,
            "dropped": len(drop),
            "palette_after": len(remaining),
        })
    for c in drop:
        merged_cols[merged_cols == c] = 0
    # rename survivors into dense [1, Delta0+1]
    rename = np.zeros(int(merged_cols.max()) + 2 if merged_cols.size else 2,
                      dtype=np.int64)
    for i, c in enumerate(sorted(remaining), start=1):
        rename[c] = i
    merged_cols = rename[merged_cols]

    out = new_coloring(g, target, backend=backend)
    out.core.import_colors(merged_cols)
    leftovers = np.flatnonzero(merged_cols == 0)
    color_into_vizing(out, g, edge_ids=leftovers, metrics=metrics)
    return out
