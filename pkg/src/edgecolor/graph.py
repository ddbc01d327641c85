"""Immutable simple-graph representation shared by every coloring algorithm.

Graphs are stored in compressed adjacency (CSR) form with dense integer
vertex and edge identifiers.  Neighbor lists are sorted by neighbor id so
that every iteration order in the library is deterministic under a fixed
seed.  An edge keeps one id visible from both endpoints.
"""

from __future__ import annotations

import numpy as np


class GraphError(ValueError):
    """Invalid graph input (self-loop, duplicate edge, bad endpoint)."""


class Graph:
    """Simple undirected graph, immutable after construction.

    Attributes:
        n: vertex count.
        m: edge count.
        max_degree: maximum vertex degree (Delta).
        edge_u, edge_v: endpoint arrays in input edge order (edge id = index).
        xadj, adj_v, adj_e: CSR offsets, neighbor ids, incident edge ids.
    """

    __slots__ = ("n", "m", "max_degree", "edge_u", "edge_v", "xadj", "adj_v", "adj_e")

    def __init__(self, n: int, edges) -> None:
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        m = len(edges)
        u = edges[:, 0]
        v = edges[:, 1]
        if m and (u.min() < 0 or v.min() < 0 or u.max() >= n or v.max() >= n):
            raise GraphError("edge endpoint out of range")
        if np.any(u == v):
            bad = int(np.flatnonzero(u == v)[0])
            raise GraphError(f"self-loop at edge {bad}: ({u[bad]}, {u[bad]})")
        lo = np.minimum(u, v)
        hi = np.maximum(u, v)
        key = lo * n + hi
        if m and np.unique(key).size != m:
            order = np.argsort(key, kind="stable")
            dup = order[np.flatnonzero(np.diff(key[order]) == 0)[0] + 1]
            raise GraphError(f"duplicate edge ({lo[dup]}, {hi[dup]})")

        self.n = int(n)
        self.m = int(m)
        self.edge_u = u.astype(np.int32)
        self.edge_v = v.astype(np.int32)

        # CSR with both directions; sort each neighbor list by neighbor id.
        src = np.concatenate([u, v])
        dst = np.concatenate([v, u])
        eid = np.concatenate([np.arange(m), np.arange(m)])
        order = np.lexsort((dst, src))
        src, dst, eid = src[order], dst[order], eid[order]
        self.xadj = np.zeros(n + 1, dtype=np.int64)
        np.add.at(self.xadj, src + 1, 1)
        np.cumsum(self.xadj, out=self.xadj)
        self.adj_v = dst.astype(np.int32)
        self.adj_e = eid.astype(np.int32)
        degs = np.diff(self.xadj)
        self.max_degree = int(degs.max()) if n else 0

    # -- queries ---------------------------------------------------------

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return int(self.xadj[v + 1] - self.xadj[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.xadj).astype(np.int32)

    def neighbors(self, v: int) -> np.ndarray:
        return self.adj_v[self.xadj[v]:self.xadj[v + 1]]

    def incident_edges(self, v: int) -> np.ndarray:
        return self.adj_e[self.xadj[v]:self.xadj[v + 1]]

    def endpoints(self, e: int) -> tuple[int, int]:
        return int(self.edge_u[e]), int(self.edge_v[e])

    def other_endpoint(self, e: int, v: int) -> int:
        u0, v0 = int(self.edge_u[e]), int(self.edge_v[e])
        return v0 if u0 == v else u0

    def edge_list(self) -> np.ndarray:
        return np.stack([self.edge_u, self.edge_v], axis=1)

    def induced_edges(self, s, t=None) -> list[int]:
        """Edge ids of E[S] (t absent) or E[S, T] (t given, disjoint from s)."""
        in_s = np.zeros(self.n, dtype=bool)
        in_s[np.asarray(sorted(s), dtype=np.int64)] = True
        if t is None:
            mask = in_s[self.edge_u] & in_s[self.edge_v]
        else:
            in_t = np.zeros(self.n, dtype=bool)
            in_t[np.asarray(sorted(t), dtype=np.int64)] = True
            if np.any(in_s & in_t):
                raise GraphError("S and T must be disjoint")
            mask = (in_s[self.edge_u] & in_t[self.edge_v]) | (
                in_t[self.edge_u] & in_s[self.edge_v])
        return [int(e) for e in np.flatnonzero(mask)]

    def subgraph_from_edges(self, edge_ids) -> tuple["Graph", np.ndarray]:
        """Graph on the same vertex set containing only `edge_ids`.

        Returns (subgraph, orig_edge_id_per_new_edge).
        """
        edge_ids = np.asarray(edge_ids, dtype=np.int64)
        pairs = np.stack([self.edge_u[edge_ids], self.edge_v[edge_ids]], axis=1)
        return Graph(self.n, pairs), edge_ids.astype(np.int32)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, max_degree={self.max_degree})"


def build_graph(n: int, edges) -> Graph:
    """Validating constructor; edge ids follow the input order."""
    return Graph(n, edges)


# -- text format ----------------------------------------------------------
#
#   p edge <n> <m>
#   e <u> <v>          (0-based, one line per edge, input order = edge id)
#
# Blank lines and lines starting with 'c' are ignored.

def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"p edge {g.n} {g.m}\n")
        for u, v in zip(g.edge_u, g.edge_v):
            fh.write(f"e {u} {v}\n")


def read_graph(path) -> Graph:
    n = None
    edges = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("c"):
                continue
            parts = line.split()
            if parts[0] == "p":
                if len(parts) != 4 or parts[1] != "edge":
                    raise GraphError(f"line {lineno}: malformed problem line")
                n = int(parts[2])
            elif parts[0] == "e":
                if len(parts) != 3:
                    raise GraphError(f"line {lineno}: malformed edge line")
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise GraphError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphError("missing 'p edge' line")
    return Graph(n, edges)
