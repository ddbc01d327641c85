"""Pure-Python coloring kernel.

This is the reference implementation of the hot state machine behind every
algorithm in the package: the mutable partial edge coloring with O(1)
color-indexed neighbor lookup, missing-color bitsets, the designated missing
color, the mutation journal with rollback, alternating-path trace/flip,
classical fan extension, the directed fan forest, and the per-round degree
class/color selector.  ``edgecolor._core_cy`` is a compiled twin with the
same API; the two must stay behaviorally identical (tests compare them).

Colors are 1..K; 0 means uncolored.  Missing sets are int bitmasks with bit
``y`` standing for color ``y``.
"""

from __future__ import annotations

import numpy as np

from .errors import ColoringError, InternalInvariantError, StalePathError

EXTENDED = 0
TRUNCATED = 1

FAN_SHARED = 0
FAN_FOLDBACK = 1

_NCLASS = 34
_UNBOUNDED = 1 << 60


def _class_of(deg):
    return deg.bit_length() - 1 if deg > 0 else -1


def _iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ColoringCore:
    def __init__(self, graph, palette):
        if palette < 1:
            raise ColoringError("palette must contain at least one color")
        self.n = graph.n
        self.m = graph.m
        self.K = int(palette)
        self.xadj = graph.xadj.tolist()
        self.adj_v = graph.adj_v.tolist()
        self.adj_e = graph.adj_e.tolist()
        self.edge_u = graph.edge_u.tolist()
        self.edge_v = graph.edge_v.tolist()

        K1 = self.K + 1
        full = ((1 << self.K) - 1) << 1
        self.ecol = [0] * self.m
        self.vci = [-1] * (self.n * K1)
        self.miss = [full] * self.n
        self.desig = [1] * self.n
        self.uncolored = self.m

        self.j_edge = []
        self.j_old = []
        self.j_new = []
        self.j_base = 0
        self.mutation_count = 0

        self._stamp = [0] * self.n
        self._epoch = 0
        self._dirty = []
        self._events = []

        self.sel_enabled = False
        self.kind = None
        self.center_of_edge = None
        self.deg_star = None
        self.vcls = None
        self.sums = None
        self.class_tot = None
        self.m_star = [0, 0]
        self.members = [[], []]

    # -- bookkeeping helpers ----------------------------------------------

    def _mark_dirty(self, v):
        if self._stamp[v] != self._epoch:
            self._stamp[v] = self._epoch
            self._dirty.append(v)

    def _miss_add(self, v, y):
        bit = 1 << y
        if self.miss[v] & bit:
            return
        self._mark_dirty(v)
        self.miss[v] |= bit
        d = self.desig[v]
        if d == 0 or y < d:
            self.desig[v] = y
        if self.sel_enabled:
            k = self.kind[v]
            if k >= 0:
                c = self.vcls[v]
                if c >= 0:
                    self.sums[k][c][y] += self.deg_star[v]

    def _miss_remove(self, v, y):
        bit = 1 << y
        if not self.miss[v] & bit:
            return
        self._mark_dirty(v)
        self.miss[v] &= ~bit
        if self.desig[v] == y:
            mm = self.miss[v]
            self.desig[v] = (mm & -mm).bit_length() - 1 if mm else 0
        if self.sel_enabled:
            k = self.kind[v]
            if k >= 0:
                c = self.vcls[v]
                if c >= 0:
                    self.sums[k][c][y] -= self.deg_star[v]

    def _deg_star_change(self, v, delta):
        k = self.kind[v]
        old = self.deg_star[v]
        new = old + delta
        oc = self.vcls[v]
        nc = _class_of(new)
        mm = self.miss[v]
        if oc == nc:
            if oc >= 0:
                self.class_tot[k][oc] += delta
                row = self.sums[k][oc]
                for y in _iter_bits(mm):
                    row[y] += delta
        else:
            if oc >= 0:
                self.class_tot[k][oc] -= old
                row = self.sums[k][oc]
                for y in _iter_bits(mm):
                    row[y] -= old
            if nc >= 0:
                self.class_tot[k][nc] += new
                row = self.sums[k][nc]
                for y in _iter_bits(mm):
                    row[y] += new
        self.deg_star[v] = new
        self.vcls[v] = nc

    def _color_transition(self, e, old, new):
        if old == 0 and new != 0:
            self.uncolored -= 1
            if self.sel_enabled:
                c = self.center_of_edge[e]
                if c >= 0:
                    self._deg_star_change(c, -1)
                    self.m_star[self.kind[c]] -= 1
                    self._events.append((e, 1))
        elif old != 0 and new == 0:
            self.uncolored += 1
            if self.sel_enabled:
                c = self.center_of_edge[e]
                if c >= 0:
                    self._deg_star_change(c, 1)
                    self.m_star[self.kind[c]] += 1
                    self._events.append((e, -1))

    def _record(self, e, old, new):
        self.j_edge.append(e)
        self.j_old.append(old)
        self.j_new.append(new)
        self.mutation_count += 1

    # -- queries ------------------------------------------------------------

    def color_of(self, e):
        return self.ecol[e]

    def edge_colors(self):
        return np.asarray(self.ecol, dtype=np.int32)

    def uncolored_count(self):
        return self.uncolored

    def mutations(self):
        return self.mutation_count

    def designated(self, v):
        return self.desig[v]

    def miss_contains(self, v, y):
        return bool(self.miss[v] >> y & 1)

    def miss_count(self, v):
        return bin(self.miss[v]).count("1")

    def miss_list(self, v):
        return np.fromiter(_iter_bits(self.miss[v]), dtype=np.int32)

    def miss_mask(self, v):
        out = np.zeros(self.K + 1, dtype=np.uint8)
        for y in _iter_bits(self.miss[v]):
            out[y] = 1
        return out

    def first_missing_excluding(self, v, excluded):
        mm = self.miss[v]
        for y in excluded:
            mm &= ~(1 << y)
        return (mm & -mm).bit_length() - 1 if mm else 0

    def shared_missing(self, u, v):
        mm = self.miss[u] & self.miss[v]
        return (mm & -mm).bit_length() - 1 if mm else 0

    def colored_edge_via(self, v, y):
        return self.vci[v * (self.K + 1) + y]

    def colored_neighbor_via(self, v, y):
        e = self.vci[v * (self.K + 1) + y]
        if e < 0:
            return -1
        u = self.edge_u[e]
        return self.edge_v[e] if u == v else u

    def edge_between(self, u, v):
        """Edge id joining u and v, or -1 (binary search in sorted adjacency)."""
        lo, hi = self.xadj[u], self.xadj[u + 1]
        adj = self.adj_v
        while lo < hi:
            mid = (lo + hi) // 2
            if adj[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        if lo < self.xadj[u + 1] and adj[lo] == v:
            return self.adj_e[lo]
        return -1

    # -- journaled mutations -------------------------------------------------

    def assign(self, e, y):
        if not 1 <= y <= self.K:
            raise ColoringError(f"color {y} outside palette 1..{self.K}")
        if self.ecol[e] != 0:
            raise ColoringError(f"edge {e} already colored")
        u, v = self.edge_u[e], self.edge_v[e]
        if not (self.miss[u] >> y & 1):
            raise ColoringError(f"color {y} not missing at vertex {u}")
        if not (self.miss[v] >> y & 1):
            raise ColoringError(f"color {y} not missing at vertex {v}")
        K1 = self.K + 1
        self.ecol[e] = y
        self.vci[u * K1 + y] = e
        self.vci[v * K1 + y] = e
        self._miss_remove(u, y)
        self._miss_remove(v, y)
        self._color_transition(e, 0, y)
        self._record(e, 0, y)

    def unassign(self, e):
        y = self.ecol[e]
        if y == 0:
            raise ColoringError(f"edge {e} not colored")
        u, v = self.edge_u[e], self.edge_v[e]
        K1 = self.K + 1
        self.ecol[e] = 0
        self.vci[u * K1 + y] = -1
        self.vci[v * K1 + y] = -1
        self._miss_add(u, y)
        self._miss_add(v, y)
        self._color_transition(e, y, 0)
        self._record(e, y, 0)

    def recolor(self, e, y):
        old = self.ecol[e]
        if old == 0:
            raise ColoringError(f"edge {e} not colored")
        if not 1 <= y <= self.K:
            raise ColoringError(f"color {y} outside palette 1..{self.K}")
        if y == old:
            raise ColoringError("recolor with the same color")
        u, v = self.edge_u[e], self.edge_v[e]
        if not (self.miss[u] >> y & 1) or not (self.miss[v] >> y & 1):
            raise ColoringError(f"color {y} not missing at an endpoint of edge {e}")
        K1 = self.K + 1
        self.ecol[e] = y
        self.vci[u * K1 + old] = -1
        self.vci[v * K1 + old] = -1
        self.vci[u * K1 + y] = e
        self.vci[v * K1 + y] = e
        self._miss_add(u, old)
        self._miss_add(v, old)
        self._miss_remove(u, y)
        self._miss_remove(v, y)
        self._record(e, old, y)

    def import_colors(self, colors):
        """Adopt a complete/partial assignment edge by edge (journaled)."""
        for e, y in enumerate(colors):
            if y:
                self.assign(e, int(y))

    # -- journal --------------------------------------------------------------

    def journal_len(self):
        return self.j_base + len(self.j_edge)

    def journal_mark(self):
        return self.j_base + len(self.j_edge)

    def journal_entries(self, since):
        rel = since - self.j_base
        if rel < 0:
            raise ColoringError("journal entries before the release watermark")
        return (np.asarray(self.j_edge[rel:], dtype=np.int32),
                np.asarray(self.j_old[rel:], dtype=np.int32),
                np.asarray(self.j_new[rel:], dtype=np.int32))

    def journal_release(self, upto):
        rel = upto - self.j_base
        if rel <= 0:
            return
        if rel > len(self.j_edge):
            raise ColoringError("release beyond journal end")
        del self.j_edge[:rel]
        del self.j_old[:rel]
        del self.j_new[:rel]
        self.j_base = upto

    def rollback(self, mark):
        rel = mark - self.j_base
        if rel < 0:
            raise ColoringError("rollback below the release watermark")
        K1 = self.K + 1
        while len(self.j_edge) > rel:
            e = self.j_edge.pop()
            old = self.j_old.pop()
            new = self.j_new.pop()
            self.ecol[e] = old
            for v in (self.edge_u[e], self.edge_v[e]):
                for col in (old, new):
                    if col == 0:
                        continue
                    found = -1
                    for p in range(self.xadj[v], self.xadj[v + 1]):
                        e2 = self.adj_e[p]
                        if self.ecol[e2] == col:
                            found = e2
                            break
                    self.vci[v * K1 + col] = found
                    if found < 0:
                        self._miss_add(v, col)
                    else:
                        self._miss_remove(v, col)
            self._color_transition(e, new, old)
            self.mutation_count += 1

    # -- alternating paths -----------------------------------------------------

    def trace_path(self, start, x, y, cap):
        if x == y:
            raise ColoringError("alternating path needs two distinct colors")
        K1 = self.K + 1
        has_x = self.vci[start * K1 + x] >= 0
        has_y = self.vci[start * K1 + y] >= 0
        if has_x and has_y:
            raise ColoringError(
                f"vertex {start} misses neither color {x} nor {y}")
        if cap is None or cap < 0:
            cap = _UNBOUNDED
        verts = [start]
        edges = []
        truncated = False
        col = x if has_x else (y if has_y else 0)
        if col:
            cur = start
            other = x + y
            while True:
                e = self.vci[cur * K1 + col]
                if e < 0:
                    break
                edges.append(e)
                u = self.edge_u[e]
                cur = self.edge_v[e] if u == cur else u
                verts.append(cur)
                col = other - col
                if len(edges) > cap:
                    truncated = True
                    break
        return (np.asarray(verts, dtype=np.int32),
                np.asarray(edges, dtype=np.int32),
                truncated)

    def flip_path(self, verts, edges, x, y):
        k = len(edges)
        if k == 0:
            return
        if len(verts) != k + 1:
            raise StalePathError("vertex/edge arrays disagree")
        K1 = self.K + 1
        ecol = self.ecol
        other = x + y
        # validate before touching anything
        c = ecol[edges[0]]
        if c != x and c != y:
            raise StalePathError("path edge lost its color")
        cc = c
        prev = verts[0]
        for i in range(k):
            e = edges[i]
            if ecol[e] != cc:
                raise StalePathError("path colors no longer alternate")
            u, v = self.edge_u[e], self.edge_v[e]
            if u == prev:
                prev = v
            elif v == prev:
                prev = u
            else:
                raise StalePathError("path edges are not consecutive")
            cc = other - cc
        first, last = int(verts[0]), int(verts[-1])
        c_first = ecol[edges[0]]
        c_last = ecol[edges[-1]]
        if self.vci[first * K1 + (other - c_first)] >= 0:
            raise StalePathError("path start no longer misses the swap color")
        if self.vci[last * K1 + (other - c_last)] >= 0:
            raise StalePathError("path end no longer misses the swap color")

        for i in range(k):
            e = edges[i]
            old = ecol[e]
            new = other - old
            ecol[e] = new
            self._record(e, old, new)
        # index surgery: each path vertex re-derives its x/y entries from its
        # one or two path edges (unique by properness).
        for i in range(k + 1):
            v = int(verts[i])
            ex = -1
            ey = -1
            if i > 0:
                e = edges[i - 1]
                if ecol[e] == x:
                    ex = e
                else:
                    ey = e
            if i < k:
                e = edges[i]
                if ecol[e] == x:
                    ex = e
                else:
                    ey = e
            self.vci[v * K1 + x] = ex
            self.vci[v * K1 + y] = ey
        self._miss_add(first, c_first)
        self._miss_remove(first, other - c_first)
        self._miss_add(last, c_last)
        self._miss_remove(last, other - c_last)

    # -- classical fan machinery -------------------------------------------------

    def build_fan(self, u, v, first_color=0):
        """Greedy Vizing fan for the uncolored edge (u, v).

        Returns (seq_vertices, seq_edges, terminal_kind, aux) where aux is the
        shared missing color (FAN_SHARED) or the fold-back index j
        (FAN_FOLDBACK).  Growth follows designated colors; `first_color`
        overrides the first hop (used by the round engine so the fan walks one
        forest component).
        """
        K1 = self.K + 1
        e0 = self.edge_between(u, v)
        if e0 < 0 or self.ecol[e0] != 0:
            raise ColoringError("fan needs an existing uncolored edge")
        seq = [v]
        edges = [e0]
        fan_color_pos = {}
        deg_u = self.xadj[u + 1] - self.xadj[u]
        while True:
            vk = seq[-1]
            shared = self.miss[u] & self.miss[vk]
            if shared:
                return seq, edges, FAN_SHARED, (shared & -shared).bit_length() - 1
            if len(seq) == 1 and first_color:
                c = first_color
                if not (self.miss[vk] >> c & 1):
                    raise ColoringError("first fan color not missing at client")
            else:
                c = self.desig[vk]
            if c == 0:
                raise InternalInvariantError("fan client has no missing color")
            j = fan_color_pos.get(c)
            if j is not None:
                return seq, edges, FAN_FOLDBACK, j
            e = self.vci[u * K1 + c]
            if e < 0:
                raise InternalInvariantError(
                    "fan color neither shared nor present at center")
            w = self.edge_u[e]
            if w == u:
                w = self.edge_v[e]
            seq.append(w)
            edges.append(e)
            fan_color_pos[c] = len(seq) - 1
            if len(seq) > deg_u + 1:
                raise InternalInvariantError("fan exceeded center degree")

    def rotate_fan(self, u, fan_edges, upto):
        """Shift colors toward the fan base: edge i takes edge i+1's color."""
        for i in range(upto):
            e_next = fan_edges[i + 1]
            c = self.ecol[e_next]
            self.unassign(e_next)
            self.assign(fan_edges[i], c)

    def extend_edge_vizing(self, u, v, cap, preferred_x=0, first_color=0):
        """One classical color extension of the uncolored edge (u, v).

        Returns EXTENDED, or TRUNCATED when `cap` is finite and the needed
        alternating path is longer; the state is then rolled back bit-exact.
        """
        mark = self.journal_mark()
        seq, fan_edges, kind, aux = self.build_fan(u, v, first_color)
        k = len(seq) - 1
        if kind == FAN_SHARED:
            self.rotate_fan(u, fan_edges, k)
            self.assign(fan_edges[k], aux)
            return EXTENDED
        j = aux
        y = self.ecol[fan_edges[j]]
        if preferred_x and (self.miss[u] >> preferred_x & 1):
            x = preferred_x
        else:
            x = self.desig[u]
        if x == 0:
            raise InternalInvariantError("fan center has no missing color")
        verts, edges, truncated = self.trace_path(u, x, y, cap)
        if truncated:
            self.rollback(mark)
            return TRUNCATED
        if len(edges) and int(verts[-1]) == seq[j - 1]:
            # path returns to the fan: flip first, rotate through the whole fan
            self.flip_path(verts, edges, x, y)
            self.rotate_fan(u, fan_edges, k)
            self.assign(fan_edges[k], y)
        else:
            self.rotate_fan(u, fan_edges, j)
            if len(edges) > 1:
                self.flip_path(verts[1:], edges[1:], x, y)
            self.assign(fan_edges[j], x)
        return EXTENDED

    # -- fan forest -----------------------------------------------------------

    def build_fan_forest(self, u, singleton_mask):
        """Directed forest on the colored neighbors of u.

        Parent of s is the neighbor across u's edge colored designated(s).
        The unique cycle per component is broken at the edge entering its
        largest-id node.  Activeness/branch numbers/witnesses come from
        `singleton_mask` (per-color 0/1: is lst(u, color) a singleton).
        Returns a dict of parallel arrays over forest nodes.
        """
        K1 = self.K + 1
        nodes = []
        ucolor = []
        uedge = []
        for p in range(self.xadj[u], self.xadj[u + 1]):
            e = self.adj_e[p]
            c = self.ecol[e]
            if c:
                nodes.append(self.adj_v[p])
                ucolor.append(c)
                uedge.append(e)
        nn = len(nodes)
        index = {w: i for i, w in enumerate(nodes)}
        parent = [-1] * nn
        for i, w in enumerate(nodes):
            c = self.desig[w]
            if c == 0:
                continue
            e = self.vci[u * K1 + c]
            if e >= 0:
                t = self.edge_u[e]
                if t == u:
                    t = self.edge_v[e]
                parent[i] = index[t]

        removed_edge = None
        state = [0] * nn  # 0 unseen / 1 on current walk / 2 done
        for i0 in range(nn):
            if state[i0]:
                continue
            path = []
            i = i0
            while i >= 0 and state[i] == 0:
            # walk up; collect so we can mark done and detect a fresh cycle
                state[i] = 1
                path.append(i)
                i = parent[i]
            if i >= 0 and state[i] == 1:
                # found a new cycle; locate it along the walk
                cyc = []
                j = path[-1]
                start = i
                cur = start
                while True:
                    cyc.append(cur)
                    cur = parent[cur]
                    if cur == start:
                        break
                tmax = max(cyc, key=lambda t: nodes[t])
                for s in cyc:
                    if parent[s] == tmax:
                        removed_edge = (nodes[s], nodes[tmax])
                        parent[s] = -1
                        break
            for t in path:
                state[t] = 2

        children = [[] for _ in range(nn)]
        roots = []
        for i in range(nn):
            if parent[i] < 0:
                roots.append(i)
            else:
                children[parent[i]].append(i)
        # topo order: roots first, children after parents
        order = []
        stack = list(reversed(roots))
        while stack:
            i = stack.pop()
            order.append(i)
            for ch in reversed(children[i]):
                stack.append(ch)
        if len(order) != nn:
            raise InternalInvariantError("fan forest has an unbroken cycle")

        root = [-1] * nn
        for i in order:
            root[i] = i if parent[i] < 0 else root[parent[i]]
        active = [0] * nn
        branch = [0] * nn
        witness = [-1] * nn
        for i in reversed(order):
            w = nodes[i] if singleton_mask[ucolor[i]] else -1
            nact = 0
            for ch in children[i]:
                if active[ch]:
                    nact += 1
                    cw = witness[ch]
                    if w < 0 or (0 <= cw < w):
                        w = cw
            witness[i] = w
            active[i] = 1 if w >= 0 else 0
            branch[i] = nact
        comp_singletons = [0] * nn
        for i in range(nn):
            if singleton_mask[ucolor[i]]:
                comp_singletons[root[i]] += 1
        return {
            "nodes": np.asarray(nodes, dtype=np.int32),
            "ucolor": np.asarray(ucolor, dtype=np.int32),
            "uedge": np.asarray(uedge, dtype=np.int32),
            "parent": np.asarray(parent, dtype=np.int32),
            "root": np.asarray(root, dtype=np.int32),
            "active": np.asarray(active, dtype=np.int8),
            "branch": np.asarray(branch, dtype=np.int32),
            "witness": np.asarray(witness, dtype=np.int32),
            "comp_singletons": np.asarray(comp_singletons, dtype=np.int32),
            "removed_edge": removed_edge,
        }

    # -- tentative-color helper --------------------------------------------------

    def assign_tentative(self, edges, clients):
        """Greedy distinct missing colors per client (consecutive groups)."""
        out = np.zeros(len(edges), dtype=np.int32)
        i = 0
        ln = len(edges)
        while i < ln:
            v = clients[i]
            used = 0
            j = i
            while j < ln and clients[j] == v:
                mm = self.miss[v] & ~used
                if not mm:
                    raise InternalInvariantError(
                        "client out of distinct tentative colors")
                low = mm & -mm
                out[j] = low.bit_length() - 1
                used |= low
                j += 1
            i = j
        return out

    # -- dirty tracking -------------------------------------------------------

    def begin_tracking(self):
        self._epoch += 1
        self._dirty = []
        self._events = []

    def dirty_vertices(self):
        return list(self._dirty)

    def star_events(self):
        return list(self._events)

    # -- selector ---------------------------------------------------------------

    def selector_init(self, kind, center_of_edge):
        self.kind = list(kind)
        self.center_of_edge = list(center_of_edge)
        self.deg_star = [0] * self.n
        for e in range(self.m):
            c = self.center_of_edge[e]
            if c >= 0 and self.ecol[e] == 0:
                self.deg_star[c] += 1
        self.vcls = [_class_of(d) for d in self.deg_star]
        self.sums = [[[0] * (self.K + 1) for _ in range(_NCLASS)]
                     for _ in range(2)]
        self.class_tot = [[0] * _NCLASS for _ in range(2)]
        self.m_star = [0, 0]
        self.members = [[], []]
        for v in range(self.n):
            k = self.kind[v]
            if k < 0:
                continue
            self.members[k].append(v)
            d = self.deg_star[v]
            self.m_star[k] += d
            c = self.vcls[v]
            if c >= 0:
                self.class_tot[k][c] += d
                row = self.sums[k][c]
                for y in _iter_bits(self.miss[v]):
                    row[y] += d
        self.sel_enabled = True

    def selector_disable(self):
        self.sel_enabled = False

    def selector_m0m1(self):
        return self.m_star[0], self.m_star[1]

    def selector_class_totals(self, k):
        return list(self.class_tot[k])

    def selector_sums_row(self, k, cls):
        return np.asarray(self.sums[k][cls], dtype=np.int64)

    def selector_deg(self, v):
        return self.deg_star[v]

    def selector_members(self, k, cls, x):
        out = [v for v in self.members[k]
               if self.vcls[v] == cls and self.miss[v] >> x & 1]
        return np.asarray(out, dtype=np.int32)

    def selector_kind_members(self, k):
        return np.asarray(self.members[k], dtype=np.int32)

    # -- misc helpers for drivers -------------------------------------------------

    def uncolored_star_neighbors(self, u):
        """Clients across uncolored star edges centered at u."""
        out = []
        for p in range(self.xadj[u], self.xadj[u + 1]):
            e = self.adj_e[p]
            if self.ecol[e] == 0 and self.center_of_edge[e] == u:
                out.append((self.adj_v[p], e))
        return out

    def uncolored_edges(self):
        return np.asarray([e for e in range(self.m) if self.ecol[e] == 0],
                          dtype=np.int32)


def euler_split(n, m, edge_u, edge_v):
    """Alternate edges along Euler circuits into two sides (0/1).

    Odd-degree vertices are paired through a virtual super-vertex; circuits
    are started there when possible, else at a minimum-degree vertex of the
    remaining component, so the odd-circuit wrap imbalance cannot raise a
    maximum degree unless the component is regular with an odd edge count.
    """
    if m == 0:
        return np.zeros(0, dtype=np.uint8)
    deg = [0] * (n + 1)
    for i in range(m):
        deg[edge_u[i]] += 1
        deg[edge_v[i]] += 1
    odd = [v for v in range(n) if deg[v] & 1]
    mm = m + len(odd)
    eu = list(edge_u) + odd
    ev = list(edge_v) + [n] * len(odd)
    deg[n] = len(odd)

    # CSR over half-edges: half-edge 2i leaves eu[i], 2i+1 leaves ev[i]
    xadj = [0] * (n + 2)
    for i in range(mm):
        xadj[eu[i] + 1] += 1
        xadj[ev[i] + 1] += 1
    for v in range(n + 1):
        xadj[v + 1] += xadj[v]
    half = [0] * (2 * mm)
    cursor = list(xadj)
    for i in range(mm):
        half[cursor[eu[i]]] = 2 * i
        cursor[eu[i]] += 1
        half[cursor[ev[i]]] = 2 * i + 1
        cursor[ev[i]] += 1

    used = [False] * mm
    ptr = list(xadj)
    side = np.zeros(m, dtype=np.uint8)

    starts = [n] if odd else []
    starts += sorted((v for v in range(n) if deg[v]), key=lambda v: (deg[v], v))

    for s in starts:
        while True:
            # skip consumed half-edges
            p = ptr[s]
            top = xadj[s + 1]
            while p < top and used[half[p] >> 1]:
                p += 1
            ptr[s] = p
            if p >= top:
                break
            # Hierholzer with explicit stack; circuit edges in traversal order
            stack_v = [s]
            stack_e = [-1]
            circuit = []
            while stack_v:
                v = stack_v[-1]
                p = ptr[v]
                top = xadj[v + 1]
                while p < top and used[half[p] >> 1]:
                    p += 1
                ptr[v] = p
                if p >= top:
                    stack_v.pop()
                    e_in = stack_e.pop()
                    if e_in >= 0:
                        circuit.append(e_in)
                else:
                    h = half[p]
                    e = h >> 1
                    used[e] = True
                    w = ev[e] if h & 1 == 0 else eu[e]
                    stack_v.append(w)
                    stack_e.append(e)
            for idx, e in enumerate(circuit):
                if e < m:
                    side[e] = idx & 1
    return side
