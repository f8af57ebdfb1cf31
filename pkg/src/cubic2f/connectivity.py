"""Edge connectivity, 3-edge-cuts and cyclic edge connectivity.

Everything here is exact; the cut searches run on the numeric kernels.
Cyclic edge connectivity follows the contract-and-flow scheme: take all
short chordless cycles as candidates, and for every vertex-disjoint pair
compute the minimum cut separating the two (contracted) cycles.  The
candidate length bound is tightened until it certifies the optimum: any
side of a cut of size k in a cubic graph contains a cycle of length at
most k+1, so candidates up to best+2 are sufficient.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from . import kernels
from .graphs import Graph, GraphError, girth


@dataclass(frozen=True)
class EdgeCut:
    edges: frozenset
    kind: str  # "trivial" | "nontrivial" | "cyclic"
    sides: tuple  # two tuples of vertices

    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges))


def csr_with_rev(g: Graph):
    """(indptr, heads, revarc, arc_eid) for the flow kernels."""
    indptr, heads = g.csr()
    n = g.n
    revarc = np.empty(len(heads), dtype=np.int32)
    eid = {}
    for i, (u, v) in enumerate(g.edges()):
        eid[(u, v)] = i
    arc_eid = np.empty(len(heads), dtype=np.int32)
    for u in range(n):
        for k, v in enumerate(g.adjacency[u]):
            a = indptr[u] + k
            revarc[a] = indptr[v] + g.adjacency[v].index(u)
            arc_eid[a] = eid[(u, v) if u < v else (v, u)]
    return indptr, heads, revarc, arc_eid


def edge_connectivity(g: Graph) -> int:
    if g.n < 2:
        raise GraphError("edge connectivity needs at least 2 vertices")
    if not g.is_connected():
        return 0
    indptr, heads, revarc, _ = csr_with_rev(g)
    return int(kernels.edge_connectivity_kernel(g.n, indptr, heads, revarc))


def _three_cut_triples(g: Graph) -> list[tuple[int, int, int]]:
    indptr, heads, revarc, arc_eid = csr_with_rev(g)
    m = g.m
    out = np.zeros(3 * (4 * g.n + 64), dtype=np.int32)
    cnt = int(kernels.find_3cut_triples(g.n, indptr, heads, arc_eid, m, out))
    while 3 * cnt > len(out):  # overflow: retry with a big enough buffer
        out = np.zeros(3 * cnt + 3, dtype=np.int32)
        cnt = int(kernels.find_3cut_triples(g.n, indptr, heads, arc_eid, m, out))
    return [tuple(int(x) for x in out[3 * i : 3 * i + 3]) for i in range(cnt)]


def _cut_sides(g: Graph, cut_edges) -> tuple[tuple, tuple]:
    banned = {tuple(sorted(e)) for e in cut_edges}
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if tuple(sorted((u, w))) in banned or seen[w]:
                    continue
                seen[w] = True
                comp.append(w)
                queue.append(w)
        comps.append(tuple(sorted(comp)))
    if len(comps) != 2:
        raise GraphError(f"edge set is not a 2-component cut (got {len(comps)} components)")
    return comps[0], comps[1]


def _side_has_cycle(g: Graph, side) -> bool:
    sset = set(side)
    edges_inside = sum(1 for u in side for w in g.adjacency[u] if w in sset) // 2
    # a side is connected by construction; cycle iff not a tree
    return edges_inside >= len(side)


def three_edge_cuts(g: Graph) -> list[EdgeCut]:
    """All 3-edge-cuts (trivial ones included), sorted by edge triple."""
    if not g.is_cubic:
        raise GraphError("3-edge-cut enumeration requires a cubic graph")
    if not g.is_connected():
        raise GraphError("graph must be connected")
    edge_list = g.edges()
    cuts = []
    for triple in _three_cut_triples(g):
        cut_edges = frozenset(edge_list[i] for i in triple)
        sides = _cut_sides(g, cut_edges)
        if min(len(s) for s in sides) == 1:
            kind = "trivial"
        elif _side_has_cycle(g, sides[0]) and _side_has_cycle(g, sides[1]):
            kind = "cyclic"
        else:
            kind = "nontrivial"
        cuts.append(EdgeCut(cut_edges, kind, sides))
    cuts.sort(key=lambda c: c.sorted_edges())
    return cuts


def nontrivial_3_edge_cuts(g: Graph) -> list[EdgeCut]:
    return [c for c in three_edge_cuts(g) if c.kind != "trivial"]


def is_essentially_4ec(g: Graph) -> bool:
    return not nontrivial_3_edge_cuts(g)


# -- cyclic edge connectivity ----------------------------------------------


def _chordless_cycles_upto(g: Graph, maxlen: int) -> list[tuple[int, ...]]:
    """All chordless cycles of length <= maxlen, each listed once.

    The start vertex is the cycle minimum and the second vertex is smaller
    than the last, so every cycle appears in exactly one orientation.
    """
    cycles = []
    adjsets = [set(a) for a in g.adjacency]

    def extend(path, onpath):
        v = path[-1]
        s = path[0]
        for w in g.adjacency[v]:
            if w == s and len(path) >= 3:
                if path[1] < path[-1]:
                    # chordless check: no adjacency between non-consecutive
                    ok = True
                    L = len(path)
                    for i in range(L):
                        for j in range(i + 2, L):
                            if i == 0 and j == L - 1:
                                continue
                            if path[j] in adjsets[path[i]]:
                                ok = False
                                break
                        if not ok:
                            break
                    if ok:
                        cycles.append(tuple(path))
                continue
            if w <= s or w in onpath or len(path) == maxlen:
                continue
            path.append(w)
            onpath.add(w)
            extend(path, onpath)
            onpath.remove(w)
            path.pop()

    for s in range(g.n):
        extend([s], {s})
    return cycles


def _isolation_bound(g: Graph, cycles) -> int | None:
    """Smallest boundary of a candidate cycle whose complement still has a
    cycle; None if no candidate qualifies."""
    best = None
    for cyc in cycles:
        cset = set(cyc)
        boundary = sum(1 for u in cyc for w in g.adjacency[u] if w not in cset)
        if best is not None and boundary >= best:
            continue
        rest = [v for v in range(g.n) if v not in cset]
        rset = set(rest)
        m_rest = sum(1 for u in rest for w in g.adjacency[u] if w in rset) // 2
        # forest check per component of the rest
        if m_rest >= len(rest) - _ncomp(g, rset) + 1:
            best = boundary
    return best


def _ncomp(g: Graph, allowed: set) -> int:
    seen = set()
    ncomp = 0
    for s in allowed:
        if s in seen:
            continue
        ncomp += 1
        queue = deque([s])
        seen.add(s)
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    queue.append(w)
    return ncomp


def cyclic_edge_connectivity(g: Graph) -> int | None:
    """Minimum size of a cyclic edge-cut; None when undefined (no two
    vertex-disjoint cycles exist)."""
    if not g.is_connected():
        raise GraphError("graph must be connected")
    g0 = girth(g)
    if g0 == float("inf"):
        return None
    indptr, heads, revarc, _ = csr_with_rev(g)
    maxlen = int(g0) + 2
    while True:
        cycles = _chordless_cycles_upto(g, maxlen)
        bound = _isolation_bound(g, cycles)
        if cycles:
            flat = np.fromiter((v for c in cycles for v in c), dtype=np.int32)
            ptr = np.zeros(len(cycles) + 1, dtype=np.int32)
            for i, c in enumerate(cycles):
                ptr[i + 1] = ptr[i] + len(c)
            best0 = bound if bound is not None else 3 * g.n
            best = int(
                kernels.min_cut_over_cycle_pairs(g.n, indptr, heads, revarc, flat, ptr, best0)
            )
        else:
            best = -1
        if best == -1:
            if maxlen >= g.n:
                return None
            maxlen = min(g.n, maxlen + 2)
            continue
        if bound is not None and bound < best:
            best = bound
        # certified once candidates cover cycles up to best+2 (side lemma +1,
        # one extra for safety)
        if best + 2 <= maxlen:
            return best
        maxlen = best + 2
