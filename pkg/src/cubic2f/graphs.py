"""Core graph type, graph6 serialization and basic structural predicates.

Vertices are dense integers 0..n-1.  Graphs are simple (no loops, no
parallel edges) and immutable after construction; multigraphs appear only
as voltage base graphs, see :mod:`cubic2f.voltage`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np


class GraphError(ValueError):
    pass


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        if n < 0:
            raise GraphError("negative vertex count")
        adj = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"parallel edge ({u},{v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        return Graph(n, tuple(tuple(sorted(a)) for a in adj))

    @staticmethod
    def from_adjacency(adj) -> "Graph":
        n = len(adj)
        edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
        g = Graph.from_edges(n, edges)
        # from_edges already symmetrizes; reject asymmetric input
        if any(len(g.adjacency[u]) != len(set(adj[u])) for u in range(n)):
            raise GraphError("adjacency lists are not symmetric")
        return g

    # -- basic accessors ------------------------------------------------

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(a) == 3 for a in self.adjacency)

    def is_regular(self) -> bool:
        return self.n == 0 or len({len(a) for a in self.adjacency}) == 1

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def relabel(self, perm) -> "Graph":
        """Image under the permutation v -> perm[v]."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) arrays for the numeric kernels."""
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        for v in range(self.n):
            indptr[v + 1] = indptr[v] + len(self.adjacency[v])
        indices = np.fromiter(
            (w for a in self.adjacency for w in a), dtype=np.int32, count=int(indptr[-1])
        )
        return indptr, indices

    # -- connectivity ---------------------------------------------------

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1


@dataclass(frozen=True)
class Bipartition:
    left: tuple[int, ...]
    right: tuple[int, ...]


@dataclass(frozen=True)
class NotBipartite:
    odd_cycle: tuple[int, ...]


def bipartition(g: Graph) -> Bipartition | NotBipartite:
    """2-color g (per component), or return an odd-cycle witness.

    Vertex 0 of each component goes to the left side.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return NotBipartite(_odd_cycle(parent, u, w))
    left = tuple(v for v in range(g.n) if color[v] == 0)
    right = tuple(v for v in range(g.n) if color[v] == 1)
    return Bipartition(left, right)


def _odd_cycle(parent, u, w) -> tuple[int, ...]:
    path_u, path_w = [u], [w]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    while parent[path_w[-1]] != -1:
        path_w.append(parent[path_w[-1]])
    anc_u = set(path_u)
    # walk w's ancestry until it meets u's
    meet = next(x for x in path_w if x in anc_u)
    cyc = path_u[: path_u.index(meet) + 1] + list(reversed(path_w[: path_w.index(meet)]))
    return tuple(cyc)


def is_bipartite(g: Graph) -> bool:
    return isinstance(bipartition(g), Bipartition)


INFINITY = float("inf")


def girth(g: Graph):
    """Length of a shortest cycle, or ``inf`` for forests.

    Exact by edge-deletion BFS: for every edge (u,v), the shortest cycle
    through it has length dist_{G-uv}(u,v)+1.
    """
    best = INFINITY
    for u, v in g.edges():
        d = _bfs_dist_avoiding_edge(g, u, v, limit=best - 1)
        if d is not None and d + 1 < best:
            best = d + 1
            if best == 3:
                return 3
    return best


def _bfs_dist_avoiding_edge(g: Graph, s: int, t: int, limit) -> int | None:
    dist = [-1] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if dist[u] >= limit:
            return None
        for w in g.adjacency[u]:
            if u == s and w == t:
                continue
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                if w == t:
                    return dist[w]
                queue.append(w)
    return None


# -- graph6 -----------------------------------------------------------------


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (the standard >>graph6<< ASCII format)."""
    if isinstance(text, str):
        data = text.encode("ascii")
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6Error("empty input", 0)
    n, pos = _read_graph6_order(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error(f"truncated: need {nbytes} body bytes, have {len(data) - pos}", len(data))
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing garbage after graph body", pos + nbytes)
    bits = []
    for i in range(nbytes):
        b = data[pos + i]
        if not (63 <= b <= 126):
            raise Graph6Error(f"byte {b} outside graph6 range 63..126", pos + i)
        bits.append(b - 63)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k // 6] & (1 << (5 - k % 6)):
                edges.append((i, j))
            k += 1
    # remaining padding bits must be zero
    while k < 6 * nbytes:
        if bits[k // 6] & (1 << (5 - k % 6)):
            raise Graph6Error("nonzero padding bits", pos + k // 6)
        k += 1
    return Graph.from_edges(n, edges)


def _read_graph6_order(data: bytes) -> tuple[int, int]:
    b0 = data[0]
    if b0 == 126:  # '~'
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise Graph6Error("truncated 8-byte order header", len(data))
            n = 0
            for i in range(2, 8):
                if not (63 <= data[i] <= 126):
                    raise Graph6Error("bad order header byte", i)
                n = (n << 6) | (data[i] - 63)
            return n, 8
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte order header", len(data))
        n = 0
        for i in range(1, 4):
            if not (63 <= data[i] <= 126):
                raise Graph6Error("bad order header byte", i)
            n = (n << 6) | (data[i] - 63)
        return n, 4
    if not (63 <= b0 <= 126):
        raise Graph6Error(f"bad length header byte {b0}", 0)
    return b0 - 63, 1


def write_graph6(g: Graph) -> str:
    """Encode g in graph6 under its current labeling."""
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        head = bytes([126, 126] + [63 + ((n >> (6 * s)) & 63) for s in range(5, -1, -1)])
    nbits = n * (n - 1) // 2
    out = bytearray(head)
    acc, nacc = 0, 0
    adjsets = [set(a) for a in g.adjacency]
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if j in adjsets[i] else 0)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc, nacc = 0, 0
    if nbits % 6:
        out.append((acc << (6 - nbits % 6)) + 63)
    return out.decode("ascii")
