"""Named graphs, star products and 3-cut reductions.

The 30-vertex graph ``G30`` ships as embedded adjacency data; its
structural properties (girth 6, 312 two-factors of four types, cyclic edge
connectivity 6, automorphism group of order 144) are enforced by the test
battery rather than trusted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .canon import canonical_form
from .connectivity import EdgeCut, nontrivial_3_edge_cuts
from .graphs import Graph, GraphError


def _lcf(n: int, pattern: list[int], repeats: int) -> Graph:
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    for i, d in enumerate(pattern * repeats):
        edges.add(tuple(sorted((i, (i + d) % n))))
    return Graph.from_edges(n, edges)


def _k33() -> Graph:
    return Graph.from_edges(6, [(i, 3 + j) for i in range(3) for j in range(3)])


def _gray() -> Graph:
    """Bouwer's construction: three copies of K33, each edge subdivided in
    every copy, the three subdivision vertices of an edge joined to a new
    apex vertex.  3*6 + 3*9 + 9 = 54 vertices."""
    k33_edges = [(i, j) for i in range(3) for j in range(3)]  # (left i, right j)

    def a(c, i):  # left vertex i of copy c
        return 6 * c + i

    def b(c, j):  # right vertex j of copy c
        return 6 * c + 3 + j

    def s(c, e):  # subdivision vertex of edge e in copy c
        return 18 + 9 * c + e

    def t(e):  # apex vertex of edge e
        return 45 + e

    edges = []
    for c in range(3):
        for e, (i, j) in enumerate(k33_edges):
            edges.append((a(c, i), s(c, e)))
            edges.append((s(c, e), b(c, j)))
            edges.append((s(c, e), t(e)))
    return Graph.from_edges(54, edges)


# 30-vertex cubic bipartite graph of girth 6 that is pseudo 2-factor
# isomorphic and essentially 4-edge-connected (the unique such graph of
# this order); validated by the acceptance battery.
_G30_ADJACENCY: tuple[tuple[int, ...], ...] = (
    (21, 24, 27), (22, 25, 28), (23, 26, 29), (22, 26, 27), (23, 24, 28),
    (21, 25, 29), (15, 18, 27), (16, 19, 28), (17, 20, 29), (16, 18, 24),
    (17, 19, 25), (15, 20, 26), (17, 18, 21), (15, 19, 22), (16, 20, 23),
    (6, 11, 13), (7, 9, 14), (8, 10, 12), (6, 9, 12), (7, 10, 13),
    (8, 11, 14), (0, 5, 12), (1, 3, 13), (2, 4, 14), (0, 4, 9),
    (1, 5, 10), (2, 3, 11), (0, 3, 6), (1, 4, 7), (2, 5, 8),
)


def _g30() -> Graph:
    g = Graph(30, _G30_ADJACENCY)
    if not (g.is_cubic and g.is_connected()):
        raise GraphError("embedded G30 data is corrupt")
    return g


_BUILDERS = {
    "K4": lambda: Graph.from_edges(4, list(itertools.combinations(range(4), 2))),
    "K5": lambda: Graph.from_edges(5, list(itertools.combinations(range(5), 2))),
    "K33": _k33,
    "Petersen": lambda: Graph.from_edges(
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
    ),
    "Heawood": lambda: _lcf(14, [5, -5], 7),
    "Pappus": lambda: _lcf(18, [5, 7, -7, 7, -7, -5], 3),
    "Gray": _gray,
    "G30": _g30,
}

NAMED_GRAPHS = tuple(sorted(_BUILDERS))


def named(name: str) -> Graph:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise GraphError(f"unknown graph name {name!r}; choose from {NAMED_GRAPHS}") from None
    return builder()


# -- star product and its inverse ------------------------------------------


@dataclass(frozen=True)
class StarProductSpec:
    g1: Graph
    g2: Graph
    x: int
    y: int
    pairing: tuple  # ((x1,y1),(x2,y2),(x3,y3))


def star_product(spec: StarProductSpec) -> Graph:
    """Delete x from g1 and y from g2, then join their neighbor triples
    according to the pairing."""
    g1, g2, x, y = spec.g1, spec.g2, spec.x, spec.y
    if g1.degree(x) != 3 or g2.degree(y) != 3:
        raise GraphError("star product endpoints must have degree 3")
    xs = [p[0] for p in spec.pairing]
    ys = [p[1] for p in spec.pairing]
    if sorted(xs) != sorted(g1.adjacency[x]) or sorted(ys) != sorted(g2.adjacency[y]):
        raise GraphError("pairing must biject the neighbor triples of x and y")
    map1 = {}
    for v in range(g1.n):
        if v != x:
            map1[v] = len(map1)
    off = len(map1)
    map2 = {}
    for v in range(g2.n):
        if v != y:
            map2[v] = off + len(map2)
    edges = [(map1[u], map1[v]) for u, v in g1.edges() if x not in (u, v)]
    edges += [(map2[u], map2[v]) for u, v in g2.edges() if y not in (u, v)]
    edges += [(map1[a], map2[b]) for a, b in spec.pairing]
    return Graph.from_edges(g1.n + g2.n - 2, edges)


def three_cut_reduction(g: Graph, cut: EdgeCut) -> tuple[Graph, Graph]:
    """Inverse of the star product: split at a nontrivial 3-edge-cut and cap
    each side with a new degree-3 vertex."""
    if not g.is_cubic:
        raise GraphError("3-cut reduction requires a cubic graph")
    if len(cut.edges) != 3:
        raise GraphError("cut must have exactly 3 edges")
    if cut.kind == "trivial":
        raise GraphError("cut is trivial (the star of a vertex)")
    sides = cut.sides
    if len(sides) != 2:
        raise GraphError("cut must induce exactly two components")
    for u, v in cut.edges:
        if (u in set(sides[0])) == (v in set(sides[0])):
            raise GraphError("cut edge does not cross the two sides")
    out = []
    for side in sides:
        sset = set(side)
        vmap = {v: i for i, v in enumerate(sorted(sset))}
        new = len(vmap)
        endpoints = [u if u in sset else v for u, v in cut.edges]
        if len(set(endpoints)) != 3:
            raise GraphError("cut endpoints coincide; reduction would not be simple")
        edges = [(vmap[u], vmap[v]) for u, v in g.edges() if u in sset and v in sset]
        edges += [(vmap[e], new) for e in endpoints]
        out.append(Graph.from_edges(new + 1, edges))
    return out[0], out[1]


def induced_pairing(cut: EdgeCut) -> tuple:
    """The star-product pairing that re-multiplies the two reduced parts
    back into the original graph (in the reduced labelings)."""
    s0, s1 = (set(s) for s in cut.sides)
    vmap0 = {v: i for i, v in enumerate(sorted(s0))}
    vmap1 = {v: i for i, v in enumerate(sorted(s1))}
    pairs = []
    for u, v in sorted(cut.edges):
        a, b = (u, v) if u in s0 else (v, u)
        pairs.append((vmap0[a], vmap1[b]))
    return tuple(pairs)


def constituents(g: Graph) -> list[Graph]:
    """Essentially 4-edge-connected pieces after repeated 3-cut reductions,
    sorted by canonical form (order-insensitive)."""
    if not (g.is_cubic and g.is_connected()):
        raise GraphError("constituents requires a connected cubic graph")
    pieces = []
    todo = [g]
    while todo:
        h = todo.pop()
        cuts = nontrivial_3_edge_cuts(h)
        if not cuts:
            pieces.append(h)
            continue
        cut = min(cuts, key=lambda c: c.sorted_edges())
        h1, h2 = three_cut_reduction(h, cut)
        todo.append(h1)
        todo.append(h2)
    pieces.sort(key=canonical_form)
    return pieces
