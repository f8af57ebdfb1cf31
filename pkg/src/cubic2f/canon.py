"""Canonical forms and automorphism groups via individualization-refinement.

Equitable partition refinement (neighbor counts per cell) drives a
backtracking search over individualized vertices; leaves yield candidate
labelings.  The canonical form is the lexicographically smallest adjacency
bitstring over all leaves, and pairs of leaves with equal bitstrings yield
automorphisms, which in turn prune the search by orbits (the classic
McKay-style scheme, without the fancier node invariants).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from sympy.combinatorics import Permutation, PermutationGroup

from .graphs import Graph


@dataclass(frozen=True)
class AutomorphismInfo:
    generators: tuple  # tuple of vertex permutations (tuples)
    group_order: int
    vertex_orbits: tuple  # tuple of sorted vertex tuples
    edge_orbits: tuple  # tuple of sorted edge tuples


def _refine(adjsets, cells, worklist):
    """Equitable refinement of an ordered partition.

    ``cells`` is a list of vertex tuples; ``worklist`` a deque of vertex
    tuples to use as splitters.  Mutates and returns ``cells``.  The
    procedure only depends on cell positions and neighbor counts, so the
    resulting cell order is isomorphism-invariant.
    """
    while worklist:
        splitter = worklist.popleft()
        spl = set(splitter)
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            groups = {}
            for v in cell:
                c = len(adjsets[v] & spl)
                groups.setdefault(c, []).append(v)
            if len(groups) == 1:
                i += 1
                continue
            parts = [tuple(groups[c]) for c in sorted(groups)]
            cells[i : i + 1] = parts
            worklist.extend(parts)
            i += len(parts)
    return cells


def _first_target(cells):
    best_i = -1
    best_len = None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best_len is None or len(cell) < best_len):
            best_i = i
            best_len = len(cell)
            if best_len == 2:
                break
    return best_i


def _leaf_bytes(n, edges, cells):
    pos = [0] * n
    for i, cell in enumerate(cells):
        pos[cell[0]] = i
    nbits = n * (n - 1) // 2
    bits = bytearray((nbits + 7) // 8)
    for u, v in edges:
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        k = j * (j - 1) // 2 + i  # upper-triangle, column-major
        bits[k >> 3] |= 1 << (k & 7)
    return bytes(bits), tuple(pos)


class _IRSearch:
    def __init__(self, g: Graph):
        self.n = g.n
        self.edges = g.edges()
        self.adjsets = [set(a) for a in g.adjacency]
        self.generators = []
        self.first = None  # (bytes, pos)
        self.best = None
        self.best_pos = None

    def run(self):
        n = self.n
        if n == 0:
            self.best = b""
            self.best_pos = ()
            return self
        cells = [tuple(range(n))]
        _refine(self.adjsets, cells, deque(list(cells)))
        self._descend(cells, ())
        return self

    def _descend(self, cells, prefix):
        t = _first_target(cells)
        if t == -1:
            leaf, pos = _leaf_bytes(self.n, self.edges, cells)
            if self.first is None:
                self.first = (leaf, pos)
            else:
                for ref_leaf, ref_pos in (self.first, (self.best, self.best_pos)):
                    if ref_leaf == leaf and ref_pos != pos:
                        # equal bitstrings: v -> ref_pos^-1[pos[v]] is an automorphism
                        inv = [0] * self.n
                        for v, p in enumerate(ref_pos):
                            inv[p] = v
                        sigma = tuple(inv[p] for p in pos)
                        if sigma not in self.generators:
                            self.generators.append(sigma)
                        break
            if self.best is None or leaf < self.best:
                self.best = leaf
                self.best_pos = pos
            return

        target = cells[t]
        done = []
        for v in sorted(target):
            if done and self._in_done_orbit(v, done, prefix):
                continue
            done.append(v)
            sub = [list(c) for c in cells]
            sub[t : t + 1] = [(v,), tuple(w for w in target if w != v)]
            sub = [tuple(c) for c in sub]
            _refine(self.adjsets, sub, deque([(v,)]))
            self._descend(sub, prefix + (v,))

    def _in_done_orbit(self, v, done, prefix) -> bool:
        gens = [p for p in self.generators if all(p[x] == x for x in prefix)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        doneset = set(done)
        while frontier:
            x = frontier.pop()
            for p in gens:
                y = p[x]
                if y not in orbit:
                    if y in doneset:
                        return True
                    orbit.add(y)
                    frontier.append(y)
        return False


@lru_cache(maxsize=10000)
def _run_search(n, adjacency):
    g = Graph(n, adjacency)
    return _IRSearch(g).run()


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: equal iff graphs are isomorphic."""
    s = _run_search(g.n, g.adjacency)
    return bytes([g.n & 0xFF, (g.n >> 8) & 0xFF]) + s.best


def canonical_labeling(g: Graph) -> tuple:
    """pos[v] = canonical position of v (relabel(g, pos) is the canonical graph)."""
    s = _run_search(g.n, g.adjacency)
    return s.best_pos


def automorphisms(g: Graph) -> AutomorphismInfo:
    s = _run_search(g.n, g.adjacency)
    gens = [list(p) for p in s.generators]
    if gens:
        order = int(PermutationGroup([Permutation(p) for p in gens]).order())
    else:
        order = 1
    v_orbits = _orbits(range(g.n), s.generators, lambda p, v: p[v])
    e_orbits = _orbits(
        g.edges(), s.generators, lambda p, e: tuple(sorted((p[e[0]], p[e[1]])))
    )
    return AutomorphismInfo(
        generators=tuple(s.generators),
        group_order=order,
        vertex_orbits=v_orbits,
        edge_orbits=e_orbits,
    )


def _orbits(items, gens, act):
    items = list(items)
    orbit_of = {}
    orbits = []
    for it in items:
        if it in orbit_of:
            continue
        orb = {it}
        frontier = [it]
        while frontier:
            x = frontier.pop()
            for p in gens:
                y = act(p, x)
                if y not in orb:
                    orb.add(y)
                    frontier.append(y)
        orbits.append(tuple(sorted(orb)))
        for x in orb:
            orbit_of[x] = it
    return tuple(orbits)


def transitivity(g: Graph) -> dict:
    info = automorphisms(g)
    vt = len(info.vertex_orbits) <= 1
    et = len(info.edge_orbits) <= 1
    return {
        "vertex_transitive": vt,
        "edge_transitive": et,
        "semisymmetric": g.is_regular() and et and not vt,
    }


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return canonical_form(g1) == canonical_form(g2)
