"""Voltage graphs over finite groups and their derived covers (lifts).

A base multigraph is stored as a set of arcs with a reversal involution,
so loops and parallel edges are fine.  A voltage assignment maps each arc
to a group element with nu(rev a) = nu(a)^-1; the lift has vertex set
V x Gamma and edges (u,x) ~ (v, x*nu(a)) for every arc a = u->v.

``enumerate_lifts`` walks all assignments up to the usual spanning-tree
normalization (identity voltage on tree arcs), pruning partial
assignments whose short closed base walks already force a cycle below the
requested girth, and deduplicating the surviving lifts by canonical form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .canon import canonical_form
from .graphs import Graph, GraphError, girth


# -- groups -----------------------------------------------------------------


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its Cayley table.

    Elements are 0..order-1 with 0 the identity.  ``table[a][b]`` is a*b.
    """

    name: str
    table: tuple  # tuple of tuples

    def __post_init__(self):
        n = len(self.table)
        for row in self.table:
            if len(row) != n:
                raise GraphError("Cayley table must be square")
            if sorted(row) != list(range(n)):
                raise GraphError("Cayley table rows must be permutations")
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise GraphError("element 0 must be the identity")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if (
                        self.table[self.table[a][b]][c]
                        != self.table[a][self.table[b][c]]
                    ):
                        raise GraphError("Cayley table is not associative")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(0)


def _cyclic(k: int) -> FiniteGroup:
    table = tuple(tuple((a + b) % k for b in range(k)) for a in range(k))
    return FiniteGroup(f"Z{k}", table)


def _direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    n1, n2 = g1.order, g2.order

    def enc(a, b):
        return a * n2 + b

    table = tuple(
        tuple(
            enc(g1.mul(a1, b1), g2.mul(a2, b2))
            for b1 in range(n1)
            for b2 in range(n2)
        )
        for a1 in range(n1)
        for a2 in range(n2)
    )
    return FiniteGroup(f"{g1.name}x{g2.name}", table)


def _nonabelian27_exp9() -> FiniteGroup:
    """Z9 semidirect Z3, the generator of Z3 acting as a -> a^4 on Z9.

    Elements (i, j) with i mod 9, j mod 3 and
    (i1,j1)*(i2,j2) = (i1 + 4^j1 * i2 mod 9, j1 + j2 mod 3).
    """

    def enc(i, j):
        return i * 3 + j

    def mul(i1, j1, i2, j2):
        return enc((i1 + pow(4, j1, 9) * i2) % 9, (j1 + j2) % 3)

    table = tuple(
        tuple(mul(a // 3, a % 3, b // 3, b % 3) for b in range(27))
        for a in range(27)
    )
    return FiniteGroup("NA27", table)


def _heisenberg3() -> FiniteGroup:
    """The extraspecial group of order 27 and exponent 3 (upper unitriangular
    3x3 matrices over GF(3))."""

    def enc(a, b, c):
        return (a * 3 + b) * 3 + c

    def dec(x):
        return x // 9, (x // 3) % 3, x % 3

    table = []
    for x in range(27):
        a1, b1, c1 = dec(x)
        row = []
        for y in range(27):
            a2, b2, c2 = dec(y)
            row.append(enc((a1 + a2) % 3, (b1 + b2) % 3, (c1 + c2 + a1 * b2) % 3))
        table.append(tuple(row))
    return FiniteGroup("Heis3", tuple(table))


def make_group(spec: str) -> FiniteGroup:
    """Parse a group spec: "Zk", "Zk^e", products with "x", or the named
    order-27 groups "NA27" (exponent 9) and "Heis3" (exponent 3)."""
    spec = spec.strip()
    factors = []
    for part in spec.split("x"):
        part = part.strip()
        if part in ("NA27", "nonabelian27_exp9"):
            factors.append(_nonabelian27_exp9())
        elif part in ("Heis3", "heisenberg3"):
            factors.append(_heisenberg3())
        elif part.startswith("Z"):
            body = part[1:]
            if "^" in body:
                base, exp = body.split("^")
                k, e = int(base), int(exp)
            else:
                k, e = int(body), 1
            if k < 1 or e < 1:
                raise GraphError(f"bad group spec {part!r}")
            for _ in range(e):
                factors.append(_cyclic(k))
        else:
            raise GraphError(f"bad group spec {part!r}")
    if not factors:
        raise GraphError("empty group spec")
    g = factors[0]
    for h in factors[1:]:
        g = _direct_product(g, h)
    return g


# -- base multigraphs -------------------------------------------------------


@dataclass(frozen=True)
class BaseGraph:
    """Multigraph on vertices 0..n-1 with explicit arcs.

    ``arcs[a] = (u, v)``; ``rev[a]`` is the opposite arc.  Loops have
    rev[a] != a (a loop contributes two mutually reverse arcs).
    """

    n: int
    arcs: tuple  # tuple of (tail, head)
    rev: tuple

    def __post_init__(self):
        if len(self.arcs) != len(self.rev):
            raise GraphError("arcs and rev must have equal length")
        for a, (u, v) in enumerate(self.arcs):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError("arc endpoint out of range")
            r = self.rev[a]
            if self.rev[r] != a or r == a:
                raise GraphError("rev must be a fixed-point-free involution")
            if self.arcs[r] != (v, u):
                raise GraphError("rev arc must have swapped endpoints")

    @property
    def n_edges(self) -> int:
        return len(self.arcs) // 2

    def degree(self, v: int) -> int:
        return sum(1 for u, _ in self.arcs if u == v)

    def out_arcs(self, v: int) -> list[int]:
        return [a for a, (u, _) in enumerate(self.arcs) if u == v]

    @staticmethod
    def from_edge_list(n: int, edges) -> "BaseGraph":
        """Build from (u, v) pairs; repeated pairs and loops are allowed."""
        arcs = []
        rev = []
        for u, v in edges:
            a = len(arcs)
            arcs.append((u, v))
            arcs.append((v, u))
            rev.append(a + 1)
            rev.append(a)
        return BaseGraph(n, tuple(arcs), tuple(rev))


def theta_graph() -> BaseGraph:
    """Two vertices joined by three parallel edges."""
    return BaseGraph.from_edge_list(2, [(0, 1), (0, 1), (0, 1)])


def base_of(g: Graph) -> BaseGraph:
    return BaseGraph.from_edge_list(g.n, g.edges())


# -- voltage assignments and lifts ------------------------------------------


@dataclass(frozen=True)
class VoltageAssignment:
    base: BaseGraph
    group: FiniteGroup
    voltages: tuple  # per arc, with voltages[rev[a]] == inv(voltages[a])

    def __post_init__(self):
        if len(self.voltages) != len(self.base.arcs):
            raise GraphError("one voltage per arc required")
        for a, x in enumerate(self.voltages):
            if not (0 <= x < self.group.order):
                raise GraphError("voltage out of group range")
            if self.voltages[self.base.rev[a]] != self.group.inv(x):
                raise GraphError("reverse arc must carry the inverse voltage")


def lift(va: VoltageAssignment) -> Graph:
    """Derived cover: vertices (v, x), edges (u,x)-(v, x*nu) per arc u->v.

    Raises if the derived cover is not simple (voltage 0 on a loop-free
    parallel class collision or similar)."""
    base, grp = va.base, va.group
    k = grp.order
    edges = set()
    for a, (u, v) in enumerate(base.arcs):
        if a > base.rev[a]:
            continue  # one arc per edge
        nu = va.voltages[a]
        for x in range(k):
            p = u * k + x
            q = v * k + grp.mul(x, nu)
            if p == q:
                raise GraphError("lift has a loop (identity voltage on a loop)")
            edges.add(tuple(sorted((p, q))))
    expect = base.n_edges * k
    if len(edges) != expect:
        raise GraphError("lift has parallel edges; cover is not simple")
    return Graph.from_edges(base.n * k, edges)


def _spanning_tree_arcs(base: BaseGraph) -> tuple[set, list]:
    """(set of tree arc ids (both directions), cotree arc ids one per edge)."""
    seen = {0}
    tree = set()
    stack = [0]
    while stack:
        u = stack.pop()
        for a in base.out_arcs(u):
            v = base.arcs[a][1]
            if v not in seen:
                seen.add(v)
                tree.add(a)
                tree.add(base.rev[a])
                stack.append(v)
    if len(seen) != base.n:
        raise GraphError("base graph must be connected")
    cotree = [a for a in range(len(base.arcs)) if a not in tree and a < base.rev[a]]
    return tree, cotree


def _short_closed_walks(base: BaseGraph, maxlen: int) -> list[tuple]:
    """Closed non-backtracking arc walks of length <= maxlen, one start per
    walk, as tuples of arc ids.  Length-2 walks encode parallel edges and
    the walks of length 1 loops; identity net voltage on any of these makes
    the lift non-simple, and on longer ones it creates a short cycle."""
    walks = []

    def extend(walk, at):
        # closed and cyclically non-backtracking (the wrap-around joint must
        # not reverse the first arc, or (a, rev a) would qualify)
        if at == base.arcs[walk[0]][0] and (
            len(walk) == 1 or walk[-1] != base.rev[walk[0]]
        ):
            walks.append(tuple(walk))
            # also allow continuing past the start
        if len(walk) == maxlen:
            return
        for a in base.out_arcs(at):
            if walk and a == base.rev[walk[-1]]:
                continue  # non-backtracking
            if walk and a < walk[0]:
                continue  # canonical: first arc is the minimum
            walk.append(a)
            extend(walk, base.arcs[a][1])
            walk.pop()

    for a0 in range(len(base.arcs)):
        u = base.arcs[a0][0]
        extend([a0], base.arcs[a0][1])
    # each closed walk is generated once per rotation with minimal first arc;
    # starting only from its minimal arc keeps duplicates rare, exact dedup:
    return sorted(set(walks))


def enumerate_lifts(
    base: BaseGraph,
    group: FiniteGroup,
    min_girth: int = 3,
    max_results: int | None = None,
    keep_assignments: bool = False,
):
    """All simple lifts of ``base`` by ``group`` with girth >= min_girth,
    up to isomorphism (canonical dedup), with spanning-tree normalization.

    Returns a list of Graphs, or of (Graph, VoltageAssignment) pairs when
    ``keep_assignments`` is set (one representative assignment per class).
    """
    tree, cotree = _spanning_tree_arcs(base)
    walks = _short_closed_walks(base, max(min_girth - 1, 2))
    narcs = len(base.arcs)
    volt = [0] * narcs
    # walks become checkable once every cotree arc they use is assigned;
    # index them by the last-assigned cotree position
    order = {a: i for i, a in enumerate(cotree)}

    def last_pos(walk):
        p = -1
        for a in walk:
            e = a if a < base.rev[a] else base.rev[a]
            if e in order:
                p = max(p, order[e])
        return p

    by_pos = {}
    for w in walks:
        by_pos.setdefault(last_pos(w), []).append(w)
    if -1 in by_pos:
        # walks entirely on tree arcs have identity voltage: immediately bad
        for w in by_pos[-1]:
            if len(w) < min_girth:
                return []

    seen = {}
    results = []

    def net(walk):
        x = 0
        for a in walk:
            x = group.mul(x, volt[a])
        return x

    def assign(i):
        if max_results is not None and len(results) >= max_results:
            return
        if i == len(cotree):
            va = VoltageAssignment(base, group, tuple(volt))
            g = lift(va)
            if min_girth > 3 and girth(g) < min_girth:
                return
            key = canonical_form(g)
            if key not in seen:
                seen[key] = True
                results.append((g, va) if keep_assignments else g)
            return
        a = cotree[i]
        r = base.rev[a]
        for x in range(group.order):
            volt[a] = x
            volt[r] = group.inv(x)
            ok = True
            for w in by_pos.get(i, ()):
                if len(w) < min_girth and net(w) == 0:
                    ok = False
                    break
            if ok:
                assign(i + 1)
        volt[a] = 0
        volt[r] = 0

    assign(0)
    return results
