"""Independent reference implementations used to cross-check the package.

Deliberately naive: correctness over speed, no shared code with the main
algorithms beyond the Graph container.
"""

from itertools import combinations, permutations

from cubic2f.graphs import Graph


def matching_count_subsets(g: Graph) -> int:
    """Count perfect matchings by brute force over edge subsets."""
    n = g.n
    if n % 2 == 1:
        return 0
    edges = g.edges()
    count = 0
    for sub in combinations(edges, n // 2):
        cover = set()
        ok = True
        for u, v in sub:
            if u in cover or v in cover:
                ok = False
                break
            cover.add(u)
            cover.add(v)
        if ok and len(cover) == n:
            count += 1
    return count


def matching_count_permanent(g: Graph, left, right) -> int:
    """Perfect matchings of a bipartite graph = permanent of the
    biadjacency matrix, via Ryser's inclusion-exclusion formula."""
    k = len(left)
    assert len(right) == k
    rightpos = {v: j for j, v in enumerate(right)}
    rowmask = [0] * k
    for i, u in enumerate(left):
        for w in g.adjacency[u]:
            rowmask[i] |= 1 << rightpos[w]
    total = 0
    for s in range(1 << k):
        prod = 1
        for i in range(k):
            prod *= bin(rowmask[i] & s).count("1")
            if prod == 0:
                break
        total += (-1) ** (k - bin(s).count("1")) * prod
    return total


def two_factor_types_naive(g: Graph):
    """Multiset of 2-factor cycle types by checking every perfect matching
    subset; independent cycle tracing."""
    types = {}
    n = g.n
    for sub in combinations(g.edges(), n // 2):
        cover = set()
        ok = True
        for u, v in sub:
            if u in cover or v in cover:
                ok = False
                break
            cover.add(u)
            cover.add(v)
        if not ok or len(cover) != n:
            continue
        msub = set(sub)
        rest = [e for e in g.edges() if e not in msub]
        adj = {v: [] for v in range(n)}
        for u, v in rest:
            adj[u].append(v)
            adj[v].append(u)
        seen = set()
        lens = []
        for s in range(n):
            if s in seen:
                continue
            length = 0
            prev, cur = None, s
            while True:
                seen.add(cur)
                length += 1
                a, b = adj[cur]
                nxt = a if a != prev else b
                prev, cur = cur, nxt
                if cur == s:
                    break
            lens.append(length)
        t = tuple(sorted(lens))
        types[t] = types.get(t, 0) + 1
    return types


def automorphism_count_naive(g: Graph) -> int:
    """|Aut| by trying all vertex permutations (tiny graphs only)."""
    edges = {frozenset(e) for e in g.edges()}
    count = 0
    for p in permutations(range(g.n)):
        if all(frozenset((p[u], p[v])) in edges for u, v in edges):
            count += 1
    return count


def girth_naive(g: Graph):
    """Shortest cycle by DFS over all simple paths (tiny graphs only)."""
    best = float("inf")

    def walk(start, path):
        nonlocal best
        v = path[-1]
        for w in g.adjacency[v]:
            if w == start and len(path) >= 3:
                best = min(best, len(path))
            elif w > start and w not in path and len(path) < best - 1:
                walk(start, path + [w])

    for s in range(g.n):
        walk(s, [s])
    return best


def isomorphic_naive(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    e2 = {frozenset(e) for e in g2.edges()}
    degs1 = sorted(len(a) for a in g1.adjacency)
    degs2 = sorted(len(a) for a in g2.adjacency)
    if degs1 != degs2:
        return False
    for p in permutations(range(g1.n)):
        if all(frozenset((p[u], p[v])) in e2 for u, v in g1.edges()):
            return True
    return False
