"""Exhaustive generation of connected cubic bipartite graphs of girth >= 6.

The search runs over k x k incidence matrices (k = n/2) with all row and
column sums 3 and pairwise row inner products <= 1 (exactly 4-cycle
freedom of the Levi graph).  Rows are built in lexicographically strictly
increasing order and a fresh column must be the smallest unused one; the
surviving Levi graphs are deduplicated by canonical form, which is
mandatory: an incidence structure and its dual can be non-isomorphic while
their Levi graphs coincide, so the matrix-level ordering alone overcounts.
"""

from __future__ import annotations

import random
import sys
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .connectivity import is_essentially_4ec
from .graphs import Graph, GraphError


def _levi(k: int, rows) -> Graph:
    """Bipartite graph: row vertices 0..k-1, column vertices k..2k-1."""
    return Graph.from_edges(2 * k, [(r, k + c) for r, row in enumerate(rows) for c in row])


def generate(n: int, sink=None) -> int:
    """Emit one representative per isomorphism class, deterministic order.

    ``sink`` gets each Graph; the count is returned.  n is soft-capped at
    26 (larger orders run, with a runtime warning).  The matrix search runs
    in :func:`cubic2f.kernels.incidence_leaves`; connectivity filtering and
    canonical dedup happen here.
    """
    if n % 2 == 1:
        raise GraphError("cubic graphs have even order")
    if n < 6:
        return 0
    if n > 26:
        warnings.warn(f"n={n} is beyond desk scale; this may take very long", stacklevel=2)
    k = n // 2
    if k > 16:
        raise GraphError("generation is limited to n <= 32 (4-bit packed labels)")
    cap = 1 << 14
    while True:
        out = np.zeros((cap - cap // 4, 3 * k), dtype=np.int32)
        hk0 = np.zeros(cap, dtype=np.int64)
        hk1 = np.zeros(cap, dtype=np.int64)
        hk2 = np.zeros(cap, dtype=np.int64)
        hstate = np.zeros(cap, dtype=np.uint8)
        nclasses, _nleaves = kernels.generate_classes(k, out, hk0, hk1, hk2, hstate)
        if nclasses >= 0:
            break
        cap *= 4
    count = 0
    for i in range(int(nclasses)):
        rows = [tuple(int(x) for x in out[i, 3 * r : 3 * r + 3]) for r in range(k)]
        g = _levi(k, rows)
        count += 1
        if sink is not None:
            sink(g)
    return count


@dataclass
class PipelineSummary:
    n: int
    total: int
    p2fi: list = field(default_factory=list)  # (graph6, essentially_4ec)
    reports: list = field(default_factory=list)


def pipeline_classify(n: int, mode: str = "exhaustive", progress=None) -> PipelineSummary:
    """Generate order-n graphs and classify each; collect the pseudo
    2-factor isomorphic ones with their essential 4-edge-connectivity."""
    from .matchings import classify

    summary = PipelineSummary(n=n, total=0)

    def sink(g):
        r = classify(g, mode=mode, prune=True)
        summary.total += 1
        summary.reports.append(r)
        if r.verdict_p2fi:
            summary.p2fi.append((r.graph6, is_essentially_4ec(g)))
        if progress is not None:
            progress(summary.total)

    generate(n, sink)
    return summary


def random_cubic_bipartite(n: int, seed: int, require_girth6: bool = False) -> Graph:
    """Random simple cubic bipartite graph on n vertices (union of three
    random perfect matchings between the sides; resampled until simple and
    connected).  With ``require_girth6`` the neighborhoods are built row by
    row so that no two left vertices share two neighbors (rejection on
    4-cycles is hopeless already at n=20).  Deterministic in ``seed``."""
    if n % 2 == 1 or n < 6:
        raise GraphError("need even n >= 6")
    k = n // 2
    rng = random.Random(seed)
    if require_girth6 and n < 14:
        raise GraphError("girth-6 cubic bipartite graphs need n >= 14")
    for _ in range(10000):
        if require_girth6:
            edges = _sample_c4_free(k, rng)
            if edges is None:
                continue
        else:
            perms = [rng.sample(range(k), k) for _ in range(3)]
            edges = {(i, k + p[i]) for p in perms for i in range(k)}
            if len(edges) != 3 * k:
                continue  # parallel edges collapsed: not cubic
        g = Graph.from_edges(n, edges)
        if not g.is_connected():
            continue
        return g
    raise GraphError("failed to sample a valid graph (seed exhausted)")


def _sample_c4_free(k: int, rng: random.Random):
    """One attempt at a C4-free cubic bipartite incidence; None on dead end."""
    rows = []
    rdeg = [0] * k
    for i in range(k):
        chosen: set[int] = set()
        for c in rng.sample(range(k), k):
            if rdeg[c] >= 3 or c in chosen:
                continue
            # adding c must not give rows i,j two common neighbors
            if any(len(chosen & rows[j]) > 0 for j in range(i) if c in rows[j]):
                continue
            chosen.add(c)
            if len(chosen) == 3:
                break
        if len(chosen) < 3:
            return None
        for c in chosen:
            rdeg[c] += 1
        rows.append(chosen)
    return {(i, k + c) for i, row in enumerate(rows) for c in row}


def _has_c4(g: Graph) -> bool:
    adjsets = [set(a) for a in g.adjacency]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if len(adjsets[u] & adjsets[v]) >= 2:
                return True
    return False


def write_stream(n: int, out=sys.stdout, count_only: bool = False) -> int:
    from .graphs import write_graph6

    if count_only:
        return generate(n)
    return generate(n, lambda g: out.write(write_graph6(g) + "\n"))
