"""Perfect matchings, 2-factor types and the parity classifier.

Two independent routes are provided on purpose: a pure-Python enumerator
(:func:`enumerate_perfect_matchings`, visitor-based) and the kernel-backed
:func:`classify`, which also hosts the multi-worker randomized refuter.
In a cubic graph M -> E\\M is a bijection between perfect matchings and
2-factors, so matching counts equal 2-factor counts.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .graphs import Bipartition, Graph, GraphError, bipartition, girth, write_graph6

Matching = frozenset  # of (u, v) tuples with u < v


def enumerate_perfect_matchings(g: Graph, visitor=None) -> int:
    """Visit every perfect matching exactly once, in the deterministic
    order given by branching on the lowest unmatched vertex with neighbors
    in index order (forced degree-1 edges are propagated eagerly).

    ``visitor`` receives a frozenset of edges and may return False to stop
    the enumeration early.  Returns the number of matchings visited.
    """
    n = g.n
    if n == 0 or n % 2 == 1:
        return 0
    match = [-1] * n
    avail = [g.degree(v) for v in range(n)]
    count = 0
    stopped = False

    def do_match(a, b, trail):
        match[a] = b
        match[b] = a
        trail.append((a, b))
        dead = False
        newly_forced = []
        for y in (a, b):
            for z in g.adjacency[y]:
                if match[z] == -1:
                    avail[z] -= 1
                    if avail[z] == 0:
                        dead = True
                    elif avail[z] == 1:
                        newly_forced.append(z)
        return dead, newly_forced

    def undo(trail, mark):
        while len(trail) > mark:
            a, b = trail.pop()
            for y in (a, b):
                for z in g.adjacency[y]:
                    if match[z] == -1:
                        avail[z] += 1
            match[a] = -1
            match[b] = -1

    def propagate(queue, trail):
        while queue:
            v = queue.pop()
            if match[v] != -1:
                continue
            if avail[v] == 0:
                return False
            if avail[v] != 1:
                continue
            p = next(z for z in g.adjacency[v] if match[z] == -1)
            dead, forced = do_match(v, p, trail)
            if dead:
                return False
            queue.extend(forced)
        return True

    def rec(trail, matched):
        nonlocal count, stopped
        if stopped:
            return
        if matched == n:
            count += 1
            if visitor is not None:
                m = frozenset((a, b) if a < b else (b, a) for a, b in trail)
                if visitor(m) is False:
                    stopped = True
            return
        u = next(v for v in range(n) if match[v] == -1)
        for w in g.adjacency[u]:
            if match[w] != -1:
                continue
            mark = len(trail)
            dead, forced = do_match(u, w, trail)
            if not dead and propagate(forced, trail):
                rec(trail, 2 * len(trail))
            undo(trail, mark)
            if stopped:
                return
    rec([], 0)
    return count


def two_factor_of(g: Graph, m) -> tuple:
    """Cycle type (non-decreasing lengths) of the 2-factor E minus m."""
    if not g.is_cubic:
        raise GraphError("2-factors as matching complements require a cubic graph")
    edges = {tuple(sorted(e)) for e in m}
    partner = [-1] * g.n
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"matching edge ({u},{v}) not in graph")
        if partner[u] != -1 or partner[v] != -1:
            raise GraphError("matching edges are not vertex-disjoint")
        partner[u] = v
        partner[v] = u
    if any(p == -1 for p in partner):
        raise GraphError("matching is not perfect")
    lengths = []
    seen = [False] * g.n
    for v0 in range(g.n):
        if seen[v0]:
            continue
        length = 0
        prev, cur = -1, v0
        while True:
            seen[cur] = True
            length += 1
            nxt = next(w for w in g.adjacency[cur] if w != partner[cur] and w != prev)
            prev, cur = cur, nxt
            if cur == v0:
                break
        lengths.append(length)
    return tuple(sorted(lengths))


# -- heuristic matching ------------------------------------------------------


def heuristic_matching(g: Graph, seed: int = 0):
    """Karp-Sipser start plus DFS augmentation; deterministic given seed.

    Exact for bipartite hosts.  For non-bipartite hosts several reseeded
    attempts are made and, if they all fail, the exhaustive enumerator
    decides (soundly) whether a perfect matching exists at all.  Returns a
    frozenset of edges or None.
    """
    if g.n % 2 == 1 or g.n == 0:
        return None
    bip = bipartition(g)
    if isinstance(bip, Bipartition):
        arrays = _kernel_arrays(g)
        match = np.empty(g.n, dtype=np.int32)
        ok, _ = kernels.ks_matching_bipartite(
            g.n, arrays["indptr"], arrays["heads"], arrays["eu"], arrays["ev"],
            arrays_color(g, bip), kernels.seed_state(seed), match,
        )
        if not ok:
            return None
        return frozenset(
            (v, int(match[v])) for v in range(g.n) if v < match[v]
        )
    # non-bipartite: fall back to the exhaustive first-matching search
    found = []

    def grab(m):
        found.append(m)
        return False

    enumerate_perfect_matchings(g, grab)
    return found[0] if found else None


def arrays_color(g: Graph, bip: Bipartition) -> np.ndarray:
    color = np.zeros(g.n, dtype=np.int8)
    for v in bip.right:
        color[v] = 1
    return color


def _kernel_arrays(g: Graph) -> dict:
    indptr, heads = g.csr()
    edges = g.edges()
    eu = np.fromiter((e[0] for e in edges), dtype=np.int32, count=len(edges))
    ev = np.fromiter((e[1] for e in edges), dtype=np.int32, count=len(edges))
    return {"indptr": indptr, "heads": heads, "eu": eu, "ev": ev}


# -- classification ----------------------------------------------------------


@dataclass
class ClassificationReport:
    graph6: str
    n: int
    mode: str
    verdict_p2fi: bool
    verdict_2fi: bool
    verdict_2fh: bool
    two_factor_count: int | None  # None = unknown (refuted early / heuristic)
    type_multiset: dict  # CycleType tuple -> count (possibly partial)
    witness: tuple | None  # (even-cycle-count 2-factor, odd one), edge lists
    status: str  # completed | refuted | not_refuted_within_budget | budget_exhausted
    elapsed: float
    seed: int
    workers: int
    notes: tuple = ()

    def to_json_line(self) -> str:
        d = {
            "graph6": self.graph6,
            "n": self.n,
            "mode": self.mode,
            "p2fi": self.verdict_p2fi,
            "2fi": self.verdict_2fi,
            "2fh": self.verdict_2fh,
            "two_factor_count": self.two_factor_count,
            "types": {",".join(map(str, k)): v for k, v in sorted(self.type_multiset.items())},
            "witness": [[list(e) for e in w] for w in self.witness] if self.witness else None,
            "status": self.status,
            "elapsed": round(self.elapsed, 6),
            "seed": self.seed,
            "workers": self.workers,
            "notes": list(self.notes),
        }
        return json.dumps(d, separators=(",", ":"), sort_keys=True)


@dataclass
class Budget:
    max_seconds: float = 3600.0
    max_matchings: int = 10**15
    max_heuristic_attempts: int = 10**9


def _factor_edges(g: Graph, match_arr) -> tuple:
    """Edge list of the 2-factor complementary to a kernel match array."""
    out = []
    for u in range(g.n):
        for w in g.adjacency[u]:
            if u < w and match_arr[u] != w:
                out.append((u, int(w)))
    return tuple(out)


def classify(
    g: Graph,
    mode: str = "exhaustive",
    budget: Budget | None = None,
    seed: int = 0,
    workers: int = 1,
    prune: bool = True,
) -> ClassificationReport:
    """Decide pseudo-2-factor-isomorphism / 2FI / 2FH for a cubic graph.

    exhaustive: enumerate all perfect matchings (kernel-backed), keeping the
        full type multiset; with ``prune`` the run stops as soon as two
        2-factors with different cycle-count parity are known.
    heuristic: randomized Karp-Sipser workers; can only refute.
    hybrid: one exhaustive worker plus workers-1 heuristic workers sharing
        a refutation flag.
    """
    t0 = time.monotonic()
    if budget is None:
        budget = Budget()
    if mode not in ("exhaustive", "heuristic", "hybrid"):
        raise GraphError(f"unknown mode {mode!r}")
    if not g.is_cubic:
        raise GraphError("classification requires a cubic graph")
    if not g.is_connected():
        raise GraphError("classification requires a connected graph")
    if g.n % 2 == 1:
        raise GraphError("odd order: no perfect matchings")
    if workers < 1:
        raise GraphError("workers must be >= 1")

    arrays = _kernel_arrays(g)
    n = g.n
    bip = bipartition(g)
    is_bip = isinstance(bip, Bipartition)
    notes = []

    stop_flag = np.zeros(1, dtype=np.int64)
    results = {}

    def run_exhaustive(full_multiset: bool, respect_stop: bool):
        type_store = np.zeros((kernels.MAX_TYPES, n // 3 + 2), dtype=np.int32)
        type_counts = np.zeros(kernels.MAX_TYPES, dtype=np.int64)
        type_lens = np.zeros(kernels.MAX_TYPES, dtype=np.int32)
        wit_even = np.full(n, -1, dtype=np.int32)
        wit_odd = np.full(n, -1, dtype=np.int32)
        status, count, n_types, parity_mask = kernels.classify_matchings(
            n,
            arrays["indptr"],
            arrays["heads"],
            1 if full_multiset else 0,
            1 if respect_stop else 0,
            budget.max_matchings,
            stop_flag,
            type_store,
            type_counts,
            type_lens,
            wit_even,
            wit_odd,
        )
        if status == kernels.ST_TYPE_OVERFLOW:
            raise GraphError("more distinct 2-factor types than supported")
        types = {}
        for t in range(n_types):
            key = tuple(int(x) for x in type_store[t, : type_lens[t]])
            types[key] = int(type_counts[t])
        results["exhaustive"] = {
            "status": int(status),
            "count": int(count),
            "types": types,
            "parity_mask": int(parity_mask),
            "wit_even": wit_even.copy(),
            "wit_odd": wit_odd.copy(),
        }

    def run_heuristic(widx: int):
        color = arrays_color(g, bip)
        state = kernels.seed_state(seed * 1000003 + 7919 * widx + widx)
        wit_even = np.full(n, -1, dtype=np.int32)
        wit_odd = np.full(n, -1, dtype=np.int32)
        parity_mask = 0
        attempts = 0
        chunk = 64
        deadline = t0 + budget.max_seconds
        while attempts < budget.max_heuristic_attempts:
            if stop_flag[0] != 0 or time.monotonic() > deadline:
                break
            parity_mask, done, state = kernels.ks_refute_parity(
                n,
                arrays["indptr"],
                arrays["heads"],
                arrays["eu"],
                arrays["ev"],
                color,
                state,
                min(chunk, budget.max_heuristic_attempts - attempts),
                stop_flag,
                wit_even,
                wit_odd,
                parity_mask,
            )
            attempts += int(done)
            if parity_mask == 3:
                break
        results[f"heuristic{widx}"] = {
            "parity_mask": int(parity_mask),
            "attempts": attempts,
            "wit_even": wit_even,
            "wit_odd": wit_odd,
        }

    threads = []
    if mode == "exhaustive":
        run_exhaustive(full_multiset=not prune, respect_stop=False)
    elif mode == "heuristic":
        if not is_bip:
            raise GraphError("heuristic mode needs a bipartite graph")
        for w in range(workers):
            threads.append(threading.Thread(target=run_heuristic, args=(w,)))
    else:  # hybrid
        threads.append(
            threading.Thread(target=run_exhaustive, kwargs={"full_multiset": not prune, "respect_stop": True})
        )
        if is_bip:
            for w in range(1, workers):
                threads.append(threading.Thread(target=run_heuristic, args=(w,)))
        elif workers > 1:
            notes.append("non-bipartite input: heuristic workers disabled")

    if threads:
        for t in threads:
            t.start()
        deadline = t0 + budget.max_seconds
        while any(t.is_alive() for t in threads):
            if time.monotonic() > deadline:
                stop_flag[0] = 2
            for t in threads:
                t.join(timeout=0.05)

    elapsed = time.monotonic() - t0

    # merge
    parity_mask = 0
    for r in results.values():
        parity_mask |= r.get("parity_mask", 0)
    refuted = parity_mask == 3
    ex = results.get("exhaustive")

    witness = None
    if refuted:
        # prefer a single worker that saw both parities (exhaustive first)
        for key in ["exhaustive"] + sorted(k for k in results if k != "exhaustive"):
            r = results.get(key)
            if r is not None and r.get("parity_mask", 0) == 3:
                witness = (_factor_edges(g, r["wit_even"]), _factor_edges(g, r["wit_odd"]))
                break
        if witness is None:  # parities seen by different workers
            we = next(r["wit_even"] for r in results.values() if r.get("parity_mask", 0) & 1)
            wo = next(r["wit_odd"] for r in results.values() if r.get("parity_mask", 0) & 2)
            witness = (_factor_edges(g, we), _factor_edges(g, wo))

    types = dict(ex["types"]) if ex else {}
    if ex and ex["status"] == kernels.ST_COMPLETED:
        count = ex["count"]
        status = "refuted" if refuted else "completed"
    elif ex and ex["status"] == kernels.ST_BUDGET:
        count = None
        status = "refuted" if refuted else "budget_exhausted"
    else:
        count = None
        status = "refuted" if refuted else "not_refuted_within_budget"

    if refuted:
        p2fi = tfi = tfh = False
    elif ex and ex["status"] == kernels.ST_COMPLETED:
        p2fi = True
        tfi = len(types) == 1
        tfh = set(types) == {(n,)} if types else False
    else:
        # not refuted within budget: tentative, flagged by status
        p2fi = True
        tfi = len(types) == 1 if ex else False
        tfh = set(types) == {(n,)} if types else False

    return ClassificationReport(
        graph6=write_graph6(g),
        n=n,
        mode=mode,
        verdict_p2fi=p2fi,
        verdict_2fi=tfi,
        verdict_2fh=tfh,
        two_factor_count=count,
        type_multiset=types,
        witness=witness,
        status=status,
        elapsed=elapsed,
        seed=seed,
        workers=workers,
        notes=tuple(notes),
    )


def dump_matchings(g: Graph, stream) -> int:
    """Write all perfect matchings, one per line, as sorted "u-v" pairs."""

    def emit(m):
        stream.write(" ".join(f"{u}-{v}" for u, v in sorted(m)) + "\n")

    return enumerate_perfect_matchings(g, emit)


def summary_tsv_header() -> str:
    return "\t".join(["graph6", "n", "girth", "count", "p2fi", "2fi", "2fh", "status", "types"])


def report_tsv_line(g: Graph, report: ClassificationReport) -> str:
    types = ";".join("(" + ",".join(map(str, k)) + ")" for k in sorted(report.type_multiset))
    count = "?" if report.two_factor_count is None else str(report.two_factor_count)
    gi = girth(g)
    return "\t".join(
        [
            report.graph6,
            str(report.n),
            str(int(gi) if gi != float("inf") else -1),
            count,
            "p2fi" if report.verdict_p2fi else "-",
            "2fi" if report.verdict_2fi else "-",
            "2fh" if report.verdict_2fh else "-",
            report.status,
            types,
        ]
    )
