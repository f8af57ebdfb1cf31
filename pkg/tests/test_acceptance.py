"""Acceptance battery: seven criteria, one test (= one pass/fail line) each.

Run with ``pytest -v tests/test_acceptance.py``.  Criterion 3 includes the
n=26 generation run and dominates the runtime (tens of minutes on one
core); everything else finishes in a few minutes.  The optional extended
lift search in criterion 5 (hours) is enabled with CUBIC2F_ACCEPT_EXTENDED=1.
"""

import os
import random

import pytest

from cubic2f.canon import are_isomorphic, automorphisms, canonical_form, transitivity
from cubic2f.connectivity import cyclic_edge_connectivity, is_essentially_4ec
from cubic2f.constructions import StarProductSpec, constituents, named, star_product
from cubic2f.generate import generate, random_cubic_bipartite
from cubic2f.graphs import bipartition, girth
from cubic2f.matchings import classify, enumerate_perfect_matchings, two_factor_of
from cubic2f.voltage import base_of, enumerate_lifts, make_group, theta_graph

from oracles import matching_count_permanent, matching_count_subsets


def _full(g):
    return classify(g, mode="exhaustive", prune=False)


def test_criterion_1_known_graph_battery():
    r = _full(named("K33"))
    assert r.verdict_2fh and r.type_multiset == {(6,): 6}

    r = _full(named("Heawood"))
    assert r.verdict_2fh and r.type_multiset == {(14,): 24}

    r = _full(named("Pappus"))
    assert r.verdict_p2fi and not r.verdict_2fh
    assert set(r.type_multiset) == {(18,), (6, 6, 6)}

    r = _full(named("G30"))
    assert r.verdict_p2fi
    assert r.two_factor_count == 312
    assert set(r.type_multiset) == {(6, 6, 18), (6, 10, 14), (10, 10, 10), (30,)}

    r = _full(named("Gray"))
    assert r.verdict_p2fi
    assert r.two_factor_count == 10752
    assert set(r.type_multiset) == {(54,), (18, 18, 18), (14, 14, 26)}


def test_criterion_2_structural_battery():
    gray = named("Gray")
    assert girth(gray) == 8
    assert cyclic_edge_connectivity(gray) == 8
    assert automorphisms(gray).group_order == 1296
    assert transitivity(gray)["semisymmetric"]
    assert is_essentially_4ec(gray)

    g30 = named("G30")
    assert girth(g30) == 6
    assert cyclic_edge_connectivity(g30) == 6
    assert automorphisms(g30).group_order == 144
    t = transitivity(g30)
    assert not t["vertex_transitive"] and not t["edge_transitive"]
    assert is_essentially_4ec(g30)


# shared by criteria 3 and 4 so generation runs once
_GENERATED: dict[int, list] = {}


def _generated(n):
    if n not in _GENERATED:
        out = []
        generate(n, out.append)
        _GENERATED[n] = out
    return _GENERATED[n]


def test_criterion_3_generator_table():
    want = {14: 1, 16: 1, 18: 3, 20: 10, 22: 28, 24: 162, 26: 1201}
    for n, count in want.items():
        assert len(_generated(n)) == count, f"n={n}"
    assert are_isomorphic(_generated(14)[0], named("Heawood"))
    assert any(are_isomorphic(g, named("Pappus")) for g in _generated(18))


def test_criterion_4_mini_search():
    # among all generated graphs (n <= 26), the only essentially
    # 4-edge-connected p2fi ones are Heawood and Pappus; with K33 (n=6,
    # below the generator's range) these are the only known examples
    survivors = []
    for n in (14, 16, 18, 20, 22, 24, 26):
        for g in _generated(n):
            if not is_essentially_4ec(g):
                continue
            r = classify(g, mode="hybrid", seed=0)
            if r.verdict_p2fi:
                assert r.status in ("completed", "refuted")
                survivors.append(g)
    assert len(survivors) == 2
    assert any(are_isomorphic(g, named("Heawood")) for g in survivors)
    assert any(are_isomorphic(g, named("Pappus")) for g in survivors)
    assert _full(named("K33")).verdict_p2fi and is_essentially_4ec(named("K33"))


def test_criterion_5_voltage_battery():
    z3 = make_group("Z3")

    res = enumerate_lifts(theta_graph(), z3, min_girth=4)
    assert len(res) == 1 and are_isomorphic(res[0], named("K33"))

    res = enumerate_lifts(theta_graph(), make_group("Z7"), min_girth=6)
    assert len(res) == 1 and are_isomorphic(res[0], named("Heawood"))

    res = enumerate_lifts(base_of(named("K33")), z3, min_girth=6)
    assert any(are_isomorphic(g, named("Pappus")) for g in res)

    res = enumerate_lifts(base_of(named("Pappus")), z3, min_girth=8)
    assert any(are_isomorphic(g, named("Gray")) for g in res)

    g30_form = canonical_form(named("G30"))
    for g in enumerate_lifts(theta_graph(), make_group("Z15"), min_girth=3):
        assert canonical_form(g) != g30_form

    if os.environ.get("CUBIC2F_ACCEPT_EXTENDED"):
        res = enumerate_lifts(base_of(named("Gray")), z3, min_girth=10)
        assert len(res) == 1
        assert girth(res[0]) == 12
        r = classify(res[0], mode="hybrid", seed=0)
        assert not r.verdict_p2fi and r.status == "refuted"


def test_criterion_6_oracle_equivalence():
    # all generated graphs with n <= 22 (1 + 1 + 3 + 10 + 28 = 43)
    pool = [g for n in (14, 16, 18, 20, 22) for g in _generated(n)]
    assert len(pool) == 43
    for g in pool:
        bip = bipartition(g)
        assert enumerate_perfect_matchings(g) == matching_count_permanent(g, bip.left, bip.right)

    # 1000 random cubic bipartite graphs, n <= 20; the subset brute force
    # is only tractable for the smallest orders, the permanent covers the rest
    rng = random.Random(2026)
    sizes = [8, 10, 12, 14, 16, 18, 20]
    for i in range(1000):
        n = sizes[i % len(sizes)]
        g = random_cubic_bipartite(n, seed=rng.randrange(1 << 30))
        count = enumerate_perfect_matchings(g)
        bip = bipartition(g)
        assert count == matching_count_permanent(g, bip.left, bip.right)
        if n <= 10:
            assert count == matching_count_subsets(g)
        if i % 25 == 0:
            r1 = classify(g, mode="exhaustive", prune=False)
            r2 = classify(g, mode="hybrid", seed=i)
            assert r1.verdict_p2fi == r2.verdict_p2fi


def test_criterion_7_invariant_suite():
    rng = random.Random(7)

    # matching <-> 2-factor bijection, even cycle types, sums equal n
    for seed in range(10):
        g = random_cubic_bipartite(14 + 2 * (seed % 4), seed=seed)
        types = []
        enumerate_perfect_matchings(g, lambda m, g=g: types.append(two_factor_of(g, m)))
        assert len(types) == enumerate_perfect_matchings(g)
        for t in types:
            assert sum(t) == g.n
            assert all(c % 2 == 0 for c in t)  # bipartite: even cycles only

    # 2FH => n == 2 (mod 4): a cubic bipartite 2FH graph of order n == 0
    # (mod 4) would have a Hamiltonian 2-factor with an even cycle count
    # impossible to pair with the odd-count requirement; verify on the corpus
    for name in ("K33", "Heawood"):
        g = named(name)
        r = _full(g)
        assert r.verdict_2fh
        assert g.n % 4 == 2
    for seed in range(30):
        g = random_cubic_bipartite(16, seed=seed)
        assert not _full(g).verdict_2fh  # n % 4 == 0: never 2FH

    # canonical-form relabeling invariance: 50 graphs x 100 permutations
    graphs = [random_cubic_bipartite(10 + 2 * (s % 5), seed=s) for s in range(50)]
    for g in graphs:
        ref = canonical_form(g)
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == ref

    # constituents confluence: 200 random iterated star products
    parts_pool = [named("K33"), named("Heawood"), named("Pappus")]
    for trial in range(200):
        pieces = [parts_pool[rng.randrange(3)] for _ in range(rng.randrange(2, 4))]
        g = pieces[0]
        for nxt in pieces[1:]:
            x, y = rng.randrange(g.n), rng.randrange(nxt.n)
            n1 = sorted(g.adjacency[x])
            n2 = sorted(nxt.adjacency[y])
            rng.shuffle(n2)
            g = star_product(StarProductSpec(g, nxt, x, y, tuple(zip(n1, n2))))
        got = sorted(canonical_form(p) for p in constituents(g))
        want = sorted(canonical_form(p) for p in pieces)
        assert got == want
