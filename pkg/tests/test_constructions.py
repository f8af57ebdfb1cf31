"""Named graphs, star products, 3-cut reductions and constituents."""

import random

import pytest

from cubic2f.canon import are_isomorphic, canonical_form
from cubic2f.connectivity import nontrivial_3_edge_cuts
from cubic2f.constructions import (
    NAMED_GRAPHS,
    StarProductSpec,
    constituents,
    induced_pairing,
    named,
    star_product,
    three_cut_reduction,
)
from cubic2f.graphs import GraphError, girth, is_bipartite


def test_named_graph_basics():
    for name, n, m in [("K4", 4, 6), ("K5", 5, 10), ("K33", 6, 9),
                       ("Petersen", 10, 15), ("Heawood", 14, 21),
                       ("Pappus", 18, 27), ("Gray", 54, 81)]:
        g = named(name)
        assert (g.n, g.m) == (n, m)
        assert g.is_connected()


def test_named_unknown():
    with pytest.raises(GraphError):
        named("Desargues")
    assert "Gray" in NAMED_GRAPHS and "G30" in NAMED_GRAPHS


def test_gray_structure():
    g = named("Gray")
    assert g.is_cubic and is_bipartite(g) and girth(g) == 8


def test_g30_structure():
    g = named("G30")
    assert g.n == 30 and g.is_cubic and is_bipartite(g) and girth(g) == 6


def _trivial_spec(g1, g2, x, y):
    n1, n2 = sorted(g1.adjacency[x]), sorted(g2.adjacency[y])
    return StarProductSpec(g1, g2, x, y, tuple(zip(n1, n2)))


def test_star_product_counts():
    g = star_product(_trivial_spec(named("K33"), named("K33"), 0, 0))
    assert g.n == 10 and g.is_cubic and g.is_connected()
    assert is_bipartite(g)


def test_star_product_validates():
    h = named("Heawood")
    with pytest.raises(GraphError):
        star_product(StarProductSpec(h, h, 0, 0, ((1, 1), (2, 2), (3, 3))))


def test_reduction_inverts_product():
    rng = random.Random(5)
    for _ in range(10):
        h1, h2 = named("Heawood"), named("Pappus")
        x, y = rng.randrange(14), rng.randrange(18)
        n1 = sorted(h1.adjacency[x])
        n2 = list(sorted(h2.adjacency[y]))
        rng.shuffle(n2)
        g = star_product(StarProductSpec(h1, h2, x, y, tuple(zip(n1, n2))))
        cuts = nontrivial_3_edge_cuts(g)
        assert cuts
        a, b = three_cut_reduction(g, cuts[0])
        got = sorted([canonical_form(a), canonical_form(b)])
        want = sorted([canonical_form(h1), canonical_form(h2)])
        assert got == want


def test_reduction_then_product_roundtrip():
    g = star_product(_trivial_spec(named("Heawood"), named("Heawood"), 0, 3))
    cut = nontrivial_3_edge_cuts(g)[0]
    a, b = three_cut_reduction(g, cut)
    pairing = induced_pairing(cut)
    g2 = star_product(StarProductSpec(a, b, a.n - 1, b.n - 1, pairing))
    assert are_isomorphic(g, g2)


def test_reduction_rejects_trivial_cut():
    from cubic2f.connectivity import three_edge_cuts

    h = named("Heawood")
    trivial = [c for c in three_edge_cuts(h) if c.kind == "trivial"][0]
    with pytest.raises(GraphError):
        three_cut_reduction(h, trivial)


def test_constituents_of_e4ec_graph_is_itself():
    h = named("Pappus")
    parts = constituents(h)
    assert len(parts) == 1 and are_isomorphic(parts[0], h)


def test_constituents_of_iterated_products():
    # build H * (P * H) and (H * P) * H along different cut orders: the
    # multiset of constituents must be the same
    rng = random.Random(11)
    base = [named("Heawood"), named("Pappus"), named("K33")]
    g = base[0]
    for nxt in base[1:]:
        x = rng.randrange(g.n)
        y = rng.randrange(nxt.n)
        n1 = sorted(g.adjacency[x])
        n2 = list(sorted(nxt.adjacency[y]))
        rng.shuffle(n2)
        g = star_product(StarProductSpec(g, nxt, x, y, tuple(zip(n1, n2))))
    parts = constituents(g)
    want = sorted(canonical_form(b) for b in base)
    assert sorted(canonical_form(p) for p in parts) == want
