"""Core graph container, bipartition, girth and graph6 codec."""

import pytest

from cubic2f.constructions import named
from cubic2f.graphs import (
    Bipartition,
    Graph,
    Graph6Error,
    GraphError,
    NotBipartite,
    bipartition,
    girth,
    is_bipartite,
    parse_graph6,
    write_graph6,
)
from cubic2f.generate import random_cubic_bipartite

from oracles import girth_naive


def test_from_edges_rejects_loops_and_parallel():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 5)])


def test_basic_accessors():
    g = named("K33")
    assert g.n == 6 and g.m == 9
    assert g.is_cubic and g.is_regular()
    assert g.has_edge(0, 3) and not g.has_edge(0, 1)
    assert len(g.edges()) == 9
    assert g.degree(0) == 3


def test_relabel_preserves_structure():
    g = named("Petersen")
    perm = [(i * 3 + 1) % 10 for i in range(10)]
    h = g.relabel(perm)
    assert h.m == g.m
    assert sorted(len(a) for a in h.adjacency) == [3] * 10


def test_connected_components():
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    comps = g.connected_components()
    assert sorted(sorted(c) for c in comps) == [[0, 1], [2, 3], [4]]
    assert not g.is_connected()
    assert named("Heawood").is_connected()


def test_bipartition_and_odd_cycle_witness():
    bip = bipartition(named("K33"))
    assert isinstance(bip, Bipartition)
    assert sorted(bip.left + bip.right) == list(range(6))
    res = bipartition(named("Petersen"))
    assert isinstance(res, NotBipartite)
    cyc = res.odd_cycle
    assert len(cyc) % 2 == 1 and len(cyc) >= 3
    g = named("Petersen")
    for i, v in enumerate(cyc):
        assert g.has_edge(v, cyc[(i + 1) % len(cyc)])
    assert is_bipartite(named("Gray")) and not is_bipartite(named("K4"))


@pytest.mark.parametrize(
    "name,expect",
    [("K4", 3), ("K33", 4), ("Petersen", 5), ("Heawood", 6), ("Pappus", 6)],
)
def test_girth_known(name, expect):
    assert girth(named(name)) == expect


def test_girth_forest():
    assert girth(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])) == float("inf")


def test_girth_matches_naive_on_random_graphs():
    for seed in range(20):
        g = random_cubic_bipartite(12, seed=seed)
        assert girth(g) == girth_naive(g)


def test_graph6_roundtrip_named():
    for name in ("K4", "K5", "K33", "Petersen", "Heawood", "Pappus", "Gray"):
        g = named(name)
        h = parse_graph6(write_graph6(g))
        assert h.n == g.n and h.adjacency == g.adjacency


def test_graph6_roundtrip_random():
    for seed in range(30):
        g = random_cubic_bipartite(16, seed=seed)
        assert parse_graph6(write_graph6(g)).adjacency == g.adjacency


def test_graph6_known_encodings():
    # A_ is the single edge on 2 vertices; D?{ is documented in the format spec
    assert write_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"
    g = parse_graph6("D?{")
    assert g.n == 5
    assert parse_graph6(">>graph6<<A_").m == 1


def test_graph6_large_order_header():
    g = random_cubic_bipartite(80, seed=1)
    assert g.n == 80
    s = write_graph6(g)
    # n=80 > 62 forces the 4-byte header
    assert s.startswith("~")
    assert parse_graph6(s).adjacency == g.adjacency


def test_graph6_errors_carry_offsets():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error) as ei:
        parse_graph6("Dxxxxxxx")  # trailing garbage
    assert ei.value.offset > 0
    with pytest.raises(Graph6Error):
        parse_graph6("D" + chr(30))  # byte below printable range
    with pytest.raises(Graph6Error):
        parse_graph6("C")  # truncated body
    # nonzero padding bits: C~ has n=4 (6 bits used), craft bad padding
    with pytest.raises(Graph6Error):
        parse_graph6("B" + chr(63 + 0b000001))  # n=3 needs 3 bits, pad must be 0
