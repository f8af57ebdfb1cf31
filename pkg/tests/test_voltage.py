"""Finite groups, voltage assignments and lift enumeration."""

import pytest

from cubic2f.canon import are_isomorphic
from cubic2f.constructions import named
from cubic2f.graphs import GraphError, girth, is_bipartite
from cubic2f.voltage import (
    BaseGraph,
    VoltageAssignment,
    base_of,
    enumerate_lifts,
    lift,
    make_group,
    theta_graph,
)


def _elt_order(G, a):
    x = a
    k = 1
    while x != 0:
        x = G.mul(x, a)
        k += 1
    return k


def test_cyclic_groups():
    z6 = make_group("Z6")
    assert z6.order == 6
    assert z6.mul(4, 5) == 3
    assert z6.inv(2) == 4
    assert _elt_order(z6, 1) == 6


def test_product_groups():
    g = make_group("Z3^2")
    assert g.order == 9
    assert all(_elt_order(g, a) in (1, 3) for a in range(9))
    h = make_group("Z3xZ5")
    assert h.order == 15
    assert max(_elt_order(h, a) for a in range(15)) == 15  # cyclic of order 15


def test_order_27_groups():
    na = make_group("NA27")
    assert na.order == 27
    assert max(_elt_order(na, a) for a in range(27)) == 9
    # non-abelian
    assert any(na.mul(a, b) != na.mul(b, a) for a in range(27) for b in range(27))
    h3 = make_group("Heis3")
    assert h3.order == 27
    assert max(_elt_order(h3, a) for a in range(27)) == 3
    assert any(h3.mul(a, b) != h3.mul(b, a) for a in range(27) for b in range(27))


def test_bad_group_specs():
    for spec in ("", "Q8", "Z0", "Z3^0", "foo"):
        with pytest.raises(GraphError):
            make_group(spec)


def test_base_graph_validation():
    theta = theta_graph()
    assert theta.n == 2 and theta.n_edges == 3
    assert theta.degree(0) == 3
    with pytest.raises(GraphError):
        BaseGraph(2, ((0, 1), (1, 0)), (0, 1))  # rev not an involution without fixed points


def test_voltage_assignment_validation():
    theta = theta_graph()
    z3 = make_group("Z3")
    with pytest.raises(GraphError):
        VoltageAssignment(theta, z3, (0, 0, 1, 1, 2, 2))  # rev arcs not inverse
    VoltageAssignment(theta, z3, (0, 0, 1, 2, 2, 1))  # fine


def test_lift_counts_vertices_and_edges():
    theta = theta_graph()
    z3 = make_group("Z3")
    va = VoltageAssignment(theta, z3, (0, 0, 1, 2, 2, 1))
    g = lift(va)
    assert g.n == 6 and g.m == 9 and g.is_cubic


def test_lift_rejects_nonsimple():
    theta = theta_graph()
    z3 = make_group("Z3")
    with pytest.raises(GraphError):
        lift(VoltageAssignment(theta, z3, (0, 0, 0, 0, 1, 2)))  # parallel class collides


def test_theta_z3_gives_k33():
    res = enumerate_lifts(theta_graph(), make_group("Z3"), min_girth=4)
    assert len(res) == 1
    assert are_isomorphic(res[0], named("K33"))


def test_theta_z7_gives_heawood():
    res = enumerate_lifts(theta_graph(), make_group("Z7"), min_girth=6)
    assert len(res) == 1
    assert are_isomorphic(res[0], named("Heawood"))


def test_theta_z3sq_gives_pappus():
    res = enumerate_lifts(theta_graph(), make_group("Z3^2"), min_girth=6)
    assert len(res) == 1
    assert are_isomorphic(res[0], named("Pappus"))


def test_k33_z3_contains_pappus():
    res = enumerate_lifts(base_of(named("K33")), make_group("Z3"), min_girth=6)
    assert any(are_isomorphic(g, named("Pappus")) for g in res)


def test_lifts_preserve_bipartiteness():
    for g in enumerate_lifts(base_of(named("K33")), make_group("Z3"), min_girth=4):
        assert is_bipartite(g)
        assert g.n == 18 and g.is_cubic


def test_min_girth_filter_is_exact():
    for g in enumerate_lifts(theta_graph(), make_group("Z7"), min_girth=6):
        assert girth(g) >= 6


def test_keep_assignments_roundtrip():
    res = enumerate_lifts(theta_graph(), make_group("Z7"), min_girth=6, keep_assignments=True)
    for g, va in res:
        assert are_isomorphic(lift(va), g)


def test_max_results_caps_output():
    res = enumerate_lifts(theta_graph(), make_group("Z7"), min_girth=3, max_results=2)
    assert len(res) <= 2
