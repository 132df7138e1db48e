"""Smoke tests for the ftspare Python module."""

import pytest

import ftspare as ft


def test_graph_basics():
    g = ft.make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.n == 4
    assert g.edge_count() == 4
    assert g.adjacent(0, 1)
    assert not g.adjacent(0, 2)
    assert ft.complete_graph(10).edge_count() == 45

    with pytest.raises(ValueError):
        ft.make_graph(2, [(0, 0)])


def test_graph6_round_trip():
    q3 = ft.hypercube(3)
    enc = ft.emit_graph6(q3)
    assert ft.parse_graph6(enc) == q3
    assert ft.parse_graph6("C~") == ft.complete_graph(4)
    assert ft.emit_graph6(ft.complete_graph(1)) == "@"


def test_complement_and_deletion():
    c4 = ft.cycle_graph(4)
    cc = ft.complement(c4)
    assert cc.edge_count() == 2
    survivors, relabel = ft.delete_vertices(ft.hypercube(3), ft.VertexSet([0, 7]))
    assert survivors.n == 6
    assert survivors.edge_count() == 6
    assert relabel[0] == -1 and relabel[7] == -1


def test_order21_group():
    x = ft.parse_cycles("(1 2 3 4 5 6 7)", 7)
    y = ft.parse_cycles("(2 3 5)(4 7 6)", 7)
    g = ft.PermGroup(7, [x, y])
    assert g.order() == 21
    assert ft.compose(x, y) == ft.compose(y, ft.compose(x, x))
    assert ft.is_k_homogeneous(g, 2)
    assert not ft.is_k_transitive(g, 2)
    assert len(ft.orbit_of_tuple(g, [0, 1])) == 21
    assert ft.count_orbits_on_ksubsets(g, 3) == 3


def test_automorphism_groups():
    assert ft.automorphism_group(ft.hypercube(3)).order == 48
    assert ft.automorphism_group(ft.cycle_graph(4)).order == 8
    aut = ft.automorphism_group(ft.complete_graph(20))
    assert aut.order == 2432902008176640000  # 20!
    assert aut.vertex_transitive

    spectrum = ft.automorphism_group(ft.cycle_graph(4)).homogeneity
    assert spectrum == [True, True, False, True, True]


def test_subgraph_containment():
    damaged, _ = ft.delete_vertices(ft.hypercube(3), ft.VertexSet([0, 7]))
    witness = ft.contains_subgraph(damaged, ft.cycle_graph(6))
    assert witness is not None
    assert ft.check_embedding(damaged, ft.cycle_graph(6), witness)
    assert ft.contains_subgraph(ft.cycle_graph(4), ft.complete_graph(3)) is None


def test_fault_tolerance():
    q3 = ft.hypercube(3)
    x = ft.build_global_sparing(q3, 2, ft.SparePolicy.universal)
    assert x.n == 10
    assert ft.degree_sequence(x) == [5] * 8 + [8, 8]
    rc = ft.is_k_fault_tolerant_realization(x, q3, 2)
    assert rc.verdict
    assert rc.checked_subsets == 45

    bad = ft.make_graph(10, q3.edges)
    rc = ft.is_k_fault_tolerant_realization(bad, q3, 2)
    assert not rc.verdict
    assert rc.counterexample.members == [0, 1]


def test_reconfiguration():
    k10 = ft.complete_graph(10)
    plan = ft.find_reconfiguration(k10, ft.VertexSet([8, 9]), ft.VertexSet([0, 5]))
    assert plan is not None
    assert ft.is_automorphism(k10, plan.automorphism)

    x = ft.build_global_sparing(ft.hypercube(3), 2, ft.SparePolicy.universal)
    assert ft.find_reconfiguration(x, ft.VertexSet([8, 9]), ft.VertexSet([0, 1])) is None


def test_verification_suites():
    assert ft.verify_lemma_s7().ok()
    report = ft.verify_theorem_3subsets(5, 5)
    assert report.ok()
    assert report.instances_checked == 1024
    assert len(report.boundary_witnesses) == 6
    assert ft.verify_group_lemmas().ok()


def test_enumeration():
    graphs = ft.enumerate_labeled_graphs(4)
    assert len(graphs) == 64
    assert graphs[-1].is_complete()
