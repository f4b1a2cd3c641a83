# Copyright 2025 The tbgraph Authors. All rights reserved.
import math

import pytest

from tbgraph.modules.automorphism import (
    ScopeError,
    automorphism_group,
    enumerate_arcs,
    is_edge_transitive,
    is_s_arc_transitive,
    transitivity_profile,
)
from tbgraph.modules.generation import generate_graphs
from tbgraph.modules.graph import Graph, graph_stats, named_graph


@pytest.mark.parametrize('spec, order', [
    ('K4', 24),
    ('C5', 10),
    ('K2,3', 12),
    ('Q3', 48),
    ('petersen', 120),
    ('heawood', 336),
])
def test_group_orders(spec, order):
    g = named_graph(spec)
    group = automorphism_group(g)
    assert len(group) == order
    assert tuple(range(g.n)) in group
    for perm in group[:10]:
        assert g.relabel(perm) == g


def test_null_graph_group():
    assert automorphism_group(Graph(0)) == [()]


def test_arc_counts(petersen):
    assert len(enumerate_arcs(named_graph('K3'), 2)) == 6
    for s in range(5):
        expected = 10 if s == 0 else 10 * 3 * 2**(s - 1)
        assert len(enumerate_arcs(petersen, s)) == expected
    with pytest.raises(ValueError):
        enumerate_arcs(petersen, -1)


def test_arcs_never_step_back():
    for arc in enumerate_arcs(named_graph('K4'), 3):
        assert all(arc[i] != arc[i + 2] for i in range(len(arc) - 2))


def test_heawood_is_4_arc_transitive(heawood):
    for s in range(5):
        assert is_s_arc_transitive(heawood, s)


def test_petersen_is_exactly_3_arc_transitive(petersen):
    for s in range(4):
        assert is_s_arc_transitive(petersen, s)
    assert not is_s_arc_transitive(petersen, 4)


def test_octahedron_is_1_but_not_2_arc_transitive():
    g = named_graph('K2,2,2')
    assert is_s_arc_transitive(g, 1)
    assert not is_s_arc_transitive(g, 2)


def test_k23_is_edge_but_not_vertex_transitive():
    g = named_graph('K2,3')
    assert is_edge_transitive(g)
    assert not is_s_arc_transitive(g, 0)


def test_vacuous_transitivity():
    edge = named_graph('K2')
    assert enumerate_arcs(edge, 2) == []
    assert is_s_arc_transitive(edge, 2)
    profile = transitivity_profile(edge, 3)
    assert profile.vacuous == [2, 3]
    assert profile.max_arc_transitivity == 3


def test_transitivity_profile(petersen):
    profile = transitivity_profile(petersen, 4)
    assert profile.vertex_transitive and profile.edge_transitive
    assert profile.group_order == 120
    assert profile.max_arc_transitivity == 3
    assert profile.per_s == {0: True, 1: True, 2: True, 3: True, 4: False}
    assert profile.to_json()['per_s']['4'] is False


def test_scope_guard():
    big = named_graph('C21')
    with pytest.raises(ScopeError):
        automorphism_group(big)
    with pytest.raises(ScopeError):
        is_s_arc_transitive(big, 1)


@pytest.mark.parametrize('spec', ['K4', 'C5', 'K2,3', 'Q3', 'petersen'])
def test_group_is_closed_under_composition_and_inverse(spec):
    group = automorphism_group(named_graph(spec))
    members = set(group)
    for p in group:
        inverse = [0] * len(p)
        for v, image in enumerate(p):
            inverse[image] = v
        assert tuple(inverse) in members
        for q in group:
            assert tuple(p[q[v]] for v in range(len(p))) in members


@pytest.mark.parametrize('n', range(1, 8))
def test_complete_graph_group_order(n):
    assert len(automorphism_group(named_graph(f"K{n}"))) == math.factorial(n)


@pytest.mark.parametrize('spec, s_cap, per_s, top', [
    ('K1,3', 3, {0: False, 1: False, 2: True, 3: True}, 3),
    ('K1,2', 2, {0: False, 1: False, 2: True}, 2),
])
def test_transitivity_is_decided_per_s(spec, s_cap, per_s, top):
    profile = transitivity_profile(named_graph(spec), s_cap)
    assert profile.per_s == per_s
    assert profile.max_arc_transitivity == top
    assert not profile.vertex_transitive


def test_profile_without_any_transitive_s():
    profile = transitivity_profile(named_graph('K2,3'), 1)
    assert profile.per_s == {0: False, 1: False}
    assert profile.max_arc_transitivity is None


def test_arc_transitivity_is_monotone_without_leaves():
    corpus = [g for n in range(3, 7) for g in generate_graphs(n)
              if graph_stats(g).min_degree >= 2]
    corpus += [named_graph(spec) for spec in ('petersen', 'heawood', 'Q3', 'K3,3', 'K2,2,2')]
    for g in corpus:
        passing = [is_s_arc_transitive(g, s) for s in range(4)]
        for s in range(1, 4):
            assert passing[s] <= passing[s - 1], (g, s)
