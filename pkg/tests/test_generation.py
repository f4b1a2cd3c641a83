# Copyright 2025 The tbgraph Authors. All rights reserved.
import itertools

import networkx as nx
import pytest

from tbgraph.modules.automorphism import ScopeError
from tbgraph.modules.generation import generate_graphs
from tbgraph.modules.graph import graph_stats
from tbgraph.modules.graph6 import encode_graph6

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


@pytest.mark.parametrize('n, expected', sorted(CONNECTED_COUNTS.items()))
def test_counts(n, expected):
    graphs = generate_graphs(n)
    assert len(graphs) == expected
    assert all(g.n == n and graph_stats(g).connected for g in graphs)


@pytest.mark.parametrize('n', [4, 5, 6])
def test_matches_graph_atlas(n):
    atlas = [a for a in nx.graph_atlas_g() if a.number_of_nodes() == n and nx.is_connected(a)]
    generated = [g.to_networkx() for g in generate_graphs(n)]
    assert len(atlas) == len(generated)
    for graph in generated:
        matches = [a for a in atlas if nx.is_isomorphic(a, graph)]
        assert len(matches) == 1


def test_pairwise_non_isomorphic():
    generated = [g.to_networkx() for g in generate_graphs(5)]
    for a, b in itertools.combinations(generated, 2):
        assert not nx.is_isomorphic(a, b)


def test_sorted_by_edges_then_graph6():
    graphs = generate_graphs(5)
    keys = [(g.m, encode_graph6(g)) for g in graphs]
    assert keys == sorted(keys)
    assert graphs[0].m == 4
    assert graphs[-1].m == 10


@pytest.mark.slow
def test_seven_vertices():
    assert len(generate_graphs(7)) == 853


def test_scope():
    with pytest.raises(ScopeError):
        generate_graphs(9)
    with pytest.raises(ValueError):
        generate_graphs(0)
