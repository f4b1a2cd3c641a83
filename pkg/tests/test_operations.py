# Copyright 2025 The tbgraph Authors. All rights reserved.
import itertools
from collections import Counter
from fractions import Fraction

import pytest

from tbgraph.modules.cycles import cycle_spectrum
from tbgraph.modules.graph import graph_stats, named_graph
from tbgraph.modules.operations import add_pendant, clique_sum_vertex, disjoint_union, path_join
from tbgraph.modules.symmetry import Level, Overall, classify


def test_add_pendant(k4):
    g = add_pendant(k4, 2)
    assert (g.n, g.m) == (5, 7)
    assert g.has_edge(2, 4)
    assert g.degree(4) == 1


def test_disjoint_union():
    k3 = named_graph('K3')
    g = disjoint_union(k3, k3)
    assert (g.n, g.m) == (6, 6)
    assert g.has_edge(3, 4) and not g.has_edge(2, 3)


def test_clique_sum_identifies_vertices(k4):
    g = clique_sum_vertex(k4, 0, k4, 0)
    assert (g.n, g.m) == (7, 12)
    assert g.degree(0) == 6
    assert g.has_edge(0, 4) and g.has_edge(4, 6)


def test_clique_sum_labels_skip_the_merged_vertex(k4):
    path = named_graph('C3')
    g = clique_sum_vertex(path, 1, k4, 2)
    # k4 vertices 0, 1, 3 land on 3, 4, 5; vertex 2 merges onto 1
    assert g.n == 6
    assert g.has_edge(1, 3) and g.has_edge(1, 5) and g.has_edge(3, 4)


@pytest.mark.parametrize('k, n, m', [(0, 8, 13), (1, 9, 14), (2, 10, 15)])
def test_path_join(k4, k, n, m):
    g = path_join(k4, 0, k4, 0, k)
    assert (g.n, g.m) == (n, m)
    walk = [0] + list(range(8, 8 + k)) + [4]
    for a, b in zip(walk, walk[1:]):
        assert g.has_edge(a, b)


def test_bad_arguments(k4):
    with pytest.raises(ValueError):
        add_pendant(k4, 4)
    with pytest.raises(ValueError):
        clique_sum_vertex(k4, 0, k4, -1)
    with pytest.raises(ValueError):
        path_join(k4, 0, k4, 0, -1)


#------------------------ cycle structure ------------------------#

SUMMANDS = ['K4', 'C5', 'K2,3', 'K3,3']
SUMMAND_PAIRS = [(a, b, v1, v2)
                 for a, b in itertools.combinations_with_replacement(SUMMANDS, 2)
                 for v1, v2 in ((0, 0), (1, 2))]


def _spectrum(g):
    return +Counter(cycle_spectrum(g))


@pytest.mark.parametrize('a, b, v1, v2', SUMMAND_PAIRS)
def test_cycles_stay_inside_the_summands(a, b, v1, v2):
    g1, g2 = named_graph(a), named_graph(b)
    expected = _spectrum(g1) + _spectrum(g2)
    assert _spectrum(disjoint_union(g1, g2)) == expected
    assert _spectrum(clique_sum_vertex(g1, v1, g2, v2)) == expected
    for k in (0, 2):
        assert _spectrum(path_join(g1, v1, g2, v2, k)) == expected


@pytest.mark.parametrize('name', SUMMANDS + ['petersen'])
def test_pendant_keeps_cycles_and_adds_a_leaf(name):
    g = named_graph(name)
    assert not graph_stats(g).has_pendant
    for v in range(g.n):
        h = add_pendant(g, v)
        assert graph_stats(h).has_pendant
        assert graph_stats(h).min_degree == 1
        assert _spectrum(h) == _spectrum(g)


#------------------------ classification of composites ------------------------#

def test_union_of_equal_cliques_keeps_the_ratio(k4):
    report = classify(disjoint_union(k4, k4))
    status = report.status(4, 3)
    assert status.level.almost
    assert status.rho == 1
    assert report.overall is Overall.TB


def test_union_of_different_cliques_fails_on_edges(k4):
    report = classify(disjoint_union(k4, named_graph('K5')))
    assert report.status(4, 3).level is Level.FAIL_EDGE
    assert report.overall is Overall.NEITHER


def test_pendant_keeps_the_rho_table(k4):
    report = classify(add_pendant(k4, 2))
    assert report.rho_table() == classify(k4).rho_table() == [(4, 3, Fraction(1))]
    assert report.overall is Overall.TB


@pytest.mark.parametrize('k', [0, 1, 3])
def test_path_join_of_cliques_is_tb(k4, k):
    report = classify(path_join(k4, 0, k4, 0, k))
    assert report.overall is Overall.TB
    assert report.rho_table() == [(4, 3, Fraction(1))]
