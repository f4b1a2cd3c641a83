# Copyright 2025 The tbgraph Authors. All rights reserved.
import itertools
from collections import Counter, defaultdict
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tbgraph.modules.automorphism import is_edge_transitive
from tbgraph.modules.cycles import cycle_spectrum, incidence_profile
from tbgraph.modules.generation import generate_graphs
from tbgraph.modules.graph import NamedGraphSpec, named_graph
from tbgraph.modules.symmetry import (
    Level,
    Overall,
    check_pair,
    classify,
    rho_closed_form,
    rho_from_cycle_counts,
    total_tb_closed_form,
    total_tb_coefficient,
)


def test_k4_is_tb_symmetrical(k4):
    report = classify(k4)
    assert report.overall is Overall.TB
    assert report.cycle_lengths == [3, 4]
    assert report.status(4, 3).level is Level.FULL
    assert report.status(4, 3).rho == 1
    assert report.rho_table() == [(4, 3, Fraction(1))]


def test_single_length_graphs_are_trivial():
    for spec in ('C5', 'K2,3'):
        report = classify(named_graph(spec))
        assert report.overall is Overall.TRIVIAL
        assert report.rho_table() == []


def test_forest_is_trivial():
    report = classify(named_graph('K1,4'))
    assert report.overall is Overall.TRIVIAL
    assert report.cycle_lengths == []
    assert report.status(3, 4).level is Level.TRIVIAL


def test_octahedron_fails_on_corners():
    report = classify(named_graph('K2,2,2'))
    assert report.overall is Overall.NEITHER
    present = set(report.cycle_lengths)
    levels = [st.level for (r, s), st in report.pair_statuses.items()
              if r in present and s in present]
    assert Level.FAIL_CORNER in levels
    assert Level.FAIL_EDGE not in levels
    witness = next(st.witness for st in report.pair_statuses.values()
                   if st.level is Level.FAIL_CORNER)
    assert witness.kind == 'corner'


def test_petersen(petersen):
    report = classify(petersen)
    assert report.overall is Overall.TB
    assert report.rho_table() == [(6, 5, Fraction(1)), (8, 5, Fraction(2)), (9, 5, Fraction(3))]
    assert report.certified_rho(5, 9, Level.FULL) == Fraction(1, 3)


def test_cube_is_almost_only(cube):
    report = classify(cube)
    assert report.overall is Overall.ALMOST_ONLY
    failing = [st for st in report.pair_statuses.values() if st.level is Level.FAIL_PAIR]
    assert failing
    witness = failing[0].witness
    assert witness.kind == 'pair' and witness.rho is not None
    assert 'rho' in witness.to_json()


def _recount(g):
    # per-length edge, corner and signed non-adjacent pair counts from networkx's cycles
    edges, corners, pairs = defaultdict(Counter), defaultdict(Counter), defaultdict(Counter)
    for cycle in nx.simple_cycles(g.to_networkx()):
        r = len(cycle)
        steps = list(zip(cycle, cycle[1:] + cycle[:1]))
        es = [tuple(sorted(step)) for step in steps]
        signs = [1 if a < b else -1 for a, b in steps]
        for i in range(r):
            edges[r][es[i]] += 1
            corners[r][frozenset((es[i], es[(i + 1) % r]))] += 1
            for j in range(i + 1, r):
                if not set(es[i]) & set(es[j]):
                    pairs[r][frozenset((es[i], es[j]))] += signs[i] * signs[j]
    return edges, corners, pairs


def _proportional(r_counts, s_counts, rho):
    return all(r_counts[k] == rho * s_counts[k] for k in set(r_counts) | set(s_counts))


def test_heawood_counts_satisfy_every_condition(heawood):
    edges, corners, pairs = _recount(heawood)
    lengths = sorted(edges)
    assert lengths == [6, 8, 10, 12, 14]
    for r, s in itertools.permutations(lengths, 2):
        e = next(e for e in heawood.edges if edges[s][e])
        rho = Fraction(edges[r][e], edges[s][e])
        assert _proportional(edges[r], edges[s], rho)
        assert _proportional(corners[r], corners[s], rho)
        assert _proportional(pairs[r], pairs[s], rho)

    report = classify(heawood)
    assert report.overall is Overall.TB
    assert 'almost-tb-symmetrical-only' in report.label_note
    assert report.to_json()['label_note'] == report.label_note


def test_label_note_only_for_listed_graphs(petersen, cube):
    assert classify(petersen).label_note is None
    assert classify(cube).label_note is None
    assert classify(named_graph('heawood'), full_check=False).label_note is None


def test_clique_sum_of_k4_is_tb_symmetrical(k4_clique_sum):
    report = classify(k4_clique_sum)
    assert report.overall is Overall.TB
    assert report.rho_table() == [(4, 3, Fraction(1))]


def test_almost_only_check(petersen, cube):
    assert classify(petersen, full_check=False).overall is Overall.ALMOST
    assert classify(cube, full_check=False).overall is Overall.ALMOST
    assert classify(named_graph('K2,2,2'), full_check=False).overall is Overall.NEITHER


def test_stop_early_agrees_on_overall():
    for spec in ('K2,2,2', 'Q3', 'K5', 'petersen'):
        g = named_graph(spec)
        assert classify(g, stop_early=True).overall is classify(g).overall


def test_every_ordered_pair_is_reported(k4):
    report = classify(k4)
    assert set(report.pair_statuses) == {(r, s) for r in (3, 4) for s in (3, 4) if r != s}
    payload = report.to_json('C~')
    assert payload['overall'] == 'tb-symmetrical'
    assert payload['rho'] == [[4, 3, '1']]


def test_check_pair_arguments(k4):
    profile = incidence_profile(k4)
    with pytest.raises(ValueError):
        check_pair(profile, 3, 3)
    with pytest.raises(ValueError):
        check_pair(profile, 2, 3)
    assert check_pair(profile, 4, 3, want_full=False).level is Level.ALMOST


@pytest.mark.parametrize('n', range(4, 9))
def test_complete_graph_rho(n):
    report = classify(named_graph(f"K{n}"))
    assert report.overall is Overall.TB
    family = NamedGraphSpec('complete', (n,))
    for s in range(3, n + 1):
        for r in range(s + 1, n + 1):
            assert report.certified_rho(r, s, Level.FULL) == rho_closed_form(family, r, s)


@pytest.mark.parametrize('m, n', [(m, n) for m in range(3, 6) for n in range(m, 6)])
def test_complete_bipartite_rho(m, n):
    report = classify(named_graph(f"K{m},{n}"))
    assert report.overall is Overall.TB
    family = NamedGraphSpec('complete_bipartite', (m, n))
    for s in range(2, min(m, n) + 1):
        for r in range(s + 1, min(m, n) + 1):
            expected = rho_closed_form(family, 2 * r, 2 * s)
            assert report.certified_rho(2 * r, 2 * s, Level.FULL) == expected


def test_closed_form_values():
    assert rho_closed_form(NamedGraphSpec('complete', (6,)), 5, 3) == 6
    assert rho_closed_form(NamedGraphSpec('complete_bipartite', (3, 4)), 6, 4) == 2
    with pytest.raises(ValueError):
        rho_closed_form(NamedGraphSpec('complete', (5,)), 3, 5)
    with pytest.raises(ValueError):
        rho_closed_form(NamedGraphSpec('petersen'), 6, 5)


def test_edge_transitive_rho(petersen):
    spectrum = cycle_spectrum(petersen)
    assert rho_from_cycle_counts(spectrum, 9, 5) == 3
    assert rho_from_cycle_counts(spectrum, 6, 5) == 1
    with pytest.raises(ValueError):
        rho_from_cycle_counts(spectrum, 5, 7)


@pytest.mark.parametrize('spec, s, coefficient', [
    ('K4', 3, 2),
    ('K5', 3, 5),
    ('K6', 3, 16),
    ('K3,3', 4, 2),
    ('K3,4', 4, 3),
])
def test_total_tb_coefficient(spec, s, coefficient):
    family = NamedGraphSpec(*{
        'K4': ('complete', (4,)),
        'K5': ('complete', (5,)),
        'K6': ('complete', (6,)),
        'K3,3': ('complete_bipartite', (3, 3)),
        'K3,4': ('complete_bipartite', (3, 4)),
    }[spec])
    assert total_tb_closed_form(family) == (s, coefficient)
    assert total_tb_coefficient(classify(named_graph(spec)), s) == coefficient


def test_total_tb_coefficient_needs_tb_symmetry(cube):
    with pytest.raises(ValueError):
        total_tb_coefficient(classify(cube), 4)
    with pytest.raises(ValueError):
        total_tb_coefficient(classify(named_graph('K4')), 5)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(['K5', 'K3,3', 'K2,2,2', 'Q3', 'C6']), st.randoms(use_true_random=False))
def test_classification_ignores_labels(spec, rnd):
    g = named_graph(spec)
    perm = list(range(g.n))
    rnd.shuffle(perm)
    before, after = classify(g), classify(g.relabel(perm))
    assert after.overall is before.overall
    assert after.cycle_counts == before.cycle_counts
    assert after.rho_table() == before.rho_table()


@pytest.fixture(scope='module')
def small_graphs():
    corpus = [g for n in range(3, 7) for g in generate_graphs(n)]
    return corpus + [named_graph(spec) for spec in ('K3,3', 'K2,2,2', 'Q3', 'petersen')]


def test_reverse_orientation_inverts_rho(small_graphs):
    for g in small_graphs:
        for full_check in (True, False):
            report = classify(g, full_check=full_check)
            for (r, s), forward in report.pair_statuses.items():
                if forward.level not in (Level.ALMOST, Level.FULL) or not forward.rho:
                    continue
                backward = report.status(s, r)
                assert backward.level is forward.level, (g, r, s)
                assert backward.rho * forward.rho == 1


def test_absent_length_gives_zero_rho(small_graphs):
    for g in small_graphs:
        profile = incidence_profile(g)
        present = set(profile.lengths)
        for r in range(3, g.n + 1):
            if r in present:
                continue
            for s in range(3, g.n + 1):
                if s == r:
                    continue
                status = check_pair(profile, r, s)
                expected = Level.FULL if s in present else Level.TRIVIAL
                assert status.level is expected, (g, r, s)
                assert status.rho == 0


def test_edge_transitive_rho_matches_cycle_counts(small_graphs):
    checked = 0
    for g in small_graphs:
        report = classify(g)
        if report.overall is Overall.NEITHER or not is_edge_transitive(g):
            continue
        lengths = report.cycle_lengths
        for r in lengths:
            for s in lengths:
                if r == s:
                    continue
                rho = report.certified_rho(r, s)
                if rho is not None:
                    assert rho == rho_from_cycle_counts(report.cycle_counts, r, s), (g, r, s)
                    checked += 1
    assert checked > 0
