# Copyright 2025 The tbgraph Authors. All rights reserved.
import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tbgraph.modules.graph import Graph, build_graph, named_graph
from tbgraph.modules.graph6 import Graph6Error, encode_graph6, parse_graph6


def test_known_encodings(k4):
    assert encode_graph6(k4) == b'C~'
    assert encode_graph6(Graph(0)) == b'?'
    assert encode_graph6(Graph(1)) == b'@'
    assert parse_graph6('C~') == k4
    assert parse_graph6(b'>>graph6<<C~\n') == k4


@pytest.mark.parametrize('spec', ['K5', 'K3,3', 'C7', 'Q3', 'petersen', 'heawood'])
def test_agrees_with_networkx(spec):
    g = named_graph(spec)
    expected = nx.to_graph6_bytes(g.to_networkx(), header=False).strip()
    assert encode_graph6(g) == expected
    back = nx.from_graph6_bytes(expected)
    assert parse_graph6(expected) == build_graph(back.number_of_nodes(), back.edges())


@pytest.mark.parametrize('text', [
    '',
    '   ',
    '~???',      # n >= 63 needs the multi-byte size form
    'C',         # truncated
    'C~~',       # trailing data
    'C!',        # byte below 63
    'C\x7f',     # byte above 126
    'Cé',
])
def test_malformed_records(text):
    with pytest.raises(Graph6Error):
        parse_graph6(text)


def test_encode_scope():
    with pytest.raises(Graph6Error):
        encode_graph6(Graph(63))


@pytest.mark.parametrize('n', range(6))
def test_round_trip_every_labelled_graph(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        record = encode_graph6(g)
        assert parse_graph6(record) == g
        if n:
            assert record == nx.to_graph6_bytes(g.to_networkx(), header=False).strip()


@st.composite
def graphs(draw, min_n=0, max_n=14):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_round_trip(g):
    assert parse_graph6(encode_graph6(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=6, max_n=20))
def test_round_trip_larger_orders(g):
    record = encode_graph6(g)
    assert parse_graph6(record) == g
    assert record == nx.to_graph6_bytes(g.to_networkx(), header=False).strip()
