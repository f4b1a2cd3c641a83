# Copyright 2025 The tbgraph Authors. All rights reserved.
import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from ..configs import NAMED_GRAPH_ALIASES

__all__ = [
    'Edge',
    'Graph',
    'GraphStats',
    'NamedGraphSpec',
    'build_graph',
    'graph_stats',
    'named_graph',
    'parse_named_spec',
]

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Finite simple undirected graph on the vertex labels 0..n-1.

    `edges` is kept sorted and normalized to (min, max) pairs, so two graphs
    compare equal exactly when they have the same labeled edge set. Use
    `build_graph` to construct one from arbitrary pairs.
    """
    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        previous = None
        for u, v in self.edges:
            if not u < v:
                raise ValueError(f"edge ({u}, {v}) is not normalized")
            if v >= self.n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if previous is not None and (u, v) <= previous:
                raise ValueError("edges must be sorted and distinct")
            previous = (u, v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbors = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(a) for a in neighbors)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def relabel(self, perm: Sequence[int]) -> 'Graph':
        """Image of the graph under the vertex map v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabeling must be a permutation of 0..n-1")
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Builds a simple graph, collapsing duplicate pairs.

    Raises:
        ValueError: on a self-loop or an endpoint outside 0..n-1.
    """
    normalized = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        normalized.add((min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(normalized)))


@dataclass(frozen=True)
class GraphStats:
    connected: bool
    min_degree: int
    max_degree: int
    has_pendant: bool


def graph_stats(g: Graph) -> GraphStats:
    if g.n == 0:
        # the null graph counts as connected
        return GraphStats(True, 0, 0, False)
    degrees = g.degrees()
    return GraphStats(
        connected=nx.is_connected(g.to_networkx()),
        min_degree=min(degrees),
        max_degree=max(degrees),
        has_pendant=min(degrees) == 1)


#------------------------ named constructions ------------------------#

_FAMILY_ARITY = {
    'complete': 1,
    'complete_bipartite': 2,
    'complete_multipartite': None,
    'cycle': 1,
    'petersen': 0,
    'heawood': 0,
    'hypercube': 1,
    'odd': 1,
}


@dataclass(frozen=True)
class NamedGraphSpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in _FAMILY_ARITY:
            raise ValueError(f"unknown graph family: {self.family}")
        arity = _FAMILY_ARITY[self.family]
        if arity is not None and len(self.params) != arity:
            raise ValueError(
                f"{self.family} takes {arity} parameter(s), got {self.params}")
        if self.family == 'complete_multipartite' and not self.params:
            raise ValueError("complete_multipartite needs at least one part")
        if any(p < 1 for p in self.params):
            raise ValueError(f"parameters must be positive, got {self.params}")
        if self.family == 'odd' and self.params[0] < 2:
            raise ValueError(f"odd(n) requires n >= 2, got {self.params[0]}")
        if self.family == 'cycle' and self.params[0] < 3:
            raise ValueError(f"cycle(n) requires n >= 3, got {self.params[0]}")

    @property
    def label(self) -> str:
        if self.family == 'complete':
            return f"K{self.params[0]}"
        if self.family in ('complete_bipartite', 'complete_multipartite'):
            return 'K' + ','.join(str(p) for p in self.params)
        if self.family == 'cycle':
            return f"C{self.params[0]}"
        if self.family == 'hypercube':
            return f"Q{self.params[0]}"
        if self.family == 'odd':
            return f"O{self.params[0]}"
        return self.family


_SPEC_PATTERN = re.compile(r'^([KCQO])(\d+(?:,\d+)*)$')


def parse_named_spec(text: str) -> NamedGraphSpec:
    """
    Parses compact spec strings: "K5", "K3,3", "K2,2,2", "C7", "Q3", "O3",
    plus the word aliases in `NAMED_GRAPH_ALIASES` ("petersen", "heawood", ...).
    """
    key = text.strip()
    if key.lower() in NAMED_GRAPH_ALIASES:
        family, params = NAMED_GRAPH_ALIASES[key.lower()]
        return NamedGraphSpec(family, params)
    match = _SPEC_PATTERN.match(key)
    if match is None:
        raise ValueError(f"cannot parse graph spec: {text!r}")
    letter, numbers = match.group(1), tuple(int(x) for x in match.group(2).split(','))
    if letter == 'K':
        family = {1: 'complete', 2: 'complete_bipartite'}.get(
            len(numbers), 'complete_multipartite')
        return NamedGraphSpec(family, numbers)
    if len(numbers) != 1:
        raise ValueError(f"cannot parse graph spec: {text!r}")
    family = {'C': 'cycle', 'Q': 'hypercube', 'O': 'odd'}[letter]
    return NamedGraphSpec(family, numbers)


def _multipartite(parts: Sequence[int]) -> Graph:
    # Labels are dealt round-robin across the parts, so vertex 0 sits in the
    # first part and vertex 1 in the second; for two or more parts {0, 1} is
    # an edge.
    owner = []
    remaining = list(parts)
    while any(remaining):
        for i, left in enumerate(remaining):
            if left:
                owner.append(i)
                remaining[i] -= 1
    n = len(owner)
    return build_graph(n, [(u, v)
                           for u, v in itertools.combinations(range(n), 2)
                           if owner[u] != owner[v]])


def _petersen() -> Graph:
    # outer pentagon 0..4, inner pentagram 5..9, spokes i -- i+5
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def _heawood() -> Graph:
    # Hamiltonian 14-cycle with LCF chords [5, -5]^7
    ring = [(i, (i + 1) % 14) for i in range(14)]
    chords = [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return build_graph(14, ring + chords)


def _hypercube(d: int) -> Graph:
    n = 1 << d
    return build_graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d)
                           if v < v ^ (1 << b)])


def _odd(k: int) -> Graph:
    # vertices: (k-1)-subsets of {0..2k-2} in lexicographic order
    subsets = [frozenset(c) for c in itertools.combinations(range(2 * k - 1), k - 1)]
    return build_graph(len(subsets), [
        (i, j) for i, j in itertools.combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    ])


def named_graph(spec: NamedGraphSpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_named_spec(spec)
    family, params = spec.family, spec.params
    if family == 'complete':
        n = params[0]
        return build_graph(n, itertools.combinations(range(n), 2))
    if family in ('complete_bipartite', 'complete_multipartite'):
        return _multipartite(params)
    if family == 'cycle':
        n = params[0]
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == 'petersen':
        return _petersen()
    if family == 'heawood':
        return _heawood()
    if family == 'hypercube':
        return _hypercube(params[0])
    return _odd(params[0])
