# Copyright 2025 The tbgraph Authors. All rights reserved.
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .graph import Edge, Graph

__all__ = [
    'Cycle',
    'EdgePair',
    'IncidenceProfile',
    'bipartite_cycle_count',
    'complete_cycle_count',
    'cycle_polynomial',
    'cycle_spectrum',
    'enumerate_cycles',
    'graph_corners',
    'incidence_profile',
    'non_adjacent_pairs',
    'sigma',
]

# (e, e') with e < e' lexicographically; used both for corners and for
# non-adjacent edge pairs
EdgePair = tuple[Edge, Edge]


@dataclass(frozen=True, order=True)
class Cycle:
    """
    Simple cycle in canonical form: vertices[0] is the smallest vertex and
    vertices[1] < vertices[-1].
    """
    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise ValueError(f"not a simple cycle: {vs}")
        if vs[0] != min(vs) or not vs[1] < vs[-1]:
            raise ValueError(f"cycle {vs} is not in canonical form")

    @classmethod
    def from_sequence(cls, vertices: Sequence[int]) -> 'Cycle':
        """Canonical representative of an arbitrary rotation or reflection."""
        vs = [int(v) for v in vertices]
        if len(vs) < 3:
            raise ValueError(f"not a simple cycle: {tuple(vs)}")
        k = vs.index(min(vs))
        rotated = vs[k:] + vs[:k]
        if rotated[1] > rotated[-1]:
            rotated = [rotated[0]] + rotated[:0:-1]
        return cls(tuple(rotated))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Edges in traversal order, each normalized to (min, max)."""
        vs = self.vertices
        return tuple((min(a, b), max(a, b)) for a, b in zip(vs, vs[1:] + vs[:1]))

    def non_adjacent_pairs(self) -> list[EdgePair]:
        es = self.edges
        r = len(es)
        return sorted(tuple(sorted((es[i], es[j])))
                      for i, j in _separated_positions(r))

    def __str__(self):
        return '(' + ' '.join(str(v) for v in self.vertices) + ')'


def _separated_positions(r):
    # edge positions i < j on an r-cycle whose edges share no vertex
    return [(i, j) for i in range(r) for j in range(i + 2, r) if not (i == 0 and j == r - 1)]


def enumerate_cycles(g: Graph, max_length: int | None = None) -> list[Cycle]:
    """
    Every simple cycle of `g`, once each, sorted lexicographically.

    Rooted backtracking: a cycle is grown from its smallest vertex through
    larger vertices only, and emitted in the direction with
    vertices[1] < vertices[-1].
    """
    limit = g.n if max_length is None else min(max_length, g.n)
    adjacency = [sorted(a) for a in g.adjacency]
    on_path = [False] * g.n
    path = []
    found = []

    def extend(root, v):
        for w in adjacency[v]:
            if w == root:
                if len(path) >= 3 and path[1] < path[-1]:
                    found.append(tuple(path))
            elif w > root and not on_path[w] and len(path) < limit:
                on_path[w] = True
                path.append(w)
                extend(root, w)
                path.pop()
                on_path[w] = False

    for root in range(g.n):
        on_path[root] = True
        path.append(root)
        extend(root, root)
        path.pop()
        on_path[root] = False

    found.sort()
    logging.debug(f"enumerated {len(found)} cycles on {g}")
    return [Cycle(vs) for vs in found]


def cycle_spectrum(g: Graph, cycles: list[Cycle] | None = None) -> dict[int, int]:
    if cycles is None:
        cycles = enumerate_cycles(g)
    return dict(sorted(Counter(c.length for c in cycles).items()))


def cycle_polynomial(g: Graph) -> np.ndarray:
    """Coefficients of C_G(t) = sum_s c_s t^s; entry s is c_s."""
    coeffs = np.zeros(max(g.n, 2) + 1, dtype=np.int64)
    for r, count in cycle_spectrum(g).items():
        coeffs[r] = count
    return coeffs


def complete_cycle_count(n: int, s: int) -> int:
    """c_s(K_n) = C(n, s) (s - 1)! / 2."""
    if s < 3 or s > n:
        return 0
    return math.comb(n, s) * math.factorial(s - 1) // 2


def bipartite_cycle_count(m: int, n: int, length: int) -> int:
    """c_{2r}(K_{m,n}) = C(m, r) C(n, r) r! (r - 1)! / 2; zero for odd lengths."""
    if length % 2 or length < 4:
        return 0
    r = length // 2
    if r > min(m, n):
        return 0
    return math.comb(m, r) * math.comb(n, r) * math.factorial(r) * math.factorial(r - 1) // 2


#------------------------ orientation sign ------------------------#

def _traversal(g, vertices):
    vs = [int(v) for v in vertices]
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise ValueError(f"not a simple cycle: {tuple(vs)}")
    steps = list(zip(vs, vs[1:] + vs[:1]))
    for a, b in steps:
        if not g.has_edge(a, b):
            raise ValueError(f"({a}, {b}) is not an edge of the graph")
    return steps


def sigma(g: Graph, cycle: Cycle | Sequence[int], pair: EdgePair) -> int:
    """
    Relative orientation of a non-adjacent edge pair ({a,b}, {c,d}) on a cycle:
    +1 for ...ab...cd..., -1 for ...ab...dc...

    `cycle` may be any oriented vertex sequence; the result does not depend
    on the direction of traversal.
    """
    vertices = cycle.vertices if isinstance(cycle, Cycle) else cycle
    (a, b), (c, d) = pair
    if not (a < b and c < d and (a, b) < (c, d)):
        raise ValueError(f"edge pair {pair} is not in canonical form")
    if {a, b} & {c, d}:
        raise ValueError(f"edges of {pair} are adjacent")
    signs = {}
    for u, v in _traversal(g, vertices):
        signs[(min(u, v), max(u, v))] = 1 if u < v else -1
    if (a, b) not in signs or (c, d) not in signs:
        raise ValueError(f"edge pair {pair} does not lie on cycle {tuple(vertices)}")
    return signs[(a, b)] * signs[(c, d)]


#------------------------ incidence statistics ------------------------#

def graph_corners(g: Graph) -> list[EdgePair]:
    """All unordered pairs of distinct edges sharing a vertex, sorted."""
    corners = set()
    for v in range(g.n):
        around = sorted((min(v, w), max(v, w)) for w in g.adjacency[v])
        corners.update(itertools.combinations(around, 2))
    return sorted(corners)


def non_adjacent_pairs(g: Graph) -> list[EdgePair]:
    return [(e, f) for e, f in itertools.combinations(g.edges, 2) if not set(e) & set(f)]


class IncidenceProfile:
    """
    Per-length cycle counts of edges, corners and oriented non-adjacent pairs.

    Count tables are int64 numpy arrays indexed like `graph.edges`,
    `self.corners` and `self.pairs`. The oriented-pair table is built on first
    access since it dominates the cost.
    """

    def __init__(self, graph: Graph, cycles: list[Cycle]):
        self.graph = graph
        self.cycles = cycles
        self.corners = graph_corners(graph)
        self.pairs = non_adjacent_pairs(graph)

        m = graph.m
        self._corner_lookup = np.full((m, m), -1, dtype=np.int64)
        for k, (e, f) in enumerate(self.corners):
            self._corner_lookup[graph.edge_index[e], graph.edge_index[f]] = k
        self._pair_lookup = np.full((m, m), -1, dtype=np.int64)
        for k, (e, f) in enumerate(self.pairs):
            self._pair_lookup[graph.edge_index[e], graph.edge_index[f]] = k

        # per length: (c_r, r) arrays of edge ids and traversal signs
        by_length = {}
        for c in cycles:
            by_length.setdefault(c.length, []).append(c)
        self._edge_ids = {}
        self._edge_signs = {}
        for r, group in sorted(by_length.items()):
            ids, signs = [], []
            for c in group:
                vs = c.vertices
                steps = list(zip(vs, vs[1:] + vs[:1]))
                ids.append([graph.edge_index[(min(a, b), max(a, b))] for a, b in steps])
                signs.append([1 if a < b else -1 for a, b in steps])
            self._edge_ids[r] = np.asarray(ids, dtype=np.int64)
            self._edge_signs[r] = np.asarray(signs, dtype=np.int64)

        self.cycle_counts = {r: len(ids) for r, ids in self._edge_ids.items()}
        self.edge_counts = {
            r: np.bincount(ids.ravel(), minlength=m).astype(np.int64)
            for r, ids in self._edge_ids.items()
        }
        self.corner_counts = {r: self._count_corners(r) for r in self._edge_ids}

    @property
    def lengths(self) -> list[int]:
        return sorted(self.cycle_counts)

    def cycle_count(self, r: int) -> int:
        return self.cycle_counts.get(r, 0)

    def _count_corners(self, r):
        ids = self._edge_ids[r]
        nxt = np.roll(ids, -1, axis=1)
        keys = self._corner_lookup[np.minimum(ids, nxt), np.maximum(ids, nxt)]
        assert (keys >= 0).all()
        return np.bincount(keys.ravel(), minlength=len(self.corners)).astype(np.int64)

    @cached_property
    def oriented_pair_counts(self) -> dict[int, np.ndarray]:
        """Length -> (len(pairs), 2) array of (n_plus, n_minus)."""
        tables = {}
        num_pairs = len(self.pairs)
        for r, ids in self._edge_ids.items():
            table = np.zeros((num_pairs, 2), dtype=np.int64)
            positions = _separated_positions(r)
            if positions and num_pairs:
                left = np.array([i for i, _ in positions])
                right = np.array([j for _, j in positions])
                a, b = ids[:, left], ids[:, right]
                keys = self._pair_lookup[np.minimum(a, b), np.maximum(a, b)]
                assert (keys >= 0).all()
                signs = self._edge_signs[r]
                product = signs[:, left] * signs[:, right]
                table[:, 0] = np.bincount(keys[product > 0], minlength=num_pairs)
                table[:, 1] = np.bincount(keys[product < 0], minlength=num_pairs)
            tables[r] = table
        return tables

    #------------------------ array accessors (zero when r is absent) ------------------------#

    def edge_array(self, r: int) -> np.ndarray:
        return self.edge_counts.get(r, np.zeros(self.graph.m, dtype=np.int64))

    def corner_array(self, r: int) -> np.ndarray:
        return self.corner_counts.get(r, np.zeros(len(self.corners), dtype=np.int64))

    def oriented_array(self, r: int) -> np.ndarray:
        return self.oriented_pair_counts.get(
            r, np.zeros((len(self.pairs), 2), dtype=np.int64))

    #------------------------ keyed lookups ------------------------#

    def edge_count(self, edge: Edge, r: int) -> int:
        return int(self.edge_array(r)[self.graph.edge_index[tuple(sorted(edge))]])

    def corner_count(self, corner: EdgePair, r: int) -> int:
        e, f = sorted(tuple(sorted(x)) for x in corner)
        k = self._corner_lookup[self.graph.edge_index[e], self.graph.edge_index[f]]
        if k < 0:
            raise ValueError(f"{corner} is not a pair of adjacent edges")
        return int(self.corner_array(r)[k])

    def oriented_pair_count(self, pair: EdgePair, r: int) -> tuple[int, int]:
        e, f = sorted(tuple(sorted(x)) for x in pair)
        k = self._pair_lookup[self.graph.edge_index[e], self.graph.edge_index[f]]
        if k < 0:
            raise ValueError(f"{pair} is not a pair of non-adjacent edges")
        plus, minus = self.oriented_array(r)[k]
        return int(plus), int(minus)


def incidence_profile(g: Graph, cycles: list[Cycle] | None = None) -> IncidenceProfile:
    if cycles is None:
        cycles = enumerate_cycles(g)
    profile = IncidenceProfile(g, cycles)
    logging.debug(f"incidence profile of {g}: spectrum {profile.cycle_counts}")
    return profile
