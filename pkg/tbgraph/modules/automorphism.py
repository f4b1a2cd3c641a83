# Copyright 2025 The tbgraph Authors. All rights reserved.
import logging
from dataclasses import dataclass, field
from functools import lru_cache

from networkx.algorithms.isomorphism import GraphMatcher, categorical_node_match

from ..configs import tb_shared_cfg
from .graph import Graph

__all__ = [
    'Arc',
    'Permutation',
    'ScopeError',
    'TransitivityProfile',
    'automorphism_group',
    'enumerate_arcs',
    'is_edge_transitive',
    'is_s_arc_transitive',
    'transitivity_profile',
]

Permutation = tuple[int, ...]
Arc = tuple[int, ...]


class ScopeError(ValueError):
    pass


def _vertex_invariants(g):
    degrees = g.degrees()
    return {
        v: (degrees[v], tuple(sorted(degrees[w] for w in g.adjacency[v])))
        for v in range(g.n)
    }


@lru_cache(maxsize=64)
def _automorphisms(g):
    graph = g.to_networkx()
    for v, invariant in _vertex_invariants(g).items():
        graph.nodes[v]['invariant'] = invariant
    matcher = GraphMatcher(graph, graph,
                           node_match=categorical_node_match('invariant', None))
    perms = sorted(tuple(mapping[v] for v in range(g.n))
                   for mapping in matcher.isomorphisms_iter())
    logging.info(f"automorphism group of {g} has order {len(perms)}")
    return tuple(perms)


def automorphism_group(g: Graph) -> list[Permutation]:
    """
    Every automorphism of `g`, as images of 0..n-1, sorted.

    VF2 backtracking restricted to vertices with equal
    (degree, sorted neighbor degrees) invariants.

    Raises:
        ScopeError: when n exceeds `tb_shared_cfg.max_automorphism_vertices`.
    """
    _check_scope(g)
    if g.n == 0:
        return [()]
    return list(_automorphisms(g))


def enumerate_arcs(g: Graph, s: int) -> list[Arc]:
    """All s-arcs: walks v_0..v_s that never step straight back."""
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    arcs = [(v,) for v in range(g.n)]
    for _ in range(s):
        arcs = [arc + (w,)
                for arc in arcs
                for w in sorted(g.adjacency[arc[-1]])
                if len(arc) < 2 or w != arc[-2]]
    return arcs


def _check_scope(g):
    limit = tb_shared_cfg.max_automorphism_vertices
    if g.n > limit:
        raise ScopeError(f"automorphism search is limited to n <= {limit}, got n={g.n}")


def _pinned(g, arc):
    graph = g.to_networkx()
    positions = {}
    for i, v in enumerate(arc):
        positions.setdefault(v, []).append(i)
    for v, invariant in _vertex_invariants(g).items():
        graph.nodes[v]['pin'] = (invariant, tuple(positions.get(v, ())))
    return graph


def _find_automorphism(g, source, target):
    """Some automorphism sending the walk `source` onto `target`, or None."""
    matcher = GraphMatcher(_pinned(g, source), _pinned(g, target),
                           node_match=categorical_node_match('pin', None))
    mapping = next(matcher.isomorphisms_iter(), None)
    if mapping is None:
        return None
    return tuple(mapping[v] for v in range(g.n))


def _covers_orbit(g, base, classes):
    """
    True iff the orbit of `base` meets every class of walks.

    The orbit is grown under the automorphisms found so far; a search is only
    run for a class the current orbit misses.
    """
    orbit = {base}
    generators = []
    for targets in classes:
        if any(t in orbit for t in targets):
            continue
        perm = None
        for t in targets:
            perm = _find_automorphism(g, base, t)
            if perm is not None:
                break
        if perm is None:
            return False
        generators.append(perm)
        frontier = list(orbit)
        while frontier:
            walk = frontier.pop()
            for p in generators:
                image = tuple(p[v] for v in walk)
                if image not in orbit:
                    orbit.add(image)
                    frontier.append(image)
    return True


def is_s_arc_transitive(g: Graph, s: int) -> bool:
    """
    True iff Aut(g) is transitive on s-arcs. A graph with no s-arcs is
    reported transitive (vacuous).
    """
    arcs = enumerate_arcs(g, s)
    if not arcs:
        return True
    _check_scope(g)
    return _covers_orbit(g, arcs[0], [[a] for a in arcs])


def is_edge_transitive(g: Graph) -> bool:
    if not g.edges:
        return True
    _check_scope(g)
    return _covers_orbit(g, g.edges[0], [[(u, v), (v, u)] for u, v in g.edges])


@dataclass
class TransitivityProfile:
    vertex_transitive: bool
    edge_transitive: bool
    max_arc_transitivity: int | None
    group_order: int
    per_s: dict[int, bool] = field(default_factory=dict)
    # s values for which the graph has no s-arcs at all
    vacuous: list[int] = field(default_factory=list)

    def to_json(self):
        return {
            'vertex_transitive': self.vertex_transitive,
            'edge_transitive': self.edge_transitive,
            'max_arc_transitivity': self.max_arc_transitivity,
            'group_order': self.group_order,
            'per_s': {str(s): ok for s, ok in self.per_s.items()},
            'vacuous': self.vacuous,
        }


def transitivity_profile(g: Graph, s_cap: int) -> TransitivityProfile:
    if s_cap < 0:
        raise ValueError(f"s_cap must be nonnegative, got {s_cap}")
    per_s = {s: is_s_arc_transitive(g, s) for s in range(s_cap + 1)}
    vacuous = [s for s in per_s if not enumerate_arcs(g, s)]
    # each s is decided on its own; stars pass s = 2 while failing s = 0
    top = max((s for s, ok in per_s.items() if ok), default=None)
    return TransitivityProfile(
        vertex_transitive=per_s[0],
        edge_transitive=is_edge_transitive(g),
        max_arc_transitivity=top,
        group_order=len(automorphism_group(g)),
        per_s=per_s,
        vacuous=vacuous)
