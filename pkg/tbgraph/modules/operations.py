# Copyright 2025 The tbgraph Authors. All rights reserved.
"""
Graph operations that preserve (almost-)TB-symmetry.

Labeling convention: the first graph keeps its labels, the second is shifted
by `g1.n`, and any freshly created vertex takes the next free label.
"""
from .graph import Graph, build_graph

__all__ = ['add_pendant', 'clique_sum_vertex', 'disjoint_union', 'path_join']


def _check_vertex(g, v, name='v'):
    if not 0 <= v < g.n:
        raise ValueError(f"{name}={v} is not a vertex of a graph with n={g.n}")


def add_pendant(g: Graph, v: int) -> Graph:
    """Attaches a new vertex, labeled g.n, to `v` by a single edge."""
    _check_vertex(g, v)
    return build_graph(g.n + 1, g.edges + ((v, g.n),))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return build_graph(g1.n + g2.n,
                       g1.edges + tuple((u + shift, v + shift) for u, v in g2.edges))


def clique_sum_vertex(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """
    1-clique sum: the disjoint union with v2 identified onto v1.

    The remaining vertices of g2 are shifted to g1.n, g1.n + 1, ... in order.
    """
    _check_vertex(g1, v1, 'v1')
    _check_vertex(g2, v2, 'v2')

    def image(u):
        if u == v2:
            return v1
        return g1.n + (u if u < v2 else u - 1)

    return build_graph(g1.n + g2.n - 1,
                       g1.edges + tuple((image(u), image(v)) for u, v in g2.edges))


def path_join(g1: Graph, v1: int, g2: Graph, v2: int, k: int) -> Graph:
    """
    Joins v1 to v2 by a path through `k` fresh vertices (k + 1 new edges).

    k = 0 adds the single edge {v1, v2}; identifying the two vertices instead
    is `clique_sum_vertex`.
    """
    _check_vertex(g1, v1, 'v1')
    _check_vertex(g2, v2, 'v2')
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    base = disjoint_union(g1, g2)
    walk = [v1] + [base.n + i for i in range(k)] + [v2 + g1.n]
    return build_graph(base.n + k, base.edges + tuple(zip(walk, walk[1:])))
