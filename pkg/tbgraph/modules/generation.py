# Copyright 2025 The tbgraph Authors. All rights reserved.
import itertools
import logging

import networkx as nx
from tqdm import tqdm

from ..configs import tb_shared_cfg
from .automorphism import ScopeError
from .graph import Graph, build_graph
from .graph6 import encode_graph6

__all__ = ['generate_graphs']


def _bucket_key(graph):
    degseq = tuple(sorted(d for _, d in graph.degree()))
    return degseq, nx.weisfeiler_lehman_graph_hash(
        graph, iterations=tb_shared_cfg.wl_iterations)


def _augment(parents, n, progress=False):
    """
    Connected graphs on n vertices from connected graphs on n - 1 vertices:
    a new vertex n - 1 joined to every nonempty neighbor subset, kept when
    not isomorphic to a graph already found.
    """
    buckets = {}
    found = []
    candidates = (
        (parent, subset)
        for parent in parents
        for size in range(1, n)
        for subset in itertools.combinations(range(n - 1), size)
    )
    total = len(parents) * (2**(n - 1) - 1)
    for parent, subset in tqdm(candidates, total=total, desc=f"n={n}", disable=not progress):
        g = build_graph(n, parent.edges + tuple((v, n - 1) for v in subset))
        graph = g.to_networkx()
        reps = buckets.setdefault(_bucket_key(graph), [])
        if any(nx.is_isomorphic(graph, rep) for rep in reps):
            continue
        reps.append(graph)
        found.append(g)
    return found


def generate_graphs(n: int, progress: bool = False) -> list[Graph]:
    """
    One representative per isomorphism class of connected graphs on n
    vertices, ordered by edge count then graph6.

    Every connected graph has a vertex whose removal leaves it connected, so
    growing connected graphs one vertex at a time reaches each class.

    Raises:
        ScopeError: when n exceeds `tb_shared_cfg.max_generate_n`.
    """
    limit = tb_shared_cfg.max_generate_n
    if n > limit:
        raise ScopeError(
            f"internal generation is limited to n <= {limit}, got n={n}; "
            f"use graph6 input for larger censuses")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    graphs = [Graph(1)]
    for k in range(2, n + 1):
        graphs = _augment(graphs, k, progress=progress)
        logging.info(f"generated {len(graphs)} connected graphs on {k} vertices")
    return sorted(graphs, key=lambda g: (g.m, encode_graph6(g)))
