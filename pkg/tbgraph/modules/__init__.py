# Copyright 2025 The tbgraph Authors. All rights reserved.
from .automorphism import (
    ScopeError,
    TransitivityProfile,
    automorphism_group,
    enumerate_arcs,
    is_edge_transitive,
    is_s_arc_transitive,
    transitivity_profile,
)
from .cycles import (
    Cycle,
    IncidenceProfile,
    cycle_polynomial,
    cycle_spectrum,
    enumerate_cycles,
    incidence_profile,
    sigma,
)
from .front import (
    FitResult,
    FrontData,
    FrontDataError,
    TbSpectrum,
    adversarial_front_data,
    concentrated_front_data,
    cycle_tb,
    fit_front_data,
    random_front_data,
    tb_spectrum,
    verify_proportionality,
)
from .generation import generate_graphs
from .graph import Graph, NamedGraphSpec, build_graph, graph_stats, named_graph, parse_named_spec
from .graph6 import Graph6Error, encode_graph6, parse_graph6
from .operations import add_pendant, clique_sum_vertex, disjoint_union, path_join
from .symmetry import (
    Level,
    Overall,
    SymmetryReport,
    check_pair,
    classify,
    rho_closed_form,
    rho_from_cycle_counts,
    total_tb_closed_form,
    total_tb_coefficient,
)

__all__ = [
    'Cycle',
    'FitResult',
    'FrontData',
    'FrontDataError',
    'Graph',
    'Graph6Error',
    'IncidenceProfile',
    'Level',
    'NamedGraphSpec',
    'Overall',
    'ScopeError',
    'SymmetryReport',
    'TbSpectrum',
    'TransitivityProfile',
    'add_pendant',
    'adversarial_front_data',
    'automorphism_group',
    'build_graph',
    'check_pair',
    'classify',
    'clique_sum_vertex',
    'concentrated_front_data',
    'cycle_polynomial',
    'cycle_spectrum',
    'cycle_tb',
    'disjoint_union',
    'encode_graph6',
    'enumerate_arcs',
    'enumerate_cycles',
    'fit_front_data',
    'generate_graphs',
    'graph_stats',
    'incidence_profile',
    'is_edge_transitive',
    'is_s_arc_transitive',
    'named_graph',
    'parse_graph6',
    'parse_named_spec',
    'path_join',
    'random_front_data',
    'rho_closed_form',
    'rho_from_cycle_counts',
    'sigma',
    'tb_spectrum',
    'total_tb_closed_form',
    'total_tb_coefficient',
    'transitivity_profile',
]
