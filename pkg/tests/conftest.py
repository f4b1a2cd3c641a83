# Copyright 2025 The tbgraph Authors. All rights reserved.
import pytest

from tbgraph.modules.graph import named_graph
from tbgraph.modules.operations import clique_sum_vertex


@pytest.fixture(scope='session')
def k4():
    return named_graph('K4')


@pytest.fixture(scope='session')
def petersen():
    return named_graph('petersen')


@pytest.fixture(scope='session')
def heawood():
    return named_graph('heawood')


@pytest.fixture(scope='session')
def cube():
    return named_graph('Q3')


@pytest.fixture(scope='session')
def k4_clique_sum(k4):
    return clique_sum_vertex(k4, 0, k4, 0)
