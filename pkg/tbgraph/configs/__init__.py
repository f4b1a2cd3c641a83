# Copyright 2025 The tbgraph Authors. All rights reserved.
from .census_exhaustive import census_exhaustive
from .census_reduced import census_reduced
from .shared_config import tb_shared_cfg

CENSUS_CONFIGS = {
    'reduced': census_reduced,
    'exhaustive': census_exhaustive,
}

# word aliases accepted wherever a named-graph spec string is expected
NAMED_GRAPH_ALIASES = {
    'petersen': ('petersen', ()),
    'heawood': ('heawood', ()),
    'cube': ('hypercube', (3,)),
    'triangle': ('complete', (3,)),
    'square': ('cycle', (4,)),
}

__all__ = ['CENSUS_CONFIGS', 'NAMED_GRAPH_ALIASES', 'tb_shared_cfg']
