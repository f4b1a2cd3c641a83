# Copyright 2025 The tbgraph Authors. All rights reserved.
from . import configs, distributed, modules, utils
from .census import CensusOptions, CensusRecord, CensusSummary, TBCensus, census_stream, summarize
