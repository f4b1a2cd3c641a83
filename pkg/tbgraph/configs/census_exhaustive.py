# Copyright 2025 The tbgraph Authors. All rights reserved.
from easydict import EasyDict

from .shared_config import tb_shared_cfg

#------------------------ census: every input graph, trivial ones kept ------------------------#

census_exhaustive = EasyDict(__name__='Config: census exhaustive')
census_exhaustive.update(tb_shared_cfg)

census_exhaustive.require_connected = False
census_exhaustive.require_min_degree_2 = False
census_exhaustive.skip_single_cycle_length = False

census_exhaustive.full_check = True
census_exhaustive.check_two_arc = True
census_exhaustive.n_max = 9
