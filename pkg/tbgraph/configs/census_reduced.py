# Copyright 2025 The tbgraph Authors. All rights reserved.
from easydict import EasyDict

from .shared_config import tb_shared_cfg

#------------------------ census: connected, no pendant, n <= 9 ------------------------#

census_reduced = EasyDict(__name__='Config: census reduced')
census_reduced.update(tb_shared_cfg)

# filters: pendant vertices and single-length graphs cannot add survivors
census_reduced.require_connected = True
census_reduced.require_min_degree_2 = True
census_reduced.skip_single_cycle_length = True

# classification
census_reduced.full_check = True
census_reduced.check_two_arc = True
census_reduced.n_max = 9
