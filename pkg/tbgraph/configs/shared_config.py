# Copyright 2025 The tbgraph Authors. All rights reserved.
from easydict import EasyDict

#------------------------ tbgraph shared config ------------------------#
tb_shared_cfg = EasyDict()

# graph6 codec (single-byte size form only)
tb_shared_cfg.graph6_max_n = 62
tb_shared_cfg.graph6_header = b'>>graph6<<'

# automorphism search
tb_shared_cfg.max_automorphism_vertices = 20
tb_shared_cfg.default_arc_cap = 4

# isomorph-free generation
tb_shared_cfg.max_generate_n = 8
tb_shared_cfg.wl_iterations = 3

# front data
tb_shared_cfg.default_front_bound = 5

# checked integer arithmetic on int64 count tables
tb_shared_cfg.count_limit = 2**62

# census workers
tb_shared_cfg.num_workers = 1
tb_shared_cfg.chunk_size = 256
