# Copyright 2025 The tbgraph Authors. All rights reserved.
import logging
import multiprocessing
from typing import Callable, Iterable, Iterator

from ..configs import tb_shared_cfg

__all__ = ['get_world_size', 'init_worker_pool', 'ordered_map']


def get_world_size(workers: int | None = None) -> int:
    """Requested worker count, with 0 or None meaning one per CPU."""
    if not workers:
        return multiprocessing.cpu_count()
    if workers < 0:
        raise ValueError(f"worker count must be nonnegative, got {workers}")
    return workers


def init_worker_pool(workers: int | None = None):
    world_size = get_world_size(workers)
    logging.info(f"starting a pool of {world_size} workers")
    return multiprocessing.Pool(processes=world_size)


def ordered_map(fn: Callable, items: Iterable, workers: int = 1,
                chunksize: int | None = None) -> Iterator:
    """
    Lazily yields fn(item) for every item, always in input order.

    Runs serially in-process for a single worker; otherwise `fn` must be a
    picklable module-level function.
    """
    if chunksize is None:
        chunksize = tb_shared_cfg.chunk_size
    if workers == 1:
        for item in items:
            yield fn(item)
        return
    with init_worker_pool(workers) as pool:
        yield from pool.imap(fn, items, chunksize=chunksize)
