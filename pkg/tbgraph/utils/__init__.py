# Copyright 2025 The tbgraph Authors. All rights reserved.
from .linalg import LinearSolution, solve_rational
from .utils import dump_json, format_rational, parse_rational, str2bool, use_color

__all__ = [
    'LinearSolution',
    'dump_json',
    'format_rational',
    'parse_rational',
    'solve_rational',
    'str2bool',
    'use_color',
]
