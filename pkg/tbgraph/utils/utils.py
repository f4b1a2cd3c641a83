# Copyright 2025 The tbgraph Authors. All rights reserved.
import argparse
import json
import os
import sys
from fractions import Fraction

__all__ = ['dump_json', 'format_rational', 'parse_rational', 'str2bool', 'use_color']


_TRUE = ('yes', 'true', 't', 'y', 'on', '1')
_FALSE = ('no', 'false', 'f', 'n', 'off', '0')


def str2bool(v):
    """
    argparse type for switches such as `census --full-check no`.

    Raises:
        argparse.ArgumentTypeError: for anything outside yes/no, true/false,
            on/off, 1/0 and their one-letter forms.
    """
    if isinstance(v, bool):
        return v
    word = v.strip().lower()
    if word in _TRUE:
        return True
    if word in _FALSE:
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean switch, got {v!r}")


def format_rational(value: Fraction | int) -> str:
    """Exact "p/q" text, or "n" for integers. Never a float."""
    return str(Fraction(value))


def parse_rational(value) -> Fraction:
    """
    Accepts ints, "p/q" or "n" strings, and Fractions. Floats are rejected
    since they would silently lose exactness.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"expected an exact rational, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if '.' in text or 'e' in text.lower():
            raise ValueError(f"expected an exact rational, got {value!r}")
        return Fraction(text)
    raise ValueError(f"expected an exact rational, got {value!r}")


def dump_json(payload, stream=None, lines=False):
    """Writes one JSON document (compact when `lines`, for JSONL) to stdout."""
    stream = sys.stdout if stream is None else stream
    if lines:
        stream.write(json.dumps(payload, sort_keys=True, separators=(',', ':')) + '\n')
    else:
        stream.write(json.dumps(payload, indent=2, sort_keys=True) + '\n')


def use_color(stream=None) -> bool:
    stream = sys.stdout if stream is None else stream
    return 'NO_COLOR' not in os.environ and hasattr(stream, 'isatty') and stream.isatty()
