# Copyright 2025 The tbgraph Authors. All rights reserved.
from ..configs import tb_shared_cfg
from .graph import Graph, build_graph

__all__ = ['Graph6Error', 'encode_graph6', 'parse_graph6']


class Graph6Error(ValueError):
    pass


def _upper_triangle(n):
    # column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: bytes | str) -> Graph:
    """
    Decodes one graph6 record (single-byte size form, n <= 62).

    A leading ">>graph6<<" header and surrounding whitespace are tolerated.

    Raises:
        Graph6Error: on a byte outside 63..126, a truncated bit vector, trailing
            data, or a multi-byte size prefix (n >= 63).
    """
    if isinstance(text, str):
        try:
            text = text.encode('ascii')
        except UnicodeEncodeError as exc:
            raise Graph6Error(f"non-ASCII character in graph6 record: {exc}") from exc
    data = bytes(text)
    data = data.strip()
    header = tb_shared_cfg.graph6_header
    if data.startswith(header):
        data = data[len(header):]
    if not data:
        raise Graph6Error("empty graph6 record")
    for byte in data:
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} outside the graph6 range 63..126")
    if data[0] == 126:
        raise Graph6Error("graphs with n >= 63 are not supported")
    n = data[0] - 63
    num_bits = n * (n - 1) // 2
    num_bytes = (num_bits + 5) // 6
    body = data[1:]
    if len(body) < num_bytes:
        raise Graph6Error(
            f"truncated graph6 record: n={n} needs {num_bytes} data bytes, got {len(body)}")
    if len(body) > num_bytes:
        raise Graph6Error(f"trailing data after graph6 record for n={n}")

    bits = []
    for byte in body:
        value = byte - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    edges = [pair for pair, bit in zip(_upper_triangle(n), bits) if bit]
    return build_graph(n, edges)


def encode_graph6(g: Graph) -> bytes:
    if g.n > tb_shared_cfg.graph6_max_n:
        raise Graph6Error(f"graphs with n >= 63 are not supported (n={g.n})")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _upper_triangle(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    out = bytearray([g.n + 63])
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = (value << 1) | bit
        out.append(value + 63)
    return bytes(out)
