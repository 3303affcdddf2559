"""
graph6 codec
Encoding and decoding go through networkx; this layer validates the text
first so that malformed input maps onto the workbench error types
"""

import logging
from typing import IO, Iterator, List

import networkx as nx

from config import settings
from errors import (
    Graph6CharacterError,
    Graph6HeaderError,
    Graph6LengthError,
    Graph6PaddingError,
    UnsupportedOrderError,
)
from models.graph import Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"


def graph6_encode(g: Graph) -> str:
    """
    Encode a graph as graph6 text (no header, no newline)
    """
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").rstrip("\n")


def _split_order(line: str):
    """Order and data characters of a header-stripped graph6 line"""
    if line[0] != "~":
        return ord(line[0]) - 63, line[1:]
    if len(line) >= 2 and line[1] == "~":
        raise UnsupportedOrderError("graph6 decoding", 2 ** 18, settings.MAX_ORDER)
    if len(line) < 4:
        raise Graph6HeaderError("truncated 18-bit order header")
    n = 0
    for ch in line[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    if n <= 62:
        raise Graph6HeaderError(f"order {n} must use the single-byte header")
    return n, line[4:]


def graph6_decode(text: str) -> Graph:
    """
    Decode one graph6 line; an optional >>graph6<< header is accepted
    """
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise Graph6HeaderError("empty graph6 text")

    for position, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6CharacterError(f"invalid graph6 character {ch!r} at position {position}")

    n, body = _split_order(line)
    if n == 0:
        raise Graph6HeaderError("order 0 is not representable")
    if n > settings.MAX_ORDER:
        raise UnsupportedOrderError("graph6 decoding", n, settings.MAX_ORDER)

    bits = n * (n - 1) // 2
    expected = (bits + 5) // 6
    if len(body) != expected:
        raise Graph6LengthError(f"order {n} needs {expected} data characters, got {len(body)}")
    pad = 6 * len(body) - bits
    if body and (ord(body[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6PaddingError("non-zero padding bits after the upper triangle")

    return Graph.from_networkx(nx.from_graph6_bytes(line.encode("ascii")))


def read_graph6_lines(stream: IO[str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line"""
    for number, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        logger.debug(f"Decoding graph6 line {number}")
        yield graph6_decode(line)


def write_graph6_lines(graphs: List[Graph], stream: IO[str]) -> None:
    for g in graphs:
        stream.write(graph6_encode(g) + "\n")
