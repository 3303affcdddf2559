"""
Tests for the graph6 codec
"""

import io

import networkx as nx
import pytest

from errors import (
    Graph6CharacterError,
    Graph6HeaderError,
    Graph6LengthError,
    Graph6PaddingError,
    UnsupportedOrderError,
)
from helpers import random_graphs, to_networkx
from models.graph import Graph
from services.constructions import make_complete, make_empty, make_petersen
from services.graph6 import graph6_decode, graph6_encode, read_graph6_lines, write_graph6_lines


@pytest.mark.parametrize("graph, text", [
    (Graph(1, (0,)), "@"),
    (make_complete(2), "A_"),
    (make_complete(3), "Bw"),
    (make_complete(4), "C~"),
    (make_empty(4), "C?"),
])
def test_known_encodings(graph, text):
    assert graph6_encode(graph) == text
    assert graph6_decode(text) == graph


def test_agrees_with_networkx_writer():
    for g in random_graphs(40, 1, 30) + [make_petersen()]:
        expected = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
        assert graph6_encode(g) == expected


def test_long_order_header():
    g = make_empty(63)
    text = graph6_encode(g)
    assert text.startswith("~??~")
    assert graph6_decode(text) == g


def test_header_prefix_is_accepted():
    assert graph6_decode(">>graph6<<Bw\n") == make_complete(3)


@pytest.mark.parametrize("text, error", [
    ("", Graph6HeaderError),
    ("?", Graph6HeaderError),
    ("A", Graph6LengthError),
    ("A__", Graph6LengthError),
    ("A`", Graph6PaddingError),
    ("D~~", Graph6PaddingError),
    ("D~{{", Graph6LengthError),
    ("A!", Graph6CharacterError),
    ("B\x7f", Graph6CharacterError),
    ("~?@@", UnsupportedOrderError),
    ("~~??????", UnsupportedOrderError),
])
def test_malformed_text(text, error):
    with pytest.raises(error):
        graph6_decode(text)


def test_batch_lines_skip_blanks():
    stream = io.StringIO("Bw\n\nC~\n")
    graphs = list(read_graph6_lines(stream))
    assert graphs == [make_complete(3), make_complete(4)]

    out = io.StringIO()
    write_graph6_lines(graphs, out)
    assert out.getvalue() == "Bw\nC~\n"


def test_padding_bits_are_checked_before_decoding():
    assert graph6_decode("D~{") == make_complete(5)
    # 10 triangle bits leave two padding bits in the last character
    for last in "|}~":
        with pytest.raises(Graph6PaddingError):
            graph6_decode("D~" + last)


def test_networkx_conversion_preserves_labels():
    g = make_petersen()
    h = g.to_networkx()
    assert sorted(h.nodes()) == list(range(10))
    assert Graph.from_networkx(h) == g
    assert Graph.from_networkx(nx.relabel_nodes(h, {v: v + 100 for v in h})) == g
