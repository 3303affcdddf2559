"""
Tests for isomorph-free graph enumeration
"""

import pytest

from errors import PreconditionError, UnsupportedOrderError
from schemas.patterns import ForbiddenSpec
from services.canonical import canonical_graph
from services.detection import PatternFilter, admits
from services.enumeration import GraphEnumerator, enumerate_graphs
from services.graph6 import graph6_encode


@pytest.mark.parametrize("n, total, connected", [
    (1, 1, 1),
    (2, 2, 1),
    (3, 4, 2),
    (4, 11, 6),
    (5, 34, 21),
    (6, 156, 112),
])
def test_class_counts(n, total, connected):
    assert len(list(enumerate_graphs(n))) == total
    assert len(list(enumerate_graphs(n, connected_only=True))) == connected


@pytest.mark.slow
def test_class_counts_order_7_and_8():
    assert len(list(enumerate_graphs(7))) == 1044
    assert len(list(enumerate_graphs(7, connected_only=True))) == 853
    assert len(list(enumerate_graphs(8))) == 12346


@pytest.mark.slow
def test_order_8_classes_are_distinct_with_a_worker_pool():
    texts = [graph6_encode(g) for g in enumerate_graphs(8, connected_only=True, threads=2)]
    assert len(texts) == 11117
    assert len(set(texts)) == len(texts)


def test_representatives_are_canonical_and_distinct():
    graphs = list(enumerate_graphs(6))
    assert all(canonical_graph(g) == g for g in graphs)
    texts = [graph6_encode(g) for g in graphs]
    assert len(set(texts)) == len(texts)


def test_output_is_deterministic():
    first = [graph6_encode(g) for g in GraphEnumerator().enumerate(5)]
    second = [graph6_encode(g) for g in GraphEnumerator().enumerate(5)]
    assert first == second


def test_stream_is_lazy():
    stream = GraphEnumerator().stream(6)
    first = next(stream)
    assert first.order == 6
    # depth-first from K1 through the edgeless graphs
    assert first.edge_count == 0


def test_pruned_generation_equals_filtering():
    spec = ForbiddenSpec.parse("P4")
    pruned = [graph6_encode(g) for g in enumerate_graphs(6, prune=PatternFilter(spec))]
    filtered = [graph6_encode(g) for g in enumerate_graphs(6) if admits(g, spec)]
    assert pruned == filtered


def test_worker_pool_matches_serial():
    serial = [graph6_encode(g) for g in GraphEnumerator().stream(6, threads=1)]
    parallel = [graph6_encode(g) for g in GraphEnumerator().stream(6, threads=2)]
    assert parallel == serial


def test_prune_rejecting_everything_yields_nothing():
    assert list(enumerate_graphs(4, prune=lambda g: False)) == []


def test_order_limits():
    with pytest.raises(UnsupportedOrderError):
        enumerate_graphs(11)
    with pytest.raises(PreconditionError):
        enumerate_graphs(0)
