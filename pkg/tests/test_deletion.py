"""
Tests for the minimum-entry deletion procedure and the sequence check
"""

import math

import pytest

from errors import PreconditionError
from helpers import random_graphs
from services.constructions import make_complete, make_cycle, make_snk, make_star
from services.deletion import (
    corollary_floor,
    deletion_procedure,
    lemma_lev3_sequence_check,
    lev3_sequence,
)
from services.graph6 import graph6_decode, graph6_encode
from services.spectral import mu_snk_closed, spectral_radius


def test_star_is_peeled_down_to_the_order_floor():
    trace = deletion_procedure(make_star(16), k=2)
    assert trace.order_floor == 4
    assert trace.terminated_by == "order-floor"
    assert len(trace.steps) == 12
    assert [s.original_label for s in trace.steps] == list(range(1, 13))
    assert trace.terminal_order == 4
    assert trace.terminal_mu == pytest.approx(math.sqrt(3))
    assert trace.outcome == "none"
    assert all(step.floor_met for step in trace.steps)
    assert graph6_decode(trace.terminal_graph6).order == 4


def test_pendant_is_removed_before_the_min_degree_guard():
    g = make_snk(40, 2).add_vertex(0b1)
    trace = deletion_procedure(g, k=2)
    assert len(trace.steps) == 1
    assert trace.steps[0].original_label == 40
    assert trace.terminated_by == "min-degree"
    assert trace.terminal_min_degree == 2
    assert trace.terminal_mu == pytest.approx(mu_snk_closed(40, 2), abs=1e-9)
    assert trace.outcome == "none"


def test_dense_graph_stops_on_the_spectral_guard():
    trace = deletion_procedure(make_complete(8), k=2)
    assert trace.steps == []
    assert trace.terminated_by == "spectral"
    assert trace.outcome == "i"


def test_min_degree_guard_fires_first_on_cycles():
    trace = deletion_procedure(make_cycle(6), k=2)
    assert trace.terminated_by == "min-degree"
    assert trace.terminal_order == 6


def test_outcome_ii_with_offset():
    # K_{3} join 7 independent vertices: delta = 3 >= k = 3
    trace = deletion_procedure(make_snk(10, 3), k=3, c=0.0)
    assert trace.terminated_by == "min-degree"
    threshold = 1 + math.sqrt(3 * 10 - 9 + 0.5)
    assert (trace.outcome == "ii") == (trace.terminal_mu > threshold)


@pytest.mark.parametrize("kwargs", [
    {"g": make_complete(1), "k": 2},
    {"g": make_star(5), "k": 1},
    {"g": make_star(5), "k": 2, "c": -1.0},
])
def test_deletion_preconditions(kwargs):
    with pytest.raises(PreconditionError):
        deletion_procedure(**kwargs)


def test_corollary_floor():
    assert corollary_floor(3.0, 4, 2) == pytest.approx(3.0 * (1 - 1 / (9.0 + 2)))
    assert corollary_floor(0.0, 2, 3) == 0.0


def test_sequence_with_equality_meets_the_conclusion():
    xs = lev3_sequence(4, 2, 300, 5)
    assert len(xs) == 6
    assert xs[0] == pytest.approx(0.5 + math.sqrt(596))
    report = lemma_lev3_sequence_check(4, 2, 300, 5, xs)
    assert report.preconditions_ok
    assert report.hypotheses_hold
    assert report.conclusion_holds
    assert report.failing_indices == []


def test_sequence_preconditions_are_reported():
    report = lemma_lev3_sequence_check(0, 2, 20, 5, lev3_sequence(0, 2, 20, 5))
    assert not report.preconditions_ok
    assert report.conclusion_holds is None
    assert any("4k^3" in failure for failure in report.precondition_failures)


def test_sequence_hypothesis_failure_is_located():
    xs = lev3_sequence(4, 2, 300, 5)
    xs[2] -= 0.5
    report = lemma_lev3_sequence_check(4, 2, 300, 5, xs)
    assert not report.hypotheses_hold
    assert 1 in report.hypothesis_failures


def test_sequence_domain():
    with pytest.raises(PreconditionError):
        lev3_sequence(0, 1, 10, 2)
    with pytest.raises(PreconditionError):
        lev3_sequence(100, 2, 10, 2)


def test_every_step_removes_a_minimum_entry_vertex():
    graphs = [make_star(16), make_snk(30, 2).add_vertex(0b1).add_vertex(0b10)]
    graphs += random_graphs(12, 10, 24, seed=5)
    for g in graphs:
        trace = deletion_procedure(g, k=3)
        current = g
        for step in trace.steps:
            result = spectral_radius(current)
            assert step.order == current.order
            assert step.mu == pytest.approx(result.mu, abs=1e-9)
            assert step.min_entry == pytest.approx(min(result.vector), abs=1e-9)
            assert result.vector[step.deleted_vertex] <= min(result.vector) + 1e-9
            current = current.delete_vertex(step.deleted_vertex)
            assert step.next_mu == pytest.approx(spectral_radius(current).mu, abs=1e-9)
        assert graph6_encode(current) == trace.terminal_graph6
