"""
Tests for path, cycle and pattern detection and the edge-count facts
"""

import networkx as nx
import pytest

from errors import PreconditionError
from helpers import atlas, random_graphs, to_networkx
from models.graph import Graph
from schemas.patterns import CycleAtLeast, CycleOrder, ForbiddenSpec, PathOrder, parse_pattern
from services.constructions import (
    make_complete,
    make_cycle,
    make_path,
    make_petersen,
    make_snk,
    make_star,
)
from services.detection import (
    PatternFilter,
    admits,
    check_fact5,
    check_fact_erdos_gallai,
    check_fact_f2_f3,
    contains_pattern,
    has_cycle,
    has_path,
    has_path_with_ends_in,
    longest_path_order,
    missing_patterns,
)
from services.enumeration import enumerate_graphs


def _engines_agree(g: Graph) -> None:
    for l in range(1, g.order + 1):
        assert has_path(g, l, "dp") == has_path(g, l, "dfs"), (g, l)
    for l in range(3, g.order + 1):
        assert has_cycle(g, l, "dp") == has_cycle(g, l, "dfs"), (g, l)
    for mask in (g.full_mask, 0b101, (1 << g.order) - 2):
        mask &= g.full_mask
        for l in range(2, g.order + 1):
            assert has_path_with_ends_in(g, mask, l, "dp") == has_path_with_ends_in(g, mask, l, "dfs")


def test_paths_and_cycles_of_named_graphs():
    assert has_path(make_path(5), 5) and not has_path(make_path(5), 6)
    assert has_cycle(make_cycle(6), 6)
    assert not has_cycle(make_cycle(6), 5) and not has_cycle(make_cycle(6), 3)
    assert has_cycle(make_complete(4), 3) and has_cycle(make_complete(4), 4)
    assert not has_path(make_snk(7, 2), 6)
    assert has_path(make_snk(7, 2, plus=True), 6)


def test_petersen_cycle_spectrum():
    g = make_petersen()
    assert has_path(g, 10)
    assert [l for l in range(3, 11) if has_cycle(g, l)] == [5, 6, 8, 9]


def test_trivial_orders():
    g = Graph(1, (0,))
    assert has_path(g, 0) and has_path(g, 1)
    assert not has_path(g, 2)
    assert has_path(make_path(2), 2)
    with pytest.raises(PreconditionError):
        has_cycle(make_complete(3), 2)


def test_cycles_match_networkx(small_atlas):
    for g in small_atlas:
        lengths = {len(c) for c in nx.simple_cycles(to_networkx(g), length_bound=g.order) if len(c) >= 3}
        assert {l for l in range(3, g.order + 1) if has_cycle(g, l)} == lengths


def test_engines_agree_on_small_graphs(small_atlas):
    for g in small_atlas:
        _engines_agree(g)


def test_engines_agree_on_random_graphs():
    for g in random_graphs(40, 8, 14, seed=29):
        _engines_agree(g)


@pytest.mark.slow
def test_engines_agree_on_order_7():
    for g in atlas(7, min_order=7):
        _engines_agree(g)


@pytest.mark.slow
def test_engines_agree_on_every_graph_of_order_8():
    count = 0
    for g in enumerate_graphs(8):
        _engines_agree(g)
        count += 1
    assert count == 12346


def test_paths_with_prescribed_ends():
    p4 = make_path(4)
    assert has_path_with_ends_in(p4, 0b1001, 4)
    assert not has_path_with_ends_in(p4, 0b1001, 3)
    assert not has_path_with_ends_in(p4, 0b0001, 2)
    with pytest.raises(PreconditionError):
        has_path_with_ends_in(p4, 0b10000, 2)
    with pytest.raises(PreconditionError):
        has_path_with_ends_in(p4, 0b0011, 1)


def test_longest_path_order():
    assert longest_path_order(make_path(5)) == 5
    assert longest_path_order(Graph(1, (0,))) == 1
    assert longest_path_order(Graph.from_edges(4, [(0, 1), (2, 3)])) == 2
    assert longest_path_order(make_star(6)) == 3


def test_pattern_tokens_and_normalisation():
    spec = ForbiddenSpec.parse("C6, P5, c>=6,P5")
    assert spec.token() == "P5,C6,C>=6"
    assert spec == ForbiddenSpec.of(PathOrder(l=5), CycleAtLeast(l=6), CycleOrder(l=6))
    assert str(ForbiddenSpec()) == "(none)"
    assert parse_pattern("c>=4") == CycleAtLeast(l=4)
    for bad in ("Q5", "P1", "C2", "P"):
        with pytest.raises(ValueError):
            ForbiddenSpec.parse(bad)


def test_pattern_dispatch():
    c6 = make_cycle(6)
    assert contains_pattern(c6, CycleAtLeast(l=5))
    assert not contains_pattern(c6, CycleAtLeast(l=7))
    spec = ForbiddenSpec.parse("P7,C5,C>=7")
    assert admits(c6, spec)
    assert missing_patterns(c6, ForbiddenSpec.parse("P6,C6,C3").patterns) == ["C3"]


def test_pattern_filter_is_a_hashable_predicate():
    f = PatternFilter(ForbiddenSpec.parse("P4"))
    assert f == PatternFilter(ForbiddenSpec.parse("P4"))
    assert hash(f) == hash(PatternFilter(ForbiddenSpec.parse("P4")))
    assert f(make_star(5)) and not f(make_path(4))
    assert f.describe() == "avoid P4"


def test_erdos_gallai_fact():
    report = check_fact_erdos_gallai(make_complete(5), 2)
    assert report.hypothesis_met and report.conclusion_met and report.holds
    assert check_fact_erdos_gallai(make_path(6), 2).vacuous
    with pytest.raises(PreconditionError):
        check_fact_erdos_gallai(make_path(6), 1)


def test_erdos_gallai_fact_on_small_graphs(small_atlas):
    for g in small_atlas:
        for l in range(2, g.order):
            assert check_fact_erdos_gallai(g, l).holds


def test_edge_facts_escape_through_the_extremal_graph():
    plain, plus = check_fact_f2_f3(make_snk(7, 2), 2)
    assert plain.hypothesis_met and plain.witness_match is True and plain.holds
    assert plus.vacuous

    plain, plus = check_fact_f2_f3(make_snk(7, 2, plus=True), 2)
    assert plain.conclusion_met and plain.holds
    assert plus.witness_match is True and plus.holds


def test_edge_facts_preconditions():
    with pytest.raises(PreconditionError):
        check_fact_f2_f3(make_snk(6, 2), 2)
    with pytest.raises(PreconditionError):
        check_fact_f2_f3(Graph.from_edges(8, [(0, 1)]), 2)


def test_fact5_on_k4():
    part_a, part_b = check_fact5(make_complete(4), 0b0011, 1)
    assert part_a.hypothesis_met and part_a.conclusion_met
    assert part_b.hypothesis_met and part_b.conclusion_met


def test_fact5_skips_conclusion_when_hypothesis_fails():
    part_a, part_b = check_fact5(make_path(4), 0b0001, 2)
    assert part_a.vacuous and part_a.conclusion_met is None
    assert part_b.vacuous and part_b.conclusion_met is None


def test_fact5_sweep_small_graphs():
    for g in atlas(5):
        for mask in range(1 << g.order):
            for k in (1, 2):
                assert all(r.holds for r in check_fact5(g, mask, k)), (g.edges(), mask, k)


@pytest.mark.slow
def test_fact5_sweep_order_6_and_7():
    for g in atlas(7, min_order=6):
        for mask in range(1 << g.order):
            for k in (1, 2, 3):
                assert all(r.holds for r in check_fact5(g, mask, k))
