"""
Subgraph detection service
Exact detection of paths and cycles of a given order (subgraph, not induced
containment), paths with both ends in a vertex set, and the edge-count facts
about long paths. Two engines are available: a subset DP over
(vertex set, endpoint) states for small orders and a pruned DFS above.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Literal, Optional, Tuple

from config import settings
from errors import PreconditionError
from models.graph import Graph, iter_bits
from schemas.patterns import CycleAtLeast, CycleOrder, ForbiddenSpec, PathOrder
from schemas.spectral import BoundReport
from services.canonical import is_isomorphic
from services.constructions import make_snk

logger = logging.getLogger(__name__)

Engine = Literal["dp", "dfs", "auto"]


def _select_engine(g: Graph, engine: str) -> str:
    if engine == "auto":
        return "dp" if g.order <= settings.SUBSET_DP_LIMIT else "dfs"
    if engine not in ("dp", "dfs"):
        raise PreconditionError("detection", f"unknown engine {engine!r}")
    return engine


def _largest_component(g: Graph) -> int:
    return max(bin(c).count("1") for c in g.components())


# ----------------------------------------------------------------------
# Subset DP engine
# ----------------------------------------------------------------------

def _dp_layers(adj: Tuple[int, ...], seeds: Iterable[int], allowed: int, length: int):
    """
    Yield successive layers {vertex set: bitset of endpoints} of simple paths
    that start at a seed and stay inside allowed, one layer per path order
    """
    layer: Dict[int, int] = {}
    for v in seeds:
        layer[1 << v] = layer.get(1 << v, 0) | (1 << v)
    yield layer
    for _ in range(length - 1):
        following: Dict[int, int] = {}
        for mask, ends in layer.items():
            for end in iter_bits(ends):
                for w in iter_bits(adj[end] & allowed & ~mask):
                    key = mask | (1 << w)
                    following[key] = following.get(key, 0) | (1 << w)
        if not following:
            return
        layer = following
        yield layer


def _dp_path(g: Graph, l: int) -> bool:
    depth = 0
    for depth, _ in enumerate(_dp_layers(g.adj, range(g.order), g.full_mask, l), start=1):
        pass
    return depth >= l


def _dp_cycle(g: Graph, l: int) -> bool:
    for anchor in range(g.order - l + 1):
        allowed = g.full_mask & ~((1 << (anchor + 1)) - 1)
        back = g.adj[anchor]
        depth, last = 0, {}
        for depth, last in enumerate(_dp_layers(g.adj, [anchor], allowed, l), start=1):
            pass
        if depth == l and any(ends & back for ends in last.values()):
            return True
    return False


def _dp_ends_in(g: Graph, seeds: int, l: int) -> bool:
    depth, last = 0, {}
    for depth, last in enumerate(_dp_layers(g.adj, iter_bits(seeds), g.full_mask, l), start=1):
        pass
    return depth == l and any(ends & seeds for ends in last.values())


# ----------------------------------------------------------------------
# DFS engine
# ----------------------------------------------------------------------

def _reach(adj: Tuple[int, ...], start: int, blocked: int) -> int:
    """Number of vertices reachable from start without entering blocked"""
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= adj[v]
        frontier = grow & ~seen & ~blocked
        seen |= frontier
    return bin(seen).count("1")


def _dfs_extend(adj, end: int, visited: int, remaining: int, allowed: int, targets: int) -> bool:
    """
    Extend a simple path ending at end by remaining vertices inside allowed;
    succeed when the final endpoint lies in targets
    """
    if remaining == 0:
        return bool(targets >> end & 1)
    if _reach(adj, end, (visited & ~(1 << end)) | ~allowed) - 1 < remaining:
        return False
    for w in iter_bits(adj[end] & allowed & ~visited):
        if _dfs_extend(adj, w, visited | (1 << w), remaining - 1, allowed, targets):
            return True
    return False


def _dfs_path(g: Graph, l: int) -> bool:
    return any(
        _dfs_extend(g.adj, start, 1 << start, l - 1, g.full_mask, g.full_mask)
        for start in range(g.order)
    )


def _dfs_cycle(g: Graph, l: int) -> bool:
    for anchor in range(g.order - l + 1):
        allowed = g.full_mask & ~((1 << anchor) - 1)
        if _dfs_extend(g.adj, anchor, 1 << anchor, l - 1, allowed, g.adj[anchor]):
            return True
    return False


def _dfs_ends_in(g: Graph, seeds: int, l: int) -> bool:
    return any(
        _dfs_extend(g.adj, start, 1 << start, l - 1, g.full_mask, seeds)
        for start in iter_bits(seeds)
    )


# ----------------------------------------------------------------------
# Public detectors
# ----------------------------------------------------------------------

def has_path(g: Graph, l: int, engine: Engine = "auto") -> bool:
    """
    True iff g contains a path on exactly l vertices
    """
    if l <= 1:
        return True
    if l > g.order:
        return False
    if l == 2:
        return g.edge_count > 0
    if l > _largest_component(g):
        return False
    if _select_engine(g, engine) == "dp":
        return _dp_path(g, l)
    return _dfs_path(g, l)


def longest_path_order(g: Graph, engine: Engine = "auto") -> int:
    """Largest l with has_path(g, l); 1 for edgeless graphs"""
    lo, hi = 1, _largest_component(g)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if has_path(g, mid, engine):
            lo = mid
        else:
            hi = mid - 1
    return lo


def has_cycle(g: Graph, l: int, engine: Engine = "auto") -> bool:
    """
    True iff g contains a cycle on exactly l vertices; each cycle is found
    from its lowest vertex only
    """
    if l < 3:
        raise PreconditionError("has_cycle", f"cycle order must be at least 3, got {l}")
    if l > g.order or l > _largest_component(g):
        return False
    if _select_engine(g, engine) == "dp":
        return _dp_cycle(g, l)
    return _dfs_cycle(g, l)


def has_path_with_ends_in(g: Graph, vertices: int, l: int, engine: Engine = "auto") -> bool:
    """
    True iff some path on exactly l vertices has both ends in the vertex
    bitset
    """
    if l < 2:
        raise PreconditionError("has_path_with_ends_in", f"path order must be at least 2, got {l}")
    if vertices & ~g.full_mask:
        raise PreconditionError("has_path_with_ends_in", "vertex set is not a subset of V(G)")
    if l > g.order or bin(vertices).count("1") < 2:
        return False
    if _select_engine(g, engine) == "dp":
        return _dp_ends_in(g, vertices, l)
    return _dfs_ends_in(g, vertices, l)


def contains_pattern(g: Graph, pattern, engine: Engine = "auto") -> bool:
    if isinstance(pattern, PathOrder):
        return has_path(g, pattern.l, engine)
    if isinstance(pattern, CycleOrder):
        return has_cycle(g, pattern.l, engine)
    if isinstance(pattern, CycleAtLeast):
        return any(has_cycle(g, p, engine) for p in range(pattern.l, g.order + 1))
    raise PreconditionError("contains_pattern", f"unknown pattern {pattern!r}")


def admits(g: Graph, spec: ForbiddenSpec, engine: Engine = "auto") -> bool:
    """True iff g avoids every pattern of spec"""
    return not any(contains_pattern(g, p, engine) for p in spec.patterns)


def missing_patterns(g: Graph, patterns: Iterable, engine: Engine = "auto") -> List[str]:
    """Tokens of the patterns that g does not contain"""
    return [p.token() for p in patterns if not contains_pattern(g, p, engine)]


@dataclass(frozen=True)
class PatternFilter:
    """
    Picklable admissibility predicate for enumeration; avoiding a set of
    paths and cycles is preserved under vertex deletion
    """
    spec: ForbiddenSpec
    engine: str = "auto"

    def __call__(self, g: Graph) -> bool:
        return admits(g, self.spec, self.engine)

    def describe(self) -> str:
        return f"avoid {self.spec}"


# ----------------------------------------------------------------------
# Edge-count facts about long paths
# ----------------------------------------------------------------------

def check_fact_erdos_gallai(g: Graph, l: int) -> BoundReport:
    """
    If e(G) > (l/2) n then G contains P_{l+2}
    """
    if l < 2:
        raise PreconditionError("check_fact_erdos_gallai", f"requires l >= 2, got {l}")
    m, n = g.edge_count, g.order
    hypothesis = 2 * m > l * n
    conclusion = has_path(g, l + 2)
    return BoundReport.implication(
        f"erdos-gallai-l{l}", float(m), l * n / 2, hypothesis, conclusion,
        note=f"e(G) > (l/2) n implies P{l + 2}"
    )


def _extremal_match(g: Graph, plus: bool, k: int) -> Optional[bool]:
    if g.order > settings.MAX_CANONICAL_ORDER:
        return None
    return is_isomorphic(g, make_snk(g.order, k, plus=plus))


def check_fact_f2_f3(g: Graph, k: int) -> List[BoundReport]:
    """
    For connected G with n > 3k:
      e(G) >= e(S_{n,k})   implies P_{2k+2}, unless equality and G = S_{n,k}
      e(G) >= e(S_{n,k}^+) implies P_{2k+3}, unless equality and G = S_{n,k}^+
    """
    n, m = g.order, g.edge_count
    if k < 1:
        raise PreconditionError("check_fact_f2_f3", f"requires k >= 1, got {k}")
    if n <= 3 * k:
        raise PreconditionError("check_fact_f2_f3", f"requires n > 3k, got n={n}, k={k}")
    if not g.is_connected():
        raise PreconditionError("check_fact_f2_f3", "requires a connected graph")

    reports = []
    base = k * n - (k * k + k) // 2
    for plus, edges, length in ((False, base, 2 * k + 2), (True, base + 1, 2 * k + 3)):
        name = "fact-snk-plus-path" if plus else "fact-snk-path"
        hypothesis = m >= edges
        match = _extremal_match(g, plus, k) if hypothesis and m == edges else False
        conclusion = has_path(g, length) or bool(match)
        reports.append(BoundReport.implication(
            name, float(m), float(edges), hypothesis, conclusion,
            witness_match=match,
            note=f"e(G) >= {edges} implies P{length} unless G is the extremal graph"
        ))
    return reports


def check_fact5(g: Graph, vertices: int, k: int) -> List[BoundReport]:
    """
    Paths with both ends in U for a partition V = U + W:
      (A) 2e(U) + e(U,W) > (2k-2)|U| + k|W| implies a path of order 2k or 2k+1
      (B) 2e(U) + e(U,W) > (2k-1)|U| + k|W| implies a path of order 2k+1
    with both ends in U
    """
    if k < 1:
        raise PreconditionError("check_fact5", f"requires k >= 1, got {k}")
    if vertices & ~g.full_mask:
        raise PreconditionError("check_fact5", "U is not a subset of V(G)")
    other = g.full_mask & ~vertices
    u_size, w_size = bin(vertices).count("1"), bin(other).count("1")
    lhs = 2 * g.edges_within(vertices) + g.edges_between(vertices, other)

    def ends_in(length: int) -> bool:
        return length <= g.order and has_path_with_ends_in(g, vertices, length)

    rhs_a = (2 * k - 2) * u_size + k * w_size
    rhs_b = (2 * k - 1) * u_size + k * w_size
    hyp_a, hyp_b = lhs > rhs_a, lhs > rhs_b
    # Conclusions are only searched for when the hypothesis holds
    return [
        BoundReport.implication(
            f"fact5a-k{k}", float(lhs), float(rhs_a), hyp_a,
            (ends_in(2 * k) or ends_in(2 * k + 1)) if hyp_a else None
        ),
        BoundReport.implication(
            f"fact5b-k{k}", float(lhs), float(rhs_b), hyp_b,
            ends_in(2 * k + 1) if hyp_b else None
        ),
    ]
