"""
Graph constructions
The extremal families S_{n,k} and S_{n,k}^+, the friendship graph, complete
bipartite graphs and the small reference graphs used throughout the workbench
"""

import logging
from itertools import combinations

from errors import GraphError
from models.graph import Graph

logger = logging.getLogger(__name__)


def make_snk(n: int, k: int, plus: bool = False) -> Graph:
    """
    S_{n,k}: join of the clique K_k (vertices 0..k-1) with an independent set
    of order n-k (vertices k..n-1). With plus=True one edge is added inside the
    independent set, joining vertices k and k+1 (S_{n,k}^+).

    e(S_{n,k}) = kn - (k^2 + k)/2, one more for the plus variant.
    """
    if not 1 <= k < n:
        raise GraphError(f"S_{{n,k}} requires 1 <= k < n, got n={n}, k={k}")
    if plus and n - k < 2:
        raise GraphError(f"S_{{n,k}}^+ requires n - k >= 2, got n={n}, k={k}")

    edges = [(u, v) for u, v in combinations(range(k), 2)]
    edges += [(u, v) for u in range(k) for v in range(k, n)]
    if plus:
        edges.append((k, k + 1))
    g = Graph.from_edges(n, edges)

    expected = k * n - (k * k + k) // 2 + (1 if plus else 0)
    if g.edge_count != expected:
        raise GraphError(f"S_{{{n},{k}}} built with {g.edge_count} edges, expected {expected}")
    return g


def make_friendship(t: int) -> Graph:
    """
    Friendship graph: t triangles sharing the hub vertex 0, order 2t+1
    """
    if t < 1:
        raise GraphError(f"friendship graph needs at least one triangle, got t={t}")
    edges = []
    for i in range(t):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * t + 1, edges)


def make_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with colour classes 0..a-1 and a..a+b-1"""
    if a < 1 or b < 1:
        raise GraphError(f"complete bipartite parts must be non-empty, got {a} and {b}")
    if a + b > 64:
        raise GraphError(f"K_{{{a},{b}}} has order {a + b} > 64")
    return Graph.from_edges(a + b, [(u, v) for u in range(a) for v in range(a, a + b)])


def make_complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def make_empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def make_star(n: int) -> Graph:
    """K_{1,n-1} with hub 0"""
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def make_path(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def make_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


FAMILIES = ("snk", "snk-plus", "friendship", "kab", "complete", "path", "cycle", "star", "empty", "petersen")


def build_family(family: str, n: int = 0, k: int = 0, a: int = 0, b: int = 0, t: int = 0) -> Graph:
    """
    Dispatch used by the construct subcommand
    """
    logger.debug(f"Constructing family={family} n={n} k={k} a={a} b={b} t={t}")
    if family == "snk":
        return make_snk(n, k)
    if family == "snk-plus":
        return make_snk(n, k, plus=True)
    if family == "friendship":
        if t and n and n != 2 * t + 1:
            raise GraphError(f"friendship graph with t={t} has order {2 * t + 1}, got n={n}")
        if not t:
            if n < 3 or n % 2 == 0:
                raise GraphError(f"friendship graphs have odd order >= 3, got n={n}")
            t = (n - 1) // 2
        return make_friendship(t)
    if family == "kab":
        if not a and not b:
            a, b = n // 2, n - n // 2
        return make_complete_bipartite(a, b)
    if family == "complete":
        return make_complete(n)
    if family == "path":
        return make_path(n)
    if family == "cycle":
        return make_cycle(n)
    if family == "star":
        return make_star(n)
    if family == "empty":
        return make_empty(n)
    if family == "petersen":
        return make_petersen()
    raise GraphError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
