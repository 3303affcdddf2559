"""
Spectral bounds service
Evaluates the upper bounds on mu(G) in terms of edges and minimum degree,
the C_4 and even-cycle bounds, and the eigenvector lemmas that drive the
vertex-deletion argument. Every function returns a BoundReport.
"""

import logging
import math
from typing import List, Optional

from config import settings
from errors import PreconditionError
from models.graph import Graph
from schemas.spectral import BoundReport, SpectralResult
from services.canonical import is_isomorphic
from services.constructions import make_friendship
from services.detection import has_cycle
from services.spectral import min_entry_vertex, spectral_radius

logger = logging.getLogger(__name__)


def _mu(g: Graph, result: Optional[SpectralResult]) -> SpectralResult:
    return result if result is not None else spectral_radius(g)


def bound_nikiforov(g: Graph, result: Optional[SpectralResult] = None) -> BoundReport:
    """
    mu <= (delta - 1)/2 + sqrt(2m - delta n + (delta + 1)^2/4)
    """
    mu = _mu(g, result).mu
    delta, m, n = g.min_degree, g.edge_count, g.order
    rhs = (delta - 1) / 2 + math.sqrt(2 * m - delta * n + (delta + 1) ** 2 / 4)
    return BoundReport.compare("nikiforov", mu, rhs)


def bound_edges(g: Graph, result: Optional[SpectralResult] = None) -> BoundReport:
    """mu <= -1/2 + sqrt(2m + 1/4)"""
    mu = _mu(g, result).mu
    return BoundReport.compare("edges", mu, -0.5 + math.sqrt(2 * g.edge_count + 0.25))


def bound_edges_sqrt(g: Graph, result: Optional[SpectralResult] = None) -> BoundReport:
    """mu <= sqrt(2m)"""
    mu = _mu(g, result).mu
    return BoundReport.compare("edges-sqrt", mu, math.sqrt(2 * g.edge_count))


def _is_friendship(g: Graph) -> Optional[bool]:
    if g.order % 2 == 0 or g.order < 3:
        return False
    if g.order > settings.MAX_CANONICAL_ORDER:
        return None
    return is_isomorphic(g, make_friendship((g.order - 1) // 2))


def bound_c4free(g: Graph, result: Optional[SpectralResult] = None) -> BoundReport:
    """
    mu^2 - mu <= n - 1 for C_4-free graphs, with equality exactly for the
    friendship graphs
    """
    if g.order >= 4 and has_cycle(g, 4):
        raise PreconditionError("bound_c4free", "graph contains C4", {"operation": "bound_c4free"})
    mu = _mu(g, result).mu
    report = BoundReport.compare("c4free", mu * mu - mu, float(g.order - 1))
    witness = _is_friendship(g)
    note = None
    if report.tight and witness is False:
        note = "equality attained by a graph that is not a friendship graph"
    return report.model_copy(update={"witness_match": witness, "note": note})


def bound_even_cycle(g: Graph, k: int, result: Optional[SpectralResult] = None) -> BoundReport:
    """
    mu^2 - k mu <= k (n - 1) for C_{2k+2}-free graphs; k = 1 is the C_4 bound
    """
    if k < 1:
        raise PreconditionError("bound_even_cycle", f"requires k >= 1, got {k}")
    length = 2 * k + 2
    if g.order >= length and has_cycle(g, length):
        raise PreconditionError("bound_even_cycle", f"graph contains C{length}", {"k": k})
    mu = _mu(g, result).mu
    return BoundReport.compare(f"even-cycle-k{k}", mu * mu - k * mu, float(k * (g.order - 1)))


def bound_no_short_cycles(g: Graph, result: Optional[SpectralResult] = None) -> BoundReport:
    """
    mu <= sqrt(n - 1) for graphs with neither C_3 nor C_4
    """
    if (g.order >= 3 and has_cycle(g, 3)) or (g.order >= 4 and has_cycle(g, 4)):
        raise PreconditionError("bound_no_short_cycles", "graph contains C3 or C4")
    mu = _mu(g, result).mu
    return BoundReport.compare("no-short-cycles", mu, math.sqrt(g.order - 1))


# ----------------------------------------------------------------------
# Eigenvector lemmas
# ----------------------------------------------------------------------

def lemma1_min_entry(g: Graph, result: Optional[SpectralResult] = None) -> BoundReport:
    """
    min x_i <= sqrt(delta / (mu^2 + delta n - delta^2)) for a unit eigenvector x
    Disconnected graphs (and K_1) are reported as vacuous.
    """
    if g.order == 1 or not g.is_connected():
        return BoundReport(
            name="lemma1-min-entry", lhs=0.0, rhs=0.0, holds=True, slack=0.0,
            vacuous=True, note="disconnected graph: the minimum entry is 0"
        )
    res = _mu(g, result)
    delta, n = g.min_degree, g.order
    rhs = math.sqrt(delta / (res.mu ** 2 + delta * n - delta ** 2))
    return BoundReport.compare("lemma1-min-entry", min(res.vector), rhs)


def _min_vertex(g: Graph, res: SpectralResult, u: Optional[int], operation: str) -> int:
    if g.order == 1:
        raise PreconditionError(operation, "cannot delete the only vertex")
    if u is None:
        return min_entry_vertex(res)
    if not 0 <= u < g.order:
        raise PreconditionError(operation, f"vertex {u} not in graph of order {g.order}")
    if res.vector[u] > min(res.vector) + 1e-9:
        raise PreconditionError(
            operation, f"vertex {u} does not attain the minimum eigenvector entry",
            {"entry": res.vector[u], "minimum": min(res.vector)}
        )
    return u


def lemma2_deletion(g: Graph, u: Optional[int] = None, result: Optional[SpectralResult] = None) -> BoundReport:
    """
    mu(G - u) >= mu (1 - 2 x_u^2) / (1 - x_u^2) for a minimum-entry vertex u
    """
    res = _mu(g, result)
    u = _min_vertex(g, res, u, "lemma2_deletion")
    x2 = res.vector[u] ** 2
    floor = res.mu * (1 - 2 * x2) / (1 - x2)
    after = spectral_radius(g.delete_vertex(u)).mu
    return BoundReport.compare("lemma2-deletion", floor, after, note=f"u={u}")


def lemma3_combined(g: Graph, u: Optional[int] = None, result: Optional[SpectralResult] = None) -> BoundReport:
    """
    mu(G - u) >= mu (1 - 1/(mu^2/delta + n - delta - 1)) for a minimum-entry vertex u
    With delta = 0 the floor is mu itself.
    """
    res = _mu(g, result)
    u = _min_vertex(g, res, u, "lemma3_combined")
    delta, n, mu = g.min_degree, g.order, res.mu
    if delta == 0 or mu == 0:
        floor = mu
    else:
        floor = mu * (1 - 1 / (mu * mu / delta + n - delta - 1))
    after = spectral_radius(g.delete_vertex(u)).mu
    return BoundReport.compare("lemma3-combined", floor, after, note=f"u={u}")


def all_bounds(g: Graph) -> List[BoundReport]:
    """
    Every report that applies to a single graph
    """
    res = spectral_radius(g)
    reports = [
        bound_nikiforov(g, res),
        bound_edges(g, res),
        bound_edges_sqrt(g, res),
        lemma1_min_entry(g, res),
    ]
    if g.order >= 2:
        reports.append(lemma2_deletion(g, result=res))
        reports.append(lemma3_combined(g, result=res))

    c3 = g.order >= 3 and has_cycle(g, 3)
    c4 = g.order >= 4 and has_cycle(g, 4)
    if not c4:
        reports.append(bound_c4free(g, res))
        if not c3:
            reports.append(bound_no_short_cycles(g, res))
    for k in range(2, (g.order - 2) // 2 + 1):
        if not has_cycle(g, 2 * k + 2):
            reports.append(bound_even_cycle(g, k, res))

    logger.debug(f"Evaluated {len(reports)} bounds for {g!r}")
    return reports
