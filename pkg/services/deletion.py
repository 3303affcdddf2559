"""
Vertex-deletion service
Runs the minimum-eigenvector-entry deletion loop G_0 = G, G_{r+1} = G_r - u_r
and checks real sequences against the shrinking-order bound that the loop
relies on
"""

import logging
import math
from typing import List, Sequence

from config import settings
from errors import PreconditionError
from models.graph import Graph
from schemas.spectral import DeletionStep, DeletionTrace, Lev3Report
from services.graph6 import graph6_encode
from services.spectral import min_entry_vertex, spectral_radius

logger = logging.getLogger(__name__)

SEQUENCE_TOLERANCE = 1e-12


def corollary_floor(mu: float, order: int, k: int) -> float:
    """
    mu (1 - 1/(mu^2/(k-1) + order - k)), the guaranteed value of mu(G - u)
    when delta(G) <= k - 1
    """
    denominator = mu * mu / (k - 1) + order - k
    if denominator <= 0:
        return 0.0
    return mu * (1 - 1 / denominator)


def _outcome(mu: float, order: int, min_degree: int, n: int, k: int, c: float) -> str:
    if mu > math.sqrt((2 * k + 1) * order):
        return "i"
    radicand = k * order - k * k + c + 0.5
    threshold = (k - 1) / 2 + math.sqrt(max(radicand, 0.0))
    if order >= math.sqrt(n) and min_degree >= k and mu > threshold:
        return "ii"
    return "none"


def deletion_procedure(g: Graph, k: int, c: float = 0.0) -> DeletionTrace:
    """
    Delete a minimum-entry vertex while mu(G_r) <= sqrt((2k+1)|G_r|) and
    delta(G_r) <= k - 1, never going below floor(sqrt(n)) vertices

    Ties between minimum entries go to the lowest index.
    """
    n = g.order
    if n < 2:
        raise PreconditionError("deletion_procedure", "requires at least two vertices")
    if k < 2:
        raise PreconditionError("deletion_procedure", f"requires k >= 2, got {k}")
    if c < 0:
        raise PreconditionError("deletion_procedure", f"requires c >= 0, got {c}")

    order_floor = math.isqrt(n)
    labels = list(range(n))
    current = g
    result = spectral_radius(current)
    steps: List[DeletionStep] = []

    while True:
        if result.mu > math.sqrt((2 * k + 1) * current.order):
            terminated_by = "spectral"
            break
        if current.min_degree > k - 1:
            terminated_by = "min-degree"
            break
        if current.order <= order_floor:
            terminated_by = "order-floor"
            break

        u = min_entry_vertex(result)
        following = current.delete_vertex(u)
        next_result = spectral_radius(following)
        floor = corollary_floor(result.mu, current.order, k)
        steps.append(DeletionStep(
            order=current.order,
            mu=result.mu,
            min_degree=current.min_degree,
            min_entry=result.vector[u],
            deleted_vertex=u,
            original_label=labels[u],
            corollary_floor=floor,
            next_mu=next_result.mu,
            floor_met=next_result.mu >= floor - settings.COMPARE_TOLERANCE,
        ))
        logger.debug(f"deleted vertex {labels[u]} at order {current.order}, mu {result.mu:.6f} -> {next_result.mu:.6f}")
        labels.pop(u)
        current, result = following, next_result

    trace = DeletionTrace(
        k=k,
        c=c,
        start_order=n,
        order_floor=order_floor,
        steps=steps,
        terminated_by=terminated_by,
        terminal_order=current.order,
        terminal_mu=result.mu,
        terminal_min_degree=current.min_degree,
        terminal_graph6=graph6_encode(current),
        outcome=_outcome(result.mu, current.order, current.min_degree, n, k, c),
    )
    logger.info(f"deletion procedure: {len(steps)} steps, stopped by {terminated_by}, outcome {trace.outcome}")
    return trace


# ----------------------------------------------------------------------
# Shrinking-order sequence bound
# ----------------------------------------------------------------------

def _step_floor(x: float, i: int, n: int, k: int) -> float:
    return x * (1 - 1 / (x * x / (k - 1) + n - i - k))


def lev3_sequence(a: float, k: int, n: int, s: int) -> List[float]:
    """
    x_0 = (k-1)/2 + sqrt(kn - a) and x_{i+1} = x_i (1 - 1/(x_i^2/(k-1) + n - i - k))
    """
    if k < 2:
        raise PreconditionError("lev3_sequence", f"requires k >= 2, got {k}")
    if k * n - a < 0:
        raise PreconditionError("lev3_sequence", "kn - a must be nonnegative")
    xs = [(k - 1) / 2 + math.sqrt(k * n - a)]
    for i in range(s):
        xs.append(_step_floor(xs[-1], i, n, k))
    return xs


def lemma_lev3_sequence_check(a: float, k: int, n: int, s: int, x: Sequence[float]) -> Lev3Report:
    """
    Check x_i >= (k-1)/2 + sqrt(k(n-i) - a + 1/2) for i = 1..s

    The preconditions k >= 2, s >= 1 and n - s >= 4k^3 + 4|a|(k-1) are
    reported separately; no verdict is given when they fail.
    """
    failures = []
    if k < 2:
        failures.append(f"k >= 2 fails (k={k})")
    if s < 1:
        failures.append(f"s >= 1 fails (s={s})")
    if n - s < 4 * k ** 3 + 4 * abs(a) * (k - 1):
        failures.append(f"n - s >= 4k^3 + 4|a|(k-1) fails ({n - s} < {4 * k ** 3 + 4 * abs(a) * (k - 1)})")
    if len(x) != s + 1:
        failures.append(f"sequence must have s + 1 = {s + 1} terms, got {len(x)}")
    if failures:
        return Lev3Report(a=a, k=k, n=n, s=s, preconditions_ok=False, precondition_failures=failures)

    hypothesis_failures = []
    if x[0] + SEQUENCE_TOLERANCE < (k - 1) / 2 + math.sqrt(k * n - a):
        hypothesis_failures.append(-1)
    for i in range(s):
        if x[i + 1] + SEQUENCE_TOLERANCE < _step_floor(x[i], i, n, k):
            hypothesis_failures.append(i)

    failing = [
        i for i in range(1, s + 1)
        if x[i] + SEQUENCE_TOLERANCE < (k - 1) / 2 + math.sqrt(k * (n - i) - a + 0.5)
    ]
    return Lev3Report(
        a=a, k=k, n=n, s=s,
        preconditions_ok=True,
        hypotheses_hold=not hypothesis_failures,
        hypothesis_failures=hypothesis_failures,
        conclusion_holds=not failing,
        failing_indices=failing,
    )
