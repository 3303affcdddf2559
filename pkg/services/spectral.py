"""
Spectral service
Dominant adjacency eigenvalue by shifted power iteration, the closed forms for
mu(S_{n,k}) and mu(S_{n,k}^+), and the reference thresholds of the
extremal theorems
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from config import settings
from errors import BracketError, PreconditionError, SpectralConvergenceError
from models.graph import Graph, iter_bits
from schemas.spectral import BoundReport, SpectralResult

logger = logging.getLogger(__name__)


def _power_iteration(matrix: np.ndarray, tol: float, shift: float) -> Tuple[float, np.ndarray, float, int]:
    """
    Dominant eigenpair of a connected component's adjacency matrix

    Iterates x <- (A + cI) x / |(A + cI) x| from the uniform vector and stops
    once the residual |A x - mu x|_inf of the Rayleigh quotient mu reaches tol.
    """
    m = matrix.shape[0]
    shifted = matrix + shift * np.eye(m)
    x = np.full(m, 1.0 / math.sqrt(m))
    cap = settings.iteration_cap(m)
    best_residual = math.inf

    for iteration in range(1, cap + 1):
        y = shifted @ x
        x = y / np.linalg.norm(y)
        ax = matrix @ x
        mu = float(x @ ax)
        residual = float(np.max(np.abs(ax - mu * x)))
        best_residual = min(best_residual, residual)
        if residual <= tol:
            return mu, x, residual, iteration

    raise SpectralConvergenceError(m, cap, best_residual, tol)


def spectral_radius(g: Graph, tol: Optional[float] = None) -> SpectralResult:
    """
    mu(G) with a unit nonnegative eigenvector

    Each connected component is solved separately; the result belongs to the
    first component attaining the maximum, zero-padded to the whole graph.
    """
    tol = settings.EIGEN_TOLERANCE if tol is None else tol
    if not tol > 0:
        raise PreconditionError("spectral_radius", f"tolerance must be positive, got {tol}")

    matrix = g.adjacency_matrix()
    best: Optional[Tuple[float, np.ndarray, float]] = None
    best_vertices: List[int] = []
    total_iterations = 0

    for component in g.components():
        vertices = list(iter_bits(component))
        sub = matrix[np.ix_(vertices, vertices)]
        mu, x, residual, iterations = _power_iteration(sub, tol, settings.EIGEN_SHIFT)
        total_iterations += iterations
        if best is None or mu > best[0] + settings.COMPARE_TOLERANCE:
            best = (mu, x, residual)
            best_vertices = vertices

    mu, x, residual = best
    vector = np.zeros(g.order)
    vector[best_vertices] = np.abs(x)
    return SpectralResult(
        mu=max(mu, 0.0),
        vector=vector.tolist(),
        residual=residual,
        iterations=total_iterations,
    )


def min_entry_vertex(result: SpectralResult) -> int:
    """
    Vertex with the smallest eigenvector entry, lowest index on ties
    """
    smallest = min(result.vector)
    for u, value in enumerate(result.vector):
        if value <= smallest + 1e-9:
            return u
    return 0


# ----------------------------------------------------------------------
# Closed forms for the extremal constructions
# ----------------------------------------------------------------------

def mu_snk_closed(n: int, k: int) -> float:
    """
    mu(S_{n,k}) = (k-1)/2 + sqrt(kn - (3k^2 + 2k - 1)/4)
    """
    if not 1 <= k < n:
        raise PreconditionError("mu_snk_closed", f"requires 1 <= k < n, got n={n}, k={k}")
    return (k - 1) / 2 + math.sqrt(k * n - (3 * k * k + 2 * k - 1) / 4)


def snk_plus_cubic(n: int, k: int, x: float) -> float:
    """x^3 - k x^2 - (kn - k^2 - k + 1) x + k (n - k - 2)"""
    return x ** 3 - k * x ** 2 - (k * n - k * k - k + 1) * x + k * (n - k - 2)


def mu_snk_plus(n: int, k: int) -> float:
    """
    mu(S_{n,k}^+) as the largest root of its characteristic cubic, by
    bisection on [mu(S_{n,k}), mu(S_{n,k}) + 1]
    """
    if not 1 <= k < n - 1:
        raise PreconditionError("mu_snk_plus", f"requires 1 <= k < n - 1, got n={n}, k={k}")
    lo = mu_snk_closed(n, k)
    hi = lo + 1.0
    f_lo = snk_plus_cubic(n, k, lo)
    f_hi = snk_plus_cubic(n, k, hi)
    if not (f_lo < 0 < f_hi):
        raise BracketError(
            f"cubic bracket failed for n={n}, k={k}: p({lo:.6f})={f_lo:.3e}, p({hi:.6f})={f_hi:.3e}"
        )
    for _ in range(200):
        mid = (lo + hi) / 2
        if hi - lo <= 1e-14 or mid in (lo, hi):
            break
        if snk_plus_cubic(n, k, mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def snk_plus_bounds(n: int, k: int) -> List[BoundReport]:
    """
    Both sides of the gap bound
        1/(n - k + sqrt(kn/2)) < mu(S_{n,k}^+) - mu(S_{n,k}) < 1/(n - k - 2 sqrt((n-k)/k))
    The upper side is not applicable when its denominator is not positive.
    """
    gap = mu_snk_plus(n, k) - mu_snk_closed(n, k)
    reports = [
        BoundReport.compare("snk-plus-gap-lower", 1.0 / (n - k + math.sqrt(k * n / 2)), gap)
    ]
    denominator = n - k - 2 * math.sqrt((n - k) / k)
    if denominator <= 0:
        reports.append(BoundReport.not_applicable(
            "snk-plus-gap-upper",
            f"n - k - 2 sqrt((n-k)/k) = {denominator:.6g} is not positive"
        ))
    else:
        reports.append(BoundReport.compare("snk-plus-gap-upper", gap, 1.0 / denominator))
    return reports


# ----------------------------------------------------------------------
# Reference values and theorem thresholds
# ----------------------------------------------------------------------

def f4_upper(n: int) -> float:
    """Largest mu with mu^2 - mu <= n - 1"""
    return 0.5 + math.sqrt(n - 0.75)


def odd_cycle_reference(n: int) -> float:
    """mu(K_{floor(n/2), ceil(n/2)}) = sqrt(floor(n^2/4))"""
    return math.sqrt(n * n // 4)


def theorem2_threshold(n: int, k: int) -> float:
    return k / 2 + math.sqrt(k * n + (k * k - 4 * k) / 4)


def theorem3_threshold(n: int, k: int) -> float:
    return (k - 1) / 2 + math.sqrt(k * n + (k + 1) ** 2 / 4)


def sandwich_references(n: int, k: int) -> Tuple[float, float]:
    """(k-1)/2 + sqrt(kn) and k/2 + sqrt(kn)"""
    root = math.sqrt(k * n)
    return (k - 1) / 2 + root, k / 2 + root
