"""
Exact oracles for the spectral radius: the characteristic polynomial by
Faddeev-LeVerrier in rational arithmetic and its largest root isolated with
a Sturm sequence
"""

from fractions import Fraction
from typing import List

import numpy as np

from models.graph import Graph

Poly = List[Fraction]


def characteristic_polynomial(g: Graph) -> Poly:
    """Coefficients of det(xI - A), highest degree first"""
    n = g.order
    a = [[Fraction(1) if g.has_edge(i, j) else Fraction(0) for j in range(n)] for i in range(n)]

    def matmul(x, y):
        return [[sum(x[i][t] * y[t][j] for t in range(n)) for j in range(n)] for i in range(n)]

    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    previous = Fraction(1)
    for k in range(1, n + 1):
        am = matmul(a, m)
        m = [[am[i][j] + (previous if i == j else 0) for j in range(n)] for i in range(n)]
        am = matmul(a, m)
        previous = -sum(am[i][i] for i in range(n)) / k
        coeffs.append(previous)
    return coeffs


def _evaluate(p: Poly, x: Fraction) -> Fraction:
    value = Fraction(0)
    for c in p:
        value = value * x + c
    return value


def _trim(p: Poly) -> Poly:
    while p and p[0] == 0:
        p = p[1:]
    return p


def _derivative(p: Poly) -> Poly:
    degree = len(p) - 1
    return [c * (degree - i) for i, c in enumerate(p[:-1])]


def _remainder(p: Poly, q: Poly) -> Poly:
    p = list(p)
    while len(p) >= len(q):
        factor = p[0] / q[0]
        for i in range(len(q)):
            p[i] -= factor * q[i]
        p.pop(0)
    return _trim(p)


def sturm_chain(p: Poly) -> List[Poly]:
    chain = [p, _derivative(p)]
    while True:
        r = _remainder(chain[-2], chain[-1])
        if not r:
            return chain
        chain.append([-c for c in r])


def _sign_changes(chain: List[Poly], x: Fraction) -> int:
    signs = [v for v in (_evaluate(p, x) for p in chain) if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if (s < 0) != (t < 0))


def exact_spectral_radius(g: Graph, steps: int = 60) -> float:
    """Largest adjacency eigenvalue to about 1e-15 relative accuracy"""
    if g.edge_count == 0:
        return 0.0
    p = characteristic_polynomial(g)
    chain = sturm_chain(p)
    eps = Fraction(1, 10 ** 18)
    lo, hi = Fraction(1, 3), Fraction(g.order) + Fraction(1, 7)
    v_hi = _sign_changes(chain, hi)
    for _ in range(steps):
        mid = (lo + hi) / 2
        if _evaluate(p, mid) == 0:
            if _sign_changes(chain, mid + eps) - v_hi == 0:
                return float(mid)
            lo = mid + eps
            continue
        if _sign_changes(chain, mid) - v_hi > 0:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def numpy_spectral_radius(g: Graph) -> float:
    return float(np.linalg.eigvalsh(g.adjacency_matrix())[-1])
