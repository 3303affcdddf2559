"""
Extremal Search Service - exhaustive small-order computations
Computes the maximum spectral radius over graphs avoiding given paths and
cycles, and verifies the spectral Turan-type theorems and conjectures on
ranges of small orders
"""

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Tuple

from config import settings
from errors import PreconditionError
from models.graph import Graph
from schemas.patterns import CycleAtLeast, CycleOrder, ForbiddenSpec, PathOrder
from schemas.records import (
    ClaimPoint,
    ClaimVerdict,
    EnumerationCensus,
    ExceptionWitness,
    ExtremalRecord,
    GVariantComparison,
)
from services.canonical import canonical_graph
from services.constructions import make_snk
from services.detection import PatternFilter, admits, has_cycle, has_path
from services.enumeration import GraphEnumerator, Predicate, graph_enumerator
from services.graph6 import graph6_encode
from services.spectral import (
    mu_snk_closed,
    mu_snk_plus,
    spectral_radius,
    theorem2_threshold,
    theorem3_threshold,
)
from services.trees import TreeFilter, contains_tree, free_trees

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClaimDefinition:
    """
    A statement "mu(G) >= T(n) (or > T(n)) implies a conclusion, unless G is
    a named extremal graph", with the hereditary families whose union holds
    every graph that violates the conclusion
    """
    claim: str
    k: int
    strict: bool
    threshold: Callable[[int], float]
    families: Callable[[int], List[Predicate]]
    missing: Callable[[Graph], List[str]]
    escape: Optional[Callable[[int], Graph]]
    applicable: Callable[[int], bool]
    conjecture: bool
    min_order: int
    note: Optional[str] = None


def _spec(*patterns) -> ForbiddenSpec:
    return ForbiddenSpec.of(*patterns)


def _tree_label(tree: Graph) -> str:
    return "T" + "".join(f"({u},{v})" for u, v in tree.edges())


class ExtremalSearchService:
    """
    Core service for exhaustive extremal computations and claim verification
    """

    def __init__(self, enumerator: GraphEnumerator = graph_enumerator):
        self.enumerator = enumerator

    # ------------------------------------------------------------------
    # f_l, g_l, h_l oracles
    # ------------------------------------------------------------------

    def extremal_mu(
        self,
        n: int,
        spec: ForbiddenSpec,
        connected_only: bool = False,
        exhaustive: bool = False,
        threads: Optional[int] = None,
    ) -> ExtremalRecord:
        """
        Maximum mu over graphs of order n avoiding spec, with every graph
        within the witness tolerance of the maximum

        Avoiding paths and cycles is preserved under vertex deletion, so
        only admissible graphs are ever extended; exhaustive=True sweeps
        every graph of order n instead. When no graph is selected the
        record has max_mu 0 and no witnesses.
        """
        tol = settings.WITNESS_TOLERANCE
        prune = None if exhaustive or not spec.patterns else PatternFilter(spec)
        generated = admissible = selected = 0
        max_mu = 0.0
        near: List[Tuple[float, str]] = []

        for g in self.enumerator.stream(n, prune, threads):
            generated += 1
            if prune is None and not admits(g, spec):
                continue
            admissible += 1
            if connected_only and not g.is_connected():
                continue
            selected += 1
            mu = spectral_radius(g).mu
            if selected > 1 and mu < max_mu - tol:
                continue
            if selected == 1 or mu > max_mu:
                max_mu = mu
                near = [(m, text) for m, text in near if m >= max_mu - tol]
            near.append((mu, graph6_encode(g)))

        witnesses = sorted(text for mu, text in near if mu >= max_mu - tol)
        record = ExtremalRecord(
            n=n,
            spec=spec,
            connected_only=connected_only,
            max_mu=max_mu,
            witnesses=witnesses,
            census=EnumerationCensus(
                generated=generated,
                admissible=admissible,
                selected=selected,
                pruned=prune is not None,
            ),
        )
        if not selected:
            logger.warning(f"extremal n={n} spec={spec} connected={connected_only}: no admissible graph, mu=0")
        logger.info(f"extremal n={n} spec={spec} connected={connected_only}: mu={max_mu:.9f}, {len(witnesses)} witnesses")
        return record

    def compare_g_variants(self, n: int, l: int, threads: Optional[int] = None) -> GVariantComparison:
        """
        g_l with {C_l, C_{l+1}} forbidden against g_l with every C_p, p >= l,
        forbidden
        """
        strict = self.extremal_mu(n, _spec(CycleOrder(l=l), CycleOrder(l=l + 1)), threads=threads)
        relaxed = self.extremal_mu(n, _spec(CycleAtLeast(l=l)), threads=threads)
        agree = abs(strict.max_mu - relaxed.max_mu) <= settings.COMPARE_TOLERANCE
        return GVariantComparison(n=n, l=l, strict=strict, relaxed=relaxed, agree=agree)

    # ------------------------------------------------------------------
    # Claim definitions
    # ------------------------------------------------------------------

    def claim_definition(self, claim: str, k: int) -> ClaimDefinition:
        if k < 1:
            raise PreconditionError(claim, f"requires k >= 1, got {k}")
        if claim.startswith("conj") and k < 2:
            raise PreconditionError(claim, f"conjectures are stated for k >= 2, got {k}")

        large = 2 ** (4 * k)

        def path_claim(length: int, plus: bool, k1_bound: Callable[[int], bool], k1_text: str) -> ClaimDefinition:
            token = f"P{length}"
            return ClaimDefinition(
                claim=claim, k=k, strict=False,
                threshold=(lambda n: mu_snk_plus(n, k)) if plus else (lambda n: mu_snk_closed(n, k)),
                families=lambda n: [PatternFilter(_spec(PathOrder(l=length)))],
                missing=lambda g: [] if has_path(g, length) else [token],
                escape=lambda n: make_snk(n, k, plus=plus),
                applicable=k1_bound if k == 1 else (lambda n: n >= large),
                conjecture=False,
                min_order=k + 2 if plus else k + 1,
                note=k1_text if k == 1 else f"theorem requires n >= 2^(4k) = {large}; smaller orders are exploratory",
            )

        if claim == "th1a":
            return path_claim(2 * k + 2, False, lambda n: n > 5, "k = 1 statement holds for n > 5")
        if claim == "th1b":
            return path_claim(2 * k + 3, True, lambda n: n >= 10, "k = 1 statement holds for n >= 10")

        if claim == "th2":
            lengths = [2 * l + 2 for l in range(1, k + 1)]
            return ClaimDefinition(
                claim=claim, k=k, strict=True,
                threshold=lambda n: theorem2_threshold(n, k),
                families=lambda n: [PatternFilter(_spec(CycleOrder(l=p))) for p in lengths],
                missing=lambda g: [f"C{p}" for p in lengths if not (p <= g.order and has_cycle(g, p))],
                escape=None, applicable=lambda n: True, conjecture=False, min_order=1,
                note="no order hypothesis: any exception is a counterexample",
            )

        if claim == "th3":
            pair = _spec(CycleOrder(l=2 * k + 1), CycleOrder(l=2 * k + 2))
            return ClaimDefinition(
                claim=claim, k=k, strict=True,
                threshold=lambda n: theorem3_threshold(n, k),
                families=lambda n: [PatternFilter(pair)],
                missing=lambda g: [] if not admits(g, pair) else [p.token() for p in pair.patterns],
                escape=None, applicable=lambda n: True, conjecture=False, min_order=1,
                note="no order hypothesis: any exception is a counterexample",
            )

        conjecture_note = "conjecture concerns sufficiently large n; small-n exceptions do not refute it"
        if claim in ("conj1a", "conj1b"):
            plus = claim == "conj1b"
            spec = _spec(CycleOrder(l=2 * k + 2)) if plus else _spec(CycleOrder(l=2 * k + 1), CycleOrder(l=2 * k + 2))
            return ClaimDefinition(
                claim=claim, k=k, strict=False,
                threshold=(lambda n: mu_snk_plus(n, k)) if plus else (lambda n: mu_snk_closed(n, k)),
                families=lambda n: [PatternFilter(spec)],
                missing=lambda g: [] if not admits(g, spec) else [p.token() for p in spec.patterns],
                escape=lambda n: make_snk(n, k, plus=plus),
                applicable=lambda n: False, conjecture=True,
                min_order=k + 2 if plus else k + 1, note=conjecture_note,
            )

        if claim in ("conj2a", "conj2b"):
            plus = claim == "conj2b"
            t = 2 * k + 3 if plus else 2 * k + 2
            threshold = (lambda n: mu_snk_plus(n, k)) if plus else (lambda n: mu_snk_closed(n, k))

            def tree_families(n: int) -> List[Predicate]:
                # A graph without the star K_{1,t-1} has mu <= t - 2
                bound = threshold(n) - settings.COMPARE_TOLERANCE
                return [
                    TreeFilter(tree) for tree in free_trees(t)
                    if not (tree.max_degree == t - 1 and t - 2 < bound)
                ]

            return ClaimDefinition(
                claim=claim, k=k, strict=False,
                threshold=threshold,
                families=tree_families,
                missing=lambda g: [_tree_label(tree) for tree in free_trees(t) if not contains_tree(g, tree)],
                escape=lambda n: make_snk(n, k, plus=plus),
                applicable=lambda n: False, conjecture=True,
                min_order=k + 2 if plus else k + 1, note=conjecture_note,
            )

        raise PreconditionError("claim_definition", f"unknown claim {claim!r}")

    # ------------------------------------------------------------------
    # Sweeps
    # ------------------------------------------------------------------

    def _candidates(
        self, definition: ClaimDefinition, n: int, exhaustive: bool, connected_only: bool, threads: Optional[int]
    ) -> Iterable[Graph]:
        if exhaustive:
            families: List[Optional[Predicate]] = [None]
        else:
            families = list(definition.families(n))
        seen = set()
        for prune in families:
            for g in self.enumerator.stream(n, prune, threads):
                if connected_only and not g.is_connected():
                    continue
                if len(families) > 1:
                    # Representatives are canonical, so equal rows mean the same class
                    if g.adj in seen:
                        continue
                    seen.add(g.adj)
                yield g

    def _check_point(
        self, definition: ClaimDefinition, n: int, exhaustive: bool, connected_only: bool, threads: Optional[int]
    ) -> ClaimPoint:
        tol = settings.COMPARE_TOLERANCE
        threshold = definition.threshold(n)
        applicable = definition.applicable(n)
        vacuous = threshold >= n - 1 - tol if definition.strict else threshold > n - 1 + tol
        if vacuous:
            return ClaimPoint(
                n=n, threshold=threshold, applicable=applicable, candidates=0,
                above_threshold=0, exceptions=0, outcome="vacuous-on-range",
            )

        escape_text = graph6_encode(canonical_graph(definition.escape(n))) if definition.escape else None
        candidates = above = exceptions = escaped = 0
        witness = None

        for g in self._candidates(definition, n, exhaustive, connected_only, threads):
            candidates += 1
            mu = spectral_radius(g).mu
            meets = mu > threshold + tol if definition.strict else mu >= threshold - tol
            if not meets:
                continue
            above += 1
            missing = definition.missing(g)
            if not missing:
                continue
            text = graph6_encode(g)
            if text == escape_text:
                escaped += 1
                continue
            exceptions += 1
            logger.debug(f"{definition.claim} n={n}: exception {text} mu={mu:.9f} missing {missing}")
            if witness is None:
                witness = ExceptionWitness(graph6=text, n=n, mu=mu, threshold=threshold, missing=missing)

        if exceptions:
            outcome = "counterexample" if applicable and not definition.conjecture else "small-n-exception"
        else:
            outcome = "verified-on-range"
        return ClaimPoint(
            n=n, threshold=threshold, applicable=applicable, candidates=candidates,
            above_threshold=above, exceptions=exceptions, escaped=escaped,
            outcome=outcome, witness=witness,
        )

    def verify_claim(
        self,
        claim: str,
        k: int,
        n_from: int,
        n_to: int,
        exhaustive: bool = False,
        threads: Optional[int] = None,
        connected_only: bool = False,
    ) -> ClaimVerdict:
        """
        Check one claim at every order in n_from..n_to; connected_only
        restricts the candidates to connected graphs
        """
        definition = self.claim_definition(claim, k)
        if n_from > n_to:
            raise PreconditionError(claim, f"empty order range {n_from}..{n_to}")
        if n_from < definition.min_order:
            raise PreconditionError(claim, f"requires n >= {definition.min_order} for k={k}, got {n_from}")

        points = []
        for n in range(n_from, n_to + 1):
            point = self._check_point(definition, n, exhaustive, connected_only, threads)
            logger.info(f"{claim} k={k} n={n}: {point.outcome} ({point.candidates} candidates, {point.exceptions} exceptions)")
            points.append(point)

        outcomes = [p.outcome for p in points]
        if "counterexample" in outcomes:
            outcome = "counterexample"
        elif "small-n-exception" in outcomes:
            outcome = "small-n-exception"
        elif all(o == "vacuous-on-range" for o in outcomes):
            outcome = "vacuous-on-range"
        else:
            outcome = "verified-on-range"

        notes = [definition.note] if definition.note else []
        if not definition.conjecture and not all(p.applicable for p in points):
            notes.append("some orders lie below the hypothesis; exceptions there are not counterexamples")
        return ClaimVerdict(
            claim=claim, k=k, n_from=n_from, n_to=n_to, outcome=outcome,
            exhaustive=exhaustive, connected_only=connected_only, points=points, notes=notes,
        )

    def verify_theorem1(self, k: int, n_from: int, n_to: int, part: str = "a", **kwargs) -> ClaimVerdict:
        return self.verify_claim(f"th1{part}", k, n_from, n_to, **kwargs)

    def verify_theorem2(self, k: int, n_from: int, n_to: int, **kwargs) -> ClaimVerdict:
        return self.verify_claim("th2", k, n_from, n_to, **kwargs)

    def verify_theorem3(self, k: int, n_from: int, n_to: int, **kwargs) -> ClaimVerdict:
        return self.verify_claim("th3", k, n_from, n_to, **kwargs)

    def scan_conjecture1(self, k: int, n_from: int, n_to: int, part: str = "a", **kwargs) -> ClaimVerdict:
        return self.verify_claim(f"conj1{part}", k, n_from, n_to, **kwargs)

    def scan_conjecture2(self, k: int, n_from: int, n_to: int, part: str = "a", **kwargs) -> ClaimVerdict:
        return self.verify_claim(f"conj2{part}", k, n_from, n_to, **kwargs)


# Global service instance
extremal_service = ExtremalSearchService()
