"""
Graph enumeration service
Generates one representative per isomorphism class of graphs of order n by
canonical augmentation: a vertex is added to a parent with every possible
neighbourhood, and the child is kept only when the new vertex lies in the
orbit of the canonically chosen minimum-degree vertex. Every class then has
exactly one parent class, so graphs stream out depth-first and nothing is
cached between levels. An optional hereditary predicate restricts every
level to admissible graphs.
"""

import logging
from multiprocessing import Pool
from typing import Callable, Iterator, List, Optional, Tuple

from tqdm import tqdm

from config import settings
from errors import PreconditionError, UnsupportedOrderError
from models.graph import Graph
from services.canonical import canonical_order, vertex_orbit_key
from services.graph6 import graph6_decode, graph6_encode

logger = logging.getLogger(__name__)

Predicate = Callable[[Graph], bool]

# Orders at or below this one are generated serially before fanning out
SPLIT_OFFSET = 2


def _chosen_vertex(g: Graph, order: List[int]) -> int:
    """The last minimum-degree vertex in the canonical order"""
    low = g.min_degree
    return next(v for v in reversed(order) if g.degrees[v] == low)


def _children(parent: Graph, prune: Optional[Predicate]) -> Iterator[Graph]:
    """
    Canonical children of one parent, one per isomorphism class, in order of
    the new vertex's neighbourhood bitset
    """
    new = parent.order
    seen = set()
    for neighbourhood in range(1 << new):
        child = parent.add_vertex(neighbourhood)
        if child.degrees[new] != child.min_degree:
            continue
        if prune is not None and not prune(child):
            continue
        order = canonical_order(child)
        chosen = _chosen_vertex(child, order)
        if chosen != new and vertex_orbit_key(child, chosen) != vertex_orbit_key(child, new):
            continue
        representative = child.relabel(order)
        if representative.adj in seen:
            continue
        seen.add(representative.adj)
        yield representative


def _descendants(root: Graph, n: int, prune: Optional[Predicate]) -> Iterator[Graph]:
    if root.order == n:
        yield root
        return
    for child in _children(root, prune):
        yield from _descendants(child, n, prune)


def _descend_from(job: Tuple[str, int, Optional[Predicate]]) -> List[str]:
    # Worker entry point; graphs travel as graph6 text
    text, n, prune = job
    return [graph6_encode(g) for g in _descendants(graph6_decode(text), n, prune)]


class GraphEnumerator:
    """
    Streaming isomorph-free generator
    """

    def _roots(self, prune: Optional[Predicate]) -> List[Graph]:
        single = Graph(1, (0,))
        return [single] if prune is None or prune(single) else []

    def _serial(self, n: int, prune: Optional[Predicate]) -> Iterator[Graph]:
        for root in self._roots(prune):
            yield from _descendants(root, n, prune)

    def _parallel(self, n: int, prune: Optional[Predicate], workers: int) -> Iterator[Graph]:
        # Step 1: generate the split level serially, in depth-first order
        split = list(self._serial(n - SPLIT_OFFSET, prune))
        logger.info(f"order {n}: fanning out {len(split)} classes of order {n - SPLIT_OFFSET} to {workers} workers")

        # Step 2: expand each split-level class in a worker; imap keeps the serial order
        jobs = [(graph6_encode(g), n, prune) for g in split]
        with Pool(workers) as pool:
            for texts in pool.imap(_descend_from, jobs, chunksize=max(1, len(jobs) // (4 * workers))):
                for text in texts:
                    yield graph6_decode(text)

    def stream(self, n: int, prune: Optional[Predicate] = None, threads: Optional[int] = None) -> Iterator[Graph]:
        """
        Every admissible class of order n as its canonical representative,
        in a deterministic depth-first order that does not depend on threads
        """
        if n < 1:
            raise PreconditionError("enumerate_graphs", f"order must be positive, got {n}")
        if n > settings.MAX_ENUMERATION_ORDER:
            raise UnsupportedOrderError("enumerate_graphs", n, settings.MAX_ENUMERATION_ORDER)

        workers = settings.thread_count() if threads is None else max(1, threads)
        if workers > 1 and n > SPLIT_OFFSET + 2:
            graphs = self._parallel(n, prune, workers)
        else:
            graphs = self._serial(n, prune)
        return self._counted(n, graphs)

    def _counted(self, n: int, graphs: Iterator[Graph]) -> Iterator[Graph]:
        emitted = 0
        for g in tqdm(graphs, desc=f"order {n}", unit=" graphs", disable=not settings.PROGRESS, leave=False):
            emitted += 1
            yield g
        logger.info(f"order {n}: {emitted} classes generated")

    def enumerate(
        self,
        n: int,
        connected_only: bool = False,
        prune: Optional[Predicate] = None,
        threads: Optional[int] = None,
    ) -> Iterator[Graph]:
        graphs = self.stream(n, prune, threads)
        return (g for g in graphs if not connected_only or g.is_connected())


# Global enumerator instance
graph_enumerator = GraphEnumerator()


def enumerate_graphs(
    n: int,
    connected_only: bool = False,
    prune: Optional[Predicate] = None,
    threads: Optional[int] = None,
) -> Iterator[Graph]:
    """
    One graph per isomorphism class of order n (1 <= n <= 10), in a fixed
    order; with prune, only classes whose every canonical ancestor passes it
    """
    return graph_enumerator.enumerate(n, connected_only, prune, threads)
