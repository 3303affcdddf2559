"""
Canonical labeling
Isomorphism-complete canonical form: the minimum upper-triangle bit string
over the leaves of an individualisation-refinement search tree. The root
partition is the degree partition; every node is refined to an equitable
partition, and twin vertices are explored once per cell.
"""

import logging
from typing import Iterator, List, NewType

from config import settings
from errors import UnsupportedOrderError
from models.graph import Graph, mask_of
from services.graph6 import graph6_encode

logger = logging.getLogger(__name__)

CanonicalForm = NewType("CanonicalForm", bytes)

Partition = List[List[int]]


def _refine(adj, cells: Partition) -> Partition:
    """
    Split cells by neighbour counts into every cell until the ordered
    partition is equitable. Sub-cells are ordered by their count signature,
    so the result depends only on the graph structure and the input order.
    """
    while True:
        masks = [mask_of(cell) for cell in cells]
        refined: Partition = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {
                v: tuple(bin(adj[v] & m).count("1") for m in masks) for v in cell
            }
            for key in sorted(set(signature.values())):
                refined.append([v for v in cell if signature[v] == key])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _twins(adj, u: int, v: int) -> bool:
    """True or false twins: the transposition (u v) is an automorphism"""
    return (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u))


def _leaves(adj, cells: Partition) -> Iterator[List[int]]:
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        yield [cell[0] for cell in cells]
        return
    cell = cells[target]
    explored: List[int] = []
    for v in cell:
        if any(_twins(adj, v, r) for r in explored):
            continue
        explored.append(v)
        rest = [w for w in cell if w != v]
        child = cells[:target] + [[v], rest] + cells[target + 1:]
        yield from _leaves(adj, _refine(adj, child))


def _leaf_key(adj, order: List[int]) -> int:
    # Bits in graph6 order: column-major upper triangle
    key = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            key = (key << 1) | (row >> order[i] & 1)
    return key


def canonical_order(g: Graph) -> List[int]:
    """
    Vertex order whose relabeling yields the canonical representative
    """
    if g.order > settings.MAX_CANONICAL_ORDER:
        raise UnsupportedOrderError("canonical_form", g.order, settings.MAX_CANONICAL_ORDER)
    adj = g.adj
    best_key = None
    best_order: List[int] = list(range(g.order))
    leaves = 0
    for order in _leaves(adj, _refine(adj, [list(range(g.order))])):
        leaves += 1
        key = _leaf_key(adj, order)
        if best_key is None or key < best_key:
            best_key = key
            best_order = order
    if leaves > 10000:
        logger.debug(f"canonical search visited {leaves} leaves for {g!r}")
    return best_order


def canonical_graph(g: Graph) -> Graph:
    """Canonical representative of the isomorphism class of g"""
    return g.relabel(canonical_order(g))


def canonical_form(g: Graph) -> CanonicalForm:
    """
    Byte string identifying the isomorphism class of g: the graph6 text of the
    canonical representative, so a form always decodes back to a graph
    """
    return CanonicalForm(graph6_encode(canonical_graph(g)).encode("ascii"))


def vertex_orbit_key(g: Graph, v: int) -> int:
    """
    Invariant of the pair (g, v): two vertices of g share a key iff an
    automorphism of g maps one onto the other
    """
    adj = g.adj
    # v stays the last cell through refinement and individualisation
    cells = _refine(adj, [[u for u in range(g.order) if u != v], [v]])
    return min(_leaf_key(adj, order) for order in _leaves(adj, cells))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)
