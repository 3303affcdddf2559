"""
Free trees service
Generates every free tree of order t once (rooted level sequences in
successor order, deduplicated by canonical form) and tests tree containment
by backtracking embedding
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from config import settings
from errors import PreconditionError, UnsupportedOrderError
from models.graph import Graph, iter_bits
from services.canonical import canonical_form, canonical_graph

logger = logging.getLogger(__name__)


def rooted_level_sequences(t: int) -> Iterator[List[int]]:
    """
    Level sequences (root at level 1, preorder) of all rooted trees of
    order t, from the path down to the star
    """
    levels = list(range(1, t + 1))
    while True:
        yield list(levels)
        p = max((i for i in range(t) if levels[i] != 2), default=0)
        if p == 0:
            return
        q = max(i for i in range(p) if levels[i] == levels[p] - 1)
        shift = p - q
        for i in range(p, t):
            levels[i] = levels[i - shift]


def tree_from_levels(levels: List[int]) -> Graph:
    """Tree whose vertex i hangs below the latest vertex one level up"""
    edges = []
    stack: List[int] = []
    for i, level in enumerate(levels):
        while stack and levels[stack[-1]] >= level:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph.from_edges(len(levels), edges)


@lru_cache(maxsize=None)
def _free_trees(t: int) -> Tuple[Graph, ...]:
    seen = {}
    rooted = 0
    for levels in rooted_level_sequences(t):
        rooted += 1
        tree = tree_from_levels(levels)
        form = canonical_form(tree)
        if form not in seen:
            seen[form] = canonical_graph(tree)
    logger.debug(f"order {t}: {rooted} rooted trees, {len(seen)} free trees")
    return tuple(seen[form] for form in sorted(seen))


def free_trees(t: int) -> List[Graph]:
    """
    One representative per isomorphism class of trees of order t, in
    canonical-form order
    """
    if t < 1:
        raise PreconditionError("free_trees", f"tree order must be positive, got {t}")
    if t > settings.MAX_TREE_ORDER:
        raise UnsupportedOrderError("free_trees", t, settings.MAX_TREE_ORDER)
    return list(_free_trees(t))


def _embedding_plan(tree: Graph) -> List[Tuple[int, int, int]]:
    """
    (vertex, parent, degree) in BFS order from a maximum-degree root; the
    root has parent -1
    """
    root = max(range(tree.order), key=lambda v: (tree.degree(v), -v))
    plan = [(root, -1, tree.degree(root))]
    seen = 1 << root
    head = 0
    while head < len(plan):
        v = plan[head][0]
        head += 1
        for w in iter_bits(tree.adj[v] & ~seen):
            seen |= 1 << w
            plan.append((w, v, tree.degree(w)))
    return plan


def contains_tree(g: Graph, tree: Graph) -> bool:
    """
    True iff g has a (not necessarily induced) subgraph isomorphic to tree
    """
    t = tree.order
    if tree.edge_count != t - 1 or not tree.is_connected():
        raise PreconditionError("contains_tree", "pattern is not a tree")
    if t > g.order or t - 1 > g.edge_count:
        return False
    if t == 1:
        return True
    if tree.max_degree > g.max_degree:
        return False
    if max(bin(c).count("1") for c in g.components()) < t:
        return False

    plan = _embedding_plan(tree)
    degrees = g.degrees
    image = [-1] * t

    def place(step: int, used: int) -> bool:
        if step == t:
            return True
        v, parent, need = plan[step]
        for w in iter_bits(g.adj[image[parent]] & ~used):
            if degrees[w] >= need:
                image[v] = w
                if place(step + 1, used | (1 << w)):
                    return True
        return False

    root, _, need = plan[0]
    for w in range(g.order):
        if degrees[w] >= need:
            image[root] = w
            if place(1, 1 << w):
                return True
    return False


def contains_all_trees(g: Graph, t: int) -> Tuple[bool, Optional[Graph]]:
    """
    Whether g contains every tree of order t, with the first missing tree
    as a certificate otherwise
    """
    for tree in free_trees(t):
        if not contains_tree(g, tree):
            return False, tree
    return True, None


@dataclass(frozen=True)
class TreeFilter:
    """
    Picklable admissibility predicate: the graph avoids the given tree;
    preserved under vertex deletion
    """
    tree: Graph

    def __call__(self, g: Graph) -> bool:
        return not contains_tree(g, self.tree)

    def describe(self) -> str:
        return f"avoid tree {self.tree.edges()}"
