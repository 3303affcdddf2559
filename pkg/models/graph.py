"""
Graph model for the Spectral Turan Workbench
Immutable simple undirected graph on at most 64 vertices, stored as one
bitset (Python int) per adjacency row
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Sequence, Tuple

import networkx as nx
import numpy as np

from config import settings
from errors import GraphError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask in increasing order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Bitset with the given vertex indices set"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph value

    Invariants (checked on construction):
    - 1 <= order <= 64
    - adj[i] has bit j set iff adj[j] has bit i set
    - no loops, no bits at or above order
    """

    order: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if not 1 <= n <= settings.MAX_ORDER:
            raise GraphError(f"graph order must be in 1..{settings.MAX_ORDER}, got {n}")
        if len(self.adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(self.adj)}")
        full = (1 << n) - 1
        for i, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise GraphError(f"row {i} references vertices outside 0..{n - 1}")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges are merged"""
        if not 1 <= order <= settings.MAX_ORDER:
            raise GraphError(f"graph order must be in 1..{settings.MAX_ORDER}, got {order}")
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) outside 0..{order - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Graph":
        """Build a graph from a 0/1 adjacency matrix"""
        order = len(matrix)
        rows = tuple(mask_of(j for j, x in enumerate(row) if x) for row in matrix)
        return cls(order, rows)

    @classmethod
    def from_networkx(cls, h: nx.Graph) -> "Graph":
        """Build a graph from a networkx graph, labelling its nodes in sorted order"""
        nodes = sorted(h.nodes())
        if not nodes:
            raise GraphError("the empty graph is not representable")
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), [(index[u], index[v]) for u, v in h.edges()])

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.order))
        h.add_edges_from(self.edges())
        return h

    # ------------------------------------------------------------------
    # Basic parameters: |G|, e(G), d(u), delta(G)
    # ------------------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def edge_count(self) -> int:
        total = sum(bin(row).count("1") for row in self.adj)
        return total // 2

    def degree(self, u: int) -> int:
        return bin(self.adj[u]).count("1")

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(bin(row).count("1") for row in self.adj)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def neighbors(self, u: int) -> List[int]:
        return list(iter_bits(self.adj[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v, sorted"""
        return [(u, v) for u in range(self.order) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edges_within(self, mask: int) -> int:
        """e_G(X): number of edges induced by the vertex set X"""
        return sum(bin(self.adj[u] & mask).count("1") for u in iter_bits(mask)) // 2

    def edges_between(self, mask_x: int, mask_y: int) -> int:
        """e_G(X, Y): number of edges joining disjoint sets X and Y"""
        if mask_x & mask_y:
            raise GraphError("edges_between expects disjoint vertex sets")
        return sum(bin(self.adj[u] & mask_y).count("1") for u in iter_bits(mask_x))

    # ------------------------------------------------------------------
    # Connectivity
    # ------------------------------------------------------------------

    def component_of(self, u: int) -> int:
        """Bitset of the connected component containing u"""
        seen = 1 << u
        frontier = seen
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= self.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen

    def components(self) -> List[int]:
        """Component bitsets ordered by their lowest vertex"""
        remaining = self.full_mask
        parts = []
        while remaining:
            low = (remaining & -remaining).bit_length() - 1
            comp = self.component_of(low)
            parts.append(comp)
            remaining &= ~comp
        return parts

    def is_connected(self) -> bool:
        return self.component_of(0) == self.full_mask

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------

    def delete_vertex(self, u: int) -> "Graph":
        """
        G - u: remove vertex u, shifting every index above u down by one
        """
        if not 0 <= u < self.order:
            raise GraphError(f"vertex {u} not in graph of order {self.order}")
        if self.order == 1:
            raise GraphError("cannot delete the only vertex: the empty graph is not representable")
        low_mask = (1 << u) - 1
        rows = []
        for i, row in enumerate(self.adj):
            if i == u:
                continue
            rows.append((row & low_mask) | ((row >> (u + 1)) << u))
        return Graph(self.order - 1, tuple(rows))

    def induced(self, mask: int) -> "Graph":
        """Subgraph induced by the vertex set mask, compacted to 0..|mask|-1"""
        keep = list(iter_bits(mask & self.full_mask))
        if not keep:
            raise GraphError("induced subgraph on an empty vertex set")
        position = {v: p for p, v in enumerate(keep)}
        rows = tuple(mask_of(position[w] for w in iter_bits(self.adj[v] & mask)) for v in keep)
        return Graph(len(keep), rows)

    def add_vertex(self, neighbourhood: int) -> "Graph":
        """Append a vertex with index order adjacent to the given bitset"""
        if neighbourhood & ~self.full_mask:
            raise GraphError("new vertex neighbourhood references unknown vertices")
        new = self.order
        rows = tuple(row | (1 << new) if neighbourhood >> i & 1 else row for i, row in enumerate(self.adj))
        return Graph(self.order + 1, rows + (neighbourhood,))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.order and 0 <= v < self.order):
            raise GraphError(f"cannot add edge ({u}, {v})")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.order, tuple(rows))

    def relabel(self, order: Sequence[int]) -> "Graph":
        """
        Graph whose vertex p is the old vertex order[p]
        """
        if sorted(order) != list(range(self.order)):
            raise GraphError("relabel expects a permutation of the vertex set")
        position = [0] * self.order
        for p, v in enumerate(order):
            position[v] = p
        rows = tuple(mask_of(position[w] for w in iter_bits(self.adj[v])) for v in order)
        return Graph(self.order, rows)

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.order, self.order), dtype=float)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1.0
        return matrix

    def __repr__(self) -> str:
        return f"<Graph(order={self.order}, edges={self.edge_count})>"
