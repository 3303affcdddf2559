"""
Small graph collections for tests
"""

import random

import networkx as nx

from models.graph import Graph


def to_networkx(g: Graph) -> nx.Graph:
    return g.to_networkx()


def from_networkx(h: nx.Graph) -> Graph:
    return Graph.from_networkx(h)


def atlas(max_order: int, min_order: int = 1):
    """Every graph of order min_order..max_order (max_order <= 7) from the networkx atlas"""
    return [from_networkx(h) for h in nx.graph_atlas_g() if min_order <= h.number_of_nodes() <= max_order]


def random_graphs(count: int, min_order: int, max_order: int, seed: int = 7):
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(min_order, max_order)
        p = rng.uniform(0.1, 0.9)
        graphs.append(from_networkx(nx.gnp_random_graph(n, p, seed=rng.randrange(1 << 30))))
    return graphs
