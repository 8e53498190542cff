"""Connected graphs up to isomorphism on at most seven vertices, plus named examples."""

from __future__ import annotations

import random
from functools import lru_cache

from .graph import Graph, is_connected

MAX_ATLAS_VERTICES = 7

# connected graphs per vertex count (OEIS A001349)
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@lru_cache(maxsize=None)
def _atlas() -> tuple[Graph, ...]:
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or not nx.is_connected(h):
            continue
        edges = tuple(sorted((min(u, v) + 1, max(u, v) + 1) for u, v in h.edges()))
        out.append(Graph(n, edges))
    return tuple(out)


def connected_graphs(p: int) -> list[Graph]:
    """All connected graphs on exactly p vertices, one per isomorphism class."""
    if not 1 <= p <= MAX_ATLAS_VERTICES:
        raise ValueError(f"exhaustive enumeration is available for 1 <= p <= {MAX_ATLAS_VERTICES}")
    return [g for g in _atlas() if g.p == p]


def connected_graphs_upto(p: int) -> list[Graph]:
    out: list[Graph] = []
    for k in range(1, p + 1):
        out.extend(connected_graphs(k))
    return out


def random_connected_graph(p: int, rng: random.Random, density: float = 0.4) -> Graph:
    """A random spanning tree plus independent extra edges."""
    verts = list(range(1, p + 1))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, p):
        u, v = verts[i], verts[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(1, p + 1):
        for v in range(u + 1, p + 1):
            if (u, v) not in edges and rng.random() < density:
                edges.add((u, v))
    g = Graph(p, tuple(sorted(edges)))
    assert is_connected(g)
    return g


# named example graphs with fixed edge labels
GLUED_SQUARES = Graph(6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 5)))
K4 = Graph(4, ((1, 4), (1, 3), (3, 4), (2, 4), (2, 3), (1, 2)))
EXTENDED_BOWTIE = Graph(7, ((1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)))
BOWTIE = Graph(5, ((1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)))
TRIANGLE = Graph(3, ((1, 2), (2, 3), (1, 3)))
SQUARE = Graph(4, ((1, 2), (2, 3), (3, 4), (1, 4)))

EXAMPLES = {
    "glued-squares": GLUED_SQUARES,
    "k4": K4,
    "extended-bowtie": EXTENDED_BOWTIE,
    "bowtie": BOWTIE,
    "triangle": TRIANGLE,
    "square": SQUARE,
}
