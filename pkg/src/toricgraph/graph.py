"""Finite simple graphs with stable edge labels, and the graph predicates the algebra leans on."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

MAX_CYCLE_VERTICES = 12
MAX_COLORING_VERTICES = 16


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class MalformedLine(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class CapabilityError(GraphError):
    """Input is larger than an exhaustive routine is allowed to handle."""


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..p.

    ``edges[i]`` is the i-th edge (sorted vertex pair) and ``labels[i]`` its
    original 1-based id, so ``e<labels[i]>`` names the same variable in G and
    in every deletion of G.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise GraphError("a graph needs at least one vertex")
        edges = tuple(tuple(sorted(e)) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, len(edges) + 1)))
        if len(self.labels) != len(edges):
            raise GraphError("one label per edge required")
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise GraphError(f"edge {{{u},{v}}} leaves the vertex range 1..{self.vertex_count}")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge {{{u},{v}}}")
            seen.add((u, v))

    @property
    def p(self) -> int:
        return self.vertex_count

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def names(self) -> list[str]:
        return [f"e{k}" for k in self.labels]

    def position(self, label: int) -> int:
        """Index of the edge with this label (its variable slot)."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"no edge e{label}") from None

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """adj[v] = [(neighbour, edge position), ...]; index 0 unused."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.p + 1)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * (self.p + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def to_text(self) -> str:
        return "\n".join([str(self.p)] + [f"{u} {v}" for u, v in self.edges]) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: vertex count, then one ``u v`` line per edge."""
    p: int | None = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if p is None:
            if len(fields) != 1 or not fields[0].isdigit() or int(fields[0]) < 1:
                raise MalformedLine(f"expected a positive vertex count, got {line!r}", lineno)
            p = int(fields[0])
            continue
        if len(fields) != 2 or not all(f.lstrip("-").isdigit() for f in fields):
            raise MalformedLine(f"expected 'u v', got {line!r}", lineno)
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}", lineno)
        for w in (u, v):
            if not 1 <= w <= p:
                raise VertexOutOfRange(f"vertex {w} outside 1..{p}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {{{u},{v}}} already declared on line {seen[key]}", lineno)
        seen[key] = lineno
        edges.append(key)
    if p is None:
        raise MalformedLine("missing vertex count")
    return Graph(p, tuple(edges))


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def components(g: Graph) -> list[list[int]]:
    adj = g.adjacency()
    seen = [False] * (g.p + 1)
    comps = []
    for s in range(1, g.p + 1):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w, _ in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def component_subgraphs(g: Graph) -> list[Graph]:
    """Connected components as graphs on 1..p_c, keeping edge labels."""
    out = []
    for comp in components(g):
        relabel = {v: k for k, v in enumerate(comp, start=1)}
        idx = [i for i, (u, _) in enumerate(g.edges) if u in relabel]
        out.append(Graph(
            len(comp),
            tuple((relabel[g.edges[i][0]], relabel[g.edges[i][1]]) for i in idx),
            tuple(g.labels[i] for i in idx),
        ))
    return out


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """BFS 2-colouring; None when an odd cycle exists."""
    adj = g.adjacency()
    side = [-1] * (g.p + 1)
    for s in range(1, g.p + 1):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w, _ in adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    a = frozenset(v for v in range(1, g.p + 1) if side[v] == 0)
    b = frozenset(v for v in range(1, g.p + 1) if side[v] == 1)
    return a, b


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def bridges(g: Graph) -> frozenset[int]:
    """Labels of the edges lying on no cycle (Tarjan low-link)."""
    adj = g.adjacency()
    disc = [0] * (g.p + 1)
    low = [0] * (g.p + 1)
    timer = 1
    out: set[int] = set()
    for root in range(1, g.p + 1):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent_edge, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == parent_edge:
                    continue
                if disc[w]:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        out.add(g.labels[parent_edge])
    return frozenset(out)


def delete_edge(g: Graph, label: int) -> Graph:
    """Remove edge ``e<label>``; vertices and the other labels are kept."""
    i = g.position(label)
    return Graph(g.p, g.edges[:i] + g.edges[i + 1:], g.labels[:i] + g.labels[i + 1:])


def delete_edges(g: Graph, labels: Sequence[int]) -> Graph:
    for k in labels:
        g = delete_edge(g, k)
    return g


def max_degree(g: Graph) -> int:
    return max(g.degrees()[1:], default=0)


# ---------------------------------------------------------------------------
# cycles
# ---------------------------------------------------------------------------

def simple_cycles(g: Graph) -> list[frozenset[int]]:
    """Every simple cycle, as a frozenset of edge labels."""
    if g.p > MAX_CYCLE_VERTICES:
        raise CapabilityError(f"cycle enumeration is limited to {MAX_CYCLE_VERTICES} vertices")
    adj = g.adjacency()
    found: set[frozenset[int]] = set()
    for s in range(1, g.p + 1):
        # cycles whose least vertex is s
        path_edges: list[int] = []
        on_path = [False] * (g.p + 1)
        on_path[s] = True

        def extend(v: int) -> None:
            for w, e in adj[v]:
                if w == s and len(path_edges) >= 2 and e != path_edges[-1]:
                    found.add(frozenset(g.labels[i] for i in path_edges + [e]))
                elif w > s and not on_path[w]:
                    on_path[w] = True
                    path_edges.append(e)
                    extend(w)
                    path_edges.pop()
                    on_path[w] = False

        extend(s)
    return sorted(found, key=lambda c: (len(c), sorted(c)))


def odd_cycles(g: Graph) -> list[frozenset[int]]:
    return [c for c in simple_cycles(g) if len(c) % 2]


def even_cycles(g: Graph) -> list[frozenset[int]]:
    return [c for c in simple_cycles(g) if len(c) % 2 == 0]


def edge_cycle_profile(g: Graph, label: int) -> tuple[bool, bool]:
    """(e lies on some even cycle, e lies on every odd cycle)."""
    g.position(label)
    cycles = simple_cycles(g)
    in_even = any(label in c for c in cycles if len(c) % 2 == 0)
    in_every_odd = all(label in c for c in cycles if len(c) % 2)
    return in_even, in_every_odd


# ---------------------------------------------------------------------------
# colouring
# ---------------------------------------------------------------------------

def _greedy_clique(adjset: list[set[int]], order: list[int]) -> list[int]:
    best: list[int] = []
    for s in order:
        clique = [s]
        for v in order:
            if v != s and all(v in adjset[c] for c in clique):
                clique.append(v)
        if len(clique) > len(best):
            best = clique
    return best


def exact_chromatic_number(g: Graph) -> tuple[int, list[int]]:
    """Minimum number of colours and a witness colouring (colours 1..k, index v-1).

    DSATUR branch-and-bound with a greedy clique lower bound.
    """
    n = g.p
    if n > MAX_COLORING_VERTICES:
        raise CapabilityError(f"exact colouring is limited to {MAX_COLORING_VERTICES} vertices")
    adjset = [set() for _ in range(n + 1)]
    for u, v in g.edges:
        adjset[u].add(v)
        adjset[v].add(u)
    by_degree = sorted(range(1, n + 1), key=lambda v: (-len(adjset[v]), v))
    clique = _greedy_clique(adjset, by_degree)
    lower = max(1, len(clique))

    colors = [0] * (n + 1)
    best_k = n + 1
    best: list[int] = []
    # fix the clique colours to break symmetry
    for c, v in enumerate(clique, start=1):
        colors[v] = c

    def pick() -> int:
        bestv, bestkey = 0, None
        for v in range(1, n + 1):
            if colors[v]:
                continue
            sat = len({colors[w] for w in adjset[v] if colors[w]})
            key = (sat, len(adjset[v]), -v)
            if bestkey is None or key > bestkey:
                bestv, bestkey = v, key
        return bestv

    def search(used: int) -> bool:
        nonlocal best_k, best
        if used >= best_k:
            return False
        v = pick()
        if not v:
            best_k, best = used, colors[1:]
            return best_k == lower
        forbidden = {colors[w] for w in adjset[v]}
        for c in range(1, min(used + 1, best_k - 1) + 1):
            if c in forbidden:
                continue
            colors[v] = c
            if search(max(used, c)):
                colors[v] = 0
                return True
            colors[v] = 0
        return False

    search(len(clique))
    return best_k, list(best)


def chromatic_number(g: Graph) -> int:
    return exact_chromatic_number(g)[0]


def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    return len(colors) == g.p and all(colors[u - 1] != colors[v - 1] for u, v in g.edges)


def chromatic_drop_check(g: Graph, label: int) -> bool:
    """0 <= chi(G) - chi(G minus e) <= 1."""
    d = chromatic_number(g) - chromatic_number(delete_edge(g, label))
    return 0 <= d <= 1


# ---------------------------------------------------------------------------
# closed walks
# ---------------------------------------------------------------------------

def alternating_closed_walk(g: Graph, exponents: Sequence[int]) -> list[int] | None:
    """Vertex sequence of a closed even walk realising the exponent vector.

    Edge i is used |exponents[i]| times; positive entries sit on odd steps
    and negative ones on even steps.  None if no such walk exists (the
    support must be connected and balanced at every vertex).
    """
    pos = {i: x for i, x in enumerate(exponents) if x > 0}
    neg = {i: -x for i, x in enumerate(exponents) if x < 0}
    total = sum(pos.values()) + sum(neg.values())
    if not total:
        return None
    adj = g.adjacency()
    start_edge = min(pos)
    start = g.edges[start_edge][0]
    remaining = [dict(pos), dict(neg)]
    walk = [start]

    def step(v: int, sign: int, left: int) -> bool:
        if left == 0:
            return v == start
        pool = remaining[sign]
        for w, e in adj[v]:
            if pool.get(e, 0):
                pool[e] -= 1
                walk.append(w)
                if step(w, 1 - sign, left - 1):
                    return True
                walk.pop()
                pool[e] += 1
        return False

    return walk if step(start, 0, total) else None


def walk_edges_of(walk: Sequence[int], g: Graph) -> list[int]:
    """Edge labels traversed by a vertex walk."""
    index = {e: g.labels[i] for i, e in enumerate(g.edges)}
    return [index[tuple(sorted((walk[k], walk[k + 1])))] for k in range(len(walk) - 1)]


def iter_edges(g: Graph) -> Iterator[int]:
    return iter(g.labels)
