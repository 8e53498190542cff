"""Toric ideals of graphs, their Graver bases, and the primitive-walk checks."""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import graph as gr
from .algebra import (
    Binomial,
    Monomial,
    MonomialOrder,
    binomial_from_vector,
    canonical_sign,
    format_binomial,
    reference_order,
)
from .gb import (
    BinomialIdeal,
    CapabilityError,
    buchberger,
    monomial_ideal_height,
    monomial_ideal_min_gens,
    saturate_all,
)
from .graph import Graph
from .lattice import integer_kernel_basis, rank, size_reduce

log = logging.getLogger(__name__)

DEFAULT_GRAVER_CAP = 24


class StructuralViolation(AssertionError):
    """A primitive walk fails the even-cycle / two-odd-cycles dichotomy."""


class HeightMismatch(AssertionError):
    pass


# ---------------------------------------------------------------------------
# incidence lattice
# ---------------------------------------------------------------------------

def incidence_matrix(g: Graph) -> list[list[int]]:
    """p x q matrix with a 1 at both endpoints of every edge column."""
    M = [[0] * g.q for _ in range(g.p)]
    for j, (u, v) in enumerate(g.edges):
        M[u - 1][j] = 1
        M[v - 1][j] = 1
    return M


def incidence_rank(g: Graph) -> int:
    return rank(incidence_matrix(g)) if g.q else 0


def kernel_basis(g: Graph) -> list[tuple[int, ...]]:
    """Lattice basis of ker_Z(incidence) straight from the column Hermite form."""
    if not g.q:
        return []
    return size_reduce(integer_kernel_basis(incidence_matrix(g)))


def _columns(M: list[list[int]], idx: Sequence[int]) -> list[list[int]]:
    return [[row[j] for j in idx] for row in M]


def circuit_kernel_basis(g: Graph) -> list[tuple[int, ...]]:
    """Lattice basis of fundamental circuits.

    Grow a spanning forest (BFS) plus one odd-cycle edge per non-bipartite
    component, so the chosen columns are independent; each remaining edge e
    then closes exactly one circuit, whose kernel vector has e-entry +-1.
    Those vectors project onto the unit vectors of the non-chosen edges, so
    they form a lattice basis.  Falls back to the Hermite basis otherwise.
    """
    if not g.q:
        return []
    M = incidence_matrix(g)
    adj = g.adjacency()
    seen = [False] * (g.p + 1)
    base: list[int] = []
    for s in range(1, g.p + 1):
        if seen[s]:
            continue
        seen[s] = True
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w, e in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        base.append(e)
                        nxt.append(w)
            frontier = nxt
    base.sort()
    for e in range(g.q):
        if e not in base and rank(_columns(M, base + [e])) == len(base) + 1:
            base.append(e)
    out = []
    for e in range(g.q):
        if e in base:
            continue
        idx = base + [e]
        k = integer_kernel_basis(_columns(M, idx))
        v = [0] * g.q
        for j, x in zip(idx, k[0]):
            v[j] = x
        if len(k) != 1 or abs(v[e]) != 1:
            log.warning("circuit basis unavailable, using the Hermite kernel basis")
            return kernel_basis(g)
        out.append(tuple(v))
    return out


def lattice_basis_ideal(g: Graph) -> BinomialIdeal:
    return BinomialIdeal(g.q, tuple(binomial_from_vector(u) for u in circuit_kernel_basis(g)))


@lru_cache(maxsize=4096)
def toric_ideal(g: Graph) -> BinomialIdeal:
    """I_G as the saturation of its lattice-basis ideal; reduced GB under grevlex."""
    I = lattice_basis_ideal(g)
    if I.is_zero:
        return BinomialIdeal(g.q, (), "reduced_groebner", reference_order(g.q))
    return saturate_all(I)


def toric_gb(g: Graph, order: MonomialOrder) -> BinomialIdeal:
    """Reduced Groebner basis of I_G under ``order``."""
    return _toric_gb_cached(g, order)


@lru_cache(maxsize=8192)
def _toric_gb_cached(g: Graph, order: MonomialOrder) -> BinomialIdeal:
    I = toric_ideal(g)
    if order == I.order:
        return I
    return buchberger(I, order)


def graver_support(g: Graph) -> frozenset[int]:
    """Labels of edges occurring in some Graver element.

    An edge occurs in a Graver element iff some integer kernel vector uses
    it, i.e. iff deleting its column keeps the rank of the incidence matrix.
    """
    full = incidence_rank(g)
    out = set()
    for label in g.labels:
        h = gr.delete_edge(g, label)
        if incidence_rank(h) == full:
            out.add(label)
    return frozenset(out)


def is_zero_ideal(g: Graph) -> bool:
    return incidence_rank(g) == g.q


# ---------------------------------------------------------------------------
# Graver bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WalkBinomial:
    binomial: Binomial
    walk_edges: tuple[tuple[int, int], ...]  # (edge label, multiplicity)

    @property
    def vector(self) -> tuple[int, ...]:
        return self.binomial.exponent_vector()

    def walk(self, g: Graph) -> list[int]:
        """An explicit closed even walk (vertex sequence) for this binomial."""
        w = gr.alternating_closed_walk(g, self.vector)
        if w is None:
            raise StructuralViolation("no alternating closed walk realises this binomial")
        return w


def _walk_binomial(u: Sequence[int], g: Graph) -> WalkBinomial:
    b = canonical_sign(binomial_from_vector(u))
    edges = tuple((g.labels[i], abs(x)) for i, x in enumerate(u) if x)
    return WalkBinomial(b, edges)


def _edge_order(g: Graph) -> tuple[list[int], list[int]]:
    """Edge processing order that closes vertex constraints early, and for each
    position in that order the vertices whose last incident edge it is."""
    adj = g.adjacency()
    order: list[int] = []
    placed = [False] * g.q
    seen_v: list[int] = []
    remaining = set(range(1, g.p + 1))
    while remaining:
        # next vertex: most edges into already seen vertices, then smallest index
        v = max(remaining, key=lambda x: (sum(1 for w, _ in adj[x] if w in seen_v), -x))
        remaining.discard(v)
        seen_v.append(v)
        for w, e in sorted(adj[v], key=lambda t: t[1]):
            if w in seen_v and not placed[e]:
                placed[e] = True
                order.append(e)
    return order, seen_v


def _kernel_box_vectors(g: Graph, bound: int = 2) -> list[tuple[int, ...]]:
    """All nonzero u in [-bound, bound]^q with incidence(u) = 0, first nonzero entry > 0."""
    q = g.q
    order, _ = _edge_order(g)
    ends = [g.edges[e] for e in order]
    left = [0] * (g.p + 1)
    for u, v in g.edges:
        left[u] += 1
        left[v] += 1
    partial = [0] * (g.p + 1)
    values = [0] * q
    out: list[tuple[int, ...]] = []
    rng_pos = list(range(1, bound + 1))
    rng_all = list(range(-bound, bound + 1))

    def rec(k: int, started: bool) -> None:
        if k == q:
            if started:
                vec = [0] * q
                for idx, e in enumerate(order):
                    vec[e] = values[idx]
                out.append(tuple(vec))
            return
        a, b = ends[k]
        left[a] -= 1
        left[b] -= 1
        la, lb = left[a], left[b]
        pa, pb = partial[a], partial[b]
        for x in (rng_all if started else [0] + rng_pos):
            sa, sb = pa + x, pb + x
            if abs(sa) > bound * la or abs(sb) > bound * lb:
                continue
            partial[a], partial[b] = sa, sb
            values[k] = x
            rec(k + 1, started or x != 0)
        partial[a], partial[b] = pa, pb
        values[k] = 0
        left[a] += 1
        left[b] += 1

    rec(0, False)
    # sign convention: first nonzero entry in edge-index order is positive
    fixed = []
    for v in out:
        first = next(x for x in v if x)
        fixed.append(v if first > 0 else tuple(-x for x in v))
    return sorted(set(fixed))


def _primitive_filter(cands: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Keep the conformally minimal vectors (checked in order of l1 norm)."""
    cands = sorted(cands, key=lambda v: (sum(map(abs, v)), v))
    if not cands:
        return []
    q = len(cands[0])
    kept = np.zeros((0, q), dtype=np.int8)
    out = []
    for v in cands:
        a = np.array(v, dtype=np.int8)
        if len(kept):
            absk = np.abs(kept)
            fits = (absk <= np.abs(a)).all(axis=1)
            same = ((kept * a) >= 0).all(axis=1)
            flip = ((kept * a) <= 0).all(axis=1)
            if (fits & (same | flip)).any():
                continue
        kept = np.vstack([kept, a])
        out.append(v)
    return out


def graver_vectors_kernel(g: Graph) -> list[tuple[int, ...]]:
    """Graver basis by enumerating the kernel in the box [-2, 2]^q."""
    return sorted(_primitive_filter(_kernel_box_vectors(g, 2)))


def graver_vectors_lawrence(g: Graph) -> list[tuple[int, ...]]:
    """Graver basis as the reduced GB of the toric ideal of the Lawrence lifting."""
    q = g.q
    gens = []
    for u in circuit_kernel_basis(g):
        up = tuple(max(x, 0) for x in u)
        um = tuple(max(-x, 0) for x in u)
        gens.append(Binomial(up + um, um + up))
    if not gens:
        return []
    J = saturate_all(BinomialIdeal(2 * q, tuple(gens)))
    out = set()
    for b in J.generators:
        if b.minus is None:
            raise AssertionError("Lawrence toric ideal contains a monomial")
        u = tuple(b.plus[i] - b.plus[q + i] for i in range(q))
        first = next(x for x in u if x)
        out.add(u if first > 0 else tuple(-x for x in u))
    return sorted(out)


def _graver_cache_key(g: Graph) -> Graph:
    return g


@lru_cache(maxsize=1024)
def _graver_vectors(g: Graph, method: str) -> tuple[tuple[int, ...], ...]:
    if method == "kernel":
        return tuple(graver_vectors_kernel(g))
    if method == "lawrence":
        return tuple(graver_vectors_lawrence(g))
    raise ValueError(f"unknown Graver backend {method!r}")


def graver_basis(g: Graph, method: str = "kernel", cap: int = DEFAULT_GRAVER_CAP) -> list[WalkBinomial]:
    """All primitive binomials of I_G, each with its edge multiset."""
    if g.q > cap:
        raise CapabilityError(f"Graver computation limited to {cap} edges (graph has {g.q})")
    return [_walk_binomial(u, g) for u in _graver_vectors(g, method)]


def primitive_check(b: Binomial, pool: Sequence[Binomial]) -> bool:
    """No other pool element u'-v' has u'|u and v'|v (either orientation)."""
    u, v = b.plus, b.minus if b.minus is not None else (0,) * b.nvars

    def dominated(x: Monomial, y: Monomial) -> bool:
        return all(s <= t for s, t in zip(x, u)) and all(s <= t for s, t in zip(y, v))

    for c in pool:
        if c == b or (c.minus is not None and Binomial(c.minus, c.plus) == b):
            continue
        cm = c.minus if c.minus is not None else (0,) * c.nvars
        if dominated(c.plus, cm) or dominated(cm, c.plus):
            return False
    return True


# ---------------------------------------------------------------------------
# structure of primitive walks
# ---------------------------------------------------------------------------

def support_subgraph(w: WalkBinomial, g: Graph) -> Graph:
    labels = {k for k, _ in w.walk_edges}
    idx = [i for i, k in enumerate(g.labels) if k in labels]
    return Graph(g.p, tuple(g.edges[i] for i in idx), tuple(g.labels[i] for i in idx))


def classify_primitive_subgraph(w: WalkBinomial, g: Graph) -> str:
    """``even_cycle`` or ``contains_two_edge_disjoint_odd_cycles``."""
    h = support_subgraph(w, g)
    deg = h.degrees()
    touched = [v for v in range(1, h.p + 1) if deg[v]]
    cycles = gr.simple_cycles(h)
    if all(deg[v] == 2 for v in touched) and len(cycles) == 1 and len(cycles[0]) == h.q and h.q % 2 == 0:
        return "even_cycle"
    odd = [c for c in cycles if len(c) % 2]
    for a, b in itertools.combinations(odd, 2):
        if a.isdisjoint(b):
            return "contains_two_edge_disjoint_odd_cycles"
    raise StructuralViolation(
        f"primitive binomial {format_binomial(w.binomial, g.names)} has neither structure"
    )


def walk_structure_violations(w: WalkBinomial) -> list[str]:
    """Degree >= 2 per side, edge exponents <= 2, disjoint supports, deg(u) > d."""
    b = w.binomial
    problems = []
    for side in (b.plus, b.minus):
        if sum(side) < 2:
            problems.append("side of degree < 2")
        if max(side) > 2:
            problems.append("edge exponent > 2")
        for x in side:
            if x and not sum(side) > x:
                problems.append("deg(u) <= d")
    if any(x and y for x, y in zip(b.plus, b.minus)):
        problems.append("a variable divides both sides")
    return problems


# ---------------------------------------------------------------------------
# initial ideals and height
# ---------------------------------------------------------------------------

def initial_ideal(g: Graph, order: MonomialOrder, method: str = "gb") -> list[Monomial]:
    """Minimal generators of init_<(I_G).

    ``gb`` reads them off the reduced Groebner basis; ``graver`` takes the
    leading terms of the Graver basis (a universal Groebner basis).
    """
    if method == "gb":
        return monomial_ideal_min_gens(toric_gb(g, order).leading_terms())
    if method == "graver":
        leads = [w.binomial.oriented(order).plus for w in graver_basis(g)]
        return monomial_ideal_min_gens(leads)
    raise ValueError(f"unknown method {method!r}")


def height_formula(g: Graph) -> int:
    total = 0
    for c in gr.component_subgraphs(g):
        total += c.q - c.p + (1 if gr.is_bipartite(c) else 0)
    return total


def height_toric(g: Graph, order: MonomialOrder | None = None) -> tuple[int, int]:
    """(closed-form height, height of the initial ideal); raises if they differ."""
    formula = height_formula(g)
    order = order or reference_order(g.q)
    degen = monomial_ideal_height(initial_ideal(g, order)) if g.q else 0
    if formula != degen:
        raise HeightMismatch(f"formula gives {formula}, initial ideal gives {degen}")
    return formula, degen


def zero_ideal_structure(g: Graph) -> str:
    """``tree``, ``unicyclic_odd`` or ``nonzero_ideal`` for a connected graph."""
    if not gr.is_connected(g):
        raise gr.GraphError("zero_ideal_structure needs a connected graph")
    if not is_zero_ideal(g):
        return "nonzero_ideal"
    if g.q == g.p - 1:
        return "tree"
    if g.q == g.p and not gr.is_bipartite(g):
        return "unicyclic_odd"
    raise StructuralViolation("zero toric ideal on a graph that is neither a tree nor odd-unicyclic")


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def export_m2(g: Graph) -> str:
    """Macaulay2 script rebuilding the edge map and asking for its kernel."""
    evars = ",".join(g.names) if g.q else ""
    lines = [
        f"R = QQ[{evars}];" if g.q else "R = QQ[];",
        f"S = QQ[v1..v{g.p}];",
        "phi = map(S, R, {" + ", ".join(f"v{u}*v{v}" for u, v in g.edges) + "});",
        "I = ker phi; gens gb I",
    ]
    return "\n".join(lines) + "\n"
