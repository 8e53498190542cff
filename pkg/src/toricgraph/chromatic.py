"""Chromatic-number bounds from initial ideals of toric ideals.

If init_<(I_G) is contained in the ideal generated by a minimal set E of
variables, then chi(G) <= |E| + 3.  The best such E is a minimum vertex
cover of the support hypergraph of the initial ideal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import covers
from . import graph as gr
from . import toric
from .algebra import Monomial, MonomialOrder, format_monomial, lex
from .graph import Graph


class BoundViolation(AssertionError):
    """A computed certificate contradicts chi(G) <= |E| + 3."""


@dataclass(frozen=True)
class SupportHypergraph:
    nvars: int
    hyperedges: tuple[frozenset[int], ...]

    def min_vertex_cover(self) -> frozenset[int]:
        return min_vertex_cover(self)

    def all_minimum_covers(self) -> list[frozenset[int]]:
        return covers.all_minimum_covers(self.hyperedges) if self.hyperedges else [frozenset()]

    def minimal_covers(self) -> list[frozenset[int]]:
        return covers.minimal_covers(self.hyperedges)


def support_hypergraph(init_gens: Sequence[Monomial], nvars: int | None = None) -> SupportHypergraph:
    edges = []
    for m in init_gens:
        s = frozenset(i for i, x in enumerate(m) if x)
        if not s:
            raise ValueError("the unit monomial has empty support")
        edges.append(s)
    if nvars is None:
        nvars = len(init_gens[0]) if init_gens else 0
    return SupportHypergraph(nvars, tuple(edges))


def min_vertex_cover(h: SupportHypergraph) -> frozenset[int]:
    """Minimum cover; among those the lexicographically least index set."""
    if not h.hyperedges:
        return frozenset()
    return covers.min_vertex_cover(h.hyperedges)


def divisibility_witness(init_gens: Sequence[Monomial], cover: frozenset[int]) -> list[int | None]:
    """For each generator, the least cover variable dividing it (None if uncovered)."""
    out: list[int | None] = []
    for m in init_gens:
        hit = [i for i in sorted(cover) if m[i]]
        out.append(hit[0] if hit else None)
    return out


@dataclass(frozen=True)
class ChromaticCertificate:
    order: MonomialOrder
    init_gens: tuple[Monomial, ...]
    cover: frozenset[int]
    bound: int
    exact_chi: int
    delta_plus_one: int
    cover_is_minimum: bool
    coloring: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        witness = divisibility_witness(self.init_gens, self.cover)
        if any(w is None for w in witness):
            raise BoundViolation("cover does not contain the initial ideal")
        edges = [frozenset(i for i, x in enumerate(m) if x) for m in self.init_gens]
        if not covers.is_minimal_cover(edges, self.cover):
            raise BoundViolation("cover is not inclusion-minimal")
        if self.bound != len(self.cover) + 3:
            raise BoundViolation("bound is not |E| + 3")
        if self.exact_chi > self.bound:
            raise BoundViolation(f"chromatic number {self.exact_chi} exceeds the bound {self.bound}")

    @property
    def witness(self) -> list[int | None]:
        return divisibility_witness(self.init_gens, self.cover)

    def to_dict(self, names: Sequence[str] | None = None) -> dict[str, Any]:
        names = list(names) if names is not None else [f"e{i + 1}" for i in range(self.order.nvars)]
        return {
            "order": self.order.spec(names),
            "init_generators": [format_monomial(m, names) for m in self.init_gens],
            "cover": [names[i] for i in sorted(self.cover)],
            "bound": self.bound,
            "exact_chromatic_number": self.exact_chi,
            "delta_plus_one": self.delta_plus_one,
            "cover_is_minimum": self.cover_is_minimum,
            "divisibility_witness": {
                format_monomial(m, names): names[w] for m, w in zip(self.init_gens, self.witness)
            },
        }


def certificate_from_init(g: Graph, order: MonomialOrder, init_gens: Sequence[Monomial]) -> ChromaticCertificate:
    h = support_hypergraph(init_gens, g.q)
    cover = min_vertex_cover(h)
    chi, colors = gr.exact_chromatic_number(g)
    return ChromaticCertificate(
        order=order,
        init_gens=tuple(init_gens),
        cover=cover,
        bound=len(cover) + 3,
        exact_chi=chi,
        delta_plus_one=gr.max_degree(g) + 1,
        cover_is_minimum=True,
        coloring=tuple(colors),
    )


def chromatic_certificate(g: Graph, order: MonomialOrder) -> ChromaticCertificate:
    if not gr.is_connected(g):
        raise gr.GraphError("chromatic certificates are built for connected graphs")
    return certificate_from_init(g, order, toric.initial_ideal(g, order))


def principal_shortcut(g: Graph) -> int | None:
    """4 for a principal toric ideal, 3 for the zero ideal, otherwise None."""
    I = toric.toric_ideal(g)
    if I.is_zero:
        return 3
    if len(I.generators) == 1:
        return 4
    return None


def candidate_orders(g: Graph, budget: int, seed: int = 0) -> list[MonomialOrder]:
    """Identity lex, lex by decreasing endpoint-degree sum, then seeded random lex orders."""
    q = g.q
    out: list[MonomialOrder] = []
    seen: set[tuple[int, ...]] = set()

    def push(perm: Sequence[int]) -> None:
        t = tuple(perm)
        if t not in seen and len(out) < budget:
            seen.add(t)
            out.append(lex(q, t))

    push(range(q))
    deg = g.degrees()
    push(sorted(range(q), key=lambda j: (-(deg[g.edges[j][0]] + deg[g.edges[j][1]]), j)))
    rng = random.Random(seed)
    attempts = 0
    while len(out) < budget and attempts < 50 * budget:
        attempts += 1
        perm = list(range(q))
        rng.shuffle(perm)
        push(perm)
    return out


def order_search(g: Graph, budget: int, seed: int = 0) -> ChromaticCertificate:
    """Best certificate over a deterministic stream of lex orders."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    best = None
    best_key = None
    for order in candidate_orders(g, budget, seed):
        cert = chromatic_certificate(g, order)
        k = (cert.bound, order.spec(g.names))
        if best_key is None or k < best_key:
            best, best_key = cert, k
    return best
