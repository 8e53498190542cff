"""KMY decompositions with respect to one variable, and the deletion results for toric ideals.

For a Groebner basis {y^d_i q_i + r_i} under a y-compatible order,
C = <q_i> and N = <q_i : d_i = 0>.  For a graph toric ideal and an edge
variable y, N is the toric ideal of the graph with that edge deleted.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, NamedTuple, Sequence

from . import graph as gr
from . import toric
from .algebra import (
    AlgebraError,
    Binomial,
    Monomial,
    MonomialOrder,
    format_binomial,
    format_monomial,
    grevlex,
    initial_y_form,
    make_y_compatible_order,
)
from .gb import (
    BinomialIdeal,
    buchberger,
    ideal_equal,
    monomial_ideal_height,
    monomial_ideal_min_gens,
    radical_monomial,
)
from .graph import Graph

log = logging.getLogger(__name__)


class NotYCompatible(AlgebraError):
    """The order does not pick its leading terms inside the initial y-form."""


class NoDeletionEdge(ValueError):
    pass


@dataclass(frozen=True)
class Split:
    """One Groebner basis element written as y^d * q + r."""

    d: int
    q: Binomial
    r: Monomial | None  # the term outside the initial y-form (enters with sign -1)


@dataclass(frozen=True)
class KMYDecomposition:
    y: int
    order: MonomialOrder
    gb: BinomialIdeal
    splits: tuple[Split, ...]
    C: BinomialIdeal
    N: BinomialIdeal
    init_y_ideal: tuple[Binomial, ...]
    degenerate: bool | None  # None: not decidable for this input

    def to_dict(self, names: Sequence[str] | None = None) -> dict[str, Any]:
        names = list(names) if names is not None else None
        return {
            "y": (names[self.y] if names else f"e{self.y + 1}"),
            "order": self.order.spec(names),
            "gb": [
                {
                    "element": format_binomial(g, names),
                    "d": s.d,
                    "q": format_binomial(s.q, names),
                    "r": None if s.r is None else format_monomial(s.r, names),
                }
                for g, s in zip(self.gb.generators, self.splits)
            ],
            "C": [format_binomial(g, names) for g in self.C.generators],
            "N": [format_binomial(g, names) for g in self.N.generators],
            "init_y": [format_binomial(g, names) for g in self.init_y_ideal],
            "degenerate": self.degenerate,
        }


def default_order(nvars: int, y: int) -> MonomialOrder:
    return make_y_compatible_order(y, grevlex(nvars))


def _strip_y(m: Monomial, y: int) -> Monomial:
    return m[:y] + (0,) + m[y + 1:]


def split_element(g: Binomial, y: int, order: MonomialOrder) -> Split:
    """Write an oriented basis element as y^d q + r; checks y-compatibility on it."""
    g = g.oriented(order)
    init = initial_y_form(g, y).oriented(order)
    if init.plus != g.plus:
        raise NotYCompatible(f"leading term of {format_binomial(g)} is not in its initial y-form")
    d = g.plus[y]
    if init.minus is None:
        return Split(d, Binomial(_strip_y(g.plus, y)), g.minus)
    return Split(d, Binomial(_strip_y(g.plus, y), _strip_y(g.minus, y)), None)


def _monomial_gens(I: BinomialIdeal) -> list[Monomial] | None:
    if all(g.minus is None for g in I.generators):
        return [g.plus for g in I.generators]
    return None


def _degenerate(C: BinomialIdeal, N: BinomialIdeal) -> bool | None:
    if C.is_unit:
        return True
    cm, nm = _monomial_gens(C), _monomial_gens(N)
    if cm is not None and nm is not None:
        return radical_monomial(cm) == radical_monomial(nm)
    if ideal_equal(C, N):
        return True
    # sqrt(C) = sqrt(N) cannot be settled here for general binomial input
    return None


def kmy_decompose(I: BinomialIdeal, y: int, order: MonomialOrder | None = None) -> KMYDecomposition:
    n = I.nvars
    order = order or default_order(n, y)
    if I.status == "reduced_groebner" and I.order == order:
        G = I
    else:
        G = buchberger(I, order)
    splits = tuple(split_element(g, y, order) for g in G.generators)
    gens = tuple(g.oriented(order) for g in G.generators)
    G = BinomialIdeal(n, gens, "reduced_groebner", order)
    qs = tuple(s.q for s in splits)
    # the q_i and the y-free elements are Groebner bases of C and N
    C = BinomialIdeal(n, qs, "groebner", order)
    N = BinomialIdeal(n, tuple(s.q for s in splits if s.d == 0), "groebner", order)
    init_y = tuple(initial_y_form(g, y).oriented(order) for g in gens)
    return KMYDecomposition(y, order, G, splits, C, N, init_y, _degenerate(C, N))


def kmy_decompose_toric(g: Graph, label: int, order: MonomialOrder | None = None) -> KMYDecomposition:
    """KMY decomposition of I_G with respect to the variable of edge ``label``.

    For toric input the degeneracy verdict is the combinatorial one: the edge
    lies in no primitive binomial.
    """
    y = g.position(label)
    order = order or default_order(g.q, y)
    D = kmy_decompose(toric.toric_gb(g, order), y, order)
    return _replace_verdict(D, is_degenerate_toric(g, label))


def _replace_verdict(D: KMYDecomposition, verdict: bool) -> KMYDecomposition:
    return KMYDecomposition(D.y, D.order, D.gb, D.splits, D.C, D.N, D.init_y_ideal, verdict)


def is_degenerate_toric(g: Graph, label: int, method: str = "rank") -> bool:
    """True iff the edge lies in no primitive closed even walk.

    ``rank`` uses the matroid test (deleting the column keeps the rank of the
    incidence matrix iff the edge is in some kernel vector, hence in some
    Graver element); ``graver`` scans the Graver basis itself.
    """
    g.position(label)
    if method == "rank":
        return label not in toric.graver_support(g)
    if method == "graver":
        return not any(lab == label for w in toric.graver_basis(g) for lab, _ in w.walk_edges)
    raise ValueError(f"unknown method {method!r}")


def deletion_identity_check(g: Graph, label: int, order: MonomialOrder | None = None) -> bool:
    """N_{e,I_G} = I_{G\\e}, and init(I_{G\\e}) is generated by the e-free init generators of I_G."""
    y = g.position(label)
    order = order or default_order(g.q, y)
    D = kmy_decompose(toric.toric_gb(g, order), y, order)
    h = gr.delete_edge(g, label)
    N = BinomialIdeal(h.q, tuple(b.drop_variable(y) for b in D.N.generators))
    if not ideal_equal(N, toric.toric_ideal(h)):
        log.info("N differs from the toric ideal of G minus e%d", label)
        return False
    M = toric.initial_ideal(g, order)
    expected = monomial_ideal_min_gens(m[:y] + m[y + 1:] for m in M if not m[y])
    return expected == toric.initial_ideal(h, order.drop_variable(y))


def select_deletion_edge(g: Graph) -> int:
    """Least-labelled edge that is not a bridge and lies in a primitive walk."""
    if toric.is_zero_ideal(g):
        raise NoDeletionEdge("the toric ideal is zero; no nondegenerate edge exists")
    br = gr.bridges(g)
    support = toric.graver_support(g)
    for label in sorted(g.labels):
        if label not in br and label in support:
            return label
    raise NoDeletionEdge("no non-bridge edge in a primitive walk")


class DeletionStep(NamedTuple):
    edge: int
    degenerate: bool


def deletion_sequence(g: Graph, edges: Sequence[int] = ()) -> list[DeletionStep]:
    """Delete ``edges`` in order, then keep deleting selected edges per component until I = 0.

    When the sequence ends at the zero ideal, the number of nondegenerate
    steps is the height of I_G.
    """
    steps: list[DeletionStep] = []
    for label in edges:
        steps.append(DeletionStep(label, is_degenerate_toric(g, label)))
        g = gr.delete_edge(g, label)
    for c in gr.component_subgraphs(g):
        while not toric.is_zero_ideal(c):
            label = select_deletion_edge(c)
            steps.append(DeletionStep(label, False))
            c = gr.delete_edge(c, label)
    return steps


def kmy_heights(D: KMYDecomposition) -> tuple[int, int, int]:
    """(height C, height I, height N) from leading terms of the recorded Groebner bases."""
    o = D.order
    hI = monomial_ideal_height(D.gb.leading_terms())
    hC = monomial_ideal_height(b.oriented(o).plus for b in D.C.generators)
    hN = monomial_ideal_height(b.oriented(o).plus for b in D.N.generators)
    return hC, hI, hN


def height_chain_check(g: Graph, label: int, order: MonomialOrder | None = None) -> bool:
    if is_degenerate_toric(g, label):
        raise ValueError(f"e{label} is degenerate; the height chain is only claimed otherwise")
    hC, hI, hN = kmy_heights(kmy_decompose_toric(g, label, order))
    return hC == hI == hN + 1


def bipartite_preservation_check(g: Graph, label: int) -> bool:
    if gr.is_bipartite(g):
        raise ValueError("graph is bipartite")
    if is_degenerate_toric(g, label):
        raise ValueError(f"e{label} is degenerate")
    return not gr.is_bipartite(gr.delete_edge(g, label))


def degenerate_gb_avoids_y_check(g: Graph, label: int, order: MonomialOrder | None = None) -> bool:
    if not is_degenerate_toric(g, label):
        raise ValueError(f"e{label} is nondegenerate")
    D = kmy_decompose_toric(g, label, order)
    return (
        not D.gb.involves(D.y)
        and ideal_equal(D.C, D.N)
        and ideal_equal(D.C, toric.toric_ideal(g))
    )
