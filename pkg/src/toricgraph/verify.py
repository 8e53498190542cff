"""Property suite run by ``toricgraph verify`` over one graph or a whole corpus."""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field

from . import chromatic, kmy, toric
from . import graph as gr
from .algebra import lex
from .gb import ideal_equal
from .graph import Graph

PROPERTIES = (
    "height",
    "deletion_identity",
    "degeneracy",
    "height_chain",
    "bipartite_preservation",
    "odd_cycle_lemma",
    "chromatic_bound",
    "chromatic_drop",
    "graver_structure",
)


@dataclass
class Tally:
    checked: dict[str, int] = field(default_factory=lambda: defaultdict(int))
    failures: dict[str, list[str]] = field(default_factory=lambda: defaultdict(list))

    def record(self, prop: str, ok: bool, what: str) -> None:
        self.checked[prop] += 1
        if not ok:
            self.failures[prop].append(what)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def rows(self) -> list[tuple[str, int, int]]:
        return [(p, self.checked[p], len(self.failures[p])) for p in PROPERTIES if self.checked[p]]


def _run(tally: Tally, prop: str, what: str, fn) -> None:
    try:
        ok = bool(fn())
    except (AssertionError, ValueError) as exc:
        tally.record(prop, False, f"{what}: {exc}")
        return
    tally.record(prop, ok, what)


def check_graph(g: Graph, tally: Tally | None = None, orders: int = 5, seed: int = 0,
                graver_cap: int = 15) -> Tally:
    tally = tally if tally is not None else Tally()
    tag = g.to_text().replace("\n", " ").strip()

    def height() -> bool:
        formula, degen = toric.height_toric(g)
        steps = kmy.deletion_sequence(g)
        return formula == degen == sum(1 for s in steps if not s.degenerate)

    _run(tally, "height", tag, height)
    bip = gr.is_bipartite(g)
    for label in g.labels:
        what = f"{tag} / e{label}"
        degenerate = kmy.is_degenerate_toric(g, label)
        _run(tally, "deletion_identity", what, lambda: kmy.deletion_identity_check(g, label))

        def degeneracy() -> bool:
            D = kmy.kmy_decompose_toric(g, label)
            return degenerate == (not D.gb.involves(D.y)) == ideal_equal(D.C, D.N)

        _run(tally, "degeneracy", what, degeneracy)
        if not degenerate:
            _run(tally, "height_chain", what, lambda: kmy.height_chain_check(g, label))
            if not bip:
                _run(tally, "bipartite_preservation", what,
                     lambda: kmy.bipartite_preservation_check(g, label))
        if not bip and gr.is_bipartite(gr.delete_edge(g, label)):
            _run(tally, "odd_cycle_lemma", what,
                 lambda: gr.edge_cycle_profile(g, label) == (False, True))
        _run(tally, "chromatic_drop", what, lambda: gr.chromatic_drop_check(g, label))

    if gr.is_connected(g):
        for order in chromatic.candidate_orders(g, orders, seed):
            _run(tally, "chromatic_bound", f"{tag} / {order.spec(g.names)}",
                 lambda: chromatic.chromatic_certificate(g, order) is not None)

    if g.q <= graver_cap:
        def structure() -> bool:
            for w in toric.graver_basis(g):
                toric.classify_primitive_subgraph(w, g)
                if toric.walk_structure_violations(w):
                    return False
            return True

        _run(tally, "graver_structure", tag, structure)
    return tally


def random_orders(q: int, count: int, seed: int):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        perm = list(range(q))
        rng.shuffle(perm)
        out.append(lex(q, perm))
    return out
