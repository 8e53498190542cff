from __future__ import annotations

import itertools
import random

import networkx as nx
import numpy as np
import pytest

from toricgraph import corpus, toric
from toricgraph import graph as gr
from toricgraph.algebra import binomial_from_vector, grevlex, lex, parse_binomial, parse_order
from toricgraph.gb import (
    BinomialIdeal,
    CapabilityError,
    ideal_equal,
    is_groebner,
    monomial_ideal_height,
    saturate_all,
)
from toricgraph.graph import Graph


def fromnx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    idx = {v: i + 1 for i, v in enumerate(nodes)}
    return Graph(len(nodes), tuple(sorted((min(idx[u], idx[v]), max(idx[u], idx[v])) for u, v in h.edges())))


def ideal_of(g: Graph, *gens: str) -> BinomialIdeal:
    return BinomialIdeal(g.q, tuple(parse_binomial(s, g.names) for s in gens))


def brute_graver(g: Graph) -> list[tuple[int, ...]]:
    """Primitive kernel vectors by direct definition over [-2, 2]^q (numpy)."""
    M = np.array(toric.incidence_matrix(g))
    V = np.array(list(itertools.product(range(-2, 3), repeat=g.q)), dtype=np.int64)
    V = V[(V @ M.T == 0).all(1) & (np.abs(V).sum(1) > 0)]
    P, N = np.maximum(V, 0), np.maximum(-V, 0)
    out = set()
    for i in range(len(V)):
        dom = (P <= P[i]).all(1) & (N <= N[i]).all(1)
        dom[i] = False
        if not dom.any():
            v = tuple(int(x) for x in V[i])
            out.add(v if next(x for x in v if x) > 0 else tuple(-x for x in v))
    return sorted(out)


def standard_monomials(leads, q: int, d: int) -> int:
    count = 0
    for c in itertools.combinations_with_replacement(range(q), d):
        m = [0] * q
        for i in c:
            m[i] += 1
        if not any(all(a <= b for a, b in zip(l, m)) for l in leads):
            count += 1
    return count


def edge_subring_dimension(g: Graph, d: int) -> int:
    """Number of distinct vertex-degree vectors of degree-d edge monomials."""
    seen = set()
    for c in itertools.combinations_with_replacement(range(g.q), d):
        v = [0] * (g.p + 1)
        for i in c:
            a, b = g.edges[i]
            v[a] += 1
            v[b] += 1
        seen.add(tuple(v))
    return len(seen)


# -- incidence lattice --------------------------------------------------------

def test_incidence_examples(k3, c4, glued):
    M = toric.incidence_matrix(k3)
    assert all(sum(col) == 2 for col in zip(*M))
    assert toric.incidence_rank(k3) == 3
    assert toric.incidence_rank(c4) == 3
    assert toric.incidence_rank(glued) == 5


def test_kernel_examples(k3, c4, glued):
    assert toric.kernel_basis(c4) in ([(1, -1, 1, -1)], [(-1, 1, -1, 1)])
    assert toric.kernel_basis(k3) == []
    assert len(toric.kernel_basis(glued)) == 2
    assert len(toric.circuit_kernel_basis(glued)) == 2


def test_incidence_rank_formula_and_numpy(corpus6):
    for g in corpus6:
        expect = g.p - (1 if gr.is_bipartite(g) else 0)
        assert toric.incidence_rank(g) == expect
        if g.q:
            assert expect == np.linalg.matrix_rank(np.array(toric.incidence_matrix(g), dtype=float))


def test_circuit_and_hermite_bases_span_same_lattice(corpus6):
    for g in corpus6:
        a, b = toric.circuit_kernel_basis(g), toric.kernel_basis(g)
        assert len(a) == len(b) == g.q - toric.incidence_rank(g)
        M = toric.incidence_matrix(g)
        for v in a:
            assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in M)
        # both are lattice bases of ker_Z iff their lattice ideals saturate to the same ideal
        if a:
            ia = BinomialIdeal(g.q, tuple(binomial_from_vector(v) for v in a))
            ib = BinomialIdeal(g.q, tuple(binomial_from_vector(v) for v in b))
            assert ideal_equal(saturate_all(ia), saturate_all(ib))


# -- toric ideals -------------------------------------------------------------

def test_toric_ideal_examples(glued, k3, ext_bowtie, c4):
    assert ideal_equal(toric.toric_ideal(glued), ideal_of(glued, "e1*e5 - e6*e7", "e2*e4 - e3*e7"))
    assert toric.toric_ideal(k3).is_zero
    (gen,) = toric.toric_ideal(ext_bowtie).generators
    assert {gen.plus, gen.minus} == {
        parse_binomial("e1*e4^2*e6*e7 - e2*e3*e5^2*e8", ext_bowtie.names).plus,
        parse_binomial("e1*e4^2*e6*e7 - e2*e3*e5^2*e8", ext_bowtie.names).minus,
    }
    assert ideal_equal(toric.toric_ideal(c4), ideal_of(c4, "e1*e3 - e2*e4"))


def test_k4_lex_groebner_basis(k4):
    G = toric.toric_gb(k4, lex(6))
    assert set(G.generators) == {parse_binomial(s, k4.names) for s in ("e1*e5 - e3*e6", "e2*e4 - e3*e6")}


def test_toric_ideal_is_saturated(corpus6):
    for g in corpus6[::7]:
        I = toric.toric_ideal(g)
        assert ideal_equal(saturate_all(I), I)


def test_hilbert_function_matches_edge_subring():
    # dim of the degree-d part of K[E]/I_G equals the number of distinct
    # degree-d products of edges: an oracle independent of any Groebner code
    rng = random.Random(11)
    graphs = [corpus.GLUED_SQUARES, corpus.K4, corpus.BOWTIE, fromnx(nx.complete_graph(5)),
              fromnx(nx.petersen_graph())] + rng.sample(corpus.connected_graphs(6), 10)
    for g in graphs:
        perm = list(range(g.q))
        rng.shuffle(perm)
        for order in (grevlex(g.q), lex(g.q, perm)):
            leads = toric.toric_gb(g, order).leading_terms()
            for d in (1, 2, 3):
                assert standard_monomials(leads, g.q, d) == edge_subring_dimension(g, d)


# -- Graver bases ---------------------------------------------------------------

GRAVER_SIZES = [
    (corpus.SQUARE, 1), (corpus.K4, 3), (corpus.GLUED_SQUARES, 3), (corpus.BOWTIE, 1),
    (corpus.EXTENDED_BOWTIE, 1), (fromnx(nx.complete_graph(5)), 30),
    (fromnx(nx.complete_bipartite_graph(3, 3)), 15), (fromnx(nx.circular_ladder_graph(3)), 9),
    (fromnx(nx.wheel_graph(5)), 7),
]


@pytest.mark.parametrize("g,size", GRAVER_SIZES)
def test_graver_sizes_and_backends(g, size):
    k = toric.graver_vectors_kernel(g)
    assert len(k) == size
    assert k == toric.graver_vectors_lawrence(g)
    if g.q <= 9:
        assert k == brute_graver(g)


def test_graver_examples(c4, k4, bowtie, glued):
    (w,) = toric.graver_basis(c4)
    assert {w.binomial.plus, w.binomial.minus} == {(1, 0, 1, 0), (0, 1, 0, 1)}
    sq = {parse_binomial(s, k4.names) for s in ("e1*e5 - e3*e6", "e2*e4 - e3*e6", "e1*e5 - e2*e4")}
    got = {w.binomial for w in toric.graver_basis(k4)}
    assert {frozenset((b.plus, b.minus)) for b in got} == {frozenset((b.plus, b.minus)) for b in sq}
    (b,) = toric.graver_basis(bowtie)
    assert sum(b.binomial.plus) == sum(b.binomial.minus) == 3
    six = parse_binomial("e1*e3*e5 - e2*e4*e6", glued.names)
    assert any({w.binomial.plus, w.binomial.minus} == {six.plus, six.minus} for w in toric.graver_basis(glued))


def test_graver_cap():
    with pytest.raises(CapabilityError):
        toric.graver_basis(fromnx(nx.complete_graph(5)), cap=9)


def test_primitive_check(glued, c4):
    pool = [w.binomial for w in toric.graver_basis(glued)]
    six = parse_binomial("e1*e3*e5 - e2*e4*e6", glued.names)
    assert toric.primitive_check(six, pool)
    scaled = parse_binomial("e1*e2*e5 - e2*e6*e7", glued.names)
    assert not toric.primitive_check(scaled, pool + [scaled])
    (w,) = toric.graver_basis(c4)
    assert toric.primitive_check(w.binomial, [w.binomial])


def test_graver_elements_are_walks(corpus6):
    for g in corpus6:
        M = toric.incidence_matrix(g)
        for w in toric.graver_basis(g):
            u = w.vector
            assert all(sum(a * b for a, b in zip(row, u)) == 0 for row in M)
            walk = w.walk(g)
            assert walk[0] == walk[-1] and (len(walk) - 1) % 2 == 0
            used = gr.walk_edges_of(walk, g)
            for lab, mult in w.walk_edges:
                assert used.count(lab) == mult


def test_classification_examples(c4, bowtie, ext_bowtie):
    (w,) = toric.graver_basis(c4)
    assert toric.classify_primitive_subgraph(w, c4) == "even_cycle"
    (w,) = toric.graver_basis(bowtie)
    assert toric.classify_primitive_subgraph(w, bowtie) == "contains_two_edge_disjoint_odd_cycles"
    (w,) = toric.graver_basis(ext_bowtie)
    assert toric.classify_primitive_subgraph(w, ext_bowtie) == "contains_two_edge_disjoint_odd_cycles"
    assert dict(w.walk_edges)[4] == 2 and dict(w.walk_edges)[5] == 2


def test_classification_rejects_non_primitive(glued):
    # product of the two square binomials: support is the whole bipartite graph
    w = toric._walk_binomial((1, 1, -1, 1, 1, -1, -2), glued)
    with pytest.raises(toric.StructuralViolation):
        toric.classify_primitive_subgraph(w, glued)


def test_universal_groebner_property(glued):
    pool = [w.binomial for w in toric.graver_basis(glued)]
    rng = random.Random(50)
    for _ in range(50):
        perm = list(range(glued.q))
        rng.shuffle(perm)
        assert is_groebner(pool, lex(glued.q, perm))
    assert ideal_equal(BinomialIdeal(glued.q, tuple(pool)), toric.toric_ideal(glued))


# -- initial ideals and height --------------------------------------------------

def test_initial_ideal_examples(glued, k4, k3):
    o = parse_order("lex:e6,e3", glued.names, partial=True)
    expect = {parse_binomial(s, glued.names).plus for s in ("e6*e7", "e3*e7", "e2*e4*e6")}
    for method in ("gb", "graver"):
        assert set(toric.initial_ideal(glued, o, method)) == expect
        assert set(toric.initial_ideal(k4, lex(6), method)) == {
            parse_binomial(s, k4.names).plus for s in ("e1*e5", "e2*e4")}
        assert toric.initial_ideal(k3, grevlex(3), method) == []


def test_height_examples(glued, k4, k3):
    assert toric.height_toric(glued) == (2, 2)
    assert toric.height_toric(k4) == (2, 2)
    assert toric.height_toric(k3) == (0, 0)


def test_height_independent_of_order(corpus6):
    rng = random.Random(4)
    for g in corpus6[::5]:
        h = toric.height_formula(g)
        for _ in range(10):
            perm = list(range(g.q))
            rng.shuffle(perm)
            o = lex(g.q, perm) if rng.random() < 0.5 else grevlex(g.q, perm)
            assert monomial_ideal_height(toric.initial_ideal(g, o)) == h


def test_height_random_graphs_up_to_nine_vertices():
    rng = random.Random(9)
    for _ in range(200):
        g = corpus.random_connected_graph(rng.randint(2, 9), rng, density=rng.choice([0.15, 0.3]))
        f, d = toric.height_toric(g)
        assert f == d


def test_height_additive_over_components(glued, k4, c4):
    disjoint = Graph(10, glued.edges + tuple((u + 6, v + 6) for u, v in k4.edges))
    assert toric.height_toric(disjoint) == (4, 4)
    assert toric.height_formula(disjoint) == toric.height_formula(glued) + toric.height_formula(k4)


def test_zero_ideal_structure(c4, k3):
    assert toric.zero_ideal_structure(Graph(4, ((1, 2), (2, 3), (3, 4)))) == "tree"
    assert toric.zero_ideal_structure(k3) == "unicyclic_odd"
    assert toric.zero_ideal_structure(c4) == "nonzero_ideal"


def test_zero_ideal_structure_exhaustive(corpus6):
    for g in corpus6:
        s = toric.zero_ideal_structure(g)
        assert (s == "nonzero_ideal") == (not toric.toric_ideal(g).is_zero)


def test_export_m2(k4):
    text = toric.export_m2(k4)
    lines = text.splitlines()
    assert lines[0] == "R = QQ[e1,e2,e3,e4,e5,e6];"
    assert "map(S, R, {v1*v4, v1*v3, v3*v4, v2*v4, v2*v3, v1*v2})" in lines[2]
    assert "ker phi" in lines[3]
