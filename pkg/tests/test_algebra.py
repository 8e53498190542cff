from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricgraph.algebra import (
    EQUAL,
    GREATER,
    LESS,
    AlgebraError,
    Binomial,
    canonical_sign,
    compare,
    div,
    divides,
    format_binomial,
    format_monomial,
    grevlex,
    initial_y_form,
    lcm,
    lex,
    make_y_compatible_order,
    mul,
    parse_binomial,
    parse_monomial,
    parse_order,
    weight_order,
)

N = 6
NAMES = [f"e{i}" for i in range(1, 8)]


def mono(s: str, n: int = 7):
    return parse_monomial(s, NAMES[:n])


def some_orders(n: int, rng: random.Random):
    perm = list(range(n))
    rng.shuffle(perm)
    w = [rng.randrange(4) for _ in range(n)]
    return {
        "lex": lex(n, perm),
        "grevlex": grevlex(n, perm),
        "weight": weight_order(w, lex(n)),
        "ytop": make_y_compatible_order(rng.randrange(n), grevlex(n, perm)),
    }


def test_compare_examples():
    o = lex(6)
    assert compare(o, mono("e1*e5", 6), mono("e3*e6", 6)) == GREATER
    assert compare(grevlex(6), mono("e2", 6), mono("e2", 6)) == EQUAL
    assert compare(grevlex(6), mono("1", 6), mono("e1", 6)) == LESS
    with pytest.raises(AlgebraError):
        compare(o, (1, 0), (1, 0, 0))


def test_grevlex_breaks_ties_on_last_variable():
    o = grevlex(3)
    # same degree; e1*e3 has the last variable, so it is smaller
    assert compare(o, mono("e2^2", 3), mono("e1*e3", 3)) == GREATER
    assert compare(o, mono("e1^3", 3), mono("e3^2", 3)) == GREATER


def test_monomial_arithmetic():
    assert lcm(mono("e1*e5"), mono("e2*e4")) == mono("e1*e2*e4*e5")
    assert not divides(mono("e3*e6"), mono("e1*e3*e5"))
    assert div(mono("e1*e4^2*e6*e7"), mono("e4")) == mono("e1*e4*e6*e7")
    assert mul(mono("e1"), mono("e1*e2")) == mono("e1^2*e2")
    with pytest.raises(AlgebraError):
        div(mono("e1"), mono("e2"))


def test_initial_y_form_cases():
    y = 0
    f = Binomial(mono("e1^2*e2", 4), mono("e3*e4", 4))
    assert initial_y_form(f, y) == Binomial(mono("e1^2*e2", 4))
    g = Binomial(mono("e2*e3", 4), mono("e3*e4", 4))
    assert initial_y_form(g, y) == g
    h = Binomial(mono("e1*e2", 4), mono("e1*e3", 4))
    assert initial_y_form(h, y) == h
    low = Binomial(mono("e2", 4), mono("e1*e3", 4))
    assert initial_y_form(low, y) == Binomial(mono("e1*e3", 4))


def test_ytop_examples():
    o = make_y_compatible_order(5, lex(7, [2, 0, 1, 3, 4, 6, 5]))
    b = Binomial(mono("e1*e5"), mono("e6*e7")).oriented(o)
    assert b.plus == mono("e6*e7")
    o2 = make_y_compatible_order(0, grevlex(3))
    assert compare(o2, mono("e1", 3), mono("e2^5*e3^4", 3)) == GREATER


def test_text_roundtrip():
    b = parse_binomial("e1*e4^2*e6*e7 - e2*e3*e5^2", NAMES)
    assert format_binomial(b, NAMES) == "e1*e4^2*e6*e7 - e2*e3*e5^2"
    assert format_monomial((0,) * 3) == "1"
    assert parse_monomial("1", NAMES[:2]) == (0, 0)
    with pytest.raises(AlgebraError):
        parse_monomial("e9", NAMES[:2])


def test_binomial_rejects_zero():
    with pytest.raises(AlgebraError):
        Binomial((1, 0), (1, 0))


def test_canonical_sign_idempotent():
    b = Binomial((0, 1), (1, 0))
    c = canonical_sign(b)
    assert c == Binomial((1, 0), (0, 1)) and canonical_sign(c) == c


def test_parse_order_specs():
    names = NAMES[:7]
    o = parse_order("lex:e6,e3", names, partial=True)
    assert o.perm == (5, 2, 0, 1, 3, 4, 6)
    with pytest.raises(AlgebraError):
        parse_order("lex:e6,e3", names)
    assert parse_order("grevlex", names) == grevlex(7)
    y = parse_order("ytop:e6+lex:e1,e2,e3,e4,e5,e6,e7", names)
    assert y.kind == "ytop" and y.y == 5
    w = parse_order("weight:1,0,0,0,0,0,2+grevlex", names)
    assert w.weights == (1, 0, 0, 0, 0, 0, 2)
    for spec in ("lex:e6,e3,e1,e2,e4,e5,e7", "grevlex:e2,e1,e3,e4,e5,e6,e7",
                 "ytop:e2+grevlex", "weight:1,1,1,1,1,1,1+lex:e7,e6,e5,e4,e3,e2,e1"):
        assert parse_order(spec, names).spec(names) == spec
    with pytest.raises(AlgebraError):
        parse_order("lex:e1,e1,e2,e3,e4,e5,e6", names)
    with pytest.raises(AlgebraError):
        parse_order("revlex", names)


def test_drop_variable_induced_order():
    o = lex(4, [2, 0, 3, 1])
    d = o.drop_variable(0)
    assert d.perm == (1, 2, 0)
    y = make_y_compatible_order(1, grevlex(4))
    assert y.drop_variable(1) == grevlex(3)


@pytest.mark.parametrize("kind", ["lex", "grevlex", "weight", "ytop"])
def test_orders_multiplicative_and_one_minimal(kind):
    rng = random.Random(kind)
    for trial in range(10):
        o = some_orders(N, rng)[kind]
        one = (0,) * N
        for _ in range(1000):
            a, b, w = (tuple(rng.randrange(4) for _ in range(N)) for _ in range(3))
            c = compare(o, a, b)
            assert compare(o, mul(a, w), mul(b, w)) == c
            assert compare(o, b, a) == -c
            if any(a):
                assert compare(o, one, a) == LESS


exps = st.lists(st.integers(0, 3), min_size=N, max_size=N).map(tuple)


@settings(max_examples=300, deadline=None)
@given(exps, exps, st.integers(0, N - 1), st.integers(0, 10_000))
def test_ytop_is_y_compatible(a, b, y, seed):
    if a == b:
        return
    base = some_orders(N, random.Random(seed))["grevlex"]
    o = make_y_compatible_order(y, base)
    f = Binomial(a, b)
    assert f.oriented(o).plus == initial_y_form(f, y).oriented(o).plus


@settings(max_examples=200, deadline=None)
@given(exps, exps, exps)
def test_lex_is_transitive(a, b, c):
    o = lex(N, [3, 1, 4, 0, 5, 2])
    if compare(o, a, b) <= 0 and compare(o, b, c) <= 0:
        assert compare(o, a, c) <= 0
