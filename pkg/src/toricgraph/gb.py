"""Buchberger machinery for ideals generated by monomials and pure-difference binomials.

The class is closed under S-pairs and reduction: an S-pair of two binomials
is a binomial (or zero), reducing a binomial by a binomial keeps two terms,
and reducing by a monomial kills a term.  Everything is therefore exact with
implicit +1/-1 coefficients and no field arithmetic.
"""

from __future__ import annotations

import heapq
import logging
from array import array
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import covers
from .algebra import (
    Binomial,
    Monomial,
    MonomialOrder,
    format_binomial,
    reference_order,
    saturation_order,
    support_mask,
)

log = logging.getLogger(__name__)

DEFAULT_GENERATOR_BUDGET = 100_000


_default_budget = DEFAULT_GENERATOR_BUDGET


def set_generator_budget(n: int) -> int:
    """Change the budget used when callers do not pass one; returns the old value."""
    global _default_budget
    if n < 1:
        raise ValueError("budget must be positive")
    old, _default_budget = _default_budget, n
    return old


class CapabilityError(RuntimeError):
    """Raised when an input exceeds the configured desk-scale limits."""


@dataclass(frozen=True)
class BinomialIdeal:
    nvars: int
    generators: tuple[Binomial, ...] = ()
    status: str = "raw"  # raw | groebner | reduced_groebner
    order: MonomialOrder | None = None

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.nvars != self.nvars:
                raise ValueError("generator length differs from the ambient variable count")

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(g.minus is None and not any(g.plus) for g in self.generators)

    def leading_terms(self) -> list[Monomial]:
        if self.order is None:
            raise ValueError("leading terms need an order")
        return [g.oriented(self.order).plus for g in self.generators]

    def involves(self, i: int) -> bool:
        return any(g.involves(i) for g in self.generators)

    def serialize(self, names: Sequence[str] | None = None) -> str:
        head = f"vars={self.nvars} order={self.order.spec(names) if self.order else 'none'}"
        return "\n".join([head] + [format_binomial(g, names) for g in self.generators])


def ideal(nvars: int, gens: Iterable[Binomial]) -> BinomialIdeal:
    return BinomialIdeal(nvars, tuple(gens))


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------

_FIELD = 16  # bits per exponent in packed monomials; values stay below 2**15


@lru_cache(maxsize=None)
def _guard(nvars: int) -> int:
    return sum(1 << (_FIELD * i + _FIELD - 1) for i in range(nvars))


def _pack(m: Monomial) -> int:
    """Exponent vector as one integer with a guard bit on top of every field."""
    try:
        return int.from_bytes(array("h", m).tobytes(), "little")
    except OverflowError:
        raise CapabilityError("exponent exceeds the packed-monomial range") from None


class _Reducer:
    """Leading terms of a basis, packed for fast divisor lookup.

    With guard bits G, a | b iff ((b | G) - a) & G == G: no field borrows.
    """

    __slots__ = ("leads", "tails", "packed", "guard")

    def __init__(self, nvars: int) -> None:
        self.leads: list[Monomial] = []
        self.tails: list[Monomial | None] = []
        self.packed: list[int] = []
        self.guard = _guard(nvars)

    def add(self, lead: Monomial, tail: Monomial | None) -> None:
        self.leads.append(lead)
        self.tails.append(tail)
        self.packed.append(_pack(lead))

    def find(self, m: Monomial) -> int:
        G = self.guard
        B = _pack(m) | G
        for i, A in enumerate(self.packed):
            if (B - A) & G == G:
                return i
        return -1

    def reduce(self, a: Monomial, b: Monomial | None, key) -> tuple[Monomial, Monomial | None] | None:
        """Fully reduce ``a - b`` (``a`` leading); None means zero."""
        leads, tails = self.leads, self.tails
        while True:
            i = self.find(a)
            if i < 0:
                break
            c, d = leads[i], tails[i]
            if d is None:
                if b is None:
                    return None
                a, b = b, None
                continue
            new = tuple([x - y + z for x, y, z in zip(a, c, d)])
            if b is None:
                a = new
            elif new == b:
                return None
            elif key(new) > key(b):
                a = new
            else:
                a, b = b, new
        while b is not None:
            i = self.find(b)
            if i < 0:
                break
            c, d = leads[i], tails[i]
            if d is None:
                b = None
            else:
                b = tuple([x - y + z for x, y, z in zip(b, c, d)])
        return a, b


def _oriented_terms(f: Binomial, key) -> tuple[Monomial, Monomial | None]:
    if f.minus is not None and key(f.minus) > key(f.plus):
        return f.minus, f.plus
    return f.plus, f.minus


def normal_form(f: Binomial, basis: Sequence[Binomial], order: MonomialOrder) -> Binomial | None:
    """Remainder of ``f`` on division by ``basis``; None encodes zero.

    Remainders are determined up to sign, which never affects ideal membership.
    """
    key = order.key
    red = _Reducer(order.nvars)
    for g in basis:
        red.add(*_oriented_terms(g, key))
    out = red.reduce(*_oriented_terms(f, key), key)
    if out is None:
        return None
    return Binomial(out[0], out[1])


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x if x >= y else y for x, y in zip(a, b)])


def _divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _coprime(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _spair(a: Monomial, b: Monomial | None, c: Monomial, d: Monomial | None, key):
    """S-pair of (a - b) and (c - d) as oriented terms, or None for zero."""
    if b is None and d is None:
        return None
    L = _lcm(a, c)
    t1 = None if b is None else tuple([l - x + y for l, x, y in zip(L, a, b)])
    t2 = None if d is None else tuple([l - x + y for l, x, y in zip(L, c, d)])
    if t1 is None:
        return t2, None
    if t2 is None:
        return t1, None
    if t1 == t2:
        return None
    return (t1, t2) if key(t1) > key(t2) else (t2, t1)


class _Engine:
    def __init__(self, order: MonomialOrder, budget: int) -> None:
        self.key = order.key
        self.nvars = order.nvars
        self.guard = _guard(order.nvars)
        self.budget = budget
        self.leads: list[Monomial] = []
        self.packed: list[int] = []
        self.masks: list[int] = []
        self.tails: list[Monomial | None] = []
        self.active: list[bool] = []
        self.reducer = _Reducer(order.nvars)
        self.pairs: dict[tuple[int, int], tuple[Monomial, int]] = {}
        self.heap: list = []

    def _rebuild_reducer(self) -> None:
        red = _Reducer(self.nvars)
        for i, ok in enumerate(self.active):
            if ok:
                red.add(self.leads[i], self.tails[i])
        self.reducer = red

    def add(self, lead: Monomial, tail: Monomial | None) -> None:
        """Gebauer-Moeller update with the new element."""
        h = len(self.leads)
        if h >= self.budget:
            raise CapabilityError(f"Buchberger basis exceeded the generator budget ({self.budget})")
        G = self.guard
        leads, masks = self.leads, self.masks
        hp, hm = _pack(lead), support_mask(lead)
        # new pairs grouped by lcm
        groups: dict[int, list] = {}
        for i in range(h):
            if not self.active[i]:
                continue
            L = _lcm(leads[i], lead)
            Lp = _pack(L)
            grp = groups.get(Lp)
            if grp is None:
                groups[Lp] = [L, i, not (masks[i] & hm)]
            elif not (masks[i] & hm):
                grp[2] = True
        # keep one pair per lcm that no other new lcm properly divides, and
        # drop the whole group when it has a coprime pair
        minimal: list[int] = []
        new_pairs = []
        for Lp, (L, i, has_coprime) in sorted(groups.items(), key=lambda t: (sum(t[1][0]), t[1][1])):
            if any((Lp | G) - Mp & G == G for Mp in minimal):
                continue
            minimal.append(Lp)
            if not has_coprime:
                new_pairs.append((i, L, Lp))
        # chain criterion on the old pairs
        dead = []
        for (i, j), (L, Lp) in self.pairs.items():
            if ((Lp | G) - hp) & G == G and _lcm(leads[i], lead) != L and _lcm(leads[j], lead) != L:
                dead.append((i, j))
        for p in dead:
            del self.pairs[p]
        for i, L, Lp in new_pairs:
            self.pairs[(i, h)] = (L, Lp)
            heapq.heappush(self.heap, (sum(L), self.key(L), h, i))
        # retire elements whose lead is a multiple of the new lead
        changed = False
        for i in range(h):
            if self.active[i] and ((self.packed[i] | G) - hp) & G == G:
                self.active[i] = False
                changed = True
        leads.append(lead)
        self.packed.append(hp)
        masks.append(hm)
        self.tails.append(tail)
        self.active.append(True)
        if changed:
            self._rebuild_reducer()
        else:
            self.reducer.add(lead, tail)

    def run(self) -> None:
        key = self.key
        while self.heap:
            _, _, h, i = heapq.heappop(self.heap)
            if self.pairs.pop((i, h), None) is None:
                continue
            s = _spair(self.leads[i], self.tails[i], self.leads[h], self.tails[h], key)
            if s is None:
                continue
            r = self.reducer.reduce(s[0], s[1], key)
            if r is not None:
                self.add(*r)

    def reduced_basis(self) -> list[tuple[Monomial, Monomial | None]]:
        idx = [i for i, ok in enumerate(self.active) if ok]
        minimal: list[int] = []
        seen: set[Monomial] = set()
        for i in sorted(idx, key=lambda i: self.key(self.leads[i])):
            lead = self.leads[i]
            if lead in seen or any(_divides(self.leads[j], lead) for j in minimal):
                continue
            seen.add(lead)
            minimal.append(i)
        red = _Reducer(self.nvars)
        for i in minimal:
            red.add(self.leads[i], self.tails[i])
        out = []
        for i in minimal:
            tail = self.tails[i]
            while tail is not None:
                k = red.find(tail)
                if k < 0:
                    break
                c, d = red.leads[k], red.tails[k]
                tail = None if d is None else tuple([x - y + z for x, y, z in zip(tail, c, d)])
            out.append((self.leads[i], tail))
        out.sort(key=lambda t: self.key(t[0]))
        return out


def buchberger(
    I: BinomialIdeal | Sequence[Binomial],
    order: MonomialOrder,
    budget: int | None = None,
) -> BinomialIdeal:
    """Reduced Groebner basis, sorted by increasing leading term."""
    gens = I.generators if isinstance(I, BinomialIdeal) else tuple(I)
    nvars = I.nvars if isinstance(I, BinomialIdeal) else order.nvars
    if nvars != order.nvars:
        raise ValueError("order and ideal have different variable counts")
    key = order.key
    eng = _Engine(order, budget if budget is not None else _default_budget)
    # start from the interreduced input, smallest leading terms first
    terms = sorted((_oriented_terms(g, key) for g in gens), key=lambda t: (sum(t[0]), key(t[0])))
    for a, b in terms:
        r = eng.reducer.reduce(a, b, key)
        if r is not None:
            eng.add(*r)
    eng.run()
    basis = tuple(Binomial(a, b) for a, b in eng.reduced_basis())
    log.debug("buchberger: %d generators in, %d out", len(gens), len(basis))
    return BinomialIdeal(nvars, basis, "reduced_groebner", order)


def is_groebner(basis: Sequence[Binomial], order: MonomialOrder) -> bool:
    """Buchberger criterion: every S-pair reduces to zero modulo ``basis``.

    Pairs with coprime leading terms are skipped (they always reduce to zero).
    """
    key = order.key
    terms = [_oriented_terms(g, key) for g in basis]
    red = _Reducer(order.nvars)
    for a, b in terms:
        red.add(a, b)
    n = len(terms)
    for j in range(n):
        a2, b2 = terms[j]
        for i in range(j):
            a1, b1 = terms[i]
            if _coprime(a1, a2):
                continue
            s = _spair(a1, b1, a2, b2, key)
            if s is not None and red.reduce(s[0], s[1], key) is not None:
                return False
    return True


def ideal_equal(A: BinomialIdeal, B: BinomialIdeal) -> bool:
    """Compare canonical reduced Groebner bases under grevlex."""
    if A.nvars != B.nvars:
        raise ValueError("ideals live in different rings")
    order = reference_order(A.nvars)
    ga = A.generators if A.status == "reduced_groebner" and A.order == order else buchberger(A, order).generators
    gb = B.generators if B.status == "reduced_groebner" and B.order == order else buchberger(B, order).generators
    return set(ga) == set(gb)


def contains(I: BinomialIdeal, f: Binomial) -> bool:
    """Ideal membership via normal form against a Groebner basis of I."""
    order = I.order if I.status != "raw" and I.order is not None else reference_order(I.nvars)
    G = I if I.status != "raw" and I.order == order else buchberger(I, order)
    return normal_form(f, G.generators, order) is None


def contains_ideal(I: BinomialIdeal, J: BinomialIdeal) -> bool:
    """True iff J is a subset of I."""
    order = reference_order(I.nvars)
    G = buchberger(I, order)
    return all(normal_form(f, G.generators, order) is None for f in J.generators)


# ---------------------------------------------------------------------------
# saturation
# ---------------------------------------------------------------------------

def is_homogeneous(gens: Iterable[Binomial]) -> bool:
    return all(g.minus is None or sum(g.plus) == sum(g.minus) for g in gens)


def _strip(b: Binomial, x: int) -> Binomial:
    k = min(t[x] for t in b.terms())
    if not k:
        return b
    p = b.plus[:x] + (b.plus[x] - k,) + b.plus[x + 1:]
    m = None if b.minus is None else b.minus[:x] + (b.minus[x] - k,) + b.minus[x + 1:]
    return Binomial(p, m)


def _saturate_homogeneous(gens: Sequence[Binomial], nvars: int, x: int, budget: int | None) -> tuple[Binomial, ...]:
    G = buchberger(BinomialIdeal(nvars, tuple(gens)), saturation_order(nvars, x), budget)
    return tuple(_strip(g, x) for g in G.generators)


def _homogenize(b: Binomial) -> Binomial:
    if b.minus is None:
        return Binomial(b.plus + (0,))
    dp, dm = sum(b.plus), sum(b.minus)
    top = max(dp, dm)
    return Binomial(b.plus + (top - dp,), b.minus + (top - dm,))


def _dehomogenize(b: Binomial) -> Binomial | None:
    p = b.plus[:-1]
    if b.minus is None:
        return Binomial(p)
    m = b.minus[:-1]
    return None if p == m else Binomial(p, m)


def saturate_variable(
    I: BinomialIdeal, x: int, budget: int | None = None
) -> BinomialIdeal:
    """(I : x^inf), returned as a reduced Groebner basis under grevlex.

    Homogeneous input: one Groebner basis with x cheapest, then strip powers
    of x.  Inhomogeneous input is homogenized with an extra variable t,
    saturated by t and x, and dehomogenized.
    """
    n = I.nvars
    gens = [g for g in I.generators]
    if not any(g.involves(x) for g in gens):
        return buchberger(I, reference_order(n), budget)
    if is_homogeneous(gens):
        out = _saturate_homogeneous(gens, n, x, budget)
    else:
        hgens = [_homogenize(g) for g in gens]
        hgens = list(_saturate_homogeneous(hgens, n + 1, n, budget))
        hgens = list(_saturate_homogeneous(hgens, n + 1, x, budget))
        out = tuple(d for d in map(_dehomogenize, hgens) if d is not None)
    return buchberger(BinomialIdeal(n, out), reference_order(n), budget)


def saturate_all(I: BinomialIdeal, budget: int | None = None) -> BinomialIdeal:
    """(I : (x_1 ... x_n)^inf) by saturating one variable at a time."""
    n = I.nvars
    gens = tuple(I.generators)
    homogeneous = is_homogeneous(gens)
    for x in range(n):
        if not any(g.involves(x) for g in gens):
            continue
        if homogeneous:
            gens = _saturate_homogeneous(gens, n, x, budget)
        else:
            gens = saturate_variable(BinomialIdeal(n, gens), x, budget).generators
    return buchberger(BinomialIdeal(n, gens), reference_order(n), budget)


# ---------------------------------------------------------------------------
# monomial ideals
# ---------------------------------------------------------------------------

def monomial_ideal_min_gens(ms: Iterable[Monomial]) -> list[Monomial]:
    """Divisibility-minimal generators, deduplicated and sorted."""
    uniq = sorted(set(ms), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in uniq:
        if not any(_divides(k, m) for k in out):
            out.append(m)
    return sorted(out, key=lambda m: tuple(-x for x in m))


def monomial_support_hyperedges(ms: Iterable[Monomial]) -> list[frozenset[int]]:
    return [frozenset(i for i, x in enumerate(m) if x) for m in ms]


def monomial_ideal_height(ms: Iterable[Monomial]) -> int:
    """Height of a monomial ideal: minimum number of variables meeting every generator.

    The empty list is the zero ideal (height 0); the unit ideal is rejected.
    """
    ms = list(ms)
    if not ms:
        return 0
    if any(not any(m) for m in ms):
        raise ValueError("the unit ideal has no finite height")
    return covers.min_cover_size(monomial_support_hyperedges(monomial_ideal_min_gens(ms)))


def radical_monomial(ms: Iterable[Monomial]) -> list[Monomial]:
    """Radical of a monomial ideal: squarefree parts of the minimal generators."""
    return monomial_ideal_min_gens(tuple(1 if x else 0 for x in m) for m in ms)
