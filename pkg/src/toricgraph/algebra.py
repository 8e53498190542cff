"""Monomials, pure-difference binomials and monomial orders over edge variables.

A monomial is a plain tuple of nonnegative exponents, one slot per variable.
A :class:`Binomial` is ``plus - minus`` with implicit coefficients +1/-1, or
the single monomial ``plus`` when ``minus`` is ``None``.  Elements are only
ever meaningful up to sign, which is all ideal membership needs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

Monomial = tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


class AlgebraError(ValueError):
    pass


# ---------------------------------------------------------------------------
# monomial arithmetic
# ---------------------------------------------------------------------------

def one(nvars: int) -> Monomial:
    return (0,) * nvars


def _check_len(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise AlgebraError(f"length mismatch: {len(a)} vs {len(b)}")


def mul(a: Monomial, b: Monomial) -> Monomial:
    _check_len(a, b)
    return tuple(x + y for x, y in zip(a, b))


def div(a: Monomial, b: Monomial) -> Monomial:
    """Return a / b; raises when b does not divide a."""
    _check_len(a, b)
    out = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in out):
        raise AlgebraError("divisor does not divide the dividend")
    return out


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_len(a, b)
    return tuple(x if x >= y else y for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_len(a, b)
    return tuple(x if x <= y else y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b."""
    _check_len(a, b)
    return all(x <= y for x, y in zip(a, b))


def degree(a: Monomial) -> int:
    return sum(a)


def support(a: Monomial) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(a) if x)


def support_mask(a: Monomial) -> int:
    mask = 0
    for i, x in enumerate(a):
        if x:
            mask |= 1 << i
    return mask


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=True)
class MonomialOrder:
    """A monomial order on ``nvars`` variables.

    ``kind`` is one of ``lex``, ``grevlex``, ``weight`` and ``ytop``.  For
    ``lex`` and ``grevlex``, ``perm`` lists variable indices from greatest to
    least.  ``weight`` compares a nonnegative weight vector first and breaks
    ties with ``base``.  ``ytop`` compares the degree in variable ``y`` first
    and then the y-free parts under ``base``.
    """

    kind: str
    nvars: int
    perm: tuple[int, ...] = ()
    weights: tuple[int, ...] = ()
    y: int = -1
    base: MonomialOrder | None = None
    key: Callable[[Monomial], tuple] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        n = self.nvars
        if self.kind in ("lex", "grevlex"):
            if sorted(self.perm) != list(range(n)):
                raise AlgebraError(f"{self.kind} needs a permutation of 0..{n - 1}")
        elif self.kind == "weight":
            if len(self.weights) != n or any(w < 0 for w in self.weights):
                raise AlgebraError("weight order needs one nonnegative weight per variable")
            if self.base is None or self.base.nvars != n:
                raise AlgebraError("weight order needs a tie-break order on the same variables")
        elif self.kind == "ytop":
            if not 0 <= self.y < n:
                raise AlgebraError(f"variable index {self.y} out of range")
            if self.base is None or self.base.nvars != n:
                raise AlgebraError("ytop order needs a base order on the same variables")
        else:
            raise AlgebraError(f"unknown order kind {self.kind!r}")
        object.__setattr__(self, "key", self._make_key())

    def _make_key(self) -> Callable[[Monomial], tuple]:
        if self.kind == "lex":
            perm = self.perm
            if perm == tuple(range(self.nvars)):
                return tuple
            return lambda m: tuple([m[i] for i in perm])
        if self.kind == "grevlex":
            rev = self.perm[::-1]
            return lambda m: (sum(m), tuple([-m[i] for i in rev]))
        if self.kind == "weight":
            w = self.weights
            bkey = self.base.key
            return lambda m: (sum(a * b for a, b in zip(w, m)), bkey(m))
        y = self.y
        bkey = self.base.key

        def ytop_key(m: Monomial) -> tuple:
            return (m[y], bkey(m[:y] + (0,) + m[y + 1:]))

        return ytop_key

    def compare(self, a: Monomial, b: Monomial) -> int:
        _check_len(a, b)
        if len(a) != self.nvars:
            raise AlgebraError(f"monomial has {len(a)} slots, order has {self.nvars}")
        ka, kb = self.key(a), self.key(b)
        if ka == kb:
            return EQUAL
        return GREATER if ka > kb else LESS

    def drop_variable(self, i: int) -> MonomialOrder:
        """The induced order on the variables other than ``i`` (re-indexed)."""
        if not 0 <= i < self.nvars:
            raise AlgebraError(f"variable index {i} out of range")

        def re(j: int) -> int:
            return j if j < i else j - 1

        n = self.nvars - 1
        if self.kind in ("lex", "grevlex"):
            return MonomialOrder(self.kind, n, perm=tuple(re(j) for j in self.perm if j != i))
        base = self.base.drop_variable(i)
        if self.kind == "weight":
            return MonomialOrder("weight", n, weights=self.weights[:i] + self.weights[i + 1:], base=base)
        if self.y == i:
            return base
        return MonomialOrder("ytop", n, y=re(self.y), base=base)

    def spec(self, names: Sequence[str] | None = None) -> str:
        """Serialize to the order-spec grammar understood by :func:`parse_order`."""
        names = names or default_names(self.nvars)
        if self.kind == "lex":
            return "lex:" + ",".join(names[j] for j in self.perm)
        if self.kind == "grevlex":
            if self.perm == tuple(range(self.nvars)):
                return "grevlex"
            return "grevlex:" + ",".join(names[j] for j in self.perm)
        if self.kind == "weight":
            return "weight:" + ",".join(map(str, self.weights)) + "+" + self.base.spec(names)
        return f"ytop:{names[self.y]}+" + self.base.spec(names)


def lex(nvars: int, perm: Sequence[int] | None = None) -> MonomialOrder:
    return MonomialOrder("lex", nvars, perm=tuple(range(nvars)) if perm is None else tuple(perm))


def grevlex(nvars: int, perm: Sequence[int] | None = None) -> MonomialOrder:
    return MonomialOrder("grevlex", nvars, perm=tuple(range(nvars)) if perm is None else tuple(perm))


def weight_order(weights: Sequence[int], base: MonomialOrder) -> MonomialOrder:
    return MonomialOrder("weight", len(weights), weights=tuple(weights), base=base)


def make_y_compatible_order(y: int, base: MonomialOrder) -> MonomialOrder:
    """Order by y-degree first, then by ``base`` on the y-free parts."""
    return MonomialOrder("ytop", base.nvars, y=y, base=base)


def compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    return order.compare(a, b)


def reference_order(nvars: int) -> MonomialOrder:
    return grevlex(nvars)


def saturation_order(nvars: int, x: int) -> MonomialOrder:
    """grevlex with ``x`` as the smallest variable."""
    return grevlex(nvars, [j for j in range(nvars) if j != x] + [x])


# ---------------------------------------------------------------------------
# binomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Binomial:
    """``plus - minus``; a monomial when ``minus`` is None."""

    plus: Monomial
    minus: Monomial | None = None

    def __post_init__(self) -> None:
        if self.minus is not None:
            if len(self.minus) != len(self.plus):
                raise AlgebraError("binomial terms have different lengths")
            if self.minus == self.plus:
                raise AlgebraError("plus and minus coincide (zero binomial)")

    @property
    def nvars(self) -> int:
        return len(self.plus)

    @property
    def is_monomial(self) -> bool:
        return self.minus is None

    def terms(self) -> tuple[Monomial, ...]:
        return (self.plus,) if self.minus is None else (self.plus, self.minus)

    def oriented(self, order: MonomialOrder) -> Binomial:
        """Swap the terms if needed so ``plus`` leads under ``order``."""
        if self.minus is not None and order.key(self.minus) > order.key(self.plus):
            return Binomial(self.minus, self.plus)
        return self

    def exponent_vector(self) -> tuple[int, ...]:
        if self.minus is None:
            return self.plus
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    def involves(self, i: int) -> bool:
        return any(t[i] for t in self.terms())

    def variables(self) -> frozenset[int]:
        out: set[int] = set()
        for t in self.terms():
            out |= support(t)
        return frozenset(out)

    def drop_variable(self, i: int) -> Binomial:
        """Re-index into the ring without variable ``i``; the variable must be absent."""
        if self.involves(i):
            raise AlgebraError(f"variable {i} occurs in the binomial")
        p = self.plus[:i] + self.plus[i + 1:]
        return Binomial(p, None if self.minus is None else self.minus[:i] + self.minus[i + 1:])

    def insert_variable(self, i: int) -> Binomial:
        """Embed into a ring with a new (unused) variable at position ``i``."""
        p = self.plus[:i] + (0,) + self.plus[i:]
        return Binomial(p, None if self.minus is None else self.minus[:i] + (0,) + self.minus[i:])


def binomial_from_vector(u: Sequence[int]) -> Binomial:
    """The binomial x^{u+} - x^{u-} of a nonzero integer vector."""
    plus = tuple(x if x > 0 else 0 for x in u)
    minus = tuple(-x if x < 0 else 0 for x in u)
    if plus == minus:
        raise AlgebraError("zero vector has no binomial")
    return Binomial(plus, minus)


def initial_y_form(f: Binomial, y: int) -> Binomial:
    """Terms of ``f`` carrying the highest power of variable ``y``."""
    if f.minus is None:
        return f
    dp, dm = f.plus[y], f.minus[y]
    if dp > dm:
        return Binomial(f.plus)
    if dp < dm:
        return Binomial(f.minus)
    return f


def canonical_sign(b: Binomial) -> Binomial:
    """Orientation independent of any order: the lex-smaller term is ``minus``."""
    if b.minus is not None and b.minus > b.plus:
        return Binomial(b.minus, b.plus)
    return b


# ---------------------------------------------------------------------------
# text syntax
# ---------------------------------------------------------------------------

def default_names(nvars: int) -> list[str]:
    return [f"e{i + 1}" for i in range(nvars)]


def format_monomial(m: Monomial, names: Sequence[str] | None = None) -> str:
    names = names or default_names(len(m))
    parts = []
    for i, x in enumerate(m):
        if x == 1:
            parts.append(names[i])
        elif x > 1:
            parts.append(f"{names[i]}^{x}")
    return "*".join(parts) if parts else "1"


def format_binomial(b: Binomial, names: Sequence[str] | None = None) -> str:
    s = format_monomial(b.plus, names)
    if b.minus is not None:
        s += " - " + format_monomial(b.minus, names)
    return s


_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    index = {n: i for i, n in enumerate(names)}
    exps = [0] * len(names)
    text = text.strip()
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise AlgebraError(f"bad monomial factor {factor!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        if name not in index:
            raise AlgebraError(f"unknown variable {name!r}")
        exps[index[name]] += power
    return tuple(exps)


def parse_binomial(text: str, names: Sequence[str]) -> Binomial:
    parts = text.split(" - ")
    if len(parts) == 1:
        return Binomial(parse_monomial(parts[0], names))
    if len(parts) != 2:
        raise AlgebraError(f"bad binomial {text!r}")
    return Binomial(parse_monomial(parts[0], names), parse_monomial(parts[1], names))


def parse_order(spec: str, names: Sequence[str], partial: bool = False) -> MonomialOrder:
    """Parse ``lex:e6,e3,...``, ``grevlex[:perm]``, ``weight:w1,..+<order>``, ``ytop:e6+<order>``.

    With ``partial`` a permutation may list only a prefix; the remaining
    variables follow in index order.
    """
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    spec = spec.strip()

    def perm_of(body: str) -> list[int]:
        items = [s.strip() for s in body.split(",") if s.strip()]
        try:
            perm = [index[s] for s in items]
        except KeyError as exc:
            raise AlgebraError(f"unknown variable {exc.args[0]!r} in order spec") from None
        if len(set(perm)) != len(perm):
            raise AlgebraError("repeated variable in order spec")
        if len(perm) != n:
            if not partial:
                missing = [names[j] for j in range(n) if j not in perm]
                raise AlgebraError(f"order spec does not list {', '.join(missing)} (use partial)")
            perm += [j for j in range(n) if j not in perm]
        return perm

    kind, _, body = spec.partition(":")
    if kind == "lex":
        return lex(n, perm_of(body))
    if kind == "grevlex":
        return grevlex(n, perm_of(body) if body else None)
    if kind == "weight":
        ws, plus, rest = body.partition("+")
        weights = [int(w) for w in ws.split(",")]
        if len(weights) != n:
            raise AlgebraError("weight vector has the wrong length")
        base = parse_order(rest, names, partial) if plus else grevlex(n)
        return weight_order(weights, base)
    if kind == "ytop":
        var, plus, rest = body.partition("+")
        if var.strip() not in index:
            raise AlgebraError(f"unknown variable {var!r} in order spec")
        base = parse_order(rest, names, partial) if plus else grevlex(n)
        return make_y_compatible_order(index[var.strip()], base)
    raise AlgebraError(f"unknown order spec {spec!r}")
