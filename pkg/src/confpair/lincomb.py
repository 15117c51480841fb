"""Finite formal sums of generators with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator

TENSOR = " ⊗ "


def canonical_form(gen):
    """Canonical representative of ``gen`` and the sign relating them.

    Tuples are tensors and canonicalize factorwise.
    """
    if isinstance(gen, tuple):
        parts, sign = [], 1
        for g in gen:
            c, s = canonical_form(g)
            parts.append(c)
            sign *= s
        return tuple(parts), sign
    canon = getattr(gen, "canonical", None)
    if canon is None:
        return gen, 1
    return canon()


def gen_str(gen) -> str:
    if isinstance(gen, tuple):
        return TENSOR.join(gen_str(g) for g in gen)
    return str(gen)


def coeff_str(c: Fraction) -> str:
    sign = "-" if c < 0 else "+"
    c = abs(c)
    body = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return sign + body


class LinComb:
    """Mapping generator -> nonzero Fraction.

    Every insertion goes through :func:`canonical_form`, so generators that
    differ by a sign-carrying symmetry (flipped edges, reordered odd edges)
    share one key.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[object, object]] | dict | None = None):
        self._terms: dict = {}
        if terms is None:
            return
        if isinstance(terms, dict):
            terms = terms.items()
        for gen, c in terms:
            self.add(gen, c)

    @classmethod
    def of(cls, gen, coeff=1) -> "LinComb":
        return cls([(gen, coeff)])

    def add(self, gen, coeff=1) -> None:
        """In-place accumulation; only used while building a value."""
        coeff = Fraction(coeff)
        if not coeff:
            return
        key, sign = canonical_form(gen)
        c = self._terms.get(key, 0) + sign * coeff
        if c:
            self._terms[key] = c
        else:
            self._terms.pop(key, None)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: gen_str(kv[0]))

    def coeff(self, gen) -> Fraction:
        key, sign = canonical_form(gen)
        return sign * self._terms.get(key, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LinComb") -> "LinComb":
        out = LinComb(self._terms)
        for g, c in other.items():
            out.add(g, c)
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __neg__(self) -> "LinComb":
        return self.scale(-1)

    def scale(self, c) -> "LinComb":
        c = Fraction(c)
        out = LinComb()
        if c:
            out._terms = {g: v * c for g, v in self._terms.items()}
        return out

    def __mul__(self, c) -> "LinComb":
        return self.scale(c)

    __rmul__ = __mul__

    def map(self, f: Callable[[object], "LinComb"]) -> "LinComb":
        """Linear extension of ``f`` from generators to combinations."""
        out = LinComb()
        for g, c in self._terms.items():
            for h, d in f(g).items():
                out.add(h, c * d)
        return out

    def pair(self, f: Callable[[object], object]) -> Fraction:
        """Linear extension of a scalar-valued ``f``."""
        return sum((c * f(g) for g, c in self._terms.items()), Fraction(0))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " ".join(f"{coeff_str(c)}*{gen_str(g)}" for g, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"LinComb({self})"


def tensor(a: LinComb, b: LinComb) -> LinComb:
    out = LinComb()
    for g, c in a.items():
        for h, d in b.items():
            ga = g if isinstance(g, tuple) else (g,)
            hb = h if isinstance(h, tuple) else (h,)
            out.add(ga + hb, c * d)
    return out


def lincomb(x) -> LinComb:
    """Promote a bare generator to a one-term combination."""
    return x if isinstance(x, LinComb) else LinComb.of(x)
