"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping

from gmpy2 import mpq

from . import monomials as mono
from .monomials import Monomial

QQ = mpq


class Polynomial:
    """Immutable-by-convention map ``Monomial -> nonzero rational``."""

    __slots__ = ("n", "terms", "_lm")

    def __init__(self, n: int, terms: Mapping[Monomial, object] | None = None):
        self.n = n
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n:
                raise ValueError(f"monomial {m} is not in {n} variables")
            c = QQ(c)
            if c:
                clean[m] = clean.get(m, QQ(0)) + c
        self.terms = {m: c for m, c in clean.items() if c}
        self._lm = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Polynomial":
        # terms must already be clean (tuples, nonzero mpq)
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        p._lm = None
        return p

    @classmethod
    def from_monomial(cls, m: Monomial, c=1) -> "Polynomial":
        return cls(len(m), {tuple(m): c})

    @classmethod
    def variable(cls, i: int, n: int) -> "Polynomial":
        return cls.from_monomial(mono.var(i, n))

    @classmethod
    def constant(cls, c, n: int) -> "Polynomial":
        return cls(n, {mono.unit(n): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self.n}, {format_polynomial(self)!r})"

    def __add__(self, other: "Polynomial") -> "Polynomial":
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m)
            if v is None:
                t[m] = c
            else:
                v = v + c
                if v:
                    t[m] = v
                else:
                    del t[m]
        return Polynomial._raw(self.n, t)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono.mul(m1, m2)
                v = t.get(m, 0) + c1 * c2
                if v:
                    t[m] = v
                else:
                    t.pop(m, None)
        return Polynomial._raw(self.n, t)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.constant(1, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        c = QQ(c)
        if not c:
            return Polynomial._raw(self.n, {})
        return Polynomial._raw(self.n, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        return Polynomial._raw(self.n, {mono.mul(k, m): v * c for k, v in self.terms.items()})

    @property
    def lm(self) -> Monomial:
        """Leading monomial under graded revlex."""
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=mono.revlex_key)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    def monic(self) -> "Polynomial":
        return self.scale(1 / self.lc)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mono.revlex_key(mc[0]), reverse=True)

    def substitute(self, images: list["Polynomial"]) -> "Polynomial":
        """Replace ``x_i`` by ``images[i-1]`` and expand."""
        n = images[0].n if images else self.n
        out = Polynomial._raw(n, {})
        powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(1, n)} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        for m, c in self.terms.items():
            term = Polynomial.constant(c, n)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out


def default_names(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def format_monomial(m: Monomial, names: list[str] | None = None) -> str:
    """Canonical text: factors by increasing index, ``^1`` dropped, unit is ``1``."""
    names = names or default_names(len(m))
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_coefficient(c) -> str:
    c = QQ(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial, names: list[str] | None = None) -> str:
    if not p.terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mtxt = format_monomial(m, names)
        if mtxt == "1":
            body = format_coefficient(a)
        elif a == 1:
            body = mtxt
        else:
            body = f"{format_coefficient(a)}*{mtxt}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def polys_from_monomials(gens: Iterable[Monomial]) -> list[Polynomial]:
    return [Polynomial.from_monomial(g) for g in gens]
