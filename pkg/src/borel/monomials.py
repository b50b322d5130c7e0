"""Exponent-vector monomials, graded revlex, and monomial ideals.

A monomial in ``k[x_1, ..., x_n]`` is a plain tuple of ``n`` non-negative
ints.  Variables are ordered ``x_1 > x_2 > ... > x_n``; the last variable
plays the role of the Lefschetz element everywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .errors import BorelError

Monomial = tuple[int, ...]


def monomial(exponents: Iterable[int]) -> Monomial:
    m = tuple(int(e) for e in exponents)
    if any(e < 0 for e in m):
        raise ValueError(f"negative exponent in {m}")
    return m


def unit(n: int) -> Monomial:
    return (0,) * n


def var(i: int, n: int, power: int = 1) -> Monomial:
    """The monomial ``x_i^power`` (1-based index)."""
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")
    m = [0] * n
    m[i - 1] = power
    return tuple(m)


def degree(m: Monomial) -> int:
    return sum(m)


def maxvar(m: Monomial) -> int:
    """Largest 1-based index with a positive exponent, 0 for the unit."""
    for i in range(len(m), 0, -1):
        if m[i - 1]:
            return i
    return 0


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def div(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; caller guarantees ``b | a``."""
    return tuple(x - y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def revlex_key(m: Monomial) -> tuple:
    """Sort key realising graded revlex: bigger key means bigger monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def revlex_compare(a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller, equal or greater than ``b``.

    ``a > b`` iff ``deg a > deg b``, or the degrees agree and the last
    nonzero entry of ``a - b`` is negative.
    """
    if len(a) != len(b):
        raise ValueError(f"variable counts differ: {len(a)} vs {len(b)}")
    ka, kb = revlex_key(a), revlex_key(b)
    return (ka > kb) - (ka < kb)


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All degree-``d`` monomials in ``n`` variables, descending revlex."""
    if d < 0:
        return []
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        m = [0] * n
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    out.sort(key=revlex_key, reverse=True)
    return out


def borel_moves(m: Monomial) -> Iterator[Monomial]:
    """Images of ``m`` under the moves ``x_i -> x_j`` with ``j < i``."""
    for i in range(1, len(m)):
        if m[i]:
            for j in range(i):
                t = list(m)
                t[i] -= 1
                t[j] += 1
                yield tuple(t)


def borel_leq(b: Sequence[int], a: Sequence[int]) -> bool:
    """True iff ``a`` is reachable from ``b`` by elementary Borel moves.

    Both must have the same degree; the test is the partial-sum dominance
    ``sum(b[:k]) <= sum(a[:k])`` for every ``k``.
    """
    if sum(a) != sum(b):
        return False
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sb > sa:
            return False
    return True


def minimalize_gens(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Divisibility-minimal subset, by degree then descending revlex."""
    uniq = sorted(set(gens), key=lambda m: (sum(m), revlex_key(m)))
    kept: list[Monomial] = []
    for m in uniq:
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    kept.sort(key=_display_key)
    return tuple(kept)


def _display_key(m: Monomial):
    # ascending degree, descending revlex inside a degree
    return (sum(m), tuple(reversed(m)))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generators."""

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.n:
                raise ValueError(f"generator {g} is not in {self.n} variables")
        object.__setattr__(self, "gens", minimalize_gens(self.gens))

    @classmethod
    def from_gens(cls, gens: Iterable[Sequence[int]], n: int | None = None) -> "MonomialIdeal":
        gens = [monomial(g) for g in gens]
        if n is None:
            if not gens:
                raise ValueError("cannot infer n from an empty generator list")
            n = len(gens[0])
        return cls(n, tuple(gens))

    def __contains__(self, m: Monomial) -> bool:
        return self.contains(m)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def is_unit(self) -> bool:
        return unit(self.n) in self.gens

    def gens_of_degree(self, d: int) -> list[Monomial]:
        return [g for g in self.gens if sum(g) == d]

    def colon_power(self, i: int, p: int) -> "MonomialIdeal":
        """``(I : x_i^p)``."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range 1..{self.n}")
        if p < 0:
            raise ValueError("power must be non-negative")
        out = []
        for g in self.gens:
            t = list(g)
            t[i - 1] = max(t[i - 1] - p, 0)
            out.append(tuple(t))
        return MonomialIdeal(self.n, tuple(out))

    def standard_monomials(self, d: int) -> list[Monomial]:
        """Degree-``d`` monomials outside ``I``, in descending revlex."""
        if d < 0:
            return []
        n = self.n
        out: list[Monomial] = []
        buf = [0] * n

        # prefixes already in I are pruned: every completion stays in I
        def rec(pos: int, left: int):
            if pos == n - 1:
                buf[pos] = left
                m = tuple(buf)
                if not self.contains(m):
                    out.append(m)
                buf[pos] = 0
                return
            for e in range(left, -1, -1):
                buf[pos] = e
                if not self.contains(tuple(buf)):
                    rec(pos + 1, left - e)
            buf[pos] = 0

        if n == 0:
            return [] if d or self.gens else [()]
        rec(0, d)
        out.sort(key=revlex_key, reverse=True)
        return out

    def first_stability_violation(self, strong: bool = True):
        """First ``(generator, image)`` breaking (strong) stability, or None.

        Strong stability checks every move ``x_i -> x_j`` (``j < i``) on each
        generator.  Plain stability only moves the largest variable.
        """
        for g in self.gens:
            if strong:
                images = borel_moves(g)
            else:
                k = maxvar(g)
                images = (mul(div(g, var(k, self.n)), var(j, self.n)) for j in range(1, k))
            for h in images:
                if not self.contains(h):
                    return g, h
        return None

    def is_strongly_stable(self) -> bool:
        return self.first_stability_violation(strong=True) is None

    def is_stable(self) -> bool:
        return self.first_stability_violation(strong=False) is None

    def pure_power(self, i: int) -> int | None:
        """Least ``p`` with ``x_i^p`` in ``I``, or None."""
        best = None
        for g in self.gens:
            if all(e == 0 for k, e in enumerate(g) if k != i - 1):
                if best is None or g[i - 1] < best:
                    best = g[i - 1]
        return best

    def is_artinian(self) -> bool:
        return all(self.pure_power(i) is not None for i in range(1, self.n + 1))

    @cached_property
    def max_generator_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)


def is_strongly_stable(ideal: MonomialIdeal):
    """``(verdict, violation)`` where violation is ``(generator, image)``."""
    v = ideal.first_stability_violation(strong=True)
    return v is None, v


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    return MonomialIdeal.from_gens(gens, n)


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return ideal.contains(m)


def colon_power(ideal: MonomialIdeal, i: int, p: int) -> MonomialIdeal:
    return ideal.colon_power(i, p)


def standard_monomials(ideal: MonomialIdeal, d: int) -> list[Monomial]:
    return ideal.standard_monomials(d)


def borel_closure(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Smallest strongly stable ideal containing ``gens``."""
    seen = set(monomial(g) for g in gens)
    stack = list(seen)
    while stack:
        m = stack.pop()
        for h in borel_moves(m):
            if h not in seen:
                seen.add(h)
                stack.append(h)
    return MonomialIdeal(n, tuple(seen))


def require_same_n(*ideals: MonomialIdeal) -> int:
    ns = {I.n for I in ideals}
    if len(ns) != 1:
        raise BorelError(f"ideals live in different rings: {sorted(ns)}")
    return ns.pop()
