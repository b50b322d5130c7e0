"""Reduced Groebner bases under graded revlex and generic initial ideals."""

from __future__ import annotations

import heapq
import logging
import random
from dataclasses import dataclass
from typing import Sequence

from . import monomials as mono
from .errors import NotHomogeneous, StabilityCheckFailed, TrialsDisagree
from .monomials import MonomialIdeal, Monomial
from .polynomials import QQ, Polynomial

log = logging.getLogger(__name__)

DEFAULT_TRIALS = 3
DEFAULT_ENTRY_BOUND = 100


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic, sorted by descending leading monomial."""

    n: int
    basis: tuple[Polynomial, ...]

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def leading_monomials(self) -> list[Monomial]:
        return [g.lm for g in self.basis]


def _reduce(f: Polynomial, basis: Sequence[Polynomial], full: bool = True) -> Polynomial:
    """Remainder of ``f`` on division by ``basis``.

    With ``full=False`` only the leading term is reduced (top reduction).
    """
    n = f.n
    rem = dict(f.terms)
    out: dict = {}
    heap = [(_neg_key(m), m) for m in rem]
    heapq.heapify(heap)
    lms = [(g.lm, g) for g in basis]
    while heap:
        _, m = heapq.heappop(heap)
        c = rem.pop(m, None)
        if c is None:
            continue
        for lm, g in lms:
            if mono.divides(lm, m):
                q = mono.div(m, lm)
                factor = c / g.terms[lm]
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    t = mono.mul(gm, q)
                    v = rem.get(t)
                    if v is None:
                        rem[t] = -factor * gc
                        heapq.heappush(heap, (_neg_key(t), t))
                    else:
                        v = v - factor * gc
                        if v:
                            rem[t] = v
                        else:
                            del rem[t]
                break
        else:
            out[m] = c
            if not full:
                out.update(rem)
                break
    return Polynomial._raw(n, out)


def _neg_key(m: Monomial):
    return (-sum(m), tuple(reversed(m)))


def normal_form(f: Polynomial, G) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo a basis (any division order)."""
    basis = list(G.basis if isinstance(G, GroebnerBasis) else G)
    for g in basis:
        if g.n != f.n:
            raise ValueError("variable counts differ")
    return _reduce(f, [g for g in basis if g])


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    L = mono.lcm(f.lm, g.lm)
    a = f.mul_term(mono.div(L, f.lm), 1 / f.lc)
    b = g.mul_term(mono.div(L, g.lm), 1 / g.lc)
    return a - b


def _pair_key(G, p):
    i, j = p
    L = mono.lcm(G[i].lm, G[j].lm)
    return (sum(L), mono.revlex_key(L), i, j)


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _update(G, active: list[int], P: set, k: int):
    """Gebauer-Moeller update after appending ``G[k]``."""
    h = G[k].lm
    C = [(i, mono.lcm(G[i].lm, h)) for i in active]
    D = []
    while C:
        i, L = C.pop()
        if _coprime(G[i].lm, h) or not any(mono.divides(L2, L) for _, L2 in C + D):
            D.append((i, L))
    E = {(i, k) for i, L in D if not _coprime(G[i].lm, h)}
    keep = set()
    for i, j in P:
        L = mono.lcm(G[i].lm, G[j].lm)
        if (mono.divides(h, L)
                and mono.lcm(G[i].lm, h) != L
                and mono.lcm(G[j].lm, h) != L):
            continue
        keep.add((i, j))
    new_active = [i for i in active if not mono.divides(h, G[i].lm)]
    new_active.append(k)
    return new_active, keep | E


def buchberger(gens: Sequence[Polynomial]) -> GroebnerBasis:
    """Reduced Groebner basis, normal selection strategy.

    Pairs are taken by lowest lcm degree, ties broken by revlex on the lcm
    and then by index, so the run is deterministic for a fixed input order.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    n = gens[0].n
    G: list[Polynomial] = []
    active: list[int] = []
    P: set = set()
    for f in gens:
        r = _reduce(f, [G[i] for i in active])
        if r:
            G.append(r.monic())
            active, P = _update(G, active, P, len(G) - 1)
    while P:
        p = min(P, key=lambda q: _pair_key(G, q))
        P.discard(p)
        s = spoly(G[p[0]], G[p[1]])
        r = _reduce(s, [G[i] for i in active])
        if r:
            G.append(r.monic())
            active, P = _update(G, active, P, len(G) - 1)
    return _interreduce(n, [G[i] for i in active])


def _interreduce(n: int, basis: list[Polynomial]) -> GroebnerBasis:
    basis = [g for g in basis if not any(
        h is not g and mono.divides(h.lm, g.lm) and (h.lm != g.lm or id(h) < id(g))
        for h in basis)]
    out = []
    for g in basis:
        others = [h for h in basis if h is not g]
        head = Polynomial._raw(n, {g.lm: g.lc})
        tail = Polynomial._raw(n, {m: c for m, c in g.terms.items() if m != g.lm})
        out.append((head + _reduce(tail, others)).monic())
    out.sort(key=lambda g: mono.revlex_key(g.lm), reverse=True)
    return GroebnerBasis(n, tuple(out))


def initial_ideal(G: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(G.n, tuple(g.lm for g in G.basis))


def _det(rows: list[list[int]]) -> QQ:
    a = [[QQ(x) for x in r] for r in rows]
    n = len(a)
    det = QQ(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return QQ(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / a[c][c]
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


@dataclass(frozen=True)
class CoordinateChange:
    """Invertible integer matrix acting by ``x_i -> sum_j m[i][j] x_j``."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if any(len(r) != len(m) for r in m):
            raise ValueError("matrix must be square")
        if _det([list(r) for r in m]) == 0:
            raise ValueError("coordinate change must be invertible")
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, n: int) -> "CoordinateChange":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def random(cls, n: int, rng: random.Random, bound: int = DEFAULT_ENTRY_BOUND) -> "CoordinateChange":
        """Entries uniform in ``[-bound, bound]``, resampled until invertible."""
        while True:
            rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
            if _det(rows) != 0:
                return cls(tuple(tuple(r) for r in rows))

    def images(self) -> list[Polynomial]:
        n = self.n
        return [Polynomial(n, {mono.var(j + 1, n): c for j, c in enumerate(row) if c})
                for row in self.matrix]


def apply_change(gens: Sequence[Polynomial], g: CoordinateChange) -> list[Polynomial]:
    for f in gens:
        if f.n != g.n:
            raise ValueError(f"polynomial in {f.n} variables, matrix is {g.n}x{g.n}")
    imgs = g.images()
    return [f.substitute(imgs) for f in gens]


def require_homogeneous(gens: Sequence[Polynomial]):
    for f in gens:
        if not f.is_homogeneous():
            raise NotHomogeneous(f"generator {f!r} is not homogeneous")


def gin(gens: Sequence[Polynomial], trials: int = DEFAULT_TRIALS, seed: int = 0,
        entry_bound: int = DEFAULT_ENTRY_BOUND) -> MonomialIdeal:
    """Generic initial ideal (graded revlex) by agreement of random trials.

    Each trial draws a matrix from ``random.Random(seed)`` (Mersenne Twister,
    so the stream is reproducible across platforms) and computes
    ``in(g I)``.  All trials must agree.
    """
    if trials < 2:
        raise ValueError("gin needs at least two trials")
    gens = [f for f in gens if f]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    require_homogeneous(gens)
    n = gens[0].n
    rng = random.Random(seed)
    results = []
    for k in range(trials):
        g = CoordinateChange.random(n, rng, entry_bound)
        results.append(initial_ideal(buchberger(apply_change(gens, g))))
        log.debug("gin trial %d: %d generators", k, len(results[-1]))
    first = results[0]
    for other in results[1:]:
        if other != first:
            raise TrialsDisagree(
                f"{trials} random coordinate changes (entry bound {entry_bound}) "
                "gave different initial ideals; raise --entry-bound or --trials")
    if not first.is_strongly_stable():
        raise StabilityCheckFailed(f"agreeing trials produced a non strongly stable ideal {first.gens}")
    return first


def in_ideal(f: Polynomial, G: GroebnerBasis) -> bool:
    return not normal_form(f, G)
