"""Hilbert functions, Betti tables, reduction numbers and the f-index.

Betti numbers are always those of the ideal ``I`` itself, so
``beta[q, i] = dim Tor_q(I, k)_i``.  ``BettiTable.to_quotient`` shifts to the
``R/I`` convention when needed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence, Union

from . import monomials as mono
from .errors import (DegreeBoundTooSmall, NoPurePower, NotArtinian, NotStable)
from .groebner import (DEFAULT_ENTRY_BOUND, buchberger, initial_ideal, normal_form,
                       require_homogeneous)
from .linalg import rank
from .monomials import Monomial, MonomialIdeal
from .polynomials import Polynomial

DEFAULT_DEGREE_BOUND = 100


@dataclass(frozen=True)
class HilbertFunction:
    """``H(0), ..., H(t)``; values past the socle degree ``t`` are zero."""

    values: tuple[int, ...]

    def __post_init__(self):
        v = tuple(int(x) for x in self.values)
        while v and v[-1] == 0:
            v = v[:-1]
        if any(x < 0 for x in v):
            raise ValueError(f"negative Hilbert function value in {v}")
        object.__setattr__(self, "values", v)

    def __getitem__(self, d: int) -> int:
        if d < 0 or d >= len(self.values):
            return 0
        return self.values[d]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def to_json(self) -> list[int]:
        return list(self.values)

    @classmethod
    def from_json(cls, data) -> "HilbertFunction":
        return cls(tuple(data))


def socle_degree(H: HilbertFunction) -> int:
    return H.socle_degree


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta[q, i]`` of an ideal; zeros are not stored."""

    n: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (q, i), v in self.entries.items():
            v = int(v)
            if v < 0:
                raise ValueError(f"negative Betti number at {(q, i)}")
            if v:
                clean[(int(q), int(i))] = v
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def get(self, q: int, i: int) -> int:
        return self.entries.get((q, i), 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    __hash__ = None

    def degrees(self) -> list[int]:
        return sorted({i for _, i in self.entries})

    def max_degree(self) -> int:
        return max((i for _, i in self.entries), default=0)

    def to_json(self) -> dict:
        return {f"{q},{i}": v for (q, i), v in sorted(self.entries.items())}

    @classmethod
    def from_json(cls, data: dict, n: int) -> "BettiTable":
        entries = {}
        for k, v in data.items():
            q, i = (int(x) for x in k.split(","))
            entries[(q, i)] = v
        return cls(n, entries)

    def to_quotient(self) -> dict:
        """Entries re-indexed for ``R/I``: ``beta_{q+1,i}(R/I) = beta_{q,i}(I)``."""
        out = {(0, 0): 1}
        out.update({(q + 1, i): v for (q, i), v in self.entries.items()})
        return out

    @classmethod
    def from_quotient(cls, entries: dict, n: int) -> "BettiTable":
        return cls(n, {(q - 1, i): v for (q, i), v in entries.items() if q >= 1})

    def diagram(self) -> str:
        """Macaulay-style text table: row ``i - q``, column ``q``."""
        if not self.entries:
            return "(zero table)"
        cols = range(self.n)
        rows = sorted({i - q for q, i in self.entries})
        width = max(len(str(v)) for v in self.entries.values())
        width = max(width, len(str(max(sum(self.get(q, r + q) for r in rows) for q in cols))))
        lines = ["       " + " ".join(f"{q:>{width}}" for q in cols)]
        totals = [sum(v for (q2, _), v in self.entries.items() if q2 == q) for q in cols]
        lines.append("total: " + " ".join(f"{t:>{width}}" for t in totals))
        for r in rows:
            cells = []
            for q in cols:
                v = self.get(q, r + q)
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{r:>5}: " + " ".join(cells))
        return "\n".join(lines)


def hilbert_function(I: MonomialIdeal, degree_bound: int = DEFAULT_DEGREE_BOUND) -> HilbertFunction:
    """``d -> dim_k (R/I)_d`` up to the socle degree."""
    vals = []
    for d in range(degree_bound + 1):
        h = len(I.standard_monomials(d))
        if h == 0:
            return HilbertFunction(tuple(vals))
        vals.append(h)
    raise NotArtinian(f"R/I still nonzero in degree {degree_bound}")


def hilbert_function_of(gens: Sequence[Polynomial], degree_bound: int = DEFAULT_DEGREE_BOUND) -> HilbertFunction:
    """Hilbert function of ``R/(gens)`` through the revlex initial ideal."""
    return hilbert_function(initial_ideal(buchberger(gens)), degree_bound)


def hilbert_value_by_rank(gens: Sequence[Polynomial], d: int) -> int:
    """``dim_k (R/I)_d`` as ``#monomials - rank`` of the degree-``d`` part of ``I``.

    Independent of Groebner bases: spans ``{m * f}`` directly.
    """
    require_homogeneous(gens)
    n = gens[0].n
    rows = []
    for f in gens:
        e = f.degree()
        if e <= d:
            for m in mono.monomials_of_degree(n, d - e):
                rows.append({mono.revlex_key(k): c for k, c in f.mul_term(m, 1).terms.items()})
    return comb(n - 1 + d, d) - rank(rows)


def is_artinian(I: MonomialIdeal) -> bool:
    return I.is_artinian()


def ek_betti(I: MonomialIdeal) -> BettiTable:
    """Eliahou-Kervaire: ``beta[q, i] = sum over gens T of degree i-q of C(max T - 1, q)``."""
    if not I.is_stable():
        g, h = I.first_stability_violation(strong=False)
        raise NotStable(f"{g} moves to {h}, which is not in the ideal")
    entries: dict = {}
    for T in I.gens:
        k = mono.maxvar(T)
        for q in range(max(k, 1)):
            c = comb(k - 1, q) if k else int(q == 0)
            if c:
                key = (q, sum(T) + q)
                entries[key] = entries.get(key, 0) + c
    return BettiTable(I.n, entries)


class _Quotient:
    """Graded pieces of ``R/I`` with multiplication by variables."""

    def __init__(self, ideal: Union[MonomialIdeal, Sequence[Polynomial]]):
        if isinstance(ideal, MonomialIdeal):
            self.n = ideal.n
            self.lead = ideal
            self.gb = None
        else:
            gens = list(ideal)
            require_homogeneous(gens)
            self.n = gens[0].n
            self.gb = buchberger(gens)
            self.lead = initial_ideal(self.gb)
        self._basis: dict[int, list[Monomial]] = {}

    def basis(self, d: int) -> list[Monomial]:
        if d not in self._basis:
            self._basis[d] = self.lead.standard_monomials(d)
        return self._basis[d]

    def times_var(self, m: Monomial, j: int) -> dict:
        """Coordinates of ``x_j * m`` in the standard basis one degree up."""
        t = mono.mul(m, mono.var(j, self.n))
        if self.gb is None:
            return {} if self.lead.contains(t) else {t: 1}
        return dict(normal_form(Polynomial.from_monomial(t), self.gb).terms)


def koszul_betti(ideal: Union[MonomialIdeal, Sequence[Polynomial]], degree_bound: int) -> BettiTable:
    """Betti table of ``I`` from Koszul homology of ``R/I`` (exact linear algebra).

    ``Tor_q(R/I, k)_d`` is the homology of ``wedge^q k^n (x) (R/I)_{d-q}``
    and ``Tor_q(I) = Tor_{q+1}(R/I)``.  Only intended for tiny inputs.
    """
    A = _Quotient(ideal)
    n = A.n
    if not A.lead.is_artinian():
        raise NotArtinian("koszul_betti needs an Artinian ideal")
    socle = hilbert_function(A.lead).socle_degree
    if degree_bound < socle + n:
        raise DegreeBoundTooSmall(f"degree bound {degree_bound} < socle {socle} + n {n}")
    subsets = {q: list(combinations(range(1, n + 1), q)) for q in range(n + 1)}

    def boundary_rank(q: int, d: int) -> int:
        # d_q : wedge^q (x) A_{d-q} -> wedge^{q-1} (x) A_{d-q+1}
        if q == 0 or q > n:
            return 0
        rows = []
        for S in subsets[q]:
            for m in A.basis(d - q):
                row: dict = {}
                for pos, j in enumerate(S):
                    sign = -1 if pos % 2 else 1
                    rest = S[:pos] + S[pos + 1:]
                    for t, c in A.times_var(m, j).items():
                        key = (rest, t)
                        row[key] = row.get(key, 0) + sign * c
                rows.append(row)
        return rank(rows)

    entries = {}
    for d in range(degree_bound + 1):
        ranks = [boundary_rank(q, d) for q in range(n + 2)]
        for q in range(1, n + 1):
            dim = len(subsets[q]) * len(A.basis(d - q))
            tor = dim - ranks[q] - ranks[q + 1]
            if tor:
                entries[(q - 1, d)] = tor
    return BettiTable(n, entries)


def hilbert_from_betti(B: BettiTable) -> HilbertFunction:
    """Hilbert function of ``R/I`` from the Betti table of ``I``."""
    n = B.n
    top = B.max_degree() + 1
    vals = []
    for d in range(top + 1):
        h = comb(n - 1 + d, n - 1)
        for (q, i), v in B.entries.items():
            if i <= d:
                h -= (-1) ** q * v * comb(n - 1 + d - i, n - 1)
        vals.append(h)
    if any(h < 0 for h in vals) or vals[-1] != 0:
        raise NotArtinian(f"Betti table does not describe an Artinian quotient: {vals}")
    return HilbertFunction(tuple(vals))


def reduction_number(I: MonomialIdeal, i: int) -> int:
    """``r_i = min { t : x_{n-i}^{t+1} in I }`` for a revlex gin ``I``."""
    if not 0 <= i <= I.n - 1:
        raise ValueError(f"reduction number index {i} outside 0..{I.n - 1}")
    p = I.pure_power(I.n - i)
    if p is None:
        raise NoPurePower(f"no power of x_{I.n - i} lies in the ideal")
    return p - 1


def reduction_number_direct(gens: Sequence[Polynomial], i: int, seed: int = 0,
                            entry_bound: int = DEFAULT_ENTRY_BOUND,
                            degree_bound: int = DEFAULT_DEGREE_BOUND) -> int:
    """``r_i`` from its definition: adjoin ``i`` random linear forms.

    Returns the least ``t`` with ``(R / (I + L_1..L_i))_{t+1} = 0``.
    """
    gens = [f for f in gens if f]
    require_homogeneous(gens)
    n = gens[0].n
    if not 0 <= i <= n:
        raise ValueError(f"reduction number index {i} outside 0..{n}")
    rng = random.Random(seed)
    forms = []
    for _ in range(i):
        coeffs = [0] * n
        while not any(coeffs):
            coeffs = [rng.randint(-entry_bound, entry_bound) for _ in range(n)]
        forms.append(Polynomial(n, {mono.var(j + 1, n): c for j, c in enumerate(coeffs) if c}))
    H = hilbert_function(initial_ideal(buchberger(gens + forms)), degree_bound)
    return H.socle_degree


@dataclass(frozen=True)
class FIndex:
    """``f_1`` and the functions ``f_i`` on the index sets ``J_{i-1}``.

    ``f`` maps a tuple ``alpha`` of length ``i-1`` to ``f_i(alpha)``;
    ``J[k]`` is the tuple of members of ``J_k`` (``J[0]`` is unused).
    """

    n: int
    f1: int
    f: dict
    J: tuple

    def value(self, alpha: tuple) -> int | None:
        """``f_{len(alpha)+1}(alpha)``, or None off the index set."""
        if not alpha:
            return self.f1
        return self.f.get(tuple(alpha))

    def last(self) -> tuple:
        """Members of ``J_{n-1}``; empty when ``n == 1``."""
        return self.J[self.n - 1] if self.n >= 2 else ()

    def fn(self, alpha: tuple) -> int:
        """``f_n`` with the convention ``f_n = 0`` off ``J_{n-1}``."""
        return self.f.get(tuple(alpha), 0)

    def check_invariants(self) -> list[str]:
        """Violations of the structural lemmas (empty when all hold)."""
        problems = []
        n = self.n
        for k in range(1, n):
            for alpha in self.J[k]:
                v = self.f.get(alpha)
                if v is None or not 0 < v:
                    problems.append(f"f_{k + 1}{alpha} = {v} is not a positive integer")
                    continue
                for j, a in enumerate(alpha):
                    if a >= 1:
                        lower = alpha[:j] + (a - 1,) + alpha[j + 1:]
                        if self.f.get(lower) is None or v > self.f[lower] - 1:
                            problems.append(f"f_{k + 1}{alpha} = {v} not below f_{k + 1}{lower} - 1")
                        for t in range(j + 1, k):
                            moved = list(alpha)
                            moved[j] -= 1
                            moved[t] += 1
                            moved = tuple(moved)
                            if moved in self.f and v > self.f[moved]:
                                problems.append(f"Borel monotonicity fails at {alpha} -> {moved}")
                if sum(alpha) > _first_value(self, k) - 1:
                    problems.append(f"|alpha| too large for {alpha} in J_{k}")
        return problems


def _first_value(F: FIndex, k: int) -> int:
    # f_k(0, ..., 0), which bounds |alpha| on J_k
    return F.f1 if k == 1 else F.f[(0,) * (k - 1)]


def f_index(I: MonomialIdeal, check: bool = True) -> FIndex:
    """f-index of a strongly stable Artinian ideal.

    ``check=False`` skips the stability test and just evaluates the
    defining minima; the result then need not describe ``G(I)``.
    """
    if check and not I.is_strongly_stable():
        g, h = I.first_stability_violation()
        raise NotStable(f"{g} moves to {h}, which is not in the ideal")
    if not I.is_artinian():
        raise NotArtinian("f_index needs an Artinian ideal")
    n = I.n

    def first_power(alpha: tuple, i: int) -> int:
        t = 0
        base = list(alpha) + [0] * (n - len(alpha))
        while True:
            base[i - 1] = t
            if I.contains(tuple(base)):
                return t
            t += 1

    f1 = first_power((), 1)
    J: list = [()] * n
    f: dict = {}
    if n >= 2:
        J[1] = tuple((a,) for a in range(f1))
        for i in range(2, n + 1):
            for alpha in J[i - 1]:
                f[alpha] = first_power(alpha, i)
            if i < n:
                J[i] = tuple(alpha + (b,) for alpha in J[i - 1] for b in range(f[alpha]))
    return FIndex(n, f1, f, tuple(J))


def generators_from_f(F: FIndex) -> MonomialIdeal:
    n = F.n
    gens = [mono.var(1, n, F.f1)]
    for alpha, v in F.f.items():
        gens.append(tuple(alpha) + (v,) + (0,) * (n - len(alpha) - 1))
    return MonomialIdeal(n, tuple(gens))


def max_n_generator_count(I: MonomialIdeal, d: int) -> int:
    """Number of minimal generators of degree ``d`` divisible by ``x_n``."""
    return sum(1 for g in I.gens if sum(g) == d and mono.maxvar(g) == I.n)
