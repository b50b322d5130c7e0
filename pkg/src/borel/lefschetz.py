"""Weak/strong Lefschetz and strong Stanley properties.

Every property is decided three ways: from the f-index of the (strongly
stable) ideal, from its Betti table (WLP only), and by counting ranks of
multiplication by powers of ``x_n`` on standard monomials.  For a
Borel-fixed ideal ``x_n`` is a Lefschetz element whenever one exists, so
no generic linear form is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from . import monomials as mono
from .errors import InternalError, NotArtinian, NotStable, StrictlyIncreasing
from .invariants import (BettiTable, FIndex, HilbertFunction, ek_betti, f_index,
                         hilbert_function, reduction_number)
from .monomials import Monomial, MonomialIdeal

WLP, SLP, SSP = "WLP", "SLP", "SSP"


@dataclass(frozen=True)
class Witness:
    """One failed inequality.

    For criteria ``tuple`` is the offending ``alpha`` in ``J_{n-1}`` and
    ``f_value`` is ``f_n(alpha)``.  For the rank oracle ``tuple`` is
    ``(degree, power)`` and ``f_value`` the observed rank.
    """

    tuple: tuple
    f_value: int
    required: int
    condition: str

    def to_json(self) -> dict:
        return {"tuple": list(self.tuple), "f_value": self.f_value,
                "required": self.required, "condition": self.condition}


@dataclass(frozen=True)
class LefschetzReport:
    property: str
    verdict: bool
    method: str
    r1: int
    t: int
    witnesses: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not self.verdict and not self.witnesses:
            raise ValueError("a negative verdict needs at least one witness")

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        return {"property": self.property, "verdict": self.verdict, "method": self.method,
                "r1": self.r1, "t": self.t,
                "witnesses": [w.to_json() for w in self.witnesses]}


def _require_stable_artinian(I: MonomialIdeal):
    if not I.is_strongly_stable():
        g, h = I.first_stability_violation()
        raise NotStable(f"{g} moves to {h}, which is not in the ideal; take gin first")
    if not I.is_artinian():
        raise NotArtinian("Lefschetz properties need an Artinian quotient")


def first_reduction_number(I: MonomialIdeal) -> int:
    # one variable: R/(I + general linear form) = k, so r_1 = 0
    return reduction_number(I, 1) if I.n >= 2 else 0


class _Ranks:
    """Cached standard monomials of ``R/I`` for repeated rank counts."""

    def __init__(self, I: MonomialIdeal):
        self.I = I
        self.H = hilbert_function(I)
        self._std = lru_cache(maxsize=None)(I.standard_monomials)

    def mult_rank(self, d: int, i: int) -> int:
        n = self.I.n
        xi = mono.var(n, n, i)
        return sum(1 for T in self._std(d) if not self.I.contains(mono.mul(T, xi)))


def mult_rank(I: MonomialIdeal, d: int, i: int) -> int:
    """Rank of ``x_n^i : (R/I)_d -> (R/I)_{d+i}``.

    Distinct standard monomials go to distinct monomials, so the rank is the
    number of degree-``d`` standard monomials whose image stays standard.
    """
    xi = mono.var(I.n, I.n, i)
    return sum(1 for T in I.standard_monomials(d) if not I.contains(mono.mul(T, xi)))


def _oracle(I: MonomialIdeal, powers) -> tuple[list[Witness], int, int]:
    R = _Ranks(I)
    H = R.H
    t = H.socle_degree
    bad = []
    for i in powers(t):
        for d in range(t + 1):
            want = min(H[d], H[d + i])
            got = R.mult_rank(d, i)
            if got != want:
                bad.append(Witness((d, i), got, want, "maximal rank"))
    return bad, first_reduction_number(I), t


def wlp_oracle(I: MonomialIdeal) -> LefschetzReport:
    _require_stable_artinian(I)
    bad, r1, t = _oracle(I, lambda t: [1])
    return LefschetzReport(WLP, not bad, "oracle", r1, t, tuple(bad))


def slp_oracle(I: MonomialIdeal) -> LefschetzReport:
    """Maximal rank of ``x_n^i`` for ``1 <= i <= t``; larger powers hit zero targets."""
    _require_stable_artinian(I)
    bad, r1, t = _oracle(I, lambda t: range(1, t + 1))
    return LefschetzReport(SLP, not bad, "oracle", r1, t, tuple(bad))


def ssp_oracle(I: MonomialIdeal) -> LefschetzReport:
    """``x_n^{t-2i} : A_i -> A_{t-i}`` bijective for ``0 <= i <= t/2``."""
    _require_stable_artinian(I)
    R = _Ranks(I)
    H = R.H
    t = H.socle_degree
    bad = []
    for i in range(t // 2 + 1):
        got = R.mult_rank(i, t - 2 * i)
        if not got == H[i] == H[t - i]:
            need = H[i] if got != H[i] else H[t - i]
            bad.append(Witness((i, t - 2 * i), got, need, "bijective"))
    return LefschetzReport(SSP, not bad, "oracle", first_reduction_number(I), t, tuple(bad))


def wlp_criterion(F: FIndex, r1: int, t: int = -1) -> LefschetzReport:
    """``|alpha| + f_n(alpha) >= r_1 + 1`` on ``J_{n-1}``."""
    bad = []
    for alpha in F.last():
        deg = sum(alpha) + F.f[alpha]
        if deg < r1 + 1:
            bad.append(Witness(alpha, F.f[alpha], r1 + 1 - sum(alpha), "degree >= r1 + 1"))
    return LefschetzReport(WLP, not bad, "criterion", r1, t, tuple(bad))


def slp_criterion(F: FIndex, r1: int, t: int = -1) -> LefschetzReport:
    """The WLP inequality plus ``f_n(alpha) >= f_n(0,...,0,|alpha|+1) + 1``.

    ``f_n`` is taken to be 0 off ``J_{n-1}``.
    """
    bad = list(wlp_criterion(F, r1, t).witnesses)
    for alpha in F.last():
        s = sum(alpha)
        top = (0,) * (F.n - 2) + (s + 1,)
        need = F.fn(top) + 1
        if F.f[alpha] < need:
            bad.append(Witness(alpha, F.f[alpha], need, "f_n(alpha) >= f_n(0,..,0,|alpha|+1) + 1"))
    return LefschetzReport(SLP, not bad, "criterion", r1, t, tuple(bad))


def ssp_criterion(F: FIndex, t: int, r1: int = -1) -> LefschetzReport:
    """``f_n(alpha) = t - 2|alpha| + 1`` on all of ``J_{n-1}``."""
    bad = []
    for alpha in F.last():
        need = t - 2 * sum(alpha) + 1
        if F.f[alpha] != need:
            bad.append(Witness(alpha, F.f[alpha], need, "f_n(alpha) = t - 2|alpha| + 1"))
    return LefschetzReport(SSP, not bad, "criterion", r1, t, tuple(bad))


def wlp_betti_criterion(B: BettiTable, n: int | None = None) -> bool:
    """``beta_{n-1,n-1+j} = beta_{0,j}`` for all ``j > d``, ``d`` the first
    ``j`` with ``beta_{n-1,n-1+j} > 0``.

    The stronger form ``beta_{i,i+j} = C(n-1,i) beta_{0,j}`` is evaluated as
    well and must give the same answer.
    """
    n = B.n if n is None else n
    top = n - 1
    js = [i - top for (q, i) in B.entries if q == top]
    if not js:
        raise NotArtinian("no generator divisible by x_n in this Betti table")
    d = min(js)
    span = range(d + 1, B.max_degree() + 1)
    cond2 = all(B.get(top, top + j) == B.get(0, j) for j in span)
    cond3 = all(B.get(i, i + j) == comb(top, i) * B.get(0, j) for j in span for i in range(n))
    if cond2 != cond3:
        raise InternalError(f"Betti WLP conditions disagree ({cond2} vs {cond3}) on {B.entries}")
    return cond2


def wlp_betti_report(B: BettiTable, r1: int, t: int) -> LefschetzReport:
    ok = wlp_betti_criterion(B)
    wit = ()
    if not ok:
        top = B.n - 1
        d = min(i - top for (q, i) in B.entries if q == top)
        j = next(j for j in range(d + 1, B.max_degree() + 1) if B.get(top, top + j) != B.get(0, j))
        wit = (Witness((j,), B.get(top, top + j), B.get(0, j), "beta_{n-1,n-1+j} = beta_{0,j} for j > d"),)
    return LefschetzReport(WLP, ok, "betti", r1, t, wit)


def r1_from_hf_wlp(H: HilbertFunction) -> int:
    """``r_1 = min { d : H(d-1) >= H(d) } - 1``, valid under WLP."""
    for d in range(1, H.socle_degree + 2):
        if H[d - 1] >= H[d]:
            return d - 1
    raise StrictlyIncreasing(f"Hilbert function {H.values} never stops increasing")


def betti_from_hf_wlp(H: HilbertFunction, r1: int, n: int) -> dict:
    """Betti numbers of gin forced by the Hilbert function under WLP.

    Returns ``{(q, i): value}`` including the forced zeros:
    ``beta_{n-1,n-1+d}`` for every ``d`` and ``beta_{i,i+d}`` for
    ``d >= r_1 + 2``.
    """
    out = {}
    top = H.socle_degree + 1
    for d in range(0, top + 1):
        out[(n - 1, n - 1 + d)] = 0 if d <= r1 else H[d - 1] - H[d]
    for d in range(r1 + 2, top + 1):
        drop = H[d - 1] - H[d]
        for i in range(n):
            out[(i, i + d)] = comb(n - 1, i) * drop
    return out


def ssp_flag(r1: int, t: int, n: int) -> set[Monomial]:
    """``x_{n-1}^{r1+1}`` and ``x_{n-1}^i x_n^{t-2i+1}`` for ``0 <= i <= r1``."""
    if n < 2:
        raise ValueError("the flag needs at least two variables")
    flag = {mono.var(n - 1, n, r1 + 1)}
    for i in range(r1 + 1):
        m = [0] * n
        m[n - 2] = i
        m[n - 1] = t - 2 * i + 1
        flag.add(tuple(m))
    return flag


def ssp_via_slp_symmetry(I: MonomialIdeal) -> bool:
    return slp_oracle(I).verdict and hilbert_function(I).is_symmetric()


def analyze(I: MonomialIdeal, properties=(WLP, SLP, SSP), methods=("criterion", "betti", "oracle")):
    """All requested reports for a strongly stable Artinian ideal."""
    _require_stable_artinian(I)
    F = f_index(I)
    r1 = first_reduction_number(I)
    t = hilbert_function(I).socle_degree
    reports = []
    for prop in properties:
        for method in methods:
            if method == "criterion":
                fn = {WLP: wlp_criterion, SLP: slp_criterion}.get(prop)
                rep = fn(F, r1, t) if fn else ssp_criterion(F, t, r1)
            elif method == "oracle":
                rep = {WLP: wlp_oracle, SLP: slp_oracle, SSP: ssp_oracle}[prop](I)
            elif method == "betti":
                if prop != WLP:
                    continue
                rep = wlp_betti_report(ek_betti(I), r1, t)
            else:
                raise ValueError(f"unknown method {method!r}")
            reports.append(rep)
    return reports
