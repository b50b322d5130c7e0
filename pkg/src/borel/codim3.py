"""Reconstructing gin(I) in three variables from Betti numbers or the Hilbert function.

All procedures assume the relevant Lefschetz property (WLP, SLP or SSP) as
an attested precondition.  Each one validates its own output and raises
rather than return an ideal that does not reproduce the input data.
"""

from __future__ import annotations

from dataclasses import dataclass

from typing import Mapping

from . import monomials as mono
from .errors import (AsymmetricHilbert, InconsistentInput, InconsistentTable, StabilityViolated,
                     SumMismatch)
from .invariants import (BettiTable, HilbertFunction, ek_betti, f_index,
                         generators_from_f, hilbert_from_betti, hilbert_function)
from .lefschetz import betti_from_hf_wlp, r1_from_hf_wlp, ssp_criterion, ssp_flag
from .monomials import MonomialIdeal

N = 3
WLP_BETTI, SLP_BETTI, SSP_HILBERT = "wlp-betti", "slp-betti", "ssp-hilbert"
MODES = (WLP_BETTI, SLP_BETTI, SSP_HILBERT)


@dataclass(frozen=True)
class ReconstructionInput:
    """What a reconstruction consumes; the Lefschetz property is attested by the caller."""

    mode: str
    hilbert: HilbertFunction | None = None
    betti: BettiTable | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise InconsistentInput(f"unknown mode {self.mode!r}")
        if self.betti is not None:
            if self.betti.n != N:
                raise InconsistentInput("reconstruction is only defined for three variables")
            HB = hilbert_from_betti(self.betti)
            if self.hilbert is None:
                object.__setattr__(self, "hilbert", HB)
            elif HB != self.hilbert:
                raise InconsistentInput(f"Betti table gives Hilbert function {HB.values}, not {self.hilbert.values}")
        elif self.mode != SSP_HILBERT:
            raise InconsistentInput(f"mode {self.mode} needs a Betti table")
        if self.hilbert is None:
            raise InconsistentInput("no Hilbert function given")

    @property
    def initial_degree(self) -> int:
        return _initial_degree(self.betti)


def reconstruct(inp: ReconstructionInput):
    """Dispatch on the mode: a Betti table for wlp-betti, an ideal otherwise."""
    if inp.mode == WLP_BETTI:
        return betti_gin_from_betti_I(inp.betti, inp.hilbert)
    if inp.mode == SLP_BETTI:
        return reconstruct_gin_slp(inp.betti, inp.hilbert)
    return reconstruct_gin_ssp(inp.hilbert)


def _initial_degree(B: BettiTable) -> int:
    degs = [i for (q, i) in B.entries if q == 0]
    if not degs:
        raise InconsistentTable("Betti table has no generators")
    return min(degs)


def betti_gin_from_betti_I(B_I: BettiTable, H: HilbertFunction | None = None) -> BettiTable:
    """Betti table of gin(I) from that of I, for ``R/I`` with WLP in three variables.

    Column 2 and everything from degree ``r_1 + 2`` on follows from the
    Hilbert function; the rest by downward induction on the degree using
    ``beta_{1,i+1}(gin) = beta_{0,i+1}(gin) + beta_{1,i+1}(I) - beta_{0,i+1}(I)``
    (valid for ``i <= r_1 + 1``) and
    ``beta_{0,i}(gin) = beta_{1,i+1}(gin) - beta_{2,i+2}(gin) + [i == a]``.
    """
    if B_I.n != N:
        raise InconsistentInput("only three variables are supported")
    HB = hilbert_from_betti(B_I)
    if H is None:
        H = HB
    elif HB != H:
        raise InconsistentInput(f"Betti table gives Hilbert function {HB.values}, not {H.values}")
    r1 = r1_from_hf_wlp(H)
    a = _initial_degree(B_I)
    gin_b = dict(betti_from_hf_wlp(H, r1, N))
    for i in range(r1 + 1, 0, -1):
        b1 = gin_b.get((0, i + 1), 0) + B_I.get(1, i + 1) - B_I.get(0, i + 1)
        gin_b[(1, i + 1)] = b1
        b0 = b1 - gin_b.get((2, i + 2), 0) + (1 if i == a else 0)
        gin_b[(0, i)] = b0
    bad = {k: v for k, v in gin_b.items() if v < 0}
    if bad:
        raise InconsistentInput(f"recursion produced negative Betti numbers {bad}")
    return BettiTable(N, gin_b)


def recover_sequence(beta_counts: Mapping[int, int], domain_size: int) -> tuple[int, ...]:
    """The unique non-decreasing sequence with the given value multiplicities."""
    if any(c < 0 for c in beta_counts.values()):
        raise SumMismatch(f"negative multiplicity in {dict(beta_counts)}")
    total = sum(beta_counts.values())
    if total != domain_size:
        raise SumMismatch(f"multiplicities sum to {total}, expected {domain_size}")
    out = []
    for d in sorted(beta_counts):
        out.extend([d] * beta_counts[d])
    return tuple(out)


def reconstruct_max2_generators(B_gin: BettiTable, r1: int) -> tuple[int, dict]:
    """``f_1`` and ``f_2`` of gin(I) from its Betti table under WLP.

    Generators with ``max(T) <= 2`` and degree ``i`` number
    ``beta_{0,i} - beta_{2,i+2}``; under WLP they all sit in degrees
    ``<= r_1 + 1``.  Removing ``x_1^a``, the degrees ``j + f_2(j)`` for
    ``j = a-1, ..., 0`` form a non-decreasing sequence ending at
    ``f_2(0) = r_1 + 1``.
    """
    a = _initial_degree(B_gin)
    counts = {}
    for i in range(a, r1 + 2):
        c = B_gin.get(0, i) - B_gin.get(2, i + 2)
        if c < 0:
            raise InconsistentTable(f"more x_3-generators than generators in degree {i}")
        if c:
            counts[i] = c
    counts[a] = counts.get(a, 0) - 1
    if counts[a] < 0:
        raise InconsistentTable(f"no room for x_1^{a} in degree {a}")
    try:
        seq = recover_sequence(counts, a)
    except SumMismatch as e:
        raise InconsistentTable(str(e)) from None
    f2 = {j: seq[a - 1 - j] - j for j in range(a)}
    if a and f2[0] != r1 + 1:
        raise InconsistentTable(f"f_2(0) = {f2[0]} but r_1 + 1 = {r1 + 1}")
    if any(v < 1 for v in f2.values()):
        raise InconsistentTable(f"non-positive f_2 values {f2}")
    return a, f2


def _validate(I: MonomialIdeal, H: HilbertFunction, B_gin: BettiTable | None = None) -> MonomialIdeal:
    if not I.is_strongly_stable():
        g, h = I.first_stability_violation()
        raise StabilityViolated(f"reconstructed ideal is not strongly stable: {g} -> {h}")
    F = f_index(I)
    problems = F.check_invariants()
    if problems:
        raise StabilityViolated("; ".join(problems))
    if generators_from_f(F) != I:
        raise StabilityViolated("f-index round trip failed")
    if hilbert_function(I) != H:
        raise StabilityViolated(f"reconstructed ideal has Hilbert function {hilbert_function(I).values}")
    if B_gin is not None and ek_betti(I) != B_gin:
        raise StabilityViolated("reconstructed ideal does not have the expected Betti table")
    return I


def _ideal_from_f(f1: int, f2: Mapping[int, int], f3: Mapping[tuple, int]) -> MonomialIdeal:
    gens = [(f1, 0, 0)]
    gens += [(j, v, 0) for j, v in f2.items()]
    gens += [(a1, a2, v) for (a1, a2), v in f3.items()]
    return MonomialIdeal(N, tuple(gens))


def reconstruct_gin_slp(B_I: BettiTable, H: HilbertFunction | None = None) -> MonomialIdeal:
    """gin(I) from the Betti numbers of I when ``R/I`` has SLP.

    ``J_2`` is listed block by block (``|alpha| = r_1`` down to 0), with
    ``alpha_1`` descending inside each block; along this listing the
    generator degrees ``|alpha| + f_3(alpha)`` are non-decreasing, so they
    are read off the multiset given by ``beta_{2,2+d}(gin)``.
    """
    B_gin = betti_gin_from_betti_I(B_I, H)
    H = hilbert_from_betti(B_I) if H is None else H
    r1 = r1_from_hf_wlp(H)
    a, f2 = reconstruct_max2_generators(B_gin, r1)
    J2 = [(a1, a2) for a1 in range(a) for a2 in range(f2[a1])]
    order = sorted(J2, key=lambda al: (-(al[0] + al[1]), -al[0]))
    counts = {i - 2: v for (q, i), v in B_gin.entries.items() if q == 2}
    try:
        degs = recover_sequence(counts, len(J2))
    except SumMismatch as e:
        raise InconsistentTable(str(e)) from None
    f3 = {}
    for alpha, d in zip(order, degs):
        v = d - sum(alpha)
        if v < 1:
            raise InconsistentTable(f"f_3{alpha} = {v} is not positive")
        f3[alpha] = v
    return _validate(_ideal_from_f(a, f2, f3), H, B_gin)


def reconstruct_gin_ssp(H: HilbertFunction) -> MonomialIdeal:
    """gin(I) from the Hilbert function alone when ``R/I`` has SSP.

    For ``d <= r_1`` the members of ``J_2`` with ``|alpha| = d`` are the
    ``beta_{2,2+(t-d+1)}(gin)`` revlex-smallest pairs of total degree ``d``,
    i.e. ``(0,d), (1,d-1), ...``, and ``f_3(alpha) = t - 2|alpha| + 1``.
    """
    if not H.is_symmetric():
        raise AsymmetricHilbert(f"Hilbert function {H.values} is not symmetric")
    if H[1] > N:
        raise InconsistentInput(f"H(1) = {H[1]} exceeds three variables")
    t = H.socle_degree
    r1 = r1_from_hf_wlp(H)
    col2 = betti_from_hf_wlp(H, r1, N)
    J2 = []
    for d in range(r1 + 1):
        k = col2.get((2, 2 + (t - d + 1)), 0)
        if k > d + 1:
            raise InconsistentInput(f"{k} generators wanted among {d + 1} pairs of degree {d}")
        J2 += [(j, d - j) for j in range(k)]
    if not J2:
        raise InconsistentInput("no generators divisible by x_3")
    J2set = set(J2)
    f1 = max(a1 for a1, a2 in J2 if a2 == 0) + 1
    f2 = {a1: max(a2 for b1, a2 in J2 if b1 == a1) + 1 for a1 in range(f1)}
    for a1 in range(f1):
        for a2 in range(f2.get(a1, 0)):
            if (a1, a2) not in J2set:
                raise InconsistentInput(f"index set is not a staircase: missing {(a1, a2)}")
    f3 = {alpha: t - 2 * sum(alpha) + 1 for alpha in J2}
    I = _validate(_ideal_from_f(f1, f2, f3), H)
    if not ssp_criterion(f_index(I), t):
        raise StabilityViolated("reconstructed ideal fails the SSP criterion")
    return I


def borel_move_generator_check(I: MonomialIdeal) -> bool:
    """Closure of minimal generators under Borel moves in a fixed ``x_n``-layer.

    If ``x^alpha x_n^g`` and ``x_{n-1}^{|alpha|} x_n^g`` are both minimal
    generators, so is every ``x^beta x_n^g`` with ``|beta| = |alpha|`` and
    ``alpha`` reachable from ``beta`` by elementary Borel moves.  In three
    variables that reachability is exactly ``beta <= alpha`` in revlex.
    """
    n = I.n
    if n < 2:
        return True
    gens = set(I.gens)
    for T in I.gens:
        alpha, g = T[:-1], T[-1]
        s = sum(alpha)
        bottom = (0,) * (n - 2) + (s, g)
        if bottom not in gens:
            continue
        for beta in mono.monomials_of_degree(n - 1, s):
            if mono.borel_leq(beta, alpha) and beta + (g,) not in gens:
                return False
    return True


def ssp_flag_test(gin_J: MonomialIdeal, H: HilbertFunction) -> bool:
    """For ``R/J`` with WLP sharing ``H`` with an SSP algebra: SSP iff the flag lies in gin(J)."""
    r1 = r1_from_hf_wlp(H)
    return all(gin_J.contains(m) for m in ssp_flag(r1, H.socle_degree, gin_J.n))


def cancellation_check(B_I: BettiTable, B_gin: BettiTable):
    """Can ``B_I`` be reached from ``B_gin`` by cancelling adjacent pairs?

    Per internal degree ``d`` solve
    ``B_gin[q,d] - B_I[q,d] = c[q-1,d] + c[q,d]`` with ``c >= 0`` and
    ``c[-1] = c[n-1] = 0``.  The system is a chain, so solving from
    ``q = 0`` upward is exact.  Returns ``(feasible, {(q, d): c})``.
    """
    if B_I.n != B_gin.n:
        raise InconsistentInput("Betti tables live in different rings")
    n = B_I.n
    pairing = {}
    for d in sorted(set(B_I.degrees()) | set(B_gin.degrees())):
        prev = 0
        for q in range(n):
            diff = B_gin.get(q, d) - B_I.get(q, d)
            c = diff - prev
            if c < 0:
                return False, {}
            if q == n - 1:
                if c != 0:
                    return False, {}
            elif c:
                pairing[(q, d)] = c
            prev = c
    return True, pairing


def _parse(s: str, names="xyzw") -> tuple:
    e = [0] * 4
    i = 0
    while i < len(s):
        v = names.index(s[i])
        i += 1
        p = 1
        if i < len(s) and s[i] == "^":
            j = i + 1
            while j < len(s) and s[j].isdigit():
                j += 1
            p = int(s[i + 1:j])
            i = j
        e[v] += p
    return tuple(e)


_EX_I = """x^2 xy^2 y^4 y^3z xyz^3 y^2z^3 xz^5 yz^5 z^7
z^6w xz^4w^3 yz^4w^3 z^5w^3 xyz^2w^5 y^2z^2w^5 xz^3w^5 yz^3w^5 z^4w^5
y^3w^7 xyzw^7 y^2zw^7 xz^2w^7 yz^2w^7 z^3w^7 xyw^9 y^2w^9 xzw^9 yzw^9 z^2w^9
xw^11 yw^11 zw^11 w^13"""

_EX_I_PRIME = """x^2 xy^2 y^4 xyz^2 y^3z^2 xz^4 y^2z^4 yz^5 z^7
z^6w y^2z^3w^3 yz^4w^3 z^5w^3 y^3zw^5 y^2z^2w^5 xz^3w^5 yz^3w^5 z^4w^5
y^3w^7 xyzw^7 y^2zw^7 xz^2w^7 yz^2w^7 z^3w^7 xyw^9 y^2w^9 xzw^9 yzw^9 z^2w^9
xw^11 yw^11 zw^11 w^13"""


def nonunique_ssp_fixture() -> tuple[MonomialIdeal, MonomialIdeal]:
    """Two strongly stable ideals in k[x,y,z,w] with equal Betti tables,
    both with SSP (t = 12), yet different: uniqueness fails in four variables."""
    return tuple(MonomialIdeal(4, tuple(_parse(m) for m in text.split()))
                 for text in (_EX_I, _EX_I_PRIME))
