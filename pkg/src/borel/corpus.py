"""Random samples for fuzzing: strongly stable Artinian ideals and homogeneous forms."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import monomials as mono
from .groebner import buchberger, initial_ideal
from .monomials import MonomialIdeal
from .polynomials import Polynomial


@dataclass
class CorpusConfig:
    max_n: int = 4
    max_socle: int = 8
    ssp_bias: float = 0.3   # chance of forcing f_n(alpha) = t - 2|alpha| + 1
    tight_bias: float = 0.3  # chance of taking every f_n at its lower bound
    seed: int = 0


def _one_variable(rng: random.Random, max_socle: int) -> MonomialIdeal:
    return MonomialIdeal(1, ((rng.randint(1, max_socle + 1),),))


def random_stable_by_f(n: int, rng: random.Random, max_socle: int, ssp_bias: float = 0.3,
                       tight_bias: float = 0.3, base: MonomialIdeal | None = None) -> MonomialIdeal:
    """Build ``K + (x^alpha x_n^{f(alpha)} : alpha in J)`` from a smaller ideal ``K``.

    ``J`` is the set of standard monomials of ``K`` in ``n - 1`` variables.
    Values are chosen from the largest ``|alpha|`` down, Borel-highest first,
    so every lower bound (``f(alpha+e_j) + 1`` and ``f`` of Borel-higher
    tuples of the same degree) is already known when ``alpha`` is visited.
    """
    if n == 1:
        return _one_variable(rng, max_socle)
    K = base if base is not None else random_stable_by_f(
        n - 1, rng, max(1, max_socle // 2), ssp_bias, tight_bias)
    # K is stable and Artinian, so its socle degree is max generator degree - 1
    J = [a for d in range(K.max_generator_degree) for a in K.standard_monomials(d)]
    order = sorted(J, key=mono.revlex_key, reverse=True)
    top = max(sum(a) for a in J)
    mode = rng.random()
    f: dict = {}
    if mode < ssp_bias:
        t = rng.randint(2 * top, max(2 * top, max_socle))
        for a in order:
            f[a] = t - 2 * sum(a) + 1
    else:
        tight = mode < ssp_bias + tight_bias
        for a in order:
            low = 1
            for j in range(n - 1):
                up = a[:j] + (a[j] + 1,) + a[j + 1:]
                if up in f:
                    low = max(low, f[up] + 1)
            for higher in mono.borel_moves(a):
                if higher in f:
                    low = max(low, f[higher])
            f[a] = low if tight else low + rng.choice((0, 0, 1, 1, 2))
    gens = [g + (0,) for g in K.gens] + [a + (v,) for a, v in f.items()]
    return MonomialIdeal(n, tuple(gens))


def random_stable_by_closure(n: int, rng: random.Random, max_socle: int) -> MonomialIdeal:
    """Borel closure of a few random monomials plus ``x_n^{s+1}`` (socle at most ``s``)."""
    s = rng.randint(0, max_socle)
    seeds = [mono.var(n, n, s + 1)]
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(1, s + 1)
        seeds.append(rng.choice(mono.monomials_of_degree(n, d)))
    return mono.borel_closure(seeds, n)


def random_strongly_stable(n: int, rng: random.Random, max_socle: int = 8,
                           ssp_bias: float = 0.3, tight_bias: float = 0.3) -> MonomialIdeal:
    """A random strongly stable Artinian ideal in ``n`` variables with socle degree <= ``max_socle``."""
    while True:
        if rng.random() < 0.25:
            I = random_stable_by_closure(n, rng, max_socle)
        else:
            I = random_stable_by_f(n, rng, max_socle, ssp_bias, tight_bias)
        if I.is_unit():
            continue
        # stable ideals have regularity max generator degree, so t = that - 1
        if I.max_generator_degree - 1 <= max_socle:
            return I


def stable_corpus(size: int, config: CorpusConfig = CorpusConfig(), n: int | None = None):
    """``size`` samples, ``n`` fixed or drawn from ``1..max_n``; deterministic in the seed."""
    rng = random.Random(config.seed)
    out = []
    while len(out) < size:
        k = n if n is not None else rng.randint(1, config.max_n)
        I = random_strongly_stable(k, rng, config.max_socle, config.ssp_bias, config.tight_bias)
        out.append(I)
    return out


def random_form(n: int, d: int, rng: random.Random, bound: int = 5, density: float = 0.6) -> Polynomial:
    """Random homogeneous degree-``d`` form with integer coefficients in ``[-bound, bound]``."""
    while True:
        terms = {m: rng.randint(-bound, bound) for m in mono.monomials_of_degree(n, d)
                 if rng.random() < density}
        p = Polynomial(n, terms)
        if p:
            return p


def random_homogeneous_ideal(n: int, rng: random.Random, max_degree: int = 3,
                             count: tuple[int, int] = (1, 4), bound: int = 5) -> list[Polynomial]:
    k = rng.randint(*count)
    return [random_form(n, rng.randint(1, max_degree), rng, bound) for _ in range(k)]


def random_artinian_ideal(n: int, rng: random.Random, max_degree: int = 3, bound: int = 5,
                          min_degree: int = 1) -> list[Polynomial]:
    """``n`` random forms plus a few extras, redrawn until the quotient is Artinian."""
    while True:
        degs = [rng.randint(min_degree, max_degree) for _ in range(n + rng.randint(0, 2))]
        gens = [random_form(n, d, rng, bound, density=1.0 if k < n else 0.6) for k, d in enumerate(degs)]
        if initial_ideal(buchberger(gens)).is_artinian():
            return gens
