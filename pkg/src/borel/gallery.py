"""Replay the bundled worked examples and compare with their ``expect`` lines."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from typing import Sequence

from .codim3 import borel_move_generator_check
from .groebner import DEFAULT_ENTRY_BOUND, DEFAULT_TRIALS, gin
from .invariants import ek_betti, f_index, hilbert_function
from .lefschetz import analyze, first_reduction_number, ssp_criterion, wlp_criterion
from .monomials import MonomialIdeal
from .parsing import IdealFile, load_ideal
from .polynomials import Polynomial

FIXTURE_PACKAGE = "borel.data.fixtures.paper"


@dataclass(frozen=True)
class GalleryCheck:
    fixture: str
    block: str
    key: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {"fixture": self.fixture, "block": self.block, "key": self.key,
                "expected": self.expected, "actual": self.actual, "ok": self.ok}


class Block:
    """One generator block, with the strongly stable ideal the checks run on."""

    def __init__(self, n: int, gens: Sequence[Polynomial], trials: int, seed: int, entry_bound: int):
        self.n = n
        self.gens = list(gens)
        self._gin_args = dict(trials=trials, seed=seed, entry_bound=entry_bound)

    @cached_property
    def monomial_ideal(self) -> MonomialIdeal | None:
        if all(g.is_monomial() for g in self.gens):
            return MonomialIdeal(self.n, tuple(g.lm for g in self.gens))
        return None

    @cached_property
    def stable(self) -> MonomialIdeal:
        I = self.monomial_ideal
        if I is not None and I.is_strongly_stable():
            return I
        return gin(self.gens, **self._gin_args)

    @cached_property
    def findex(self):
        return f_index(self.stable)

    def value(self, key: str):
        S = self.stable
        if key == "strongly_stable":
            return self.monomial_ideal is not None and self.monomial_ideal.is_strongly_stable()
        if key == "hilbert":
            return list(hilbert_function(S).values)
        if key == "t":
            return hilbert_function(S).socle_degree
        if key == "r1":
            return first_reduction_number(S)
        if key in ("wlp", "slp", "ssp"):
            verdicts = {r.verdict for r in analyze(S, (key.upper(),))}
            return verdicts.pop() if len(verdicts) == 1 else "methods disagree"
        if key == "wlp_witness_degree":
            rep = wlp_criterion(self.findex, first_reduction_number(S))
            if rep.verdict:
                return None
            w = rep.witnesses[0]
            return sum(w.tuple) + w.f_value
        if key == "ssp_witness":
            rep = ssp_criterion(self.findex, hilbert_function(S).socle_degree)
            if rep.verdict:
                return None
            w = rep.witnesses[0]
            return [list(w.tuple), w.f_value, w.required]
        if key == "borel_move_check":
            return borel_move_generator_check(S)
        if key == "f1":
            return self.findex.f1
        if key[0] in "fJ" and key[1:].isdigit():
            k = int(key[1:])
            F = self.findex
            if key[0] == "J":
                return [list(a) for a in F.J[k]]
            return [[list(a), F.f[a]] for a in F.J[k - 1]]
        raise KeyError(f"unknown expectation {key!r}")


def check_fixture(f: IdealFile, label: str = "", trials: int = DEFAULT_TRIALS, seed: int = 0,
                  entry_bound: int = DEFAULT_ENTRY_BOUND) -> list[GalleryCheck]:
    blocks = {name: Block(f.n, gens, trials, seed, entry_bound) for name, gens in f.ideals.items()}
    first = next(iter(blocks))
    out = []
    for key, expected in f.expect.items():
        if key in ("same_betti", "equal"):
            A, B = list(blocks.values())[:2]
            if key == "same_betti":
                actual = ek_betti(A.stable) == ek_betti(B.stable)
            else:
                actual = A.stable == B.stable
            out.append(GalleryCheck(label or f.name, "*", key, expected, actual))
            continue
        block, _, prop = key.rpartition(".")
        block = block or first
        out.append(GalleryCheck(label or f.name, block, prop, expected, blocks[block].value(prop)))
    return out


def fixture_paths():
    root = resources.files(FIXTURE_PACKAGE)
    return sorted((p for p in root.iterdir() if p.name.endswith(".ideal")), key=lambda p: p.name)


def run_gallery(**kw) -> list[GalleryCheck]:
    checks = []
    for path in fixture_paths():
        checks += check_fixture(load_ideal(path), path.name, **kw)
    return checks


def load_schema(name: str) -> dict:
    """One of the shipped JSON schemas, e.g. ``load_schema("betti")``."""
    return json.loads(resources.files("borel.data.schemas").joinpath(f"{name}.json").read_text())
