import pytest
from hypothesis import given

from borel.errors import InternalError, NotArtinian, NotStable, StrictlyIncreasing
from borel.groebner import gin
from borel.invariants import BettiTable, HilbertFunction, ek_betti, f_index, hilbert_function
from borel.lefschetz import (SLP, SSP, WLP, LefschetzReport, Witness, analyze, betti_from_hf_wlp,
                             first_reduction_number, mult_rank, r1_from_hf_wlp, slp_criterion,
                             slp_oracle, ssp_criterion, ssp_flag, ssp_oracle,
                             ssp_via_slp_symmetry, wlp_betti_criterion, wlp_criterion, wlp_oracle)
from borel.monomials import MonomialIdeal
from borel.polynomials import polys_from_monomials

from conftest import stable_ideals


def verdicts(I):
    out = {}
    for r in analyze(I):
        out.setdefault(r.property, set()).add(r.verdict)
    return out


def test_wlp_example(codim3_i, codim3_j):
    G = gin(polys_from_monomials(codim3_i.gens))
    assert first_reduction_number(G) == 2
    rep = wlp_criterion(f_index(G), 2)
    assert not rep
    w = rep.witnesses[0]
    assert w.tuple == (1, 0) and sum(w.tuple) + w.f_value == 2
    assert not wlp_oracle(G)
    # the literal generator x1*x3 gives the same witness
    lit = wlp_criterion(f_index(codim3_i, check=False), 2).witnesses[0]
    assert (lit.tuple, lit.f_value) == ((1, 0), 1)
    assert wlp_criterion(f_index(codim3_j), first_reduction_number(codim3_j))
    assert wlp_oracle(codim3_j)
    with pytest.raises(NotStable):
        wlp_oracle(codim3_i)


def test_slp_example(four_var):
    assert first_reduction_number(four_var) == 2
    assert slp_criterion(f_index(four_var), 2)
    assert slp_oracle(four_var)
    assert wlp_betti_criterion(ek_betti(four_var))


def test_ssp_example(four_var, four_var_ssp):
    F = f_index(four_var)
    rep = ssp_criterion(F, 6)
    assert not rep
    assert [(w.tuple, w.f_value, w.required) for w in rep.witnesses] == [((1, 0, 1), 2, 3)]
    assert not ssp_oracle(four_var)
    assert ssp_criterion(f_index(four_var_ssp), 6)
    assert ssp_oracle(four_var_ssp)
    assert ssp_via_slp_symmetry(four_var_ssp)


def test_one_variable_conventions():
    I = MonomialIdeal(1, ((4,),))
    assert first_reduction_number(I) == 0
    assert all(all(v) for v in verdicts(I).values())


def test_report_needs_witness():
    with pytest.raises(ValueError):
        LefschetzReport(WLP, False, "criterion", 1, 3)
    r = LefschetzReport(WLP, False, "oracle", 1, 3, (Witness((0, 1), 0, 1, "maximal rank"),))
    assert r.to_json()["witnesses"][0]["tuple"] == [0, 1]


def test_mult_rank(codim3_j):
    # x3 : A_1 -> A_2 has full rank 3 on R/J; x3^2 : A_1 -> A_3 has rank 1
    assert mult_rank(codim3_j, 1, 1) == 3
    assert mult_rank(codim3_j, 1, 2) == 1
    assert mult_rank(codim3_j, 0, 3) == 1


def test_requires_stable_artinian():
    with pytest.raises(NotArtinian):
        wlp_oracle(MonomialIdeal(2, ((1, 0),)))


@given(stable_ideals())
def test_methods_agree(I):
    for prop, vs in verdicts(I).items():
        assert len(vs) == 1, (prop, I.gens)


@given(stable_ideals())
def test_implication_chain(I):
    v = {k: next(iter(s)) for k, s in verdicts(I).items()}
    assert not v[SSP] or v[SLP]
    assert not v[SLP] or v[WLP]
    assert v[SSP] == (v[SLP] and hilbert_function(I).is_symmetric())


@given(stable_ideals())
def test_r1_from_hilbert_function_under_wlp(I):
    if wlp_oracle(I):
        assert r1_from_hf_wlp(hilbert_function(I)) == first_reduction_number(I)


@given(stable_ideals())
def test_betti_forced_by_hilbert_under_wlp(I):
    if not wlp_oracle(I):
        return
    H = hilbert_function(I)
    B = ek_betti(I)
    for key, v in betti_from_hf_wlp(H, first_reduction_number(I), I.n).items():
        assert B.get(*key) == v, key


def test_betti_criterion_disagreement_is_internal():
    # not a Betti table of any strongly stable ideal: condition (2) holds,
    # the binomial form does not
    B = BettiTable(3, {(0, 2): 1, (2, 4): 1, (0, 3): 1, (2, 5): 1})
    with pytest.raises(InternalError):
        wlp_betti_criterion(B)


def test_r1_strictly_increasing():
    assert r1_from_hf_wlp(HilbertFunction((1, 3, 3, 1))) == 1
    assert r1_from_hf_wlp(HilbertFunction((1, 2, 3))) == 2


def test_ssp_flag():
    assert ssp_flag(1, 3, 3) == {(0, 2, 0), (0, 1, 2), (0, 0, 4)}
    assert ssp_flag(0, 2, 2) == {(1, 0), (0, 3)}
    with pytest.raises(ValueError):
        ssp_flag(0, 1, 1)


def test_empty_hilbert_function_has_no_r1():
    with pytest.raises(StrictlyIncreasing):
        r1_from_hf_wlp(HilbertFunction(()))
