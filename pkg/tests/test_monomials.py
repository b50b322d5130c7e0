import itertools

import pytest
from hypothesis import given, strategies as st

from borel import monomials as mono
from borel.monomials import MonomialIdeal, borel_closure, borel_leq, revlex_compare

from conftest import stable_ideals

small = st.integers(0, 3)


def exps(n):
    return st.tuples(*[small] * n)


def revlex_by_definition(a, b):
    # greater iff higher degree, or equal degree and last nonzero entry of a - b negative
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


def test_revlex_small_cases():
    # x1 > x2 > x3 and x1*x3 < x2^2 in degree 2
    assert revlex_compare((1, 0, 0), (0, 1, 0)) == 1
    assert revlex_compare((0, 1, 0), (0, 0, 1)) == 1
    assert revlex_compare((1, 0, 1), (0, 2, 0)) == -1
    assert revlex_compare((0, 0, 2), (1, 0, 0)) == 1
    with pytest.raises(ValueError):
        revlex_compare((1, 0), (1, 0, 0))


@given(exps(4), exps(4))
def test_revlex_matches_definition(a, b):
    assert revlex_compare(a, b) == revlex_by_definition(a, b)


@given(exps(3), exps(3), exps(3))
def test_revlex_is_monomial_order(a, b, c):
    # multiplicative: a < b implies ac < bc
    if revlex_compare(a, b) < 0:
        assert revlex_compare(mono.mul(a, c), mono.mul(b, c)) < 0


def test_monomials_of_degree_count_and_order():
    ms = mono.monomials_of_degree(3, 4)
    assert len(ms) == 15
    assert ms[0] == (4, 0, 0) and ms[-1] == (0, 0, 4)
    assert all(revlex_compare(a, b) == 1 for a, b in zip(ms, ms[1:]))
    assert mono.monomials_of_degree(0, 0) == [()]
    assert mono.monomials_of_degree(2, -1) == []


def test_var_and_maxvar():
    assert mono.var(2, 3, 5) == (0, 5, 0)
    assert mono.maxvar((1, 0, 2, 0)) == 3
    assert mono.maxvar((0, 0)) == 0
    with pytest.raises(ValueError):
        mono.var(4, 3)


def test_minimal_generators():
    I = MonomialIdeal(2, ((2, 0), (3, 1), (2, 0), (0, 2), (1, 2)))
    assert I.gens == ((2, 0), (0, 2))


@given(st.lists(exps(3), min_size=1, max_size=6))
def test_minimalize_matches_brute_force(gens):
    I = MonomialIdeal(3, tuple(gens))
    expect = {g for g in gens if not any(h != g and mono.divides(h, g) for h in gens)}
    assert set(I.gens) == expect
    for m in itertools.product(range(4), repeat=3):
        assert I.contains(m) == any(mono.divides(g, m) for g in gens)


def test_strong_stability_examples(codim3_i, codim3_j):
    assert codim3_j.is_strongly_stable()
    ok, bad = mono.is_strongly_stable(codim3_i)
    assert not ok and bad == ((0, 1, 2), (0, 2, 1))
    # x2*x3 -> x1*x3 fails, but stability only moves x3
    I = MonomialIdeal(3, ((2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 1, 1)))
    assert I.is_stable() and not I.is_strongly_stable()


def brute_strongly_stable(I, bound):
    for m in itertools.product(range(bound + 1), repeat=I.n):
        if I.contains(m):
            if not all(I.contains(h) for h in mono.borel_moves(m)):
                return False
    return True


@given(st.lists(exps(3), min_size=1, max_size=5))
def test_strong_stability_matches_brute_force(gens):
    I = MonomialIdeal(3, tuple(gens))
    assert I.is_strongly_stable() == brute_strongly_stable(I, 4)


@given(st.lists(exps(3), min_size=1, max_size=4))
def test_borel_closure_is_smallest(gens):
    B = borel_closure(gens, 3)
    assert B.is_strongly_stable()
    images = {u for s in gens for u in mono.monomials_of_degree(3, sum(s)) if borel_leq(s, u)}
    for m in itertools.product(range(5), repeat=3):
        assert B.contains(m) == any(mono.divides(u, m) for u in images)


def reachable(b, a):
    seen, todo = {b}, [b]
    while todo:
        m = todo.pop()
        for h in mono.borel_moves(m):
            if h not in seen:
                seen.add(h)
                todo.append(h)
    return a in seen


@given(exps(3), exps(3))
def test_borel_leq_is_reachability(a, b):
    if sum(a) == sum(b):
        assert borel_leq(b, a) == reachable(b, a)
    else:
        assert not borel_leq(b, a)


@given(stable_ideals(max_socle=5))
def test_standard_monomials_complement(I):
    for d in range(6):
        std = I.standard_monomials(d)
        assert std == [m for m in mono.monomials_of_degree(I.n, d) if not I.contains(m)]


def test_colon_and_pure_powers(codim3_j):
    assert codim3_j.colon_power(3, 2).gens == ((1, 0, 0), (0, 1, 0), (0, 0, 2))
    assert codim3_j.pure_power(3) == 4 and codim3_j.pure_power(1) == 2
    assert codim3_j.is_artinian()
    assert not MonomialIdeal(2, ((1, 0),)).is_artinian()
    assert MonomialIdeal(2, ((0, 0), (1, 0))).is_unit()
