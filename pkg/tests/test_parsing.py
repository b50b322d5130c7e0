import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from borel.errors import NotHomogeneous, ParseError, UnknownVariable
from borel.groebner import require_homogeneous
from borel.parsing import IdealFile, format_ideal, parse_expect, parse_ideal, parse_polynomial
from borel.polynomials import Polynomial

from conftest import FOUR_VAR


def test_basic_file():
    f = parse_ideal("ring: x y z\nI: x^2, x*y, y^2")
    assert f.n == 3 and len(f.generators) == 3
    assert f.generators[1] == Polynomial(3, {(1, 1, 0): 1})


def test_indexed_ring_and_comments():
    f = parse_ideal("# header\nring: 2   # x1 x2\nname: demo\nI: x1^2,\n   x2^3 # tail\n")
    assert f.names == ["x1", "x2"] and f.name == "demo"
    assert [g.lm for g in f.generators] == [(2, 0), (0, 3)]


def test_non_homogeneous_is_caught_downstream():
    f = parse_ideal("ring: x\nI: x^2 + x")
    with pytest.raises(NotHomogeneous):
        require_homogeneous(f.generators)


def test_fifteen_generators():
    f = parse_ideal(f"ring: x y z w\nI: {FOUR_VAR}")
    assert len(f.generators) == 15 and all(g.is_monomial() for g in f.generators)


def test_coefficients_and_signs():
    p = parse_polynomial("-x^2 + 3/4*x*y - 2*y^2 + 1/2*x*y", ["x", "y"])
    assert p.terms == {(2, 0): -1, (1, 1): mpq(5, 4), (0, 2): -2}


def test_error_positions():
    with pytest.raises(UnknownVariable) as e:
        parse_ideal("ring: x y\nI: x^2 + q*y")
    assert (e.value.line, e.value.col) == (2, 10)
    with pytest.raises(ParseError) as e:
        parse_ideal("ring: x y\nI: x^2 y")
    assert (e.value.line, e.value.col) == (2, 8)
    with pytest.raises(ParseError):
        parse_ideal("I: x")
    with pytest.raises(ParseError):
        parse_ideal("ring: x x\nI: x")
    with pytest.raises(ParseError):
        parse_ideal("ring: x\nI: x^1/2")
    with pytest.raises(ParseError):
        parse_ideal("ring: x\nI: x +")
    assert ParseError("m", 3, 4).to_json() == {"error": "ParseError", "message": "line 3, col 4: m",
                                               "line": 3, "col": 4}


def test_expect_values():
    d = parse_expect(" a=true, b=[[1,2],3], c=7, d=hello")
    assert d == {"a": True, "b": [[1, 2], 3], "c": 7, "d": "hello"}


def test_multiple_blocks():
    f = parse_ideal("ring: x y\nI: x\nJ: y^2,\n  x*y\nexpect: J.t=1")
    assert list(f.ideals) == ["I", "J"] and len(f.ideals["J"]) == 2
    assert f.expect == {"J.t": 1}
    with pytest.raises(ParseError):
        parse_ideal("ring: x\nI: x\nI: x^2")


names = ["x", "y", "z"]
terms = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3),
                        st.fractions(max_denominator=6).filter(lambda q: q != 0), min_size=1, max_size=4)


@given(st.lists(terms, min_size=1, max_size=4))
def test_print_parse_round_trip(gens):
    polys = [Polynomial(3, {m: mpq(c.numerator, c.denominator) for m, c in t.items()}) for t in gens]
    polys = [p for p in polys if p] or [Polynomial(3, {(1, 0, 0): 1})]
    f = IdealFile(names, {"I": polys}, "sample", {"t": 3})
    g = parse_ideal(format_ideal(f))
    assert g == f
