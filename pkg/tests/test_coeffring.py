from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ctree.coeffring import (
    UNIT,
    CycloElem,
    LaurentPoly,
    ModLaurent,
    Monomial,
    PiGraded,
    TSeries,
    parse_monomial,
    parse_rational,
    reduce_mod,
    specialize_cyclotomic,
)
from ctree.errors import DenominatorNotInvertible, ParseError, UnassignedVariable

x, y = Monomial.var("x"), Monomial.var("y")

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
monos = st.builds(
    lambda ex, ey: x**ex * y**ey, st.integers(-3, 3), st.integers(-3, 3)
)
polys = st.dictionaries(monos, st.integers(-5, 5), max_size=4).map(LaurentPoly)


def p_integral(p):
    return rationals.filter(lambda q: q.denominator % p)


def test_reduce_mod_examples():
    assert reduce_mod(Fraction(17, 32), 5, 1) == 1
    assert reduce_mod(0, 7, 3) == 0
    assert reduce_mod(Fraction(49, 20), 7, 1) == 0


def test_reduce_mod_rejects_p_in_denominator():
    with pytest.raises(DenominatorNotInvertible):
        reduce_mod(Fraction(1, 10), 5, 2)


@pytest.mark.parametrize("p", [5, 7, 11])
@pytest.mark.parametrize("T", [1, 2, 3])
@given(data=st.data())
def test_reduction_is_a_ring_map(p, T, data):
    a = data.draw(p_integral(p))
    b = data.draw(p_integral(p))
    m = p**T
    assert reduce_mod(a + b, p, T) == (reduce_mod(a, p, T) + reduce_mod(b, p, T)) % m
    assert reduce_mod(a * b, p, T) == reduce_mod(a, p, T) * reduce_mod(b, p, T) % m


@given(rationals, rationals, rationals)
def test_rationals_are_exact(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


def test_laurent_examples():
    X = LaurentPoly.var("x")
    assert X + (-X) == 0
    assert LaurentPoly.monomial(x) * LaurentPoly.monomial(x.inverse()) == 1
    assert (1 + X) * (1 - X) == 1 - X * X
    assert str(X + LaurentPoly.monomial(x**2) * Fraction(1, 2)) == "x + 1/2*x^2"


@given(polys, polys, polys)
def test_laurent_ring_laws(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f


def test_monomial_text_round_trip():
    m = parse_monomial("x1^-1*y2^3")
    assert str(m) == "x1^-1*y2^3"
    assert parse_monomial("1") == UNIT
    assert parse_monomial("y2^3*x1^-1") == m
    with pytest.raises(ParseError):
        parse_monomial("2*x")


def test_monomial_exponent_overflow_is_caught():
    with pytest.raises(OverflowError):
        Monomial.var("x") ** (2**63)


def test_parse_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("+7") == 7


def test_specialize_examples():
    X1 = CycloElem(3, [0, 1, 0])
    assert specialize_cyclotomic(LaurentPoly.monomial(x), 3, {"x": 1}) == X1
    assert specialize_cyclotomic(LaurentPoly.monomial(x**4 * y.inverse()), 3, {"x": 1, "y": 2}) == CycloElem(3, [0, 0, 1])
    assert specialize_cyclotomic(LaurentPoly.constant(1), 5, {}) == CycloElem(5, [1, 0, 0, 0, 0])
    with pytest.raises(UnassignedVariable):
        specialize_cyclotomic(LaurentPoly.monomial(x), 3, {})


@given(polys, polys, st.integers(0, 3), st.integers(0, 3))
def test_specialization_is_multiplicative(f, g, ax, ay):
    a = {"x": ax, "y": ay}
    assert specialize_cyclotomic(f * g, 4, a) == specialize_cyclotomic(f, 4, a) * specialize_cyclotomic(g, 4, a)


def test_mod_laurent_reduces_coefficients():
    f = LaurentPoly({x: Fraction(1, 2), UNIT: 25})
    g = ModLaurent.from_laurent(f, 5, 2)
    assert dict(g.items()) == {x: 13}
    assert ModLaurent.from_laurent(f * f, 5, 2) == g * g


@given(st.lists(st.integers(-9, 9), max_size=6), st.lists(st.integers(-9, 9), max_size=6), st.integers(0, 5))
def test_truncated_product_matches_full_product(a, b, T):
    full = [0] * (len(a) + len(b))
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            full[i + j] += u * v
    assert list((TSeries(a, T) * TSeries(b, T)).coeffs) == (full + [0] * (T + 1))[: T + 1]


def test_pi_grading_multiplies_degrees():
    a = PiGraded({0: 2, 1: Fraction(1, 2)})
    b = PiGraded({1: 3})
    assert a * b == PiGraded({1: 6, 2: Fraction(3, 2)})
    assert (a * b).shift(-1) == PiGraded({0: 6, 1: Fraction(3, 2)})
    assert PiGraded({0: 0}) == 0
