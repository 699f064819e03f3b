from fractions import Fraction

import pytest
from hypothesis import given

from hahnexp.hahn import HahnElement
from hahnexp.series import (Series, decompose, invert, mul, series_compare,
                            shift, taylor_eval, truncation_threshold, valuation)

from conftest import B, one, series, t

h = one(B(0))
ONE = Series.constant(Fraction(1))
ZERO = HahnElement.zero()


def test_ring_examples():
    assert (ONE + t(h)) * (ONE - t(h)) == ONE - t(2 * h)
    s = t(-h, 3) + 2
    assert (s + (-s)).is_zero()
    g = one(B(1), -1)
    assert t(g) * t(h) == t(g + h)


def test_valuation():
    a = one(B(0), -1)
    assert valuation(t(a) + 3) == a
    assert valuation(Series.constant(Fraction(5))) == ZERO
    assert valuation(t(h) - t(2 * h)) == h
    with pytest.raises(ValueError):
        valuation(Series.zero())


def test_order():
    assert series_compare(t(-h), Series.constant(Fraction(1000))) == 1
    assert series_compare(ONE + t(h), ONE) == 1
    assert series_compare(t(h), t(h)) == 0


def test_decomposition_examples():
    s = t(-h) + 2 + t(h)
    d = decompose(s)
    assert d.additive.neg_part == t(-h)
    assert d.additive.constant == 2
    assert d.additive.infinitesimal == t(h)
    m = d.multiplicative
    assert m.lead_exponent == -h and m.lead_coeff == 1
    assert m.eps == t(h, 2) + t(2 * h)
    d5 = decompose(Series.constant(Fraction(5)))
    assert d5.additive.neg_part.is_zero() and d5.additive.constant == 5
    assert d5.multiplicative.lead_exponent == ZERO and d5.multiplicative.eps.is_zero()


def test_decomposition_of_negative_has_no_multiplicative_part():
    assert decompose(-ONE).multiplicative is None


def test_taylor_eval():
    coeffs = [Fraction(0), Fraction(1), Fraction(-1, 2)]
    assert taylor_eval(coeffs, t(h), 2) == t(h) - t(2 * h, Fraction(1, 2))
    assert taylor_eval([Fraction(7), Fraction(1)], Series.zero(), 3) == Series.constant(Fraction(7))
    assert taylor_eval([Fraction(0)] * 4, t(h), 3).is_zero()
    with pytest.raises(ValueError):
        taylor_eval(coeffs, t(-h), 2)


def test_invert():
    g = one(B(1), 3)
    assert invert(t(g), 5) == t(-g)
    inv = invert(ONE + t(h), 3)
    assert inv == ONE - t(h) + t(2 * h) - t(3 * h)
    rest = (ONE + t(h)) * inv - ONE
    assert valuation(rest) == 4 * h
    assert invert(Series.constant(Fraction(2)), 4) == Series.constant(Fraction(1, 2))


def test_cutoff_product_matches_truncation():
    s = ONE + t(h) + t(2 * h, 3)
    full = s * s * s
    cut = mul(mul(s, s, 3 * h), s, 3 * h)
    assert cut == Series._from_sorted((g, c) for g, c in full.terms if g < 3 * h)


def test_truncation_threshold():
    assert truncation_threshold(t(h) + t(2 * h), 8) == 9 * h
    assert truncation_threshold(Series.zero(), 8) is None


@given(series, series, series)
def test_field_laws(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * ONE == x


@given(series, series)
def test_valuation_law(x, y):
    if not x.is_zero() and not y.is_zero():
        assert valuation(x * y) == valuation(x) + valuation(y)


@given(series, series, series)
def test_ordered_field(x, y, z):
    if series_compare(x, y) < 0:
        assert series_compare(x + z, y + z) < 0
        if z.sign() > 0:
            assert series_compare(x * z, y * z) < 0


@given(series)
def test_decomposition_round_trip(s):
    d = decompose(s)
    assert d.additive.recompose() == s
    if d.multiplicative is not None:
        assert d.multiplicative.recompose() == s
        assert d.multiplicative.eps.is_zero() or valuation(d.multiplicative.eps) > ZERO


@given(series)
def test_monomial_order_reverses_exponents(s):
    for g, _ in s.terms:
        for k, _ in s.terms:
            assert series_compare(t(g), t(k)) == -g._cmp(k)


@given(series)
def test_shift_is_monomial_product(s):
    g = one(B(2), -1)
    assert shift(s, g) == s * t(g)
