from decimal import Decimal
from fractions import Fraction

import mpmath
import pytest

from hahnexp import scalar as sc
from hahnexp.scalar import (RATIONAL, BackendMismatchError, DecimalBackend,
                            ScalarDomainError, make_backend, scalar_exp, scalar_log)


def mp_digits(fn, d):
    """Independent reference: evaluate ``fn()`` with guard digits, round to ``d``."""
    with mpmath.workdps(d + 10):
        return Decimal(mpmath.nstr(fn(), d, strip_zeros=False))


def test_rational_arithmetic():
    assert sc.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert sc.inv(Fraction(-2)) == Fraction(-1, 2)
    assert sc.compare(Fraction(1, 3), Fraction(1, 2)) == -1
    assert sc.mul(Fraction(2, 3), 3) == 2


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        sc.inv(Fraction(0))


def test_no_mixing_backends():
    with pytest.raises(BackendMismatchError):
        sc.add(Fraction(1), Decimal(1))


def test_rational_log_exp():
    assert scalar_log(Fraction(1)) == 0
    assert scalar_exp(Fraction(0)) == 1
    with pytest.raises(ScalarDomainError):
        scalar_log(Fraction(-1))
    with pytest.raises(ScalarDomainError):
        scalar_log(Fraction(2))
    with pytest.raises(ScalarDomainError):
        scalar_exp(Fraction(1))


def test_decimal_log2_matches_mpmath():
    be = DecimalBackend(10)
    assert scalar_log(Fraction(2), be) == Decimal("0.6931471806")
    assert scalar_log(Fraction(2), be) == mp_digits(lambda: mpmath.log(2), 10)


def test_decimal_e_matches_mpmath():
    be = DecimalBackend(10)
    assert scalar_exp(Fraction(1), be) == Decimal("2.718281828")
    assert scalar_exp(Fraction(1), be) == mp_digits(lambda: +mpmath.e, 10)


@pytest.mark.parametrize("d", [10, 20, 34, 50])
def test_decimal_precision_tracks_mpmath(d):
    be = DecimalBackend(d)
    assert be.log(be.coerce(3)) == mp_digits(lambda: mpmath.log(3), d)
    assert be.exp(be.coerce(Fraction(1, 3))) == mp_digits(lambda: mpmath.exp(mpmath.mpf(1) / 3), d)


def test_decimal_log_exp_round_trip_within_one_ulp():
    for d in (10, 20, 34):
        be = DecimalBackend(d)
        back = scalar_exp(scalar_log(Fraction(2), be), be)
        ulp = Decimal(10) ** (1 - d)
        assert abs(back - 2) <= ulp


def test_decimal_log_domain():
    with pytest.raises(ScalarDomainError):
        DecimalBackend(10).log(Decimal(0))


def test_parse_and_coerce():
    be = DecimalBackend(10)
    assert be.parse("1/4") == Decimal("0.25")
    assert be.parse("1.5e2") == Decimal("150")
    assert RATIONAL.parse("-3/6") == Fraction(-1, 2)
    assert be.to_exact(be.coerce(Fraction(1, 3))) == Fraction(1, 3)


def test_make_backend():
    assert make_backend("rational") is RATIONAL
    assert make_backend("decimal", 12).precision == 12
    with pytest.raises(ValueError):
        make_backend("float")
