from fractions import Fraction

import pytest
from hypothesis import given

from hahnexp.chain import (AutomorphismSpec, BaseElement, Lifted, StageOverflowError,
                           apply_automorphism, apply_base, chain_compare, hat_lift,
                           iota, iota_inv, l_inv, l_map, stage_of)
from hahnexp.hahn import HahnElement

from conftest import B, chain_elements, one, specs

S0 = AutomorphismSpec(2, {0})


def test_base_order():
    assert chain_compare(B(0, 0, 0), B(0, 0, Fraction(1, 2))) == -1
    assert chain_compare(B(0, 5, 0), B(1, -9, 0)) == -1
    assert chain_compare(B(2, 1, 0), B(2, 0, 7)) == 1


def test_mixed_order():
    x = Lifted(one(B(0), -2))
    assert chain_compare(B(0), x) == 1
    assert chain_compare(x, x) == 0
    y = Lifted(one(B(0), -1) + one(B(0, 1), -1))
    assert chain_compare(y, B(0)) == -1


def test_iota():
    assert iota(B(0)) == one(B(0), -1)
    assert iota(Lifted(one(B(0), -2))) == one(B(0), -2)


def test_iota_inv():
    assert iota_inv(one(B(0), -1)) == B(0)
    x = iota_inv(one(B(0), -2))
    assert x == Lifted(one(B(0), -2)) and x.stage == 1
    y = iota_inv(one(x, -1))
    assert isinstance(y, Lifted) and y.stage == 2 and y.g == one(x, -1)


def test_lifted_canonical_rewrite():
    assert Lifted(one(B(1, 2, 3), -1)) == B(1, 2, 3)
    with pytest.raises(ValueError):
        Lifted(one(B(0), 2))


def test_stage():
    assert stage_of(B(1, 2, 3)) == 0
    x = Lifted(one(B(0), -3))
    assert stage_of(x) == 1
    assert stage_of(Lifted(one(x, -1) + one(B(1), -1))) == 2


def test_stage_overflow():
    x = Lifted(one(B(0), -3))
    with pytest.raises(StageOverflowError):
        iota_inv(one(x, -2), max_stage=1)
    assert iota_inv(one(x, -2), max_stage=2).stage == 2


def test_tau():
    assert apply_base(S0, B(0)) == B(0, 1, 0)
    y = apply_base(S0, B(1, 0, Fraction(1, 2)))
    assert y == B(1, 0, Fraction(3, 2))
    assert apply_base(S0.inverse(), y) == B(1, 0, Fraction(1, 2))


def test_tau_on_lifted():
    x = Lifted(one(B(0), -2))
    assert apply_automorphism(S0, x) == Lifted(one(B(0, 1), -2))


def test_l_map():
    assert l_map(S0, B(0)) == one(B(0, 1), -1)
    assert l_map(S0, B(1, 0, Fraction(1, 2))) == one(B(1, 0, Fraction(3, 2)), -1)
    assert l_map(S0, Lifted(one(B(0), -2))) == one(B(0, 1), -2)


def test_l_inv():
    assert l_inv(S0, one(B(0, 1), -1)) == B(0)
    assert l_inv(S0, one(B(0, 1), -2)) == Lifted(one(B(0), -2))


def test_hat_lift_per_fiber():
    g = one(B(0), -1) + one(B(1), 2)
    assert hat_lift(S0, g) == one(B(0, 1), -1) + one(B(1, 0, 1), 2)


def test_spec_validation():
    with pytest.raises(ValueError):
        AutomorphismSpec(2, {2})
    assert str(AutomorphismSpec(3, {0, 2})) == "tau{beta=3, S=0,2}"


@given(chain_elements, chain_elements)
def test_iota_is_order_embedding(x, y):
    assert chain_compare(x, y) == iota(x)._cmp(iota(y))


@given(chain_elements)
def test_iota_round_trip(x):
    assert iota_inv(iota(x), None) == x


@given(specs, chain_elements)
def test_commuting_square(spec, x):
    assert iota(apply_automorphism(spec, x)) == hat_lift(spec, iota(x))


@given(specs, chain_elements, chain_elements)
def test_tau_is_increasing_automorphism(spec, x, y):
    fx, fy = apply_automorphism(spec, x), apply_automorphism(spec, y)
    assert chain_compare(fx, fy) == chain_compare(x, y)
    assert apply_automorphism(spec.inverse(), fx) == x
    assert fx > x


@given(chain_elements)
def test_equal_elements_hash_equal(x):
    y = iota_inv(iota(x), None)
    assert hash(x) == hash(y)
    assert isinstance(iota(x), HahnElement)
