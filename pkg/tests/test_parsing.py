from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given

from hahnexp.chain import AutomorphismSpec, Lifted
from hahnexp.hahn import HahnElement
from hahnexp.parsing import (ParseError, parse_chain, parse_expr, parse_hahn, parse_series,
                             parse_spec, render_chain, render_hahn, render_series)
from hahnexp.scalar import DecimalBackend
from hahnexp.series import Series

from conftest import B, chain_elements, hahn_elements, one, series, t


def test_chain_syntax():
    assert parse_chain("(0;0;0)") == B(0)
    assert parse_chain(" ( 2 ; -3 ; 7/2 ) ") == B(2, -3, Fraction(7, 2))
    assert parse_chain("L{-2@(0;0;0)}") == Lifted(one(B(0), -2))
    # the canonical rewrite applies while parsing
    assert parse_chain("L{-1@(1;0;0)}") == B(1)


def test_hahn_syntax():
    assert parse_hahn("0") == HahnElement.zero()
    g = parse_hahn("{-1@(0;0;0), 2@(1;0;0)}")
    assert g == one(B(0), -1) + one(B(1), 2)
    assert render_hahn(g) == "{-1@(0;0;0), 2@(1;0;0)}"


def test_series_syntax():
    s = parse_series("1/2*t^{{-1@(0;0;0)}} + 2 + t^{{1@(0;0;0)}}")
    assert s == t(one(B(0), -1), Fraction(1, 2)) + 2 + t(one(B(0)))
    assert render_series(s) == "1/2*t^{{-1@(0;0;0)}} + 2 + t^{{1@(0;0;0)}}"
    assert render_series(Series.zero()) == "0"
    assert render_series(-t(one(B(0)))) == "-t^{{1@(0;0;0)}}"


def test_decimal_literals():
    s = parse_series("1.5e1 - 1/4", DecimalBackend(10))
    assert s.constant_term() == Decimal("14.75")


def test_parse_error_positions():
    with pytest.raises(ParseError) as info:
        parse_series("1 + t^{{2@(0;0;0}}")
    assert info.value.position == 16
    with pytest.raises(ParseError) as info:
        parse_series("1 +")
    assert info.value.position == 3
    with pytest.raises(ParseError):
        parse_chain("(-1;0;0)")
    with pytest.raises(ParseError):
        parse_chain("L{2@(0;0;0)}")


def test_plain_series_rejects_log():
    with pytest.raises(ParseError):
        parse_series("log(1)")
    node = parse_expr("log(1) + exp(0)")
    assert node.kind == "add"


def test_spec_syntax():
    assert parse_spec("tau{beta=3, S=0,2}") == AutomorphismSpec(3, {0, 2})
    assert parse_spec("tau{beta=2, S=}") == AutomorphismSpec(2)


@given(chain_elements)
def test_chain_round_trip(x):
    assert parse_chain(render_chain(x), None) == x


@given(hahn_elements())
def test_hahn_round_trip(g):
    assert parse_hahn(render_hahn(g), None) == g


@given(series)
def test_series_round_trip(s):
    assert parse_series(render_series(s), max_stage=None) == s
