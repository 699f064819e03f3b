"""Coefficient arithmetic standing in for the real numbers.

Two backends are available.  The rational backend uses
:class:`fractions.Fraction` and is exact; it can only take ``log 1`` and
``exp 0``.  The decimal backend uses :class:`decimal.Decimal` at a fixed
number of significant digits with round-half-even and supplies the
transcendental constants.  A computation never mixes the two.
"""

from __future__ import annotations

import contextlib
import decimal
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, Decimal]

DEFAULT_PRECISION = 34


class BackendMismatchError(TypeError):
    pass


class ScalarDomainError(ValueError):
    pass


def _same_backend(a, b):
    if isinstance(a, int) and not isinstance(a, bool):
        a = Fraction(a)
    if isinstance(b, int) and not isinstance(b, bool):
        b = Fraction(b)
    if type(a) is not type(b):
        raise BackendMismatchError(
            f"cannot combine {type(a).__name__} with {type(b).__name__}")
    return a, b


def add(a: Scalar, b: Scalar) -> Scalar:
    a, b = _same_backend(a, b)
    return a + b


def mul(a: Scalar, b: Scalar) -> Scalar:
    a, b = _same_backend(a, b)
    return a * b


def neg(a: Scalar) -> Scalar:
    return -a


def inv(a: Scalar) -> Scalar:
    if a == 0:
        raise ZeroDivisionError("scalar inverse of zero")
    return type(a)(1) / a


def compare(a: Scalar, b: Scalar) -> int:
    """Return -1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    a, b = _same_backend(a, b)
    return (a > b) - (a < b)


@dataclass(frozen=True)
class RationalBackend:
    name: str = field(default="rational", init=False)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Decimal):
            return Fraction(x)
        return Fraction(x)

    def parse(self, text: str) -> Fraction:
        return Fraction(text.strip())

    def log(self, r: Scalar) -> Fraction:
        if r <= 0:
            raise ScalarDomainError(f"log of non-positive scalar {r}")
        if r != 1:
            raise ScalarDomainError(
                f"log({r}) is an irrational constant term; use decimal backend")
        return Fraction(0)

    def exp(self, c: Scalar) -> Fraction:
        if c != 0:
            raise ScalarDomainError(
                f"exp({c}) is an irrational constant term; use decimal backend")
        return Fraction(1)

    def to_exact(self, x) -> Fraction:
        return Fraction(x)

    def scope(self):
        return contextlib.nullcontext()

    def is_negligible(self, x: Scalar) -> bool:
        return x == 0


@dataclass(frozen=True)
class DecimalBackend:
    precision: int = DEFAULT_PRECISION
    name: str = field(default="decimal", init=False)

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("decimal precision must be at least 1")

    @property
    def context(self) -> decimal.Context:
        return decimal.Context(prec=self.precision,
                               rounding=decimal.ROUND_HALF_EVEN,
                               Emin=-999999, Emax=999999)

    def coerce(self, x) -> Decimal:
        ctx = self.context
        if isinstance(x, Decimal):
            return ctx.plus(x)
        if isinstance(x, Fraction):
            return ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
        return ctx.create_decimal(x)

    def parse(self, text: str) -> Decimal:
        text = text.strip()
        if "/" in text:
            return self.coerce(Fraction(text))
        return self.context.create_decimal(text)

    def log(self, r: Scalar) -> Decimal:
        if r <= 0:
            raise ScalarDomainError(f"log of non-positive scalar {r}")
        return self.context.ln(self.coerce(r))

    def exp(self, c: Scalar) -> Decimal:
        return self.context.exp(self.coerce(c))

    def to_exact(self, x) -> Fraction:
        """Nearest rational with denominator below ``10**(precision // 2)``.

        Recovers values such as 1/3 from their rounded decimal expansion.
        """
        return Fraction(x).limit_denominator(10 ** max(1, self.precision // 2))

    def scope(self):
        return decimal.localcontext(self.context)

    def is_negligible(self, x: Scalar) -> bool:
        # eight guard digits: products of exp(c) and Taylor sums lose a few
        return abs(x) < Decimal(10) ** (8 - self.precision)


RATIONAL = RationalBackend()

Backend = Union[RationalBackend, DecimalBackend]


def make_backend(name: str, precision: int = DEFAULT_PRECISION) -> Backend:
    if name == "rational":
        return RATIONAL
    if name == "decimal":
        return DecimalBackend(precision)
    raise ValueError(f"unknown scalar backend {name!r}")


def scalar_log(r: Scalar, backend: Backend = RATIONAL) -> Scalar:
    return backend.log(r)


def scalar_exp(c: Scalar, backend: Backend = RATIONAL) -> Scalar:
    return backend.exp(c)
