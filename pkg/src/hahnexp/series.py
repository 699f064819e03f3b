"""Generalized power series with Hahn-element exponents.

A :class:`Series` is a finitely supported sum ``sum s_g t^g``.  As an
ordered group it is the Hahn group of coefficient maps over the exponent
group, so it subclasses :class:`~hahnexp.hahn.HahnSum`; multiplication
is the usual convolution.  The valuation is the least exponent.

Infinite sums (reciprocals, Taylor series of ``log`` and ``exp``) are cut
off at a Taylor index ``N``.  When a sum ``sum r_i eps^i`` is truncated at
``N`` the discarded tail has valuation at least ``(N + 1) v(eps)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .hahn import HahnElement, HahnSum, key_cmp
from .scalar import Scalar

ZERO_EXP = HahnElement.zero()


class Series(HahnSum):
    __slots__ = ()

    @classmethod
    def monomial(cls, g: HahnElement, coeff=1) -> Series:
        return cls.single(g, coeff)

    @classmethod
    def constant(cls, c) -> Series:
        return cls.single(ZERO_EXP, c)

    def __add__(self, other):
        if not isinstance(other, HahnSum):
            other = Series.constant(other)
        return HahnSum.__add__(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, HahnSum):
            other = Series.constant(other)
        return HahnSum.__add__(self, -other)

    def __rsub__(self, other):
        return Series.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Series):
            if isinstance(other, HahnSum):
                return NotImplemented
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, c):
        if isinstance(c, HahnSum):
            return NotImplemented
        return self.scale(c)

    def exponents(self) -> tuple:
        return self.support

    def constant_term(self):
        for g, c in self._terms:
            if g.is_zero():
                return c
        return 0

    def __str__(self):
        from .parsing import render_series
        return render_series(self)


def monomial(g: HahnElement, coeff=1) -> Series:
    return Series.monomial(g, coeff)


def mul(a: Series, b: Series, cutoff: Optional[HahnElement] = None) -> Series:
    """Product of two series; with ``cutoff`` drop exponents ``>= cutoff``."""
    if a.is_zero() or b.is_zero():
        return Series.zero()
    if len(a) == 1 and len(b) == 1:
        (ga, ca), = a.terms
        (gb, cb), = b.terms
        g = ga + gb
        if cutoff is not None and key_cmp(g, cutoff) >= 0:
            return Series.zero()
        return Series._from_sorted(((g, ca * cb),)) if ca * cb != 0 else Series.zero()
    acc = {}
    for ga, ca in a.terms:
        if cutoff is not None and key_cmp(ga + b.min_support(), cutoff) >= 0:
            break
        for gb, cb in b.terms:
            g = ga + gb
            if cutoff is not None and key_cmp(g, cutoff) >= 0:
                break
            c = ca * cb
            acc[g] = acc[g] + c if g in acc else c
    return Series(acc)


def truncate(s: Series, cutoff: HahnElement) -> Series:
    """Keep the terms of ``s`` with exponent strictly below ``cutoff``."""
    return Series._from_sorted((g, c) for g, c in s.terms if key_cmp(g, cutoff) < 0)


def valuation(s: Series) -> HahnElement:
    if s.is_zero():
        raise ValueError("the zero series has no valuation")
    return s.min_support()


def series_compare(a: Series, b: Series) -> int:
    return a._cmp(b)


@dataclass(frozen=True)
class AdditiveParts:
    neg_part: Series
    constant: Scalar
    infinitesimal: Series

    def recompose(self) -> Series:
        return self.neg_part + Series.constant(self.constant) + self.infinitesimal


@dataclass(frozen=True)
class MultiplicativeParts:
    lead_exponent: HahnElement
    lead_coeff: Scalar
    eps: Series

    def recompose(self) -> Series:
        one = Series.constant(type(self.lead_coeff)(1))
        return Series.monomial(self.lead_exponent, self.lead_coeff) * (one + self.eps)


@dataclass(frozen=True)
class Decomposition:
    additive: AdditiveParts
    multiplicative: Optional[MultiplicativeParts]


def additive_parts(s: Series) -> AdditiveParts:
    neg, pos = [], []
    const = 0
    for g, c in s.terms:
        sg = g.sign()
        if sg < 0:
            neg.append((g, c))
        elif sg > 0:
            pos.append((g, c))
        else:
            const = c
    if isinstance(const, int):
        const = Fraction(const)
    return AdditiveParts(Series._from_sorted(neg), const, Series._from_sorted(pos))


def shift(s: Series, g: HahnElement) -> Series:
    """``t^g * s``; exact and order preserving on exponents."""
    return Series._from_sorted((e + g, c) for e, c in s.terms)


def multiplicative_parts(s: Series) -> MultiplicativeParts:
    if s.sign() <= 0:
        raise ValueError("multiplicative decomposition needs a positive series")
    g, r = s.terms[0]
    inv_r = type(r)(1) / r
    eps = Series._from_sorted((e - g, c * inv_r) for e, c in s.terms[1:])
    return MultiplicativeParts(g, r, eps)


def decompose(s: Series) -> Decomposition:
    mult = multiplicative_parts(s) if s.sign() > 0 else None
    return Decomposition(additive_parts(s), mult)


def _check_infinitesimal(eps: Series):
    if not eps.is_zero() and eps.min_support().sign() <= 0:
        raise ValueError("Taylor evaluation needs an infinitesimal argument")


def taylor_eval(coeffs: Sequence, eps: Series, N: int,
                cutoff: Optional[HahnElement] = None) -> Series:
    """``sum_{i<=N} coeffs[i] eps^i``, exact unless ``cutoff`` is given.

    With ``cutoff`` every term with exponent ``>= cutoff`` is discarded as
    soon as it appears; this is harmless for any cutoff at or beyond the
    truncation threshold ``(N + 1) v(eps)``.
    """
    _check_infinitesimal(eps)
    coeffs = list(coeffs)[:N + 1]
    out = Series.zero()
    # the unit lives on the coefficients' backend, even when eps is zero
    power = Series.constant(type(coeffs[0])(1) if coeffs else 1)
    for i, r in enumerate(coeffs):
        if i > 0:
            power = mul(power, eps, cutoff)
            if power.is_zero():
                break
        if r != 0:
            out = out + power.scale(r)
    if cutoff is not None:
        out = truncate(out, cutoff)
    return out


def truncation_threshold(eps: Series, N: int) -> Optional[HahnElement]:
    """``(N + 1) v(eps)``; ``None`` when ``eps`` is zero (nothing omitted)."""
    if eps.is_zero():
        return None
    return (N + 1) * eps.min_support()


def invert(s: Series, N: int) -> Series:
    if s.is_zero():
        raise ZeroDivisionError("cannot invert the zero series")
    g, r = s.terms[0]
    inv_r = type(r)(1) / r
    eps = Series._from_sorted((e - g, c * inv_r) for e, c in s.terms[1:])
    one = type(r)(1)
    geometric = [one if i % 2 == 0 else -one for i in range(N + 1)]
    return shift(taylor_eval(geometric, eps, N), -g).scale(inv_r)


def coerce_series(s: Series, backend) -> Series:
    """Move every coefficient onto ``backend``."""
    return Series._from_sorted((g, backend.coerce(c)) for g, c in s.terms)
