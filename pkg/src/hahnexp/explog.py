"""Logarithm and exponential on the power series field.

For positive ``a = t^g r (1 + eps)``::

    log a = sum_gamma -g_gamma t^{l(gamma)} + log r + sum_{i>=1} (-1)^(i-1) eps^i / i

with ``l = iota o sigma`` for an increasing base automorphism ``sigma``.
The first sum is the left logarithm on monic monomials and is exact; the
unit part is truncated at Taylor order ``N``.  ``exp`` inverts this term
by term using the additive split ``a = h + c + eps'``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .chain import (DEFAULT_MAX_STAGE, AutomorphismSpec, BaseElement,
                    l_inv, l_map)
from .hahn import HahnElement
from .scalar import RATIONAL, Backend, ScalarDomainError
from .series import (Series, additive_parts, multiplicative_parts, shift,
                     taylor_eval, truncation_threshold)

DEFAULT_TAYLOR_ORDER = 8


class LogDomainError(ValueError):
    pass


@dataclass(frozen=True)
class LogContext:
    spec: AutomorphismSpec
    taylor_order: int = DEFAULT_TAYLOR_ORDER
    max_stage: int = DEFAULT_MAX_STAGE
    backend: Backend = field(default=RATIONAL)
    # drop Taylor terms at or beyond the truncation threshold as they appear
    prune: bool = True
    strict: bool = True

    def __post_init__(self):
        if self.taylor_order < 1:
            raise ValueError("taylor_order must be at least 1")
        if self.max_stage < 1:
            raise ValueError("max_stage must be at least 1")
        if self.strict:
            for fiber in range(self.spec.beta):
                b = BaseElement(fiber, 0, Fraction(0))
                if not l_map(self.spec, b)._cmp(l_map(self.spec.identity(), b)) > 0:
                    raise ValueError(f"{self.spec} is not increasing on the base chain")

    def with_spec(self, spec: AutomorphismSpec) -> LogContext:
        return LogContext(spec, self.taylor_order, self.max_stage, self.backend,
                          self.prune, self.strict)

    def with_order(self, n: int) -> LogContext:
        return LogContext(self.spec, n, self.max_stage, self.backend,
                          self.prune, self.strict)

    def l(self, x) -> HahnElement:
        return l_map(self.spec, x)

    def l_inv(self, g: HahnElement):
        return l_inv(self.spec, g, self.max_stage)


def hat_iota(ctx: LogContext, g: HahnElement) -> Series:
    """``sum_gamma g_gamma t^{l(gamma)}``."""
    coerce = ctx.backend.coerce
    # l is order preserving, so the exponents come out sorted
    return Series._from_sorted((ctx.l(k), coerce(c)) for k, c in g.terms)


def log_monomial(ctx: LogContext, g: HahnElement) -> Series:
    return hat_iota(ctx, -g)


def _log_coeffs(N: int, backend: Backend):
    out = [backend.coerce(0)]
    for i in range(1, N + 1):
        out.append(backend.coerce(Fraction((-1) ** (i - 1), i)))
    return out


def _exp_coeffs(N: int, backend: Backend):
    return [backend.coerce(Fraction(1, math.factorial(i))) for i in range(N + 1)]


def _cutoff(ctx: LogContext, eps: Series):
    return truncation_threshold(eps, ctx.taylor_order) if ctx.prune else None


def log_unit(ctx: LogContext, u: Series) -> Series:
    if u.is_zero() or u.sign() < 0 or not u.min_support().is_zero():
        raise LogDomainError("log_unit domain: argument is not a positive unit")
    with ctx.backend.scope():
        parts = multiplicative_parts(u)
        try:
            const = ctx.backend.log(parts.lead_coeff)
        except ScalarDomainError as exc:
            raise LogDomainError(str(exc)) from exc
        N = ctx.taylor_order
        tail = taylor_eval(_log_coeffs(N, ctx.backend), parts.eps, N, _cutoff(ctx, parts.eps))
        return Series.constant(const) + tail


def log(ctx: LogContext, a: Series) -> Series:
    if a.is_zero() or a.sign() < 0:
        raise LogDomainError("log domain: argument not positive")
    with ctx.backend.scope():
        parts = multiplicative_parts(a)
        unit = Series.constant(parts.lead_coeff) * (Series.constant(ctx.backend.coerce(1)) + parts.eps)
        return log_monomial(ctx, parts.lead_exponent) + log_unit(ctx, unit)


def exp(ctx: LogContext, a: Series) -> Series:
    with ctx.backend.scope():
        parts = additive_parts(a)
        # exponent e with log_monomial(e) == neg_part; Hahn coefficients stay exact
        to_exact = ctx.backend.to_exact
        e = HahnElement((ctx.l_inv(delta), -to_exact(c)) for delta, c in parts.neg_part.terms)
        try:
            scale = ctx.backend.exp(parts.constant)
        except ScalarDomainError as exc:
            raise LogDomainError(str(exc)) from exc
        N = ctx.taylor_order
        eps = parts.infinitesimal
        unit = taylor_eval(_exp_coeffs(N, ctx.backend), eps, N, _cutoff(ctx, eps))
        return shift(unit, e).scale(scale)


def check_ga(ctx: LogContext, g: HahnElement) -> bool:
    """Growth axiom at ``g``: ``l(min support g) > g``."""
    if g.sign() >= 0:
        raise ValueError("the growth axiom is checked on negative elements")
    return ctx.l(g.min_support())._cmp(g) > 0


def log_iterate(ctx: LogContext, a: Series, n: int) -> Series:
    for _ in range(n):
        a = log(ctx, a)
    return a
