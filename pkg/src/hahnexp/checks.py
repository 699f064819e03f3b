"""Seeded property suites behind ``hahnexp check``, ``rank`` and ``selftest``.

Each suite returns a :class:`Report` with pass/fail/skip/undecided counts
and the lexicographically least counterexample, so the result does not
depend on the order samples are evaluated in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import sampling as smp
from .chain import (AutomorphismSpec, BaseElement, StageOverflowError,
                    apply_automorphism, apply_base, hat_lift, iota, iota_inv)
from .config import Config
from .explog import LogContext, check_ga, exp, log, log_iterate, log_monomial
from .hahn import HahnElement, indicator
from .parsing import render_chain, render_hahn, render_series
from .rank import (all_subsets, base_descent, log_equivalent,
                   log_equivalent_search, rank_classes, rank_word_iso,
                   sigma_equivalent, sigma_equivalent_search, sigma_rank_word)
from .scalar import RATIONAL, DecimalBackend
from .series import Series, coerce_series, monomial

SUITES = ("ga", "iso", "roundtrip", "commute", "iterate", "coherence")


@dataclass
class Report:
    suite: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    undecided: int = 0
    counterexample: Optional[str] = None
    details: dict = field(default_factory=dict)

    def record(self, ok: bool, example: str = ""):
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if self.counterexample is None or example < self.counterexample:
            self.counterexample = example

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def as_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "failed": self.failed,
                "skipped": self.skipped, "undecided": self.undecided,
                "counterexample": self.counterexample, "details": self.details}

    def text(self) -> str:
        line = (f"{self.suite}: {self.passed} passed, {self.failed} failed, "
                f"{self.skipped} skipped, {self.undecided} undecided")
        for k, v in self.details.items():
            line += f"\n  {k}: {v}"
        if self.counterexample is not None:
            line += f"\n  counterexample: {self.counterexample}"
        return line


def _significant(s: Series, backend) -> Series:
    """Drop coefficients that are rounding noise on the decimal backend."""
    if backend is RATIONAL:
        return s
    return Series._from_sorted((g, c) for g, c in s.terms if not backend.is_negligible(c))


def _beyond(diff: Series, bound: HahnElement) -> bool:
    return diff.is_zero() or diff.min_support() > bound


def _note_skips(rep: Report):
    if rep.skipped:
        rep.details["skip_reason"] = "stage overflow"


def _pool(rng, cfg: Config):
    return smp.chain_pool(rng, cfg.beta, cfg.sample_stage)


def suite_ga(cfg: Config) -> Report:
    rng = smp.stream(cfg.seed, "ga")
    ctx = cfg.log_context()
    rep = Report("ga")
    pool = _pool(rng, cfg)
    for _ in range(cfg.samples):
        g = smp.random_hahn(rng, pool, sign=-1)
        ok = check_ga(ctx, g)
        # same statement through the valuation: v(x) < v(log x)
        ok = ok and g < log_monomial(ctx, g).min_support()
        rep.record(ok, render_hahn(g))
    return rep


def suite_iso(cfg: Config) -> Report:
    rng = smp.stream(cfg.seed, "iso")
    ctx = cfg.log_context()
    rep = Report("iso")
    pool = _pool(rng, cfg)
    for _ in range(cfg.samples):
        g = smp.random_hahn(rng, pool)
        h = smp.random_hahn(rng, pool)
        lg, lh = log_monomial(ctx, g), log_monomial(ctx, h)
        ok = _significant(log_monomial(ctx, g + h) - (lg + lh), ctx.backend).is_zero()
        order = g._cmp(h)
        ok = ok and monomial(g)._cmp(monomial(h)) == -order
        ok = ok and lg._cmp(lh) == -order
        ok = ok and lg.min_support() == ctx.l(g.min_support())
        rep.record(ok, f"{render_hahn(g)} ; {render_hahn(h)}")
    return rep


def suite_commute(cfg: Config) -> Report:
    rng = smp.stream(cfg.seed, "commute")
    spec = cfg.spec
    rep = Report("commute")
    for _ in range(cfg.samples):
        x = smp.random_chain_upto(rng, cfg.beta, cfg.sample_stage)
        y = apply_automorphism(spec, x)
        ok = iota(y) == hat_lift(spec, iota(x))
        ok = ok and apply_automorphism(spec.inverse(), y) == x
        if spec.is_increasing:
            ok = ok and y > x
        rep.record(ok, render_chain(x))
    return rep


def suite_iterate(cfg: Config) -> Report:
    rng = smp.stream(cfg.seed, "iterate")
    ctx = cfg.log_context()
    rep = Report("iterate")
    for _ in range(cfg.samples):
        gamma = smp.random_base(rng, cfg.beta)
        a = monomial(indicator(gamma, -1), ctx.backend.coerce(1))
        ok = True
        for n in range(cfg.n + 1):
            expected = monomial(indicator(apply_base(ctx.spec.iterate(n), gamma), -1),
                                ctx.backend.coerce(1))
            ok = ok and log_iterate(ctx, a, n) == expected
        rep.record(ok, render_chain(gamma))
    rep.details["n"] = cfg.n
    return rep


def _roundtrip_inputs(rng, cfg: Config, pool, backend):
    """``(a, eps)`` pairs: ``a`` for log-then-exp or exp-then-log checks."""
    eps = smp.random_series(rng, pool, +1)
    if backend is RATIONAL:
        c = Fraction(0)
        r = Fraction(1)
    else:
        c = smp.small_rational(rng, nonzero=False)
        r = abs(smp.small_rational(rng))
    h = smp.random_series(rng, pool, -1)
    g = smp.random_hahn(rng, pool, allow_zero=True)
    additive = coerce_series(h + Series.constant(c) + eps, backend)
    positive = coerce_series(monomial(g, r) * (Series.constant(1) + eps), backend)
    return additive, positive, h, g, eps


def _roundtrip_errors(ctx: LogContext, additive: Series, positive: Series):
    """Valuations of the two round-trip errors, relative for exp after log."""
    b = _significant(log(ctx, exp(ctx, additive)) - additive, ctx.backend)
    d = _significant(exp(ctx, log(ctx, positive)) - positive, ctx.backend)
    return b, d


def suite_roundtrip(cfg: Config) -> Report:
    rng = smp.stream(cfg.seed, "roundtrip")
    ctx = cfg.log_context()
    backend = ctx.backend
    rep = Report("roundtrip")
    pool = _pool(rng, cfg)
    N = cfg.taylor_order
    for _ in range(cfg.samples):
        additive, positive, h, g, eps = _roundtrip_inputs(rng, cfg, pool, backend)
        bound = N * eps.min_support()
        try:
            err_le, err_el = _roundtrip_errors(ctx, additive, positive)
            ok = _beyond(err_le, bound)
            ok = ok and _beyond(shift_back(err_el, g), bound)
            if backend is RATIONAL:
                # monic monomials and purely negative series round-trip exactly
                mono = monomial(g)
                ok = ok and exp(ctx, log(ctx, mono)) == mono
                ok = ok and log(ctx, exp(ctx, h)) == h
        except StageOverflowError:
            rep.skipped += 1
            continue
        rep.record(ok, f"{render_series(additive)} ; {render_series(positive)}")
    rep.details["threshold"] = f"{N}*v(eps)"
    _note_skips(rep)
    return rep


def shift_back(s: Series, g: HahnElement) -> Series:
    return Series._from_sorted((e - g, c) for e, c in s.terms)


def suite_coherence(cfg: Config, higher: int = 12) -> Report:
    """Round trips at order ``N`` and ``higher`` agree below ``N v(eps)``."""
    rng = smp.stream(cfg.seed, "roundtrip")
    lo = cfg.log_context()
    hi = cfg.log_context(taylor_order=max(higher, cfg.taylor_order + 1))
    backend = lo.backend
    rep = Report("coherence")
    pool = _pool(rng, cfg)
    N = cfg.taylor_order
    for _ in range(cfg.samples):
        additive, positive, h, g, eps = _roundtrip_inputs(rng, cfg, pool, backend)
        bound = N * eps.min_support()
        try:
            le_lo = log(lo, exp(lo, additive))
            le_hi = log(hi, exp(hi, additive))
            el_lo = exp(lo, log(lo, positive))
            el_hi = exp(hi, log(hi, positive))
        except StageOverflowError:
            rep.skipped += 1
            continue
        ok = _beyond(_significant(le_lo - le_hi, backend), bound)
        ok = ok and _beyond(shift_back(_significant(el_lo - el_hi, backend), g), bound)
        rep.record(ok, f"{render_series(additive)} ; {render_series(positive)}")
    rep.details["orders"] = f"{N} vs {hi.taylor_order}"
    _note_skips(rep)
    return rep


def run_suite(name: str, cfg: Config) -> Report:
    fn = {"ga": suite_ga, "iso": suite_iso, "roundtrip": suite_roundtrip,
          "commute": suite_commute, "iterate": suite_iterate,
          "coherence": suite_coherence}.get(name)
    if fn is None:
        raise ValueError(f"unknown suite {name!r}")
    # comparisons in the suites must round like the backend does
    with cfg.backend.scope():
        return fn(cfg)


# -- rank experiments ----------------------------------------------------------

def rank_word(cfg: Config) -> str:
    return str(sigma_rank_word(AutomorphismSpec(cfg.beta, cfg.S)))


def rank_pairs(cfg: Config) -> Report:
    words = [sigma_rank_word(AutomorphismSpec(cfg.beta, S)) for S in all_subsets(cfg.beta)]
    rep = Report("rank-pairs")
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            rep.record(not rank_word_iso(words[i], words[j]),
                       f"{words[i]} ~ {words[j]}")
    rep.details["words"] = len(words)
    rep.details["classes"] = len(rank_classes(words))
    return rep


def _related_monomial(rng, cfg: Config, ctx: LogContext, b: BaseElement) -> Series:
    """An infinitely large monomial whose descent lands near ``b``."""
    spec = ctx.spec
    if b.fiber in spec.S or rng.random() < 0.5:
        level = b.level + int(rng.integers(-2, 3))
    else:
        level = b.level
    target = BaseElement(b.fiber, level, Fraction(int(rng.integers(-6, 7)), 2))
    coeff = -abs(smp.small_rational(rng))
    if rng.random() < 0.5:
        key = target
    else:
        # a lifted element whose l-image has least support ``target``
        below = apply_base(spec.inverse(), target)
        inner = HahnElement([(below, coeff)] + [
            (BaseElement(int(rng.integers(0, cfg.beta)), 5, Fraction(0)),
             smp.small_rational(rng))])
        key = iota_inv(inner, None) if inner.sign() < 0 else below
    g = HahnElement([(key, coeff)] + [
        (BaseElement(int(rng.integers(0, cfg.beta)), 6, Fraction(1)), smp.small_rational(rng))])
    if g.sign() >= 0:
        g = indicator(key, coeff)
    return monomial(g)


def rank_classify(cfg: Config) -> Report:
    rng = smp.stream(cfg.seed, "classify")
    ctx = cfg.log_context(backend=RATIONAL)
    search_ctx = LogContext(ctx.spec, ctx.taylor_order, ctx.max_stage,
                            DecimalBackend(cfg.precision), ctx.prune, ctx.strict)
    rep = Report("rank-classify")
    pool = _pool(rng, cfg)
    equivalent = found = 0
    for _ in range(cfg.samples):
        g = smp.random_hahn(rng, pool, sign=-1)
        a = monomial(g)
        b = base_descent(ctx, a)
        a2 = (_related_monomial(rng, cfg, ctx, b) if rng.random() < 0.6
              else monomial(smp.random_hahn(rng, pool, sign=-1)))
        closed = log_equivalent(ctx, a, a2)
        b2 = base_descent(ctx, a2)
        by_sigma = sigma_equivalent_search(ctx.spec, b, b2, cfg.n_max) is True
        ok = closed == sigma_equivalent(ctx.spec, b, b2) == by_sigma
        direct = log_equivalent_search(search_ctx, a, a2, cfg.n_max)
        if direct is True:
            found += 1
            ok = ok and closed
        elif closed:
            rep.undecided += 1
        equivalent += closed
        rep.record(ok, f"{render_series(a)} ; {render_series(a2)}")
    rep.details["equivalent_pairs"] = equivalent
    rep.details["search_witnessed"] = found
    return rep


def selftest(cfg: Config) -> list:
    reports = [run_suite(name, cfg) for name in SUITES]
    reports.append(rank_pairs(cfg))
    reports.append(rank_classify(cfg))
    return reports
