"""Seeded random values for the property suites.

Every suite draws from its own stream, split off the master seed by the
suite name, so suites are reproducible independently of each other.

Shapes are deliberately small: base levels in ``[-3, 3]``, offsets in
halves within ``[-3, 3]``, coefficients ``p/q`` with ``|p| <= 4`` and
``q <= 3``, at most five support elements, chain stage at most three.
Nested Hahn elements inside lifted chain elements get narrower supports
the deeper they sit.
"""

from __future__ import annotations

import zlib
from fractions import Fraction

import numpy as np

from .chain import BaseElement, Lifted
from .hahn import HahnElement
from .series import Series

MAX_SUPPORT = 5
MAX_SAMPLE_STAGE = 3


def stream(seed: int, name: str) -> np.random.Generator:
    key = zlib.crc32(name.encode("utf-8"))
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(key,)))


def small_rational(rng, nonzero: bool = True) -> Fraction:
    while True:
        p = int(rng.integers(-4, 5))
        if p or not nonzero:
            return Fraction(p, int(rng.integers(1, 4)))


def random_base(rng, beta: int, spread: int = 3) -> BaseElement:
    return BaseElement(int(rng.integers(0, beta)),
                       int(rng.integers(-spread, spread + 1)),
                       Fraction(int(rng.integers(-2 * spread, 2 * spread + 1)), 2))


def _width(stage: int) -> int:
    return max(1, 4 - stage)


def random_chain(rng, beta: int, stage: int) -> object:
    """A chain element of exactly the given stage."""
    if stage == 0:
        return random_base(rng, beta)
    while True:
        k = int(rng.integers(1, _width(stage) + 1))
        keys = [random_chain(rng, beta, stage - 1)]
        keys += [random_chain(rng, beta, int(rng.integers(0, stage))) for _ in range(k - 1)]
        g = HahnElement((key, small_rational(rng)) for key in keys)
        if g.is_zero():
            continue
        if g.sign() > 0:
            g = -g
        x = Lifted(g)
        if x.stage == stage:
            return x


def random_chain_upto(rng, beta: int, max_stage: int) -> object:
    return random_chain(rng, beta, int(rng.integers(0, max_stage + 1)))


def chain_pool(rng, beta: int, max_stage: int, size: int = 24) -> list:
    """Chain elements to draw Hahn supports from; shared keys cause cancellation."""
    return [random_chain_upto(rng, beta, max_stage) for _ in range(size)]


def random_hahn(rng, pool, sign: int = 0, max_support: int = MAX_SUPPORT,
                allow_zero: bool = False) -> HahnElement:
    while True:
        k = int(rng.integers(1, max_support + 1))
        idx = rng.choice(len(pool), size=min(k, len(pool)), replace=False)
        g = HahnElement((pool[int(i)], small_rational(rng)) for i in idx)
        if g.is_zero() and not allow_zero:
            continue
        if sign and g.sign() != sign:
            g = -g
        return g


def random_series(rng, pool, sign: int, max_terms: int = 3,
                  max_support: int = 3) -> Series:
    """Nonzero series whose exponents all have the given sign."""
    while True:
        k = int(rng.integers(1, max_terms + 1))
        s = Series((random_hahn(rng, pool, sign, max_support), small_rational(rng))
                   for _ in range(k))
        # equal exponents can cancel
        if not s.is_zero():
            return s
