"""Growth-rate invariants: sigma-equivalence, rank words, log-equivalence.

Two base elements are sigma-equivalent when some iterate of the
automorphism carries each of them at or above the other.  For ``tau_S``
the classes are whole fibers in ``S`` and single levels ``(fiber, z)``
elsewhere, so the rank of ``tau_S`` is the ordered sum over fibers of
``1`` (fiber in ``S``) or ``Z`` (otherwise).  That sum is recorded as a
:class:`RankWord`.

Log-equivalence of infinitely large positive series reduces to
sigma-equivalence of a base element reached by descending through
minimal supports; :func:`log_equivalent_search` checks it directly by
iterating the logarithm.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .chain import AutomorphismSpec, BaseElement, StageOverflowError, apply_base
from .explog import LogContext, LogDomainError, log
from .series import Series, additive_parts, coerce_series

DEFAULT_N_MAX = 32


class UndecidedError(RuntimeError):
    pass


class Letter(enum.Enum):
    ONE = "1"
    ZED = "Z"


@dataclass(frozen=True)
class RankWord:
    letters: tuple

    @classmethod
    def parse(cls, text: str) -> RankWord:
        table = {"1": Letter.ONE, "Z": Letter.ZED}
        return cls(tuple(table[x.strip()] for x in text.split(",") if x.strip()))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return ",".join(x.value for x in self.letters)


def _iterate_base(spec: AutomorphismSpec, x: BaseElement, n: int) -> BaseElement:
    return apply_base(spec.iterate(n), x)


def sigma_equivalent(spec: AutomorphismSpec, x: BaseElement, y: BaseElement) -> bool:
    if spec.power == 0:
        return x == y
    if spec.power < 0:
        raise ValueError("sigma-equivalence is defined for increasing automorphisms")
    for b in (x, y):
        if b.fiber >= spec.beta:
            raise ValueError(f"fiber {b.fiber} out of range for beta={spec.beta}")
    if x.fiber != y.fiber:
        return False
    return x.fiber in spec.S or x.level == y.level


def sigma_equivalent_search(spec: AutomorphismSpec, x: BaseElement, y: BaseElement,
                            n_max: int = DEFAULT_N_MAX) -> Optional[bool]:
    """``True`` if some ``n <= n_max`` witnesses equivalence, else ``None``."""
    for n in range(n_max + 1):
        if _iterate_base(spec, x, n) >= y and _iterate_base(spec, y, n) >= x:
            return True
    return None


def sigma_rank_word(spec: AutomorphismSpec) -> RankWord:
    return RankWord(tuple(Letter.ONE if i in spec.S else Letter.ZED
                          for i in range(spec.beta)))


def rank_word_iso(w: RankWord, w2: RankWord) -> bool:
    """Decide whether two ordered sums of ``1`` and ``Z`` are isomorphic.

    Blocks are matched left to right.  An isomorphism sends the least
    remaining block to the least remaining block: a ``1`` is a least
    point, which a ``Z`` block lacks; a ``Z`` block cannot reach into a
    following ``1`` (that point has no immediate predecessor) nor into a
    following ``Z`` (that would create a gap with countable cofinality on
    both sides inside a copy of ``Z``).
    """
    i = 0
    while i < len(w.letters) and i < len(w2.letters):
        if w.letters[i] is not w2.letters[i]:
            return False
        i += 1
    # one sum ran out: the other still has a nonempty final segment
    return len(w.letters) == len(w2.letters)


def rank_classes(words) -> list:
    """Group words into isomorphism classes using :func:`rank_word_iso`."""
    classes = []
    for w in words:
        for cls in classes:
            if rank_word_iso(cls[0], w):
                cls.append(w)
                break
        else:
            classes.append([w])
    return classes


def all_subsets(beta: int):
    for k in range(beta + 1):
        for S in combinations(range(beta), k):
            yield frozenset(S)


def _check_infinite(a: Series):
    if a.is_zero() or a.sign() <= 0 or a.min_support().sign() >= 0:
        raise ValueError("log-equivalence is defined on positive infinitely large elements")


def base_descent(ctx: LogContext, a: Series) -> BaseElement:
    """Base element whose monomial ``t^{-1_b}`` is log-equivalent to ``a``.

    ``a`` is log-equivalent to ``t^g`` for ``g = v(a)``, and ``t^g`` to
    ``t^{l(gamma)}`` with ``gamma`` the least support element of ``g``;
    each step lowers the stage of ``gamma`` by one.
    """
    _check_infinite(a)
    gamma = a.min_support().min_support()
    while not isinstance(gamma, BaseElement):
        gamma = ctx.l(gamma).min_support()
    return gamma


def log_equivalent(ctx: LogContext, a: Series, a2: Series) -> bool:
    return sigma_equivalent(ctx.spec, base_descent(ctx, a), base_descent(ctx, a2))


def _neg_and_constant(s: Series) -> Series:
    parts = additive_parts(s)
    return parts.neg_part + Series.constant(parts.constant)


def _leq(ctx: LogContext, x: Series, y: Series) -> Optional[bool]:
    """``x <= y`` when decided above the infinitesimals, else ``None``."""
    d = _neg_and_constant(x - y)
    if d.is_zero():
        return None
    g, c = d.terms[0]
    if g.is_zero() and ctx.backend.is_negligible(c):
        return None
    return c < 0


def log_equivalent_search(ctx: LogContext, a: Series, a2: Series,
                          n_max: int = DEFAULT_N_MAX) -> Optional[bool]:
    """Look for ``n <= n_max`` with ``log_n(a) <= a2`` and ``log_n(a2) <= a``.

    Only the part of each iterate above the infinitesimals is kept: for an
    infinitely large ``x`` that part of ``log x`` depends only on that part
    of ``x``.  A comparison that would need the discarded infinitesimals
    counts as undecided.  Returns ``True`` when a witness is found and
    ``None`` otherwise.
    """
    _check_infinite(a)
    _check_infinite(a2)
    a, a2 = coerce_series(a, ctx.backend), coerce_series(a2, ctx.backend)
    # the Taylor part of each log is infinitesimal and discarded anyway
    fast = ctx.with_order(1)
    with ctx.backend.scope():
        x, y = _neg_and_constant(a), _neg_and_constant(a2)
        for n in range(n_max + 1):
            if n > 0:
                try:
                    x = _neg_and_constant(log(fast, x))
                    y = _neg_and_constant(log(fast, y))
                except (LogDomainError, StageOverflowError):
                    return None
            if _leq(ctx, x, a2) and _leq(ctx, y, a):
                return True
    return None


def log_equivalent_decided(ctx: LogContext, a: Series, a2: Series,
                           n_max: int = DEFAULT_N_MAX) -> bool:
    """Generic mode: direct search only, failing loudly when undecided."""
    found = log_equivalent_search(ctx, a, a2, n_max)
    if found is None:
        raise UndecidedError(f"log-equivalence undecided within n_max={n_max}")
    return found
