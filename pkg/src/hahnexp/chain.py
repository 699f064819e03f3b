"""The iterated lexicographic power of the base chain, at finite depth.

The base chain is ``beta x (Z x Q)`` ordered lexicographically; a base
element is ``(fiber; level; offset)``.  Stage ``s + 1`` adjoins every
negative Hahn element over stage ``s`` that is not already the image of
a stage-``s`` element.  Such an element is a :class:`Lifted`.  The
embedding ``iota`` sends a base element ``b`` to ``-1_b`` and a lifted
element to its underlying Hahn element, so every negative Hahn element
has exactly one preimage.

Automorphisms are the ``tau_S`` family: on fibers in ``S`` the level is
shifted (rank one), elsewhere the offset is shifted (rank Z).  They act
on lifted elements through :func:`hat_lift`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .hahn import HahnElement, HahnSum, indicator

DEFAULT_MAX_STAGE = 8


class StageOverflowError(ArithmeticError):
    pass


class _ChainOrder:
    """Patch ordering, shared by both kinds of chain element."""

    __slots__ = ()

    def __lt__(self, other):
        return chain_compare(self, other) < 0

    def __le__(self, other):
        return chain_compare(self, other) <= 0

    def __gt__(self, other):
        return chain_compare(self, other) > 0

    def __ge__(self, other):
        return chain_compare(self, other) >= 0

    def _cmp(self, other):
        return chain_compare(self, other)


@dataclass(frozen=True, eq=True, order=False)
class BaseElement(_ChainOrder):
    fiber: int
    level: int
    offset: Fraction

    def __post_init__(self):
        if self.fiber < 0:
            raise ValueError("fiber index must be a natural number")
        if not isinstance(self.offset, Fraction):
            object.__setattr__(self, "offset", Fraction(self.offset))

    @property
    def stage(self) -> int:
        return 0

    def key(self):
        return (self.fiber, self.level, self.offset)

    def __repr__(self):
        return f"({self.fiber};{self.level};{self.offset})"


class Lifted(_ChainOrder):
    """A chain element of positive stage, wrapping a negative Hahn element.

    ``Lifted(-1_b)`` for a base element ``b`` returns ``b`` itself, so
    every chain element has a single representation.
    """

    __slots__ = ("g", "stage", "_hash")

    def __new__(cls, g: HahnElement):
        if not isinstance(g, HahnElement):
            raise TypeError("Lifted wraps a HahnElement")
        if g.sign() >= 0:
            raise ValueError("lifted elements must be negative Hahn elements")
        if len(g) == 1:
            key, c = g.terms[0]
            if c == -1 and isinstance(key, BaseElement):
                return key
        obj = object.__new__(cls)
        obj.g = g
        obj.stage = 1 + max(k.stage for k in g.support)
        obj._hash = None
        return obj

    def __eq__(self, other):
        if isinstance(other, Lifted):
            return self.g == other.g
        if isinstance(other, BaseElement):
            return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("L", self.g))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{c}@{k!r}" for k, c in self.g.terms)
        return f"L{{{body}}}"

    def __reduce__(self):
        return (Lifted, (self.g,))


def base_compare(x: BaseElement, y: BaseElement) -> int:
    a, b = x.key(), y.key()
    return (a > b) - (a < b)


def chain_compare(x, y) -> int:
    if x is y:
        return 0
    if isinstance(x, BaseElement) and isinstance(y, BaseElement):
        return base_compare(x, y)
    return iota(x)._cmp(iota(y))


def iota(x) -> HahnElement:
    if isinstance(x, BaseElement):
        return indicator(x, -1)
    return x.g


def stage_of(x) -> int:
    return x.stage


def hahn_stage(g: HahnSum) -> int:
    """Least stage ``s`` with ``g`` in the Hahn group over stage ``s``."""
    return max((k.stage for k in g.support), default=0)


def iota_inv(g: HahnElement, max_stage: int | None = DEFAULT_MAX_STAGE):
    if g.sign() >= 0:
        raise ValueError("iota_inv needs a negative Hahn element")
    x = Lifted(g)
    if max_stage is not None and x.stage > max_stage:
        raise StageOverflowError(
            f"element of stage {x.stage} exceeds maximum stage {max_stage}")
    return x


@dataclass(frozen=True)
class AutomorphismSpec:
    """``tau_S`` on ``beta`` fibers, raised to the integer power ``power``.

    ``power = 1`` is the forward automorphism, ``-1`` its inverse and
    ``0`` the identity (used only as a negative control).
    """

    beta: int
    S: frozenset = frozenset()
    power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(self.S))
        if self.beta < 1:
            raise ValueError("beta must be at least 1")
        bad = [i for i in self.S if not 0 <= i < self.beta]
        if bad:
            raise ValueError(f"S contains indices outside 0..{self.beta - 1}: {bad}")

    def inverse(self) -> AutomorphismSpec:
        return AutomorphismSpec(self.beta, self.S, -self.power)

    def iterate(self, n: int) -> AutomorphismSpec:
        return AutomorphismSpec(self.beta, self.S, self.power * n)

    def identity(self) -> AutomorphismSpec:
        return AutomorphismSpec(self.beta, self.S, 0)

    @property
    def is_increasing(self) -> bool:
        return self.power > 0

    def __str__(self):
        s = ",".join(str(i) for i in sorted(self.S))
        txt = f"tau{{beta={self.beta}, S={s}}}"
        if self.power != 1:
            txt += f"^{self.power}"
        return txt


def apply_base(spec: AutomorphismSpec, b: BaseElement) -> BaseElement:
    if b.fiber >= spec.beta:
        raise ValueError(f"fiber {b.fiber} out of range for beta={spec.beta}")
    if spec.power == 0:
        return b
    if b.fiber in spec.S:
        return BaseElement(b.fiber, b.level + spec.power, b.offset)
    return BaseElement(b.fiber, b.level, b.offset + spec.power)


def apply_automorphism(spec: AutomorphismSpec, x):
    if isinstance(x, BaseElement):
        return apply_base(spec, x)
    if spec.power == 0:
        return x
    return Lifted(hat_lift(spec, x.g))


def hat_lift(spec: AutomorphismSpec, g: HahnElement) -> HahnElement:
    """Move every support element of ``g`` through the automorphism."""
    if spec.power == 0:
        return g
    return g.map_support(lambda k: apply_automorphism(spec, k))


def l_map(spec: AutomorphismSpec, x) -> HahnElement:
    return iota(apply_automorphism(spec, x))


def l_inv(spec: AutomorphismSpec, g: HahnElement,
          max_stage: int | None = DEFAULT_MAX_STAGE):
    return apply_automorphism(spec.inverse(), iota_inv(g, max_stage))
