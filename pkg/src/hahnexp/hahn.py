"""Finitely supported Hahn sums ordered lexicographically.

``HahnSum`` is the ordered abelian group of maps from a chain to a
coefficient group with finite support.  The chain is whatever the keys
are: any totally ordered, hashable objects.  :class:`HahnElement` uses
chain elements as keys and exact rationals as coefficients;
:class:`hahnexp.series.Series` reuses the same machinery with Hahn
elements as keys.

Terms are stored sorted by key, strictly increasing, with no zero
coefficients, so equality and hashing are structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


def key_cmp(a, b) -> int:
    if a is b:
        return 0
    cmp = getattr(a, "_cmp", None)
    if cmp is not None:
        return cmp(b)
    return (a > b) - (a < b)


def _coeff(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


@total_ordering
class HahnSum:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        acc = {}
        for k, c in terms:
            c = _coeff(c)
            acc[k] = acc[k] + c if k in acc else c
        items = [(k, c) for k, c in acc.items() if c != 0]
        items.sort(key=_SortKey)
        self._terms = tuple(items)
        self._hash = None

    @classmethod
    def _from_sorted(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = tuple(terms)
        obj._hash = None
        return obj

    @classmethod
    def single(cls, key, coeff=1):
        if coeff == 0:
            return cls._from_sorted(())
        return cls._from_sorted(((key, _coeff(coeff)),))

    @classmethod
    def zero(cls):
        return cls._from_sorted(())

    @property
    def terms(self) -> tuple:
        return self._terms

    @property
    def support(self) -> tuple:
        return tuple(k for k, _ in self._terms)

    def coefficient(self, key):
        for k, c in self._terms:
            if k == key:
                return c
        return 0

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_support(self):
        if not self._terms:
            raise ValueError("zero element has no support")
        return self._terms[0][0]

    def leading_coefficient(self):
        if not self._terms:
            raise ValueError("zero element has no leading coefficient")
        return self._terms[0][1]

    def sign(self) -> int:
        if not self._terms:
            return 0
        return 1 if self._terms[0][1] > 0 else -1

    def _check_kind(self, other):
        if type(other) is not type(self):
            raise TypeError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        if not isinstance(other, HahnSum):
            return NotImplemented
        self._check_kind(other)
        a, b = self._terms, other._terms
        if not a:
            return other
        if not b:
            return self
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            ka, ca = a[i]
            kb, cb = b[j]
            c = key_cmp(ka, kb)
            if c < 0:
                out.append(a[i])
                i += 1
            elif c > 0:
                out.append(b[j])
                j += 1
            else:
                s = ca + cb
                if s != 0:
                    out.append((ka, s))
                i += 1
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return self._from_sorted(out)

    def __neg__(self):
        return self._from_sorted((k, -c) for k, c in self._terms)

    def __sub__(self, other):
        if not isinstance(other, HahnSum):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = _coeff(c)
        if c == 0:
            return self.zero()
        return self._from_sorted((k, c * x) for k, x in self._terms)

    def __rmul__(self, c):
        if isinstance(c, HahnSum):
            return NotImplemented
        return self.scale(c)

    def _cmp(self, other) -> int:
        """Sign of ``self - other`` read off at the least differing key."""
        a, b = self._terms, other._terms
        i = j = 0
        while i < len(a) and j < len(b):
            ka, ca = a[i]
            kb, cb = b[j]
            c = key_cmp(ka, kb)
            if c < 0:
                return 1 if ca > 0 else -1
            if c > 0:
                return -1 if cb > 0 else 1
            if ca != cb:
                return 1 if ca > cb else -1
            i += 1
            j += 1
        if i < len(a):
            return 1 if a[i][1] > 0 else -1
        if j < len(b):
            return -1 if b[j][1] > 0 else 1
        return 0

    def __eq__(self, other):
        if not isinstance(other, HahnSum):
            return NotImplemented
        return type(self) is type(other) and self._terms == other._terms

    def __lt__(self, other):
        if not isinstance(other, HahnSum):
            return NotImplemented
        self._check_kind(other)
        return self._cmp(other) < 0

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self._terms))
        return self._hash

    def map_support(self, fn):
        """Apply an order-preserving injection ``fn`` to every key."""
        return self._from_sorted((fn(k), c) for k, c in self._terms)

    def __repr__(self):
        body = ", ".join(f"{c}@{k!r}" for k, c in self._terms)
        return f"{type(self).__name__}({{{body}}})"


class _SortKey:
    __slots__ = ("k",)

    def __init__(self, item):
        self.k = item[0]

    def __lt__(self, other):
        return key_cmp(self.k, other.k) < 0


class HahnElement(HahnSum):
    """Element of the Hahn group over a chain: ``sum g_gamma 1_gamma``."""

    __slots__ = ()

    def __str__(self):
        from .parsing import render_hahn
        return render_hahn(self)


def hahn_compare(g: HahnSum, h: HahnSum) -> int:
    return g._cmp(h)


def min_support(g: HahnSum):
    return g.min_support()


def archimedean_equiv(g: HahnSum, h: HahnSum) -> bool:
    if g.is_zero() or h.is_zero():
        raise ValueError("archimedean equivalence is defined on nonzero elements")
    return key_cmp(g.min_support(), h.min_support()) == 0


def indicator(key, coeff=1) -> HahnElement:
    """``coeff * 1_key``."""
    return HahnElement.single(key, coeff)
