"""Finite-support elements of the universal Novikov field over Z/2.

An element is a finite sum of monomials tau^a with exact rational exponents.
Every coefficient is 1 (characteristic 2), so an element is just its
support: a strictly increasing tuple of Fractions.
"""
from __future__ import annotations

import json
import os
from collections import Counter
from fractions import Fraction
from typing import Iterable

from .errors import DivisionByZero
from .exponents import INF, Exponent, as_exponent

DEFAULT_WINDOW = Fraction(64)


def default_window() -> Fraction:
    """Division window, overridable through ``ETERNALBAR_WINDOW``."""
    raw = os.environ.get("ETERNALBAR_WINDOW")
    if raw is None or not raw.strip():
        return DEFAULT_WINDOW
    w = Fraction(raw.strip())
    if w <= 0:
        raise ValueError(f"ETERNALBAR_WINDOW must be positive, got {raw!r}")
    return w


class Nov:
    """Immutable element of the Novikov field with finite support."""

    __slots__ = ("support",)

    def __init__(self, exponents: Iterable = ()):
        parity = Counter(Fraction(as_exponent(e)) for e in exponents)
        object.__setattr__(self, "support", tuple(sorted(e for e, n in parity.items() if n % 2)))

    @classmethod
    def _from_sorted(cls, support: tuple[Fraction, ...]) -> "Nov":
        out = cls.__new__(cls)
        object.__setattr__(out, "support", support)
        return out

    @classmethod
    def monomial(cls, a) -> "Nov":
        return cls._from_sorted((Fraction(as_exponent(a)),))

    @classmethod
    def zero(cls) -> "Nov":
        return _ZERO

    @classmethod
    def one(cls) -> "Nov":
        return _ONE

    def __setattr__(self, name, value):
        raise AttributeError("Nov is immutable")

    def __bool__(self):
        return bool(self.support)

    def __len__(self):
        return len(self.support)

    def __iter__(self):
        return iter(self.support)

    def __eq__(self, other):
        if isinstance(other, Nov):
            return self.support == other.support
        if other == 0:
            return not self.support
        return NotImplemented

    def __hash__(self):
        return hash(self.support)

    def __add__(self, other: "Nov") -> "Nov":
        if not isinstance(other, Nov):
            return NotImplemented
        if not other.support:
            return self
        if not self.support:
            return other
        return Nov._from_sorted(tuple(sorted(set(self.support).symmetric_difference(other.support))))

    __sub__ = __add__
    __radd__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other: "Nov") -> "Nov":
        if not isinstance(other, Nov):
            return NotImplemented
        if not self.support or not other.support:
            return _ZERO
        if len(other.support) == 1:
            return self.shift(other.support[0])
        if len(self.support) == 1:
            return other.shift(self.support[0])
        parity = Counter(a + b for a in self.support for b in other.support)
        return Nov._from_sorted(tuple(sorted(e for e, n in parity.items() if n % 2)))

    def shift(self, a) -> "Nov":
        """Multiply by tau^a."""
        a = Fraction(a)
        if not a:
            return self
        return Nov._from_sorted(tuple(e + a for e in self.support))

    def val(self) -> Exponent:
        """Smallest exponent of the support, +inf for zero."""
        return self.support[0] if self.support else INF

    def to_json(self) -> list[str]:
        return [str(e) for e in self.support]

    @classmethod
    def from_json(cls, data) -> "Nov":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data)

    def __repr__(self):
        if not self.support:
            return "Nov(0)"
        return "Nov(" + " + ".join(f"τ^{e}" for e in self.support) + ")"


_ZERO = Nov._from_sorted(())
_ONE = Nov._from_sorted((Fraction(0),))


def nov_add(x: Nov, y: Nov) -> Nov:
    return x + y


def nov_mul(x: Nov, y: Nov) -> Nov:
    return x * y


def nov_val(x: Nov) -> Exponent:
    return x.val()


def nov_div_window(x: Nov, y: Nov, window=None) -> Nov:
    """Truncated quotient ``q`` of ``x`` by ``y``.

    Leading terms are cancelled one at a time until the residual
    ``x - q*y`` has valuation strictly above ``val(x) + window``. The loop
    terminates because every exponent involved lies in a finitely generated,
    hence discrete, subgroup of the rationals.

    Raises
    ------
    DivisionByZero
        If ``y`` is zero.
    """
    if not y:
        raise DivisionByZero("division of a Novikov element by zero")
    window = default_window() if window is None else Fraction(as_exponent(window))
    if window <= 0:
        raise ValueError("window must be positive")
    if not x:
        return _ZERO
    target = x.val() + window
    lead = y.val()
    quotient: list[Fraction] = []
    r = x
    while r and r.val() <= target:
        t = r.val() - lead
        quotient.append(t)
        r = r + y.shift(t)
    return Nov._from_sorted(tuple(quotient))
