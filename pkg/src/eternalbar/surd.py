"""Exact real numbers of the form sum(r_i * sqrt(m_i)).

The torus model needs maxima of linear functionals over pieces of the round
sphere, which are square roots of rationals. Sums of such values show up in
subadditivity checks, so the type is closed under addition and
multiplication, and the sign of any element is decided exactly by
eliminating one prime radical at a time.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from sympy import factorint


@lru_cache(maxsize=4096)
def _squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, m) with n == s*s*m and m squarefree."""
    if n == 0:
        return 0, 1
    s, m = 1, 1
    for p, e in factorint(n).items():
        s *= p ** (e // 2)
        if e % 2:
            m *= p
    return s, m


@lru_cache(maxsize=4096)
def _primes(m: int) -> tuple[int, ...]:
    return tuple(sorted(factorint(m)))


def _normalize(terms: dict[int, Fraction]):
    terms = {m: r for m, r in terms.items() if r}
    if not terms:
        return Fraction(0)
    if len(terms) == 1 and 1 in terms:
        return terms[1]
    out = Surd.__new__(Surd)
    out._terms = tuple(sorted(terms.items()))
    return out


def _terms_of(x) -> dict[int, Fraction]:
    if isinstance(x, Surd):
        return dict(x._terms)
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return {1: Fraction(x)} if x else {}
    raise TypeError(f"not an exact real: {x!r}")


def _mul_terms(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for m1, r1 in a.items():
        for m2, r2 in b.items():
            g = math.gcd(m1, m2)
            m = (m1 // g) * (m2 // g)
            out[m] = out.get(m, Fraction(0)) + r1 * r2 * g
    return {m: r for m, r in out.items() if r}


def _sign(terms: dict[int, Fraction]) -> int:
    terms = {m: r for m, r in terms.items() if r}
    if not terms:
        return 0
    if len(terms) == 1:
        ((m, r),) = terms.items()
        return 1 if r > 0 else -1
    # split off the largest prime radical: S = A + B*sqrt(p)
    p = max(q for m in terms for q in _primes(m))
    a = {m: r for m, r in terms.items() if m % p}
    b = {m // p: r for m, r in terms.items() if m % p == 0}
    sa, sb = _sign(a), _sign(b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb if sa == 0 else sa
    a2 = _mul_terms(a, a)
    pb2 = {m: r * p for m, r in _mul_terms(b, b).items()}
    diff = dict(a2)
    for m, r in pb2.items():
        diff[m] = diff.get(m, Fraction(0)) - r
    d = _sign(diff)
    return d if sa > 0 else -d


def sqrt(q) -> Fraction | "Surd":
    """Exact square root of a non-negative rational."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("square root of a negative rational")
    num, den = q.numerator, q.denominator
    s, m = _squarefree_split(num * den)
    return _normalize({m: Fraction(s, den)})


class Surd:
    """Immutable exact real ``sum(r * sqrt(m))`` over squarefree ``m > 1``.

    Results that turn out rational are returned as plain Fractions, so a
    Surd instance always has an irrational part.
    """

    __slots__ = ("_terms",)
    is_exact_real = True

    def __init__(self, terms):
        raise TypeError("build Surd values with surd.sqrt and arithmetic")

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        return self._terms

    def _coerce(self, other):
        if isinstance(other, float):
            return None
        try:
            return _terms_of(other)
        except TypeError:
            return None

    def __add__(self, other):
        if isinstance(other, float) and math.isinf(other):
            return other
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        out = dict(self._terms)
        for m, r in t.items():
            out[m] = out.get(m, Fraction(0)) + r
        return _normalize(out)

    __radd__ = __add__

    def __neg__(self):
        return _normalize({m: -r for m, r in self._terms})

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, float) and math.isinf(other):
            return -other
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        return self + _normalize({m: -r for m, r in t.items()})

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, float) and math.isinf(other):
            s = _sign(dict(self._terms))
            return other * s
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        return _normalize(_mul_terms(dict(self._terms), t))

    __rmul__ = __mul__

    def __truediv__(self, other):
        t = self._coerce(other)
        if t is None or len(t) != 1 or 1 not in t:
            return NotImplemented
        return _normalize({m: r / t[1] for m, r in self._terms})

    def sign(self) -> int:
        return _sign(dict(self._terms))

    def _cmp(self, other) -> int | None:
        if isinstance(other, float):
            if math.isinf(other):
                return -1 if other > 0 else 1
            f = float(self)
            return (f > other) - (f < other)
        t = self._coerce(other)
        if t is None:
            return None
        diff = dict(self._terms)
        for m, r in t.items():
            diff[m] = diff.get(m, Fraction(0)) - r
        return _sign(diff)

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __eq__(self, other):
        if isinstance(other, Surd):
            return self._terms == other._terms
        return False  # normalized: never equal to a rational

    def __hash__(self):
        return hash(self._terms)

    def __abs__(self):
        return self if self.sign() > 0 else -self

    def __float__(self):
        return float(sum(float(r) * math.sqrt(m) for m, r in self._terms))

    def __floor__(self):
        guess = math.floor(float(self))
        while self < guess:
            guess -= 1
        while self >= guess + 1:
            guess += 1
        return guess

    def __ceil__(self):
        return -math.floor(-self)

    def __repr__(self):
        return f"Surd({self})"

    def __str__(self):
        parts = []
        for m, r in self._terms:
            if m == 1:
                parts.append(str(r))
            elif r == 1:
                parts.append(f"sqrt({m})")
            elif r == -1:
                parts.append(f"-sqrt({m})")
            else:
                parts.append(f"{r}*sqrt({m})")
        return " + ".join(parts).replace("+ -", "- ")
