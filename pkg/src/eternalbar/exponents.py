"""Exact exponents: rationals extended by -inf and +inf."""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Union

INF = math.inf
NEG_INF = -math.inf

Exponent = Union[Fraction, float]


def as_exponent(x) -> Exponent:
    """Coerce ``x`` to a Fraction, or to +-inf.

    Strings are parsed in lowest-terms rational notation ("3/2", "-4", "0.5")
    with "inf", "+inf", "-inf" for the extended values. Floats other than
    the infinities are rejected so that no rounding sneaks in.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not exponents")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        if math.isinf(x):
            return x
        raise TypeError(f"refusing inexact float exponent {x!r}; pass a string or Fraction")
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "+inf", "infinity", "+infinity", "∞"):
            return INF
        if s in ("-inf", "-infinity", "-∞"):
            return NEG_INF
        return Fraction(s)
    # Surd and other exact reals pass through untouched
    if hasattr(x, "is_exact_real"):
        return x
    raise TypeError(f"cannot interpret {x!r} as an exponent")


def is_finite(x) -> bool:
    return not (isinstance(x, float) and math.isinf(x))


def format_exponent(x, decimal: int | None = None) -> str:
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return repr(x) if decimal is None else f"{x:.{decimal}f}"
    if decimal is not None:
        return f"{float(x):.{decimal}f}"
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    return str(x)
