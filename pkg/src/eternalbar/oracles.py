"""Brute-force reference computations.

Nothing here calls the algorithms it is meant to check: ranks are plain
Z/2 Gaussian elimination on generator bitmasks, the minimal filtration is a
feasibility search over truncated coefficient grids, and sphere maxima come
from per-arc calculus or dense float grids.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from . import surd
from .exponents import INF, NEG_INF


# -- Z/2 ranks -----------------------------------------------------------------

def f2_rank(rows) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return len(basis)


def f2_in_span(rows, target: int) -> bool:
    return f2_rank(list(rows)) == f2_rank(list(rows) + [target])


def _masks(p):
    pos = {g: i for i, (g, _) in enumerate(p.generators)}
    gens = [(1 << pos[g], b) for g, b in p.generators]
    rels = [(sum(1 << pos[g] for g in support), lv) for lv, support in p.relations]
    return gens, rels


def structure_rank(p, s, t) -> int:
    """Rank of ``V_s -> V_t`` straight from the presentation, for ``s <= t``."""
    gens, rels = _masks(p)
    g_s = [m for m, b in gens if b <= s]
    r_t = [m for m, lv in rels if lv <= t]
    return f2_rank(g_s + r_t) - f2_rank(r_t)


def module_dim(p, s) -> int:
    return structure_rank(p, s, s)


def probe_levels(values) -> list:
    """Critical values plus points between and beyond them."""
    finite = sorted({v for v in values if v not in (INF, NEG_INF)})
    if not finite:
        return [Fraction(0)]
    out = [finite[0] - 1]
    for a, b in zip(finite, finite[1:]):
        out += [a, (a + b) / 2]
    out += [finite[-1], finite[-1] + 1]
    return out


def lim_colim(p) -> dict:
    """Dimensions of the limit, colimit and the image of lim -> colim."""
    levels = probe_levels(p.critical_values())
    lo, hi = levels[0], levels[-1]
    lim = module_dim(p, lo)
    gens, rels = _masks(p)
    all_g = [m for m, _ in gens]
    all_r = [m for m, lv in rels if lv != INF]
    colim = f2_rank(all_g + all_r) - f2_rank(all_r)
    g_lo = [m for m, b in gens if b <= lo]
    image = f2_rank(g_lo + all_r) - f2_rank(all_r)
    del hi
    return {"lim": lim, "colim": colim, "image": image, "cone": (lim - image) + (colim - image)}


# -- minimal filtration ---------------------------------------------------------

def _grid_step(c, z) -> Fraction:
    dens = [g.action.denominator for g in c.generators]
    dens += [Fraction(a).denominator for entries in c.boundary.values() for _, a in entries]
    dens += [e.denominator for coef in z.values() for e in coef]
    return Fraction(1, math.lcm(*dens))


def _feasible(c, z, t, lo, step) -> bool:
    """Is there ``lambda`` with every monomial of ``z + d lambda`` at valuation ``>= t``?

    Unknowns are the Z/2 coefficients of ``tau^e y`` with ``e`` on the grid
    from ``lo`` up to the point where the contribution reaches ``t``.
    Equations are indexed by (generator, valuation) pairs below ``t``.
    """
    eq_index: dict[tuple[str, Fraction], int] = {}

    def eq(gid, v):
        key = (gid, v)
        if key not in eq_index:
            eq_index[key] = len(eq_index)
        return eq_index[key]

    target = 0
    for gid, coef in z.items():
        for e in coef:
            v = e + c.action(gid)
            if v < t:
                target ^= 1 << eq(gid, v)
    columns = []
    for src, entries in c.boundary.items():
        vmin = min(a + c.action(tg) for tg, a in entries)
        e = lo
        while e + vmin < t:
            col = 0
            for tg, a in entries:
                v = e + a + c.action(tg)
                if v < t:
                    col ^= 1 << eq(tg, v)
            if col:
                columns.append(col)
            e += step
    return f2_in_span(columns, target)


def min_filtration_bruteforce(c, z, span: int = 12, margin: int = 8):
    """Least level ``-val`` over the class of the cycle ``z``; -inf if it looks like a boundary.

    Thresholds are searched on the exponent grid between ``val(z)`` and
    ``val(z) + span``. The answer is recomputed with a doubled lower margin
    and must not change.
    """
    step = _grid_step(c, z)
    v0 = min(e + c.action(g) for g, coef in z.items() for e in coef)

    def search(m):
        lo = v0 - m - max((a for es in c.boundary.values() for _, a in es), default=0) \
            - max((g.action for g in c.generators), default=0)
        lo = math.floor(lo / step) * step
        steps = int(span / step)
        if _feasible(c, z, v0 + steps * step, lo, step):
            return NEG_INF
        a, b = 0, steps  # feasible at a, infeasible at b
        while b - a > 1:
            mid = (a + b) // 2
            if _feasible(c, z, v0 + mid * step, lo, step):
                a = mid
            else:
                b = mid
        return -(v0 + a * step)

    first = search(margin)
    second = search(2 * margin)
    if first != second:
        raise AssertionError(f"truncation margin too small: {first} vs {second}")
    return first


def min_filtration_z2_combos(c, z, boundaries) -> Fraction:
    """Best level over ``z`` plus Z/2 sums of the given boundary chains; an upper bound."""
    from .complex import filtration_level

    best = filtration_level(c, z)
    for r in range(1, len(boundaries) + 1):
        for combo in itertools.combinations(boundaries, r):
            w = z
            for b in combo:
                w = w + b
            if w:
                best = min(best, filtration_level(c, w))
    return best


# -- Novikov arithmetic via integer bit polynomials ---------------------------

def to_poly(x, den: int, offset: int) -> int:
    """Encode a finite Z/2 series as an int whose bit ``e*den + offset`` is set for each exponent."""
    out = 0
    for e in x:
        out ^= 1 << int(e * den + offset)
    return out


def clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


# -- sphere maxima --------------------------------------------------------------

def circle_max_per_arc(h, k) -> object:
    """Exact max of ``k . u + H(u)`` for a circle fan, arc by arc with Cramer's rule."""
    best = None
    for i, j in h.simplices:
        a, b = h.vertices[i], h.vertices[j]
        det = a[0] * b[1] - a[1] * b[0]
        # H on this arc is c . p with c . a = H(a), c . b = H(b)
        ha, hb = h.values[i], h.values[j]
        cx = (ha * b[1] - hb * a[1]) / det
        cy = (a[0] * hb - b[0] * ha) / det
        w = (k[0] + cx, k[1] + cy)
        for v in (a, b):
            dot = w[0] * v[0] + w[1] * v[1]
            val = surd.sqrt(dot * dot / (v[0] ** 2 + v[1] ** 2))
            val = val if dot >= 0 else -val
            best = val if best is None or val > best else best
        s = (w[0] * b[1] - w[1] * b[0]) / det
        t = (a[0] * w[1] - a[1] * w[0]) / det
        if s > 0 and t > 0:
            val = surd.sqrt(w[0] ** 2 + w[1] ** 2)
            best = val if val > best else best
    return best


def grid_extrema(h, k, count: int = 20000):
    """Float max and min of ``k . u + H(u)`` on a dense direction grid."""
    from .torus import sphere_directions

    dirs = sphere_directions(h.dimension, count)
    f = dirs @ np.asarray(k, dtype=float) + h.values_at(dirs)
    return float(f.max()), float(f.min())


def shortest_lattice_vector(n: int, bound: int = 3) -> float:
    best = math.inf
    for v in itertools.product(range(-bound, bound + 1), repeat=n):
        if any(v):
            best = min(best, math.sqrt(sum(x * x for x in v)))
    return best
