"""Seeded random inputs for property checks and the self-test."""
from __future__ import annotations

import math
import random
from fractions import Fraction

from .complex import Chain, FilteredComplex, Generator
from .exponents import INF, NEG_INF
from .novikov import Nov
from .persistence import Bar, Barcode, Presentation
from .torus import PLHamiltonian


def _rational(rng: random.Random, lo: int, hi: int, dens=(1, 2, 3)) -> Fraction:
    d = rng.choice(dens)
    return Fraction(rng.randint(lo * d, hi * d), d)


def random_nov(rng: random.Random, terms: int = 4, lo: int = -4, hi: int = 6) -> Nov:
    return Nov([_rational(rng, lo, hi) for _ in range(rng.randint(0, terms))])


def random_presentation(rng: random.Random, max_size: int = 12) -> Presentation:
    """At most ``max_size`` generators plus relations; some births are -inf."""
    n_gen = rng.randint(1, max(1, max_size - 1))
    n_rel = rng.randint(0, max_size - n_gen)
    gens = []
    for i in range(n_gen):
        birth = NEG_INF if rng.random() < 0.2 else _rational(rng, -4, 4)
        gens.append((f"g{i}", birth))
    rels = []
    for _ in range(n_rel):
        support = rng.sample(range(n_gen), rng.randint(1, min(3, n_gen)))
        oldest = max(gens[i][1] for i in support)
        base = Fraction(-5) if oldest == NEG_INF else oldest
        level = INF if rng.random() < 0.1 else base + _rational(rng, 0, 4)
        rels.append((level, [gens[i][0] for i in support]))
    return Presentation(gens, rels)


def random_barcode(rng: random.Random, size: int = 6, finite_births: bool = False) -> Barcode:
    bars = []
    for _ in range(rng.randint(1, size)):
        birth = NEG_INF if (not finite_births and rng.random() < 0.2) else _rational(rng, -4, 4, (1, 2, 3, 4))
        death = INF if rng.random() < 0.6 else (Fraction(0) if birth == NEG_INF else birth) + _rational(rng, 1, 3)
        bars.append(Bar(birth, death))
    return Barcode(bars)


def random_complex(rng: random.Random, max_gens: int = 10) -> tuple[FilteredComplex, list[Chain]]:
    """A complex with d^2 = 0 by construction, plus cycles to query.

    Degree-0 generators ``x`` have no boundary. Degree-1 generators ``y``
    hit them with non-negative areas. When there is room, a degree-1 pair
    with proportional boundaries ``d y' = tau^c d y`` is added together with
    a degree-2 generator ``w`` whose boundary ``tau^(a+c) y + tau^a y'`` is
    a cycle, so ``d d w = 0``.
    """
    n = rng.randint(2, max_gens)
    n_x = rng.randint(max(1, (n + 1) // 2), n - 1)
    n_y = n - n_x
    gens, boundary = [], {}
    for i in range(n_x):
        gens.append(Generator(f"x{i}", _rational(rng, 0, 3, (1, 2)), "0", 0))
    three_level = n_y >= 3 and rng.random() < 0.5
    plain_y = n_y - (3 if three_level else 0)
    for j in range(plain_y):
        gens.append(Generator(f"y{j}", _rational(rng, 0, 3, (1, 2)), "0", 1))
        targets = rng.sample(range(n_x), rng.randint(1, min(3, n_x)))
        boundary[f"y{j}"] = [(f"x{i}", Fraction(rng.randint(0, 3))) for i in targets]
    if three_level:
        targets = rng.sample(range(n_x), rng.randint(1, min(2, n_x)))
        base = [(f"x{i}", Fraction(rng.randint(0, 3))) for i in targets]
        c, a = Fraction(rng.randint(0, 2)), Fraction(rng.randint(0, 2))
        gens.append(Generator("ya", _rational(rng, 0, 3, (1, 2)), "0", 1))
        gens.append(Generator("yb", _rational(rng, 0, 3, (1, 2)), "0", 1))
        gens.append(Generator("w", _rational(rng, 0, 3, (1, 2)), "0", 2))
        boundary["ya"] = base
        boundary["yb"] = [(t, e + c) for t, e in base]
        boundary["w"] = [("ya", a + c), ("yb", a)]
    cx = FilteredComplex(gens, boundary)
    queries = []
    for _ in range(3):
        picks = rng.sample(range(n_x), rng.randint(1, n_x))
        queries.append(Chain((f"x{i}", Nov.monomial(rng.randint(0, 2))) for i in picks))
    if three_level:
        queries.append(Chain({"ya": Nov.monomial(c), "yb": Nov.one()}))
    return cx, queries


def random_circle_pl(rng: random.Random, extra: int = 4, value_range: int = 3) -> PLHamiltonian:
    """Random fan on the circle; the coordinate directions are always vertices."""
    dirs = {(1, 0), (0, 1), (-1, 0), (0, -1)}
    for _ in range(rng.randint(0, extra)):
        v = (rng.randint(-3, 3), rng.randint(-3, 3))
        g = math.gcd(*v)
        if g:
            dirs.add((v[0] // g, v[1] // g))
    dirs = sorted(dirs)
    vals = [_rational(rng, -value_range, value_range, (1, 2)) for _ in dirs]
    return PLHamiltonian.circle(dirs, vals)


def random_sphere_pl(rng: random.Random, value_range: int = 3) -> PLHamiltonian:
    """Random fan on S^2 from the convex hull of lattice directions around the octahedron."""
    from scipy.spatial import ConvexHull
    import numpy as np

    verts = {(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)}
    for _ in range(rng.randint(0, 4)):
        v = tuple(rng.randint(-2, 2) for _ in range(3))
        if any(v):
            verts.add(v)
    verts = sorted(verts)
    pts = np.array(verts, dtype=float)
    unit = pts / np.linalg.norm(pts, axis=1, keepdims=True)
    hull = ConvexHull(unit)
    keep = sorted(set(hull.vertices.tolist()))
    index = {old: new for new, old in enumerate(keep)}
    simplices = [tuple(index[i] for i in s) for s in hull.simplices]
    vals = [_rational(rng, -value_range, value_range, (1, 2)) for _ in keep]
    return PLHamiltonian([verts[i] for i in keep], vals, simplices)


def random_class(rng: random.Random, n: int, bound: int = 5) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(n))
