"""Flat-torus model: 1-homogeneous Hamiltonians H(p) on the cotangent bundle of T^n.

A Hamiltonian is known through its restriction to the unit sphere of the
fiber. Three representations are supported:

``LinearHamiltonian``
    ``H(u) = a . u`` for a rational vector ``a``.
``PLHamiltonian``
    A simplicial fan: rational vertex vectors ``v_i`` with values ``H(v_i)``
    and simplices of ``n`` vertices each. On the cone over a simplex ``H`` is
    the linear function ``c . p`` matching the vertex values.
``SampledHamiltonian``
    Float values on a finite set of unit directions at resolution ``eps``.

For a class ``k`` in the integer lattice the model invariant is
``max_{|u|=1} (k . u + H(u))``. On a cone ``k . u + H(u) = w . u`` with
``w = k + c``, so exact extrema are either vertex values ``w . v / |v|`` or
norms ``|P w|`` of projections onto faces whose critical direction lies in
the face. All such values are square roots of rationals and are returned as
``Fraction`` or ``Surd``.
"""
from __future__ import annotations

import csv
import functools
import itertools
import json
import math
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy.spatial import cKDTree

from . import surd
from .errors import (ClosureViolation, ContractibleClass, IncompatibleMesh, Inconsistent, MalformedInput,
                     ResolutionTooCoarse)
from .exponents import as_exponent
from .persistence import Bar, Barcode, ColimitClass
from .report import Report
from .spectral import PersistenceAlgebra, ProductEntry

Vec = tuple[Fraction, ...]


# -- small exact linear algebra ---------------------------------------------

def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """Solve a square system exactly; None when singular."""
    n = len(matrix)
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[r][n] for r in range(n)]


def _inverse(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]] | None:
    n = len(matrix)
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        x = _solve(matrix, e)
        if x is None:
            return None
        cols.append(x)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _matvec(m, v) -> list[Fraction]:
    return [_dot(row, v) for row in m]


def _vec(xs) -> Vec:
    return tuple(Fraction(as_exponent(x)) for x in xs)


def _norm(v) -> Fraction | surd.Surd:
    return surd.sqrt(_dot(v, v))


def _primitive(v: Vec) -> tuple[int, ...]:
    """Primitive integer vector pointing the same way as ``v``."""
    den = math.lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = math.gcd(*ints)
    return tuple(i // g for i in ints)


def _angle_cmp(a, b) -> int:
    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    ha, hb = half(a), half(b)
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


# -- lattice classes and systoles --------------------------------------------

def parse_class(spec: str | Iterable[int]) -> tuple[int, ...]:
    if isinstance(spec, str):
        return tuple(int(x) for x in spec.replace(" ", "").split(",") if x)
    return tuple(int(x) for x in spec)


def systole(n: int, k: Sequence[int] | None = None):
    """Shortest closed geodesic length of the unit flat torus, overall or in class ``k``.

    Raises
    ------
    ContractibleClass
        For ``k = 0``: the flat geodesic flow has no contractible closed orbits.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    if k is None:
        return Fraction(1)
    k = parse_class(k)
    if len(k) != n:
        raise ValueError(f"class {k} does not live in Z^{n}")
    if not any(k):
        raise ContractibleClass("no closed Reeb orbit of the flat torus is contractible")
    return _norm(_vec(k))


# -- Hamiltonians -------------------------------------------------------------

class SphereHamiltonian:
    """Common interface; see the module docstring for the three kinds."""

    dimension: int
    exact: bool = True

    def class_extrema(self, k: Sequence[int]):
        raise NotImplementedError

    def critical_values(self, k: Sequence[int]):
        raise NotImplementedError

    def values_at(self, directions: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def is_zero(self) -> bool:
        raise NotImplementedError

    def scaled(self, factor) -> "SphereHamiltonian":
        raise NotImplementedError

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def equals(self, other: "SphereHamiltonian") -> bool:
        return (self - other).is_zero()

    def _check_class(self, k) -> tuple[int, ...]:
        k = parse_class(k) if k is not None else (0,) * self.dimension
        if len(k) != self.dimension:
            raise ValueError(f"class {k} does not match dimension {self.dimension}")
        return k


class LinearHamiltonian(SphereHamiltonian):
    def __init__(self, a: Iterable):
        self.a: Vec = _vec(a)
        if not self.a:
            raise MalformedInput("linear Hamiltonian needs at least one coefficient")
        self.dimension = len(self.a)

    def __repr__(self):
        return f"LinearHamiltonian({','.join(str(x) for x in self.a)})"

    def spec(self) -> str:
        return "linear:" + ",".join(str(x) for x in self.a)

    def value(self, p) -> Fraction:
        return _dot(self.a, _vec(p))

    def class_extrema(self, k=None):
        k = self._check_class(k)
        w = tuple(ki + ai for ki, ai in zip(k, self.a))
        top = _norm(w)
        return top, -top

    def critical_values(self, k=None):
        k = self._check_class(k)
        w = tuple(ki + ai for ki, ai in zip(k, self.a))
        if self.dimension == 1:
            return sorted({w[0], -w[0]})
        top = _norm(w)
        return sorted({top, -top})

    def values_at(self, directions):
        return np.asarray(directions, dtype=float) @ np.array([float(x) for x in self.a])

    def is_zero(self):
        return not any(self.a)

    def scaled(self, factor):
        f = Fraction(as_exponent(factor))
        return LinearHamiltonian(x * f for x in self.a)

    def to_pl(self, mesh: "PLHamiltonian | None" = None) -> "PLHamiltonian":
        if mesh is None:
            mesh = cross_polytope_mesh(self.dimension)
        return PLHamiltonian(mesh.vertices, [self.value(v) for v in mesh.vertices], mesh.simplices)

    def __add__(self, other):
        if isinstance(other, LinearHamiltonian):
            if other.dimension != self.dimension:
                raise ValueError("dimension mismatch")
            return LinearHamiltonian(x + y for x, y in zip(self.a, other.a))
        return NotImplemented

    def __radd__(self, other):
        return NotImplemented


class PLHamiltonian(SphereHamiltonian):
    """Cone-wise linear 1-homogeneous function on a simplicial fan."""

    def __init__(self, vertices: Iterable, values: Iterable, simplices: Iterable[Sequence[int]]):
        verts = [_vec(v) for v in vertices]
        vals = [Fraction(as_exponent(x)) for x in values]
        simps = [tuple(int(i) for i in s) for s in simplices]
        if not verts:
            raise MalformedInput("piecewise-linear Hamiltonian needs vertices", path="vertices")
        n = len(verts[0])
        if len(vals) != len(verts):
            raise MalformedInput("one value per vertex is required", path="values")
        for i, v in enumerate(verts):
            if len(v) != n or not any(v):
                raise MalformedInput(f"vertex {i} must be a nonzero vector of length {n}", path=f"vertices[{i}]")
        if n == 1:
            verts, vals, simps = self._canonical_line(verts, vals)
        self.dimension = n
        self.vertices: tuple[Vec, ...] = tuple(verts)
        self.values: tuple[Fraction, ...] = tuple(vals)
        self.simplices: tuple[tuple[int, ...], ...] = tuple(simps)
        self._cells = []  # (inverse of vertex matrix, coefficient vector c)
        for j, s in enumerate(self.simplices):
            if len(s) != n or len(set(s)) != n or not all(0 <= i < len(verts) for i in s):
                raise MalformedInput(f"simplex {j} must list {n} distinct vertex indices", path=f"simplices[{j}]")
            cols = [verts[i] for i in s]
            m = [[cols[c][r] for c in range(n)] for r in range(n)]
            inv = _inverse(m)
            if inv is None:
                raise MalformedInput(f"simplex {j} has linearly dependent vertices", path=f"simplices[{j}]")
            coef = _solve([list(v) for v in cols], [vals[i] for i in s])
            self._cells.append((inv, tuple(coef)))
        self._faces = self._collect_faces()
        self._float_cells = [(np.array([[float(x) for x in row] for row in inv]), np.array([float(x) for x in c]))
                             for inv, c in self._cells]
        if n >= 2:
            self._check_cover()

    @staticmethod
    def _canonical_line(verts, vals):
        pos = {v[0] and (vals[i] / v[0]) for i, v in enumerate(verts) if v[0] > 0}
        neg = {(vals[i] / -v[0]) for i, v in enumerate(verts) if v[0] < 0}
        if len(pos) != 1 or len(neg) != 1:
            raise MalformedInput("a 1-dimensional fan needs consistent values on both rays", path="vertices")
        return [(Fraction(1),), (Fraction(-1),)], [pos.pop(), neg.pop()], [(0,), (1,)]

    def _collect_faces(self):
        faces = {}
        for j, s in enumerate(self.simplices):
            for r in range(1, len(s) + 1):
                for face in itertools.combinations(sorted(s), r):
                    if face in faces:
                        continue
                    cols = [self.vertices[i] for i in face]
                    gram = [[_dot(a, b) for b in cols] for a in cols]
                    faces[face] = (j, cols, _inverse(gram))
        return [faces[f] for f in sorted(faces)]

    def _check_cover(self, count: int = 512):
        dirs = sphere_directions(self.dimension, count)
        covered = np.zeros(len(dirs), dtype=bool)
        for inv, _ in self._float_cells:
            covered |= np.all(dirs @ inv.T >= -1e-9, axis=1)
        if not covered.all():
            u = dirs[np.argmin(covered)]
            raise MalformedInput(f"simplices do not cover direction {np.round(u, 4).tolist()}", path="simplices")

    def __repr__(self):
        return f"PLHamiltonian(n={self.dimension}, vertices={len(self.vertices)}, simplices={len(self.simplices)})"

    def spec(self) -> str:
        return f"pl:<{len(self.vertices)} vertices>"

    def same_mesh(self, other: "PLHamiltonian") -> bool:
        return self.vertices == other.vertices and self.simplices == other.simplices

    def cell_of(self, p: Vec) -> int:
        for j, (inv, _) in enumerate(self._cells):
            if all(x >= 0 for x in _matvec(inv, p)):
                return j
        raise MalformedInput(f"direction {p} lies outside every cone")

    def value(self, p) -> Fraction:
        p = _vec(p)
        return _dot(self._cells[self.cell_of(p)][1], p)

    def class_candidates(self, k=None) -> set:
        """Values of ``k . u + H(u)`` at every stratified critical point."""
        k = self._check_class(k)
        out = set()
        for j, cols, gram_inv in self._faces:
            c = self._cells[j][1]
            w = tuple(ki + ci for ki, ci in zip(k, c))
            b = [_dot(v, w) for v in cols]
            if len(cols) == 1:
                v = cols[0]
                mag = surd.sqrt(b[0] * b[0] / _dot(v, v))
                out.add(mag if b[0] >= 0 else -mag)
                continue
            alpha = _matvec(gram_inv, b)
            if all(x > 0 for x in alpha):
                out.add(surd.sqrt(_dot(alpha, b)))
            elif all(x < 0 for x in alpha):
                out.add(-surd.sqrt(_dot(alpha, b)))
        return out

    def class_extrema(self, k=None):
        cands = self.class_candidates(k)
        return max(cands), min(cands)

    def critical_values(self, k=None):
        return sorted(self.class_candidates(k))

    def values_at(self, directions):
        directions = np.atleast_2d(np.asarray(directions, dtype=float))
        out = np.full(len(directions), np.nan)
        for inv, c in self._float_cells:
            inside = np.isnan(out) & np.all(directions @ inv.T >= -1e-12, axis=1)
            out[inside] = directions[inside] @ c
        if np.isnan(out).any():
            raise MalformedInput(f"direction {directions[np.isnan(out)][0]} lies outside every cone")
        return out

    def is_zero(self):
        return not any(self.values)

    def scaled(self, factor):
        f = Fraction(as_exponent(factor))
        return PLHamiltonian(self.vertices, [x * f for x in self.values], self.simplices)

    def lipschitz_bound(self) -> float:
        """Bound on the geodesic Lipschitz constant of H restricted to the sphere."""
        return max(float(np.linalg.norm(c)) for _, c in self._float_cells)

    def __add__(self, other):
        if isinstance(other, LinearHamiltonian):
            other = other.to_pl(self)
        if not isinstance(other, PLHamiltonian):
            return NotImplemented
        if other.dimension != self.dimension:
            raise ValueError("dimension mismatch")
        if self.same_mesh(other):
            return PLHamiltonian(self.vertices, [x + y for x, y in zip(self.values, other.values)], self.simplices)
        if self.dimension == 2:
            mesh = _refine_circle(self, other)
            return PLHamiltonian(mesh, [self.value(v) + other.value(v) for v in mesh],
                                 [(i, (i + 1) % len(mesh)) for i in range(len(mesh))])
        raise IncompatibleMesh("sums of piecewise-linear data need a shared mesh in dimension >= 3")

    def __radd__(self, other):
        if isinstance(other, LinearHamiltonian):
            return self + other
        return NotImplemented

    def to_json(self) -> dict:
        return {"vertices": [[str(x) for x in v] for v in self.vertices],
                "values": [str(x) for x in self.values],
                "simplices": [list(s) for s in self.simplices]}

    @classmethod
    def from_json(cls, doc) -> "PLHamiltonian":
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            return cls(doc["vertices"], doc["values"], doc["simplices"])
        except KeyError as exc:
            raise MalformedInput(f"piecewise-linear document is missing {exc}", path=str(exc).strip("'")) from exc
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, MalformedInput):
                raise
            raise MalformedInput(f"bad piecewise-linear document: {exc}") from exc

    @classmethod
    def circle(cls, directions: Iterable, values: Iterable) -> "PLHamiltonian":
        """Circle fan from directions in any order; values are H at those vectors."""
        pairs = [(_vec(d), Fraction(as_exponent(v))) for d, v in zip(directions, values)]
        pairs.sort(key=functools.cmp_to_key(lambda x, y: _angle_cmp(x[0], y[0])))
        verts = [p[0] for p in pairs]
        return cls(verts, [p[1] for p in pairs], [(i, (i + 1) % len(verts)) for i in range(len(verts))])


def _refine_circle(h: PLHamiltonian, g: PLHamiltonian) -> list[Vec]:
    seen = {}
    for v in h.vertices + g.vertices:
        key = _primitive(v)
        seen.setdefault(key, tuple(Fraction(x) for x in key))
    return sorted(seen.values(), key=functools.cmp_to_key(_angle_cmp))


def cross_polytope_mesh(n: int) -> PLHamiltonian:
    """Zero function on the fan of coordinate orthants."""
    verts = []
    for i in range(n):
        for sgn in (1, -1):
            verts.append(tuple(Fraction(sgn if j == i else 0) for j in range(n)))
    if n == 1:
        return PLHamiltonian(verts, [0, 0], [(0,), (1,)])
    simps = [tuple(2 * i + (1 if (mask >> i) & 1 else 0) for i in range(n)) for mask in range(2 ** n)]
    return PLHamiltonian(verts, [0] * len(verts), simps)


def sphere_directions(n: int, count: int) -> np.ndarray:
    """Deterministic, roughly uniform unit directions."""
    if n == 1:
        return np.array([[1.0], [-1.0]])
    if n == 2:
        t = 2 * np.pi * (np.arange(count) + 0.5) / count
        return np.column_stack([np.cos(t), np.sin(t)])
    if n == 3:
        i = np.arange(count) + 0.5
        z = 1 - 2 * i / count
        r = np.sqrt(1 - z * z)
        phi = np.pi * (1 + 5 ** 0.5) * i
        return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])
    rng = np.random.default_rng(12345)
    x = rng.normal(size=(count, n))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


class SampledHamiltonian(SphereHamiltonian):
    """Values on a finite set of unit directions.

    ``resolution`` is the geodesic covering radius of the samples: every
    point of the sphere lies within that distance of a sample. When not
    given it is estimated from nearest-neighbour spacing.
    """

    exact = False

    def __init__(self, directions, values, resolution: float | None = None, lipschitz: float | None = None):
        d = np.atleast_2d(np.asarray(directions, dtype=float))
        norms = np.linalg.norm(d, axis=1)
        if np.any(norms == 0):
            raise MalformedInput("sample directions must be nonzero")
        self.directions = d / norms[:, None]
        self.samples = np.asarray(values, dtype=float).reshape(-1)
        if len(self.samples) != len(self.directions):
            raise MalformedInput("one value per sample direction is required")
        self.dimension = self.directions.shape[1]
        if self.dimension == 1:
            self.neighbors = [[] for _ in self.samples]
            self.resolution = 0.0 if resolution is None else float(resolution)
        else:
            tree = cKDTree(self.directions)
            dist, _ = tree.query(self.directions, k=2)
            spacing = float(dist[:, 1].max())
            self.neighbors = tree.query_ball_point(self.directions, r=1.5 * spacing)
            self.resolution = (2 * math.asin(min(1.0, spacing / 2))) if resolution is None else float(resolution)
        self.lipschitz = self._estimate_lipschitz() if lipschitz is None else float(lipschitz)

    @classmethod
    def from_hamiltonian(cls, h: SphereHamiltonian, count: int, resolution: float | None = None):
        dirs = sphere_directions(h.dimension, count)
        if resolution is None and h.dimension == 2:
            resolution = math.pi / count
        lip = h.lipschitz_bound() if hasattr(h, "lipschitz_bound") else None
        if isinstance(h, LinearHamiltonian):
            lip = float(np.linalg.norm([float(x) for x in h.a]))
        return cls(dirs, h.values_at(dirs), resolution=resolution, lipschitz=lip)

    def _estimate_lipschitz(self) -> float:
        best = 0.0
        for i, nbrs in enumerate(self.neighbors):
            for j in nbrs:
                if j != i:
                    gap = float(np.linalg.norm(self.directions[i] - self.directions[j]))
                    best = max(best, abs(self.samples[i] - self.samples[j]) / gap)
        return best

    def __repr__(self):
        return f"SampledHamiltonian(n={self.dimension}, samples={len(self.samples)}, eps={self.resolution:.3g})"

    def spec(self) -> str:
        return f"samples:<{len(self.samples)}>"

    def _f(self, k) -> np.ndarray:
        k = self._check_class(k)
        return self.directions @ np.asarray(k, dtype=float) + self.samples

    def tolerance(self, k=None) -> float:
        k = self._check_class(k)
        return (float(np.linalg.norm(k)) + self.lipschitz) * self.resolution

    def class_extrema(self, k=None):
        f = self._f(k)
        return float(f.max()), float(f.min())

    def critical_values(self, k=None):
        f = self._f(k)
        tol = self.tolerance(k)
        if self.dimension == 1:
            return sorted(set(float(x) for x in f))
        if f.max() - f.min() <= tol:
            return [float(f.max())]
        kinds = {}
        for i, nbrs in enumerate(self.neighbors):
            others = [j for j in nbrs if j != i]
            if not others:
                raise ResolutionTooCoarse(f"sample {i} has no neighbours at the current spacing")
            if all(f[i] >= f[j] for j in others):
                kinds[i] = 1
            elif all(f[i] <= f[j] for j in others):
                kinds[i] = -1
        for i, kind in kinds.items():
            for j in self.neighbors[i]:
                if kinds.get(j) == -kind and abs(f[i] - f[j]) > tol:
                    raise ResolutionTooCoarse(
                        f"adjacent samples {i} and {j} are a local max and a local min; refine the sampling")
        vals = sorted(float(f[i]) for i in kinds)
        merged: list[float] = []
        for v in vals:
            if not merged or v - merged[-1] > tol:
                merged.append(v)
        return merged

    def values_at(self, directions):
        directions = np.atleast_2d(np.asarray(directions, dtype=float))
        idx = np.argmax(directions @ self.directions.T, axis=1)
        return self.samples[idx]

    def is_zero(self):
        return bool(np.all(self.samples == 0))

    def scaled(self, factor):
        return SampledHamiltonian(self.directions, self.samples * float(factor), self.resolution,
                                  self.lipschitz * abs(float(factor)))

    def __add__(self, other):
        if isinstance(other, SampledHamiltonian):
            if other.directions.shape != self.directions.shape or not np.array_equal(other.directions,
                                                                                      self.directions):
                raise IncompatibleMesh("sampled Hamiltonians must share their sample directions")
            return SampledHamiltonian(self.directions, self.samples + other.samples, self.resolution,
                                      self.lipschitz + other.lipschitz)
        if isinstance(other, (LinearHamiltonian, PLHamiltonian)):
            lip = (other.lipschitz_bound() if isinstance(other, PLHamiltonian)
                   else float(np.linalg.norm([float(x) for x in other.a])))
            return SampledHamiltonian(self.directions, self.samples + other.values_at(self.directions),
                                      self.resolution, self.lipschitz + lip)
        return NotImplemented

    __radd__ = __add__

    @classmethod
    def from_csv(cls, path) -> "SampledHamiltonian":
        rows = []
        with open(path, newline="") as fh:
            for lineno, row in enumerate(csv.reader(fh), start=1):
                if not row or row[0].lstrip().startswith("#"):
                    continue
                try:
                    rows.append([float(x) for x in row])
                except ValueError:
                    if lineno == 1:
                        continue  # header
                    raise MalformedInput(f"line {lineno}: expected numbers, got {row}", path=f"line {lineno}")
        if not rows or len({len(r) for r in rows}) != 1 or len(rows[0]) < 2:
            raise MalformedInput("sample file needs rows of u1,...,un,value")
        arr = np.array(rows)
        return cls(arr[:, :-1], arr[:, -1])


def parse_hamiltonian(spec: str, base: Path | None = None) -> SphereHamiltonian:
    """Parse ``linear:a1,...,an``, ``pl:<file>`` or ``samples:<file>``."""
    kind, _, arg = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "linear":
        try:
            return LinearHamiltonian(x for x in arg.split(",") if x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInput(f"bad linear Hamiltonian {spec!r}: {exc}") from exc
    path = Path(arg)
    if base is not None and not path.is_absolute():
        path = base / path
    if kind == "pl":
        return PLHamiltonian.from_json(path.read_text())
    if kind == "samples":
        return SampledHamiltonian.from_csv(path)
    raise MalformedInput(f"unknown Hamiltonian kind {kind!r}; use linear:, pl: or samples:")


# -- model invariants ----------------------------------------------------------

def class_spectral(h: SphereHamiltonian, k: Sequence[int] | None = None):
    """max over the unit sphere of ``k . u + H(u)``."""
    return h.class_extrema(k)[0]


def shape_spectral(h: SphereHamiltonian):
    """Spectral invariant of the unit: the maximum of H on the unit sphere."""
    return class_spectral(h, None)


def oscillation_exact(h: SphereHamiltonian):
    """max H - min H over the unit sphere."""
    top, bottom = h.class_extrema(None)
    return top - bottom


def spectrum(h: SphereHamiltonian, k: Sequence[int] | None = None) -> tuple:
    """Critical values of ``u -> k . u + H(u)`` on the sphere.

    Exact data report every stratified critical value (vertices included);
    sampled data report local extrema of the sample graph merged within the
    sampling tolerance.
    """
    return tuple(h.critical_values(k))


def order_leq(h: SphereHamiltonian, g: SphereHamiltonian) -> bool:
    """Whether ``H <= G`` everywhere on the represented sphere.

    Two independent routes are compared: a pointwise check (vertex values of
    the difference for exact data, sample values otherwise) and the sign of
    ``shape_spectral(H - G)``.

    Raises
    ------
    Inconsistent
        If the two routes disagree beyond the data resolution.
    """
    diff = h - g
    top = shape_spectral(diff)
    if diff.exact:
        pl = diff.to_pl() if isinstance(diff, LinearHamiltonian) else diff
        pointwise = all(x <= 0 for x in pl.values)
        spectral_side = top <= 0
        if pointwise != spectral_side:
            raise Inconsistent(f"pointwise comparison says {pointwise} but max(H-G) = {top}")
        return pointwise
    pointwise = bool(np.all(diff.samples <= 0))
    tol = diff.tolerance()
    if (pointwise and top > tol) or (not pointwise and top < -tol):
        raise Inconsistent(f"pointwise comparison says {pointwise} but max(H-G) = {top}")
    return pointwise


def check_systolic_bound(h: SphereHamiltonian, k: int) -> Report:
    """Compare c(1; phi^k) with sys_k for the loop generated by ``h`` on the circle."""
    if h.dimension != 1 or not isinstance(h, LinearHamiltonian):
        raise ValueError("the systolic bound is modelled for linear Hamiltonians on T*S^1 only")
    k = int(k)
    if k == 0:
        raise ContractibleClass("the systolic bound needs k != 0")
    hk = h.scaled(k)
    c = shape_spectral(hk)
    gamma = oscillation_exact(hk)
    sys_k = systole(1, (k,))
    sys_minus = systole(1, (-k,))
    ok = c >= sys_k and gamma >= sys_k + sys_minus
    witness = {"k": k, "c": c, "sys": sys_k, "gamma": gamma, "margin": c - sys_k}
    return Report("systolic_bound", ok, f"c={c} sys={sys_k} gamma={gamma} margin={c - sys_k}", witness)


def build_algebra(hams: Mapping[str, SphereHamiltonian] | Sequence[SphereHamiltonian],
                  classes: Iterable[Sequence[int]]) -> PersistenceAlgebra:
    """Assemble the model's persistence algebra.

    Every label (a Hamiltonian) carries one bar ``[class_spectral(H, k), inf)``
    per class ``k``, listed in class order. Composition is addition of
    Hamiltonians, inversion is negation, and the product sends the ``k`` bar
    of ``H`` and the ``l`` bar of ``G`` to the ``k + l`` bar of ``H + G``
    whenever both sums are present. The zero Hamiltonian and the zero class
    are required, as is closure under negation.
    """
    if isinstance(hams, Mapping):
        names = [str(x) for x in hams]
        hs = list(hams.values())
    else:
        hs = list(hams)
        names = [h.spec() if hasattr(h, "spec") else f"H{i}" for i, h in enumerate(hs)]
    if len(set(names)) != len(names):
        raise ClosureViolation("label names must be distinct")
    if not hs:
        raise ClosureViolation("at least the zero Hamiltonian is required")
    if any(not h.exact for h in hs):
        raise TypeError("build_algebra needs exact (linear or piecewise-linear) Hamiltonians")
    n = hs[0].dimension
    cls_list = [parse_class(k) for k in classes]
    if any(len(k) != n for k in cls_list):
        raise ClosureViolation(f"every class must lie in Z^{n}")
    if len(set(cls_list)) != len(cls_list):
        raise ClosureViolation("classes must be distinct")
    zero = (0,) * n
    if zero not in cls_list:
        raise ClosureViolation("the zero class is required for the unit")
    class_index = {k: i for i, k in enumerate(cls_list)}

    def find(target: SphereHamiltonian) -> str | None:
        for name, h in zip(names, hs):
            if h.equals(target):
                return name
        return None

    identity = next((name for name, h in zip(names, hs) if h.is_zero()), None)
    if identity is None:
        raise ClosureViolation("the zero Hamiltonian (identity isotopy) is required")
    inverse = {}
    for name, h in zip(names, hs):
        inv = find(-h)
        if inv is None:
            raise ClosureViolation(f"the negation of {name!r} is missing")
        inverse[name] = inv
    compose = {}
    for (n1, h1), (n2, h2) in itertools.product(zip(names, hs), repeat=2):
        total = find(h1 + h2)
        if total is not None:
            compose[(n1, n2)] = total
    modules = {name: Barcode(Bar(class_spectral(h, k)) for k in cls_list) for name, h in zip(names, hs)}
    unit = class_index[zero]
    products = []
    for (g, h), gh in compose.items():
        for (i, k), (j, l) in itertools.product(enumerate(cls_list), repeat=2):
            s = tuple(a + b for a, b in zip(k, l))
            if s in class_index:
                products.append(ProductEntry(g, h, i, j, (class_index[s],)))
    units = {name: ColimitClass([unit]) for name in names}
    return PersistenceAlgebra(tuple(names), identity, compose, inverse, modules, unit, tuple(products), units)
