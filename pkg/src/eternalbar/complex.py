"""Filtered chain complexes over the Novikov field.

A complex has finitely many generators, each with an action and a free
homotopy label, and a differential given per generator as a list of
``(target, area)`` entries meaning ``d(y) = sum tau^area * target``.

Linear algebra over the field is done fraction-free: a row operation
``v <- a*v + c*b`` multiplies ``v`` by the nonzero scalar ``a`` instead of
dividing by it. Finite-support elements form an integral domain inside the
field, so ranks, kernels and spans are exact and no truncation is needed.
"""
from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import MalformedComplex, NotACycle, TruncationOverflow, ZeroClass
from .exponents import INF, NEG_INF, Exponent, as_exponent
from .novikov import Nov, default_window
from .report import Report


@dataclass(frozen=True)
class Generator:
    id: str
    action: Fraction = Fraction(0)
    hclass: str = "0"
    grading: int | None = None


class Chain(Mapping):
    """Immutable finite combination ``sum coef_i * x_i`` with Novikov coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[str, Nov] | Iterable[tuple[str, Nov]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[str, Nov] = {}
        for gid, coef in items:
            acc[gid] = acc.get(gid, Nov.zero()) + coef
        self._terms = {g: c for g, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, gid: str, exponent=0) -> "Chain":
        return cls({gid: Nov.monomial(exponent)})

    @classmethod
    def parse(cls, spec: str) -> "Chain":
        """Parse ``"x1:0,x2:3/2"`` (generator:exponent terms, summed mod 2)."""
        terms = []
        for part in spec.split(","):
            part = part.strip()
            if not part:
                continue
            gid, _, exp = part.partition(":")
            terms.append((gid.strip(), Nov.monomial(exp.strip() or "0")))
        return cls(terms)

    def __getitem__(self, gid):
        return self._terms[gid]

    def get(self, gid, default=None):
        return self._terms.get(gid, default)

    def __iter__(self) -> Iterator[str]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Chain):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: "Chain") -> "Chain":
        if not other:
            return self
        if not self:
            return other
        acc = dict(self._terms)
        for g, c in other._terms.items():
            acc[g] = acc.get(g, Nov.zero()) + c
        return Chain(acc)

    __sub__ = __add__

    def scale(self, a: Nov) -> "Chain":
        if not a:
            return _EMPTY
        return Chain({g: c * a for g, c in self._terms.items()})

    def shift(self, a) -> "Chain":
        return Chain({g: c.shift(a) for g, c in self._terms.items()})

    def min_exponent(self):
        return min((c.val() for c in self._terms.values()), default=INF)

    def to_json(self) -> dict[str, list[str]]:
        return {g: c.to_json() for g, c in self._terms.items()}

    def __repr__(self):
        inner = ", ".join(f"{g}: {c!r}" for g, c in self._terms.items())
        return f"Chain({{{inner}}})"


_EMPTY = Chain()


class FilteredComplex:
    """Generators with actions and homotopy labels plus a Novikov differential."""

    def __init__(self, generators: Iterable[Generator], boundary: Mapping[str, Iterable] | None = None):
        self.generators: tuple[Generator, ...] = tuple(generators)
        self._index: dict[str, int] = {}
        for i, g in enumerate(self.generators):
            if g.id in self._index:
                raise MalformedComplex(f"duplicate generator id {g.id!r}", path=f"generators[{i}].id")
            self._index[g.id] = i
        self.boundary: dict[str, tuple[tuple[str, Fraction], ...]] = {}
        for src, entries in (boundary or {}).items():
            if src not in self._index:
                raise MalformedComplex(f"boundary of unknown generator {src!r}", path=f"boundary.{src}")
            clean = []
            for target, area in entries:
                if target not in self._index:
                    raise MalformedComplex(f"boundary of {src!r} names unknown generator {target!r}",
                                           path=f"boundary.{src}")
                clean.append((target, Fraction(as_exponent(area))))
            if clean:
                self.boundary[src] = tuple(clean)
        self._columns: dict[str, Chain] = {}

    def __len__(self):
        return len(self.generators)

    def index(self, gid: str) -> int:
        return self._index[gid]

    def generator(self, gid: str) -> Generator:
        return self.generators[self._index[gid]]

    def action(self, gid: str) -> Fraction:
        return self.generators[self._index[gid]].action

    def ids(self) -> list[str]:
        return [g.id for g in self.generators]

    def d_generator(self, gid: str) -> Chain:
        col = self._columns.get(gid)
        if col is None:
            col = Chain((t, Nov.monomial(a)) for t, a in self.boundary.get(gid, ()))
            self._columns[gid] = col
        return col

    def d(self, z: Chain) -> Chain:
        out = _EMPTY
        for gid, coef in z.items():
            out = out + self.d_generator(gid).scale(coef)
        return out

    def is_cycle(self, z: Chain) -> bool:
        return not self.d(z)

    def relabel(self, order: Iterable[str]) -> "FilteredComplex":
        """Same complex with generators listed in ``order``."""
        gens = [self.generator(g) for g in order]
        return FilteredComplex(gens, self.boundary)

    @classmethod
    def from_json(cls, doc) -> "FilteredComplex":
        if isinstance(doc, str):
            doc = json.loads(doc)
        if not isinstance(doc, dict) or "generators" not in doc:
            raise MalformedComplex("complex document needs a 'generators' list", path="generators")
        gens = []
        for i, g in enumerate(doc["generators"]):
            try:
                grading = g.get("grading")
                gens.append(Generator(str(g["id"]), Fraction(as_exponent(g.get("action", "0"))),
                                      str(g.get("hclass", "0")), None if grading is None else int(grading)))
            except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
                raise MalformedComplex(f"bad generator entry: {exc}", path=f"generators[{i}]") from exc
        boundary = {}
        for src, entries in (doc.get("boundary") or {}).items():
            try:
                boundary[src] = [(str(t), as_exponent(a)) for t, a in entries]
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise MalformedComplex(f"bad boundary entry: {exc}", path=f"boundary.{src}") from exc
        return cls(gens, boundary)

    def to_json(self) -> dict:
        return {
            "generators": [{"id": g.id, "action": str(g.action), "hclass": g.hclass, "grading": g.grading}
                           for g in self.generators],
            "boundary": {src: [[t, str(a)] for t, a in entries] for src, entries in self.boundary.items()},
        }


# -- filtration --------------------------------------------------------------

def valuation(c: FilteredComplex, z: Chain) -> Exponent:
    """min over monomials of (exponent + action); +inf for the zero chain."""
    return min((coef.val() + c.action(g) for g, coef in z.items()), default=INF)


def filtration_level(c: FilteredComplex, z: Chain) -> Exponent:
    """The non-archimedean level ``l(z) = -valuation(z)``, with ``l(0) = -inf``."""
    v = valuation(c, z)
    return NEG_INF if v == INF else -v


def _leading_mask(c: FilteredComplex, z: Chain, v) -> int:
    mask = 0
    for g, coef in z.items():
        if coef.val() + c.action(g) == v:
            mask |= 1 << c.index(g)
    return mask


# -- verification ------------------------------------------------------------

def verify_complex(c: FilteredComplex) -> Report:
    """Check area non-negativity, homotopy-class preservation and d^2 = 0."""
    for src, entries in c.boundary.items():
        for target, area in entries:
            if area < 0:
                return Report("verify_complex", False, "negative area", (src, target, area))
    for src, entries in c.boundary.items():
        for target, area in entries:
            if c.generator(src).hclass != c.generator(target).hclass:
                return Report("verify_complex", False, "boundary crosses homotopy classes",
                              (src, target, area))
    for g in c.generators:
        dd = c.d(c.d_generator(g.id))
        if dd:
            far, coef = next(iter(dd.items()))
            exponent = coef.val()
            # find a path g -> mid -> far realising the surviving exponent
            mid = next((t for t, a in c.boundary.get(g.id, ())
                        if any(t2 == far and a + a2 == exponent for t2, a2 in c.boundary.get(t, ()))), None)
            return Report("verify_complex", False, "d∘d ≠ 0", (g.id, mid, far, exponent))
    return Report("verify_complex", True)


def split_by_class(c: FilteredComplex) -> dict[str, FilteredComplex]:
    """Direct-sum decomposition by free homotopy label."""
    report = verify_complex(c)
    if not report:
        raise MalformedComplex(f"{report.message}: {report.witness}")
    labels: dict[str, list[Generator]] = {}
    for g in c.generators:
        labels.setdefault(g.hclass, []).append(g)
    out = {}
    for label in sorted(labels):
        gens = labels[label]
        keep = {g.id for g in gens}
        out[label] = FilteredComplex(gens, {s: e for s, e in c.boundary.items() if s in keep})
    return out


# -- exact elimination -------------------------------------------------------

def _normalize_pair(vec: Chain, track: Chain | None):
    """Divide out the common monomial factor (a unit of the field)."""
    low = vec.min_exponent()
    if track is not None:
        low = min(low, track.min_exponent())
    if low == INF or low == 0:
        return vec, track
    return vec.shift(-low), (track.shift(-low) if track is not None else None)


class _Echelon:
    """Incremental fraction-free echelon form over the Novikov field.

    Pivots are the entries of minimal valuation, ties broken by generator
    order, which keeps the reduction deterministic.
    """

    def __init__(self, c: FilteredComplex):
        self.c = c
        self.rows: list[tuple[str, Chain, Chain | None]] = []

    def _pivot(self, vec: Chain) -> str:
        return min(vec.items(), key=lambda kv: (kv[1].val(), self.c.index(kv[0])))[0]

    def reduce(self, vec: Chain, track: Chain | None = None):
        for pivot, row, row_track in self.rows:
            coef = vec.get(pivot)
            if coef is None:
                continue
            lead = row[pivot]
            vec = vec.scale(lead) + row.scale(coef)
            if track is not None:
                track = track.scale(lead) + (row_track.scale(coef) if row_track is not None else _EMPTY)
            vec, track = _normalize_pair(vec, track)
        return vec, track

    def add(self, vec: Chain, track: Chain | None = None) -> bool:
        """Insert ``vec``; return False when it was already in the span."""
        vec, track = self.reduce(vec, track)
        if not vec:
            return False
        self.rows.append((self._pivot(vec), vec, track))
        return True

    def contains(self, vec: Chain) -> bool:
        return not self.reduce(vec)[0]

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank_of(c: FilteredComplex, vectors: Iterable[Chain]) -> int:
    ech = _Echelon(c)
    for v in vectors:
        ech.add(v)
    return ech.rank


@dataclass(frozen=True)
class Homology:
    rank: int
    representatives: tuple[Chain, ...]
    cycles: tuple[Chain, ...]
    boundaries: tuple[Chain, ...]
    exact: bool = True


def _cycles_and_boundaries(c: FilteredComplex):
    ech = _Echelon(c)
    cycles: list[Chain] = []
    boundaries: list[Chain] = []
    for g in c.generators:
        col = c.d_generator(g.id)
        vec, track = ech.reduce(col, Chain.monomial(g.id))
        if vec:
            ech.rows.append((ech._pivot(vec), vec, track))
            boundaries.append(col)
        else:
            cycles.append(track)
    return cycles, boundaries


def homology(c: FilteredComplex) -> Homology:
    """Homology over the Novikov field with cycle representatives.

    Boundaries are the images of the pivot columns; cycles come from the
    column operations that annihilate the remaining columns. A cycle is a
    new homology class when it is independent of the boundaries and the
    classes chosen so far.
    """
    report = verify_complex(c)
    if not report:
        raise MalformedComplex(f"{report.message}: {report.witness}")
    cycles, boundaries = _cycles_and_boundaries(c)
    ech = _Echelon(c)
    for b in boundaries:
        ech.add(b)
    reps = [z for z in cycles if ech.add(z)]
    return Homology(len(reps), tuple(reps), tuple(cycles), tuple(boundaries))


# -- minimal filtration ------------------------------------------------------

class _LeadingSpan:
    """F2 span of leading-part bitmasks, remembering which vectors produced them."""

    def __init__(self):
        self.basis: dict[int, tuple[int, int]] = {}  # top bit -> (mask, combo)

    def express(self, mask: int) -> int | None:
        combo = 0
        while mask:
            top = mask.bit_length() - 1
            entry = self.basis.get(top)
            if entry is None:
                return None
            mask ^= entry[0]
            combo ^= entry[1]
        return combo

    def insert(self, mask: int, index: int):
        combo = 1 << index
        while mask:
            top = mask.bit_length() - 1
            entry = self.basis.get(top)
            if entry is None:
                self.basis[top] = (mask, combo)
                return
            mask ^= entry[0]
            combo ^= entry[1]
        raise ValueError("leading parts are dependent")


class _OrthogonalBasis:
    """Valuation-orthogonal basis of a subspace.

    Vectors are orthogonal when the valuation of any combination is the
    minimum of the termwise valuations; with Z/2 residues this holds
    exactly when their leading parts are independent over F2.
    """

    def __init__(self, c: FilteredComplex, window: Fraction):
        self.c = c
        self.window = window
        self.vectors: list[Chain] = []
        self.vals: list[Fraction] = []
        self.span = _LeadingSpan()

    def reduce(self, z: Chain) -> Chain:
        """Push the valuation of ``z`` up as far as the span allows."""
        c = self.c
        start = valuation(c, z)
        while z:
            v = valuation(c, z)
            if v - start > self.window:
                raise TruncationOverflow(
                    f"valuation climbed past the working window {self.window} without settling")
            combo = self.span.express(_leading_mask(c, z, v))
            if combo is None:
                return z
            j = 0
            while combo:
                if combo & 1:
                    z = z + self.vectors[j].shift(v - self.vals[j])
                combo >>= 1
                j += 1
        return z

    def add(self, w: Chain):
        w = self.reduce(w)
        if not w:
            raise ValueError("vector lies in the span already")
        v = valuation(self.c, w)
        self.span.insert(_leading_mask(self.c, w, v), len(self.vectors))
        self.vectors.append(w)
        self.vals.append(v)


def orthogonal_boundary_basis(c: FilteredComplex, window=None) -> list[Chain]:
    window = default_window() if window is None else Fraction(window)
    _, boundaries = _cycles_and_boundaries(c)
    basis = _OrthogonalBasis(c, window)
    for b in boundaries:
        basis.add(b)
    return basis.vectors


def optimal_representative(c: FilteredComplex, h: Chain, window=None) -> tuple[Exponent, Chain]:
    """The least filtration level in the class of ``h`` and a cycle attaining it.

    Raises
    ------
    NotACycle
        If ``d(h) != 0``.
    ZeroClass
        If ``h`` is a boundary; the infimum is then -inf.
    """
    window = default_window() if window is None else Fraction(window)
    if not c.is_cycle(h):
        raise NotACycle("chain is not a cycle")
    _, boundaries = _cycles_and_boundaries(c)
    ech = _Echelon(c)
    for b in boundaries:
        ech.add(b)
    if ech.contains(h):
        raise ZeroClass("class is zero; the infimum of the filtration level is -inf")
    basis = _OrthogonalBasis(c, window)
    for b in boundaries:
        basis.add(b)
    best = basis.reduce(h)
    return filtration_level(c, best), best


def min_filtration(c: FilteredComplex, h: Chain, window=None) -> Exponent:
    return optimal_representative(c, h, window)[0]
