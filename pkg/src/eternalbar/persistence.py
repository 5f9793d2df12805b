"""Finitely presented persistence modules over Z/2 and their barcodes.

A presentation lists generators with birth levels and relations with the
level at which they take effect. The module at ``s`` is spanned by the
generators born at or before ``s`` modulo the relations with level at or
before ``s``. Bars are half-open ``[birth, death)``; births may be -inf and
deaths +inf.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import BasisMismatch, MalformedPresentation
from .exponents import INF, NEG_INF, as_exponent, format_exponent


@dataclass(frozen=True)
class Bar:
    birth: object
    death: object = INF

    def __post_init__(self):
        if not self.birth < self.death:
            raise ValueError(f"bar needs birth < death, got [{self.birth}, {self.death})")

    @property
    def is_full(self) -> bool:
        return self.birth == NEG_INF and self.death == INF

    @property
    def is_right_infinite(self) -> bool:
        return self.death == INF

    @property
    def is_half(self) -> bool:
        """Bars ``[a, inf)`` with finite ``a``."""
        return self.death == INF and self.birth != NEG_INF

    def contains(self, s) -> bool:
        return self.birth <= s < self.death

    def to_json(self, decimal: int | None = None) -> dict:
        return {"birth": format_exponent(self.birth, decimal), "death": format_exponent(self.death, decimal)}

    def __str__(self):
        if self.is_full:
            return "ℝ"
        left = "(-inf" if self.birth == NEG_INF else f"[{format_exponent(self.birth)}"
        right = "inf)" if self.death == INF else f"{format_exponent(self.death)})"
        return f"{left}, {right}"


@dataclass(frozen=True)
class Barcode:
    bars: tuple[Bar, ...] = ()

    def __init__(self, bars: Iterable[Bar] = ()):
        object.__setattr__(self, "bars", tuple(bars))

    def __len__(self):
        return len(self.bars)

    def __iter__(self):
        return iter(self.bars)

    def __getitem__(self, i) -> Bar:
        return self.bars[i]

    def rank_at(self, s) -> int:
        return sum(b.contains(s) for b in self.bars)

    def critical_values(self) -> list:
        vals = {x for b in self.bars for x in (b.birth, b.death) if not (isinstance(x, float) and math.isinf(x))}
        return sorted(vals)

    def to_json(self, decimal: int | None = None) -> dict:
        return {"bars": [b.to_json(decimal) for b in self.bars]}

    @classmethod
    def from_json(cls, doc) -> "Barcode":
        if isinstance(doc, str):
            doc = json.loads(doc)
        if not isinstance(doc, dict) or "bars" not in doc:
            raise MalformedPresentation("barcode document needs a 'bars' list", path="bars")
        bars = []
        for i, b in enumerate(doc["bars"]):
            try:
                bars.append(Bar(as_exponent(b["birth"]), as_exponent(b.get("death", "inf"))))
            except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
                raise MalformedPresentation(f"bad bar: {exc}", path=f"bars[{i}]") from exc
        return cls(bars)

    def __add__(self, other: "Barcode") -> "Barcode":
        return Barcode(self.bars + other.bars)


@dataclass(frozen=True)
class ColimitClass:
    """Z/2 combination of right-infinite bars, stored as bar indices."""

    bars: frozenset[int]

    def __init__(self, bars: Iterable[int] = ()):
        acc: set[int] = set()
        for i in bars:
            acc ^= {int(i)}
        object.__setattr__(self, "bars", frozenset(acc))

    def __bool__(self):
        return bool(self.bars)

    def __add__(self, other: "ColimitClass") -> "ColimitClass":
        return ColimitClass(self.bars ^ other.bars)

    def __iter__(self):
        return iter(sorted(self.bars))


def _parity(ids) -> frozenset[str]:
    acc: set[str] = set()
    for i in ids:
        acc ^= {str(i)}
    return frozenset(acc)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[tuple[str, object], ...]
    relations: tuple[tuple[object, frozenset[str]], ...]

    def __init__(self, generators: Iterable, relations: Iterable = ()):
        gens = tuple((str(g), as_exponent(b)) for g, b in generators)
        rels = tuple((as_exponent(level), _parity(support)) for level, support in relations)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)
        self.validate()

    def validate(self):
        births: dict[str, object] = {}
        for i, (gid, birth) in enumerate(self.generators):
            if gid in births:
                raise MalformedPresentation(f"duplicate generator id {gid!r}", path=f"generators[{i}].id")
            if birth == INF:
                raise MalformedPresentation(f"generator {gid!r} born at +inf", path=f"generators[{i}].birth")
            births[gid] = birth
        for i, (level, support) in enumerate(self.relations):
            if not support:
                raise MalformedPresentation("relation with empty support", path=f"relations[{i}].support")
            if level == NEG_INF:
                raise MalformedPresentation("relation at level -inf", path=f"relations[{i}].level")
            for gid in sorted(support):
                if gid not in births:
                    raise MalformedPresentation(f"relation names unknown generator {gid!r}",
                                                path=f"relations[{i}].support")
                if level < births[gid]:
                    raise MalformedPresentation(
                        f"relation level {format_exponent(level)} precedes birth of {gid!r}",
                        path=f"relations[{i}].level")

    def birth_of(self) -> dict[str, object]:
        return dict(self.generators)

    def critical_values(self) -> list:
        vals = {b for _, b in self.generators if b != NEG_INF}
        vals |= {lv for lv, _ in self.relations if lv != INF}
        return sorted(vals)

    @classmethod
    def from_json(cls, doc) -> "Presentation":
        if isinstance(doc, str):
            doc = json.loads(doc)
        if not isinstance(doc, dict) or "generators" not in doc:
            raise MalformedPresentation("presentation document needs a 'generators' list", path="generators")
        try:
            gens = [(g["id"], as_exponent(g["birth"])) for g in doc["generators"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise MalformedPresentation(f"bad generator entry: {exc}", path="generators") from exc
        rels = []
        for i, r in enumerate(doc.get("relations", [])):
            try:
                rels.append((as_exponent(r.get("level", "inf")), list(r["support"])))
            except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
                raise MalformedPresentation(f"bad relation entry: {exc}", path=f"relations[{i}]") from exc
        return cls(gens, rels)

    def to_json(self) -> dict:
        return {
            "generators": [{"id": g, "birth": format_exponent(b)} for g, b in self.generators],
            "relations": [{"level": format_exponent(lv), "support": sorted(s)} for lv, s in self.relations],
        }


def barcode(p: Presentation) -> Barcode:
    """Interval decomposition by column reduction of the relation matrix.

    Generators are ordered by birth (ties by listing order) and relations by
    level. Each relation column is reduced until its youngest generator is
    not already claimed; a nonzero column then ends the bar of that
    generator at the relation's level. Unclaimed generators live forever.
    """
    order = sorted(range(len(p.generators)), key=lambda i: (p.generators[i][1], i))
    position = {p.generators[i][0]: pos for pos, i in enumerate(order)}
    births = [p.generators[i][1] for i in order]
    rels = sorted((r for r in enumerate(p.relations) if r[1][0] != INF), key=lambda r: (r[1][0], r[0]))
    owner: dict[int, int] = {}  # pivot position -> reduced column
    death: dict[int, object] = {}
    for _, (level, support) in rels:
        col = 0
        for gid in support:
            col ^= 1 << position[gid]
        while col:
            pivot = col.bit_length() - 1
            if pivot not in owner:
                owner[pivot] = col
                death[pivot] = level
                break
            col ^= owner[pivot]
    bars = []
    for pos, birth in enumerate(births):
        d = death.get(pos, INF)
        if birth < d:
            bars.append(Bar(birth, d))
    return Barcode(bars)


def colim_basis(b: Barcode) -> list[int]:
    """Indices of the right-infinite bars, ordered by birth then position."""
    idx = [i for i, bar in enumerate(b.bars) if bar.is_right_infinite]
    return sorted(idx, key=lambda i: (b.bars[i].birth, i))


def eternal_subspace(b: Barcode) -> list[int]:
    """Indices of the fully infinite bars, which span the eternal classes."""
    return [i for i in colim_basis(b) if b.bars[i].is_full]


def check_class(b: Barcode, zeta: ColimitClass) -> None:
    for i in zeta.bars:
        if not 0 <= i < len(b.bars):
            raise BasisMismatch(f"class references bar {i}, barcode has {len(b.bars)} bars")
        if not b.bars[i].is_right_infinite:
            raise BasisMismatch(f"bar {i} = {b.bars[i]} dies; it is not a colimit basis element")


def is_eternal(b: Barcode, zeta: ColimitClass) -> bool:
    check_class(b, zeta)
    return all(b.bars[i].is_full for i in zeta.bars)


def hits_at(b: Barcode, zeta: ColimitClass, s) -> bool:
    """Whether ``zeta`` lies in the image of the module at level ``s``.

    A basis combination is in the image exactly when each constituent bar
    is already born at ``s``.
    """
    check_class(b, zeta)
    return all(b.bars[i].birth <= s for i in zeta.bars)


def rfh_rank(b: Barcode) -> int:
    """Rank of the cone of lim -> colim.

    Full bars map isomorphically and finite bars vanish on both sides, so
    only ``[a, inf)`` (cokernel) and ``(-inf, d)`` (kernel) contribute.
    """
    return sum(1 for bar in b.bars if (bar.is_half or (bar.birth == NEG_INF and bar.death != INF)))


def render(b: Barcode, width: int = 60) -> str:
    """ASCII picture: one line per bar, arrows where a bar is unbounded."""
    crit = b.critical_values()
    if not crit:
        crit = [0]
    lo, hi = float(crit[0]) - 1, float(crit[-1]) + 1
    span = hi - lo

    def col(x) -> int:
        return 1 + round((float(x) - lo) / span * (width - 3))

    lines = []
    for i, bar in enumerate(b.bars):
        row = [" "] * width
        start = 0 if bar.birth == NEG_INF else col(bar.birth)
        stop = width - 1 if bar.death == INF else col(bar.death)
        for j in range(start, stop + 1):
            row[j] = "-"
        row[start] = "<" if bar.birth == NEG_INF else "["
        row[stop] = ">" if bar.death == INF else ")"
        lines.append("".join(row) + f"  {i}: {bar}")
    ticks = [" "] * width
    labels = []
    for x in crit:
        ticks[col(x)] = "|"
        labels.append(format_exponent(x))
    lines.append("".join(ticks) + "  ticks: " + " ".join(labels))
    return "\n".join(lines)
