"""Spectral invariants, oscillation energy and verifiers on persistence algebras.

A persistence algebra is a finite monoid of labels (isotopies up to the
relations the user declares), one barcode per label, and a product table on
colimit basis bars. The table records ``(g, h, in1, in2) -> out`` where
``out`` is a combination of right-infinite bars of the label ``gh``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (EternalClass, Inconsistent, MalformedAlgebra, MissingInverse, MissingUnit,
                     ShiftRuleViolation, ZeroClass)
from .exponents import NEG_INF, as_exponent, format_exponent
from .persistence import Barcode, ColimitClass, check_class, hits_at, is_eternal
from .report import Report


def spectral_invariant(b: Barcode, zeta: ColimitClass):
    """Greatest birth among the half-infinite bars of ``zeta``; -inf if eternal."""
    if not zeta:
        raise ZeroClass("the spectral invariant of the zero class is undefined")
    check_class(b, zeta)
    return max(b.bars[i].birth for i in zeta.bars)


def integer_level(b: Barcode, zeta: ColimitClass, loop_period=1) -> int:
    """Smallest integer ``k`` such that ``k`` loop periods reach ``zeta``."""
    period = as_exponent(loop_period)
    if not period > 0:
        raise ValueError("loop period must be positive")
    c = spectral_invariant(b, zeta)
    if c == NEG_INF:
        raise EternalClass("eternal classes are hit at every level; the infimum is -inf")
    return math.ceil(c / period)


@dataclass(frozen=True)
class ProductEntry:
    g: str
    h: str
    in1: int
    in2: int
    out: tuple[int, ...]

    def key(self):
        return (self.g, self.h, self.in1, self.in2)

    def to_json(self) -> dict:
        return {"g": self.g, "h": self.h, "in1": self.in1, "in2": self.in2, "out": list(self.out)}


@dataclass(frozen=True)
class Relabeling:
    """Declared conjugation: ``source`` and ``target`` carry isomorphic barcodes.

    ``bar_map[i]`` is the target bar matched with source bar ``i``.
    """

    source: str
    target: str
    bar_map: tuple[int, ...]
    period: Fraction = Fraction(1)


@dataclass
class PersistenceAlgebra:
    labels: tuple[str, ...]
    identity: str
    compose: dict[tuple[str, str], str]
    inverse: dict[str, str]
    modules: dict[str, Barcode]
    unit: int
    products: tuple[ProductEntry, ...] = ()
    unit_classes: dict[str, ColimitClass] = field(default_factory=dict)
    relabelings: tuple[Relabeling, ...] = ()

    def __post_init__(self):
        self.labels = tuple(self.labels)
        self.products = tuple(sorted(self.products, key=ProductEntry.key))
        self.relabelings = tuple(self.relabelings)
        self.unit_classes = dict(self.unit_classes)
        self.unit_classes.setdefault(self.identity, ColimitClass([self.unit]))
        self._validate()

    # -- load-time invariants -------------------------------------------------

    def _colim_bar(self, label: str, i: int, what: str):
        bars = self.modules[label].bars
        if not (isinstance(i, int) and 0 <= i < len(bars)):
            raise MalformedAlgebra(f"{what}: label {label!r} has no bar {i}")
        if not bars[i].is_right_infinite:
            raise MalformedAlgebra(f"{what}: bar {i} of {label!r} dies, so it is not a colimit basis element")
        return bars[i]

    def _validate(self):
        known = set(self.labels)
        if len(known) != len(self.labels):
            raise MalformedAlgebra("duplicate labels")
        if self.identity not in known:
            raise MalformedAlgebra(f"identity label {self.identity!r} is not a label")
        for lab in self.labels:
            if lab not in self.modules:
                raise MalformedAlgebra(f"label {lab!r} has no barcode", path=f"modules.{lab}")
        for (g, h), gh in self.compose.items():
            if not {g, h, gh} <= known:
                raise MalformedAlgebra(f"composition {g!r}*{h!r}={gh!r} uses unknown labels", path="compose")
        for g, gi in self.inverse.items():
            if g not in known or gi not in known:
                raise MalformedAlgebra(f"inverse {g!r}->{gi!r} uses unknown labels", path="inverse")
        self._colim_bar(self.identity, self.unit, "unit")
        for lab, cls in self.unit_classes.items():
            if lab not in known:
                raise MalformedAlgebra(f"unit class given for unknown label {lab!r}", path="unit_classes")
            for i in cls.bars:
                self._colim_bar(lab, i, f"unit class of {lab!r}")
        for e in self.products:
            gh = self.compose.get((e.g, e.h))
            if gh is None:
                raise MalformedAlgebra(f"product entry for {e.g!r}*{e.h!r} but no composition is declared")
            b1 = self._colim_bar(e.g, e.in1, "product input").birth
            b2 = self._colim_bar(e.h, e.in2, "product input").birth
            outs = [self._colim_bar(gh, i, "product output") for i in e.out]
            if b1 != NEG_INF and b2 != NEG_INF:
                bound = b1 + b2
                for i, bar in zip(e.out, outs):
                    if not bar.birth <= bound:
                        raise ShiftRuleViolation(
                            f"output bar {i} of {gh!r} is born at {format_exponent(bar.birth)} "
                            f"> {format_exponent(b1)} + {format_exponent(b2)}", entry=e)
        unit_label = self.identity
        for e in self.products:
            if e.g == unit_label and e.in1 == self.unit and e.out != (e.in2,):
                raise MalformedAlgebra(f"unit is not a left unit on entry {e.key()}")
            if e.h == unit_label and e.in2 == self.unit and e.out != (e.in1,):
                raise MalformedAlgebra(f"unit is not a right unit on entry {e.key()}")

    # -- convenience -----------------------------------------------------------

    def unit_class(self, label: str) -> ColimitClass:
        try:
            return self.unit_classes[label]
        except KeyError:
            raise MissingUnit(f"no unit class declared for label {label!r}") from None

    def inverse_of(self, label: str) -> str:
        try:
            return self.inverse[label]
        except KeyError:
            raise MissingInverse(f"label {label!r} has no declared inverse") from None

    def invariant(self, label: str, zeta: ColimitClass):
        return spectral_invariant(self.modules[label], zeta)

    def bar_invariant(self, label: str, i: int):
        return self.modules[label].bars[i].birth

    # -- JSON ------------------------------------------------------------------

    @classmethod
    def from_json(cls, doc) -> "PersistenceAlgebra":
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            labels = [str(x) for x in doc["labels"]]
            identity = str(doc["identity"])
        except (KeyError, TypeError) as exc:
            raise MalformedAlgebra(f"algebra document is missing {exc}", path=str(exc).strip("'")) from exc
        compose = {}
        for i, triple in enumerate(doc.get("compose", [])):
            try:
                g, h, gh = (str(x) for x in triple)
            except (TypeError, ValueError) as exc:
                raise MalformedAlgebra("compose entries are [g, h, gh] triples", path=f"compose[{i}]") from exc
            compose[(g, h)] = gh
        inverse = {str(k): str(v) for k, v in (doc.get("inverse") or {}).items()}
        modules = {}
        for lab, bc in (doc.get("modules") or {}).items():
            try:
                modules[str(lab)] = Barcode.from_json(bc)
            except MalformedAlgebra:
                raise
            except ValueError as exc:
                raise MalformedAlgebra(str(exc), path=f"modules.{lab}") from exc
        products = []
        for i, e in enumerate(doc.get("products", [])):
            try:
                products.append(ProductEntry(str(e["g"]), str(e["h"]), int(e["in1"]), int(e["in2"]),
                                             tuple(sorted(ColimitClass(e.get("out", [])).bars))))
            except (KeyError, TypeError, ValueError) as exc:
                raise MalformedAlgebra(f"bad product entry: {exc}", path=f"products[{i}]") from exc
        units = {str(k): ColimitClass(v) for k, v in (doc.get("unit_classes") or {}).items()}
        relabelings = []
        for i, r in enumerate(doc.get("relabelings", [])):
            try:
                relabelings.append(Relabeling(str(r["from"]), str(r["to"]), tuple(int(x) for x in r["bars"]),
                                              Fraction(as_exponent(r.get("period", "1")))))
            except (KeyError, TypeError, ValueError) as exc:
                raise MalformedAlgebra(f"bad relabeling: {exc}", path=f"relabelings[{i}]") from exc
        try:
            unit = int(doc["unit"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedAlgebra("algebra document needs an integer 'unit' bar index", path="unit") from exc
        return cls(tuple(labels), identity, compose, inverse, modules, unit, tuple(products), units,
                   tuple(relabelings))

    def to_json(self, decimal: int | None = None) -> dict:
        return {
            "identity": self.identity,
            "labels": list(self.labels),
            "compose": [[g, h, gh] for (g, h), gh in sorted(self.compose.items())],
            "inverse": dict(sorted(self.inverse.items())),
            "modules": {lab: self.modules[lab].to_json(decimal) for lab in self.labels},
            "unit": self.unit,
            "unit_classes": {lab: sorted(c.bars) for lab, c in sorted(self.unit_classes.items())},
            "products": [e.to_json() for e in self.products],
            "relabelings": [{"from": r.source, "to": r.target, "bars": list(r.bar_map), "period": str(r.period)}
                            for r in self.relabelings],
        }


# -- verifiers ---------------------------------------------------------------

def check_subadditivity(A: PersistenceAlgebra) -> Report:
    """c(out; gh) <= c(in1; g) + c(in2; h) on every nonzero product entry."""
    for e in A.products:
        if not e.out:
            continue
        gh = A.compose[(e.g, e.h)]
        lhs = A.invariant(gh, ColimitClass(e.out))
        rhs = A.bar_invariant(e.g, e.in1) + A.bar_invariant(e.h, e.in2)
        if not lhs <= rhs:
            return Report("subadditivity", False,
                          f"c = {format_exponent(lhs)} exceeds {format_exponent(rhs)} on {e.key()}", e)
    return Report("subadditivity", True, f"{len(A.products)} entries")


def check_ideal(A: PersistenceAlgebra) -> Report:
    """Products with an eternal input must land in the eternal span."""
    for e in A.products:
        gh = A.compose[(e.g, e.h)]
        eternal_in = A.modules[e.g].bars[e.in1].is_full or A.modules[e.h].bars[e.in2].is_full
        if eternal_in and not is_eternal(A.modules[gh], ColimitClass(e.out)):
            return Report("ideal", False, f"eternal input but non-eternal output on {e.key()}", e)
    return Report("ideal", True)


def check_conjugation(A: PersistenceAlgebra) -> Report:
    """Declared relabelings preserve bars and therefore every invariant."""
    for r in A.relabelings:
        src, dst = A.modules.get(r.source), A.modules.get(r.target)
        if src is None or dst is None:
            return Report("conjugation", False, f"relabeling {r.source!r}->{r.target!r} names unknown labels", r)
        if sorted(r.bar_map) != list(range(len(dst))) or len(r.bar_map) != len(src):
            return Report("conjugation", False, f"relabeling {r.source!r}->{r.target!r} is not a bijection", r)
        for i, j in enumerate(r.bar_map):
            if src.bars[i] != dst.bars[j]:
                return Report("conjugation", False, f"bar {i} of {r.source!r} differs from bar {j} of {r.target!r}",
                              (r, i, j))
        for i, bar in enumerate(src.bars):
            if not bar.is_half:
                continue
            k1 = integer_level(src, ColimitClass([i]), r.period)
            k2 = integer_level(dst, ColimitClass([r.bar_map[i]]), r.period)
            if k1 != k2:
                return Report("conjugation", False, f"integer invariants {k1} != {k2}", (r, i))
    return Report("conjugation", True, f"{len(A.relabelings)} relabelings")


@dataclass(frozen=True)
class UnitCriterion:
    eternal: bool
    witness: str

    def __bool__(self):
        return self.eternal


def unit_eternal_criterion(A: PersistenceAlgebra) -> UnitCriterion:
    """Decide whether the unit is eternal, cross-checking with its self-product.

    If the table records ``1 * 1 = 1`` and the unit is hit at a negative
    level ``-e``, the powers ``1 = 1^k`` are hit at ``-k e`` for every ``k``,
    which forces a fully infinite bar.

    Raises
    ------
    Inconsistent
        When the power argument contradicts the unit's bar.
    """
    b = A.modules[A.identity]
    unit = A.unit_class(A.identity)
    eternal = is_eternal(b, unit)
    bar = b.bars[A.unit]
    witness = f"unit bar {A.unit} = {bar}"
    self_product = next((e for e in A.products if e.g == A.identity and e.h == A.identity
                         and e.in1 == A.unit and e.in2 == A.unit), None)
    if self_product is not None and self_product.out == (A.unit,):
        eps = 1
        if hits_at(b, unit, -eps):
            for k in range(1, 65):
                if not hits_at(b, unit, -k * eps):
                    raise Inconsistent(f"unit hit at -{eps} but not at -{k * eps} despite 1*1 = 1")
            witness += "; hit at every -k by the power argument"
        else:
            witness += "; not hit at -1"
    return UnitCriterion(eternal, witness)


def _unit_invariant(A: PersistenceAlgebra, label: str):
    return spectral_invariant(A.modules[label], A.unit_class(label))


def oscillation(A: PersistenceAlgebra, g: str):
    """c(1; g) + c(1; g^-1)."""
    inv = A.inverse_of(g)
    return _unit_invariant(A, g) + _unit_invariant(A, inv)


def pseudo_norm(A: PersistenceAlgebra, g: str):
    """max(c(1; g), c(1; g^-1))."""
    inv = A.inverse_of(g)
    return max(_unit_invariant(A, g), _unit_invariant(A, inv))


def integer_invariant(A: PersistenceAlgebra, g: str, zeta: ColimitClass, loop_period=1) -> int:
    return integer_level(A.modules[g], zeta, loop_period)


def verify_algebra(A: PersistenceAlgebra) -> list[Report]:
    """Every algebra-level check, in a fixed order."""
    reports = [check_subadditivity(A), check_ideal(A), check_conjugation(A)]
    try:
        crit = unit_eternal_criterion(A)
        reports.append(Report("unit_eternal", True, f"eternal={'true' if crit.eternal else 'false'}; {crit.witness}",
                              crit.eternal))
    except Inconsistent as exc:
        reports.append(Report("unit_eternal", False, str(exc)))
    return reports
