import random
from fractions import Fraction

import pytest

from eternalbar.corpus import random_barcode
from eternalbar.errors import (EternalClass, MalformedAlgebra, MissingInverse, MissingUnit,
                               ShiftRuleViolation, ZeroClass)
from eternalbar.exponents import NEG_INF
from eternalbar.persistence import Bar, Barcode, ColimitClass, colim_basis, hits_at
from eternalbar.selftest import fixture_text
from eternalbar.spectral import (PersistenceAlgebra, ProductEntry, check_conjugation, check_ideal,
                                 check_subadditivity, integer_invariant, integer_level, oscillation, pseudo_norm,
                                 spectral_invariant, unit_eternal_criterion, verify_algebra)

F = Fraction


def load(name):
    return PersistenceAlgebra.from_json(fixture_text(name))


def test_spectral_invariant_examples():
    assert spectral_invariant(Barcode([Bar(F(2))]), ColimitClass([0])) == 2
    full = Barcode([Bar(NEG_INF), Bar(NEG_INF)])
    assert spectral_invariant(full, ColimitClass([0, 1])) == NEG_INF
    mix = Barcode([Bar(F(1)), Bar(F(3)), Bar(NEG_INF)])
    assert spectral_invariant(mix, ColimitClass([0, 1, 2])) == 3
    with pytest.raises(ZeroClass):
        spectral_invariant(mix, ColimitClass())


def test_spectral_invariant_is_first_hit():
    rng = random.Random(3)
    for _ in range(100):
        b = random_barcode(rng)
        basis = colim_basis(b)
        if not basis:
            continue
        zeta = ColimitClass(rng.sample(basis, rng.randint(1, len(basis))))
        c = spectral_invariant(b, zeta)
        grid = sorted({x for x in b.critical_values()} | {F(-100)})
        first = next((s for s in grid if hits_at(b, zeta, s)), None)
        if c == NEG_INF:
            assert first == F(-100)
        else:
            assert first == c


def test_integer_level_examples():
    one = lambda x: Barcode([Bar(F(x))])  # noqa: E731
    assert integer_level(one(1), ColimitClass([0])) == 1
    assert integer_level(one(F(3, 2)), ColimitClass([0])) == 2
    assert integer_level(one(F(-1, 2)), ColimitClass([0])) == 0
    assert integer_level(one(3), ColimitClass([0]), loop_period=2) == 2
    with pytest.raises(EternalClass):
        integer_level(Barcode([Bar(NEG_INF)]), ColimitClass([0]))
    with pytest.raises(ValueError):
        integer_level(one(1), ColimitClass([0]), loop_period=0)


def test_unit_criterion_examples():
    full = PersistenceAlgebra(("id",), "id", {}, {}, {"id": Barcode([Bar(NEG_INF)])}, 0)
    half = PersistenceAlgebra(("id",), "id", {}, {}, {"id": Barcode([Bar(F(0))])}, 0)
    assert unit_eternal_criterion(full).eternal
    assert not unit_eternal_criterion(half).eternal


def test_power_argument_contradiction_is_rejected_at_load():
    # a unit hit at -1 with 1*1 = 1 would be hit at every -k; the shift rule already forbids it
    b = Barcode([Bar(F(-1))])
    with pytest.raises(ShiftRuleViolation):
        PersistenceAlgebra(("id",), "id", {("id", "id"): "id"}, {}, {"id": b}, 0,
                           (ProductEntry("id", "id", 0, 0, (0,)),))


def test_power_argument_passes_on_consistent_unit():
    b = Barcode([Bar(F(0))])
    a = PersistenceAlgebra(("id",), "id", {("id", "id"): "id"}, {}, {"id": b}, 0,
                           (ProductEntry("id", "id", 0, 0, (0,)),))
    crit = unit_eternal_criterion(a)
    assert not crit.eternal and "not hit at -1" in crit.witness


def test_odd_euler_fixture():
    a = load("odd_euler.json")
    assert check_ideal(a)
    assert unit_eternal_criterion(a).eternal
    assert all(verify_algebra(a))


def test_planted_ideal_violation():
    a = load("ideal_violation.json")
    rep = check_ideal(a)
    assert not rep and rep.witness.key() == ("id", "id", 1, 2)
    sub = check_subadditivity(a)
    assert not sub and sub.witness.key() == ("id", "id", 1, 2)


def test_shift_rule_rejected_at_load():
    with pytest.raises(ShiftRuleViolation) as info:
        load("shift_violation.json")
    assert info.value.entry.key() == ("id", "id", 1, 1)


def test_unit_rule_rejected_at_load():
    b = Barcode([Bar(F(0)), Bar(F(1)), Bar(F(2))])
    with pytest.raises(MalformedAlgebra):
        PersistenceAlgebra(("id",), "id", {("id", "id"): "id"}, {}, {"id": b}, 0,
                           (ProductEntry("id", "id", 0, 1, (2,)),))


def test_trivial_algebra_passes_vacuously():
    a = PersistenceAlgebra(("id",), "id", {}, {"id": "id"}, {"id": Barcode([Bar(F(0))])}, 0)
    assert check_subadditivity(a) and check_ideal(a)
    assert oscillation(a, "id") == 0 and pseudo_norm(a, "id") == 0


def test_missing_inverse_and_unit():
    a = PersistenceAlgebra(("id", "g"), "id", {}, {}, {"id": Barcode([Bar(F(0))]), "g": Barcode([Bar(F(1))])}, 0)
    with pytest.raises(MissingInverse):
        oscillation(a, "g")
    b = PersistenceAlgebra(("id", "g"), "id", {}, {"g": "id", "id": "id"},
                           {"id": Barcode([Bar(F(0))]), "g": Barcode([Bar(F(1))])}, 0)
    with pytest.raises(MissingUnit):
        oscillation(b, "g")


def test_conjugation_fixture_and_tampering():
    a = load("conjugate_pair.json")
    assert check_conjugation(a)
    assert integer_invariant(a, "g", ColimitClass([0])) == integer_invariant(a, "hgh^-1", ColimitClass([1])) == 2
    doc = a.to_json()
    doc["relabelings"][0]["bars"] = [2, 1, 0]
    assert not check_conjugation(PersistenceAlgebra.from_json(doc))


def test_json_round_trip():
    a = load("conjugate_pair.json")
    again = PersistenceAlgebra.from_json(a.to_json())
    assert again.to_json() == a.to_json()


@pytest.mark.parametrize("patch", [
    lambda d: d.pop("identity"),
    lambda d: d.__setitem__("unit", 7),
    lambda d: d.__setitem__("compose", [["id", "nope", "id"]]),
    lambda d: d["modules"].pop("g"),
])
def test_malformed_algebras(patch):
    import json
    doc = json.loads(fixture_text("conjugate_pair.json"))
    patch(doc)
    with pytest.raises(MalformedAlgebra):
        PersistenceAlgebra.from_json(doc)
