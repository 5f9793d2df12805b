import itertools
import random
from fractions import Fraction

import pytest

from eternalbar import oracles
from eternalbar.corpus import random_presentation
from eternalbar.errors import BasisMismatch, MalformedPresentation
from eternalbar.exponents import INF, NEG_INF
from eternalbar.persistence import (Bar, Barcode, ColimitClass, Presentation, barcode, colim_basis,
                                    eternal_subspace, hits_at, is_eternal, render, rfh_rank)
from eternalbar.selftest import fixture_text

F = Fraction


def fig1() -> Barcode:
    return barcode(Presentation.from_json(fixture_text("fig1.json")))


def test_barcode_examples():
    assert barcode(Presentation([("g", 0)])).bars == (Bar(F(0)),)
    two = barcode(Presentation([("g1", 0), ("g2", 1)], [(3, ["g1", "g2"])]))
    assert sorted(two.bars, key=lambda b: b.birth) == [Bar(F(0)), Bar(F(1), F(3))]
    assert barcode(Presentation([("e", "-inf")])).bars == (Bar(NEG_INF),)


def test_figure_barcode():
    b = fig1()
    assert sum(bar.is_full for bar in b) == 3
    assert sorted((bar.birth, bar.death) for bar in b if not bar.is_full) == [(-4, 0), (2, 5)]
    assert len(colim_basis(b)) == 3
    assert len(eternal_subspace(b)) == 3
    assert is_eternal(b, ColimitClass([0, 1, 2]))
    assert rfh_rank(b) == 0


def test_bar_invariants_and_text():
    with pytest.raises(ValueError):
        Bar(F(1), F(1))
    assert str(Bar(NEG_INF)) == "ℝ"
    assert str(Bar(F(0))) == "[0, inf)"
    assert str(Bar(NEG_INF, F(3))) == "(-inf, 3)"
    assert Bar(F(0), F(2)).contains(0) and not Bar(F(0), F(2)).contains(2)


def test_colim_and_eternal():
    b = Barcode([Bar(F(1), F(3)), Bar(F(0)), Bar(NEG_INF)])
    assert colim_basis(b) == [2, 1]
    assert colim_basis(Barcode()) == []
    assert eternal_subspace(Barcode([Bar(F(0))])) == []
    assert eternal_subspace(Barcode([Bar(NEG_INF), Bar(NEG_INF)])) == [0, 1]


def test_hits_at():
    b = Barcode([Bar(F(2))])
    assert hits_at(b, ColimitClass([0]), 3)
    assert not hits_at(b, ColimitClass([0]), 1)
    assert hits_at(Barcode([Bar(NEG_INF)]), ColimitClass([0]), -10 ** 9)
    with pytest.raises(BasisMismatch):
        hits_at(b, ColimitClass([4]), 0)
    with pytest.raises(BasisMismatch):
        hits_at(Barcode([Bar(F(0), F(1))]), ColimitClass([0]), 0)


def test_rfh_rank_examples_and_additivity():
    assert rfh_rank(Barcode([Bar(NEG_INF)])) == 0
    assert rfh_rank(Barcode([Bar(F(0))])) == 1
    assert rfh_rank(Barcode([Bar(NEG_INF, F(3))])) == 1
    a, b = Barcode([Bar(F(0)), Bar(F(1), F(2))]), Barcode([Bar(NEG_INF, F(0)), Bar(NEG_INF)])
    assert rfh_rank(a + b) == rfh_rank(a) + rfh_rank(b)


def test_colimit_class_is_z2():
    assert ColimitClass([1, 1, 2]).bars == frozenset({2})
    assert not ColimitClass([0, 0])


@pytest.mark.parametrize("doc, path", [
    ({"generators": [{"id": "a", "birth": "0"}, {"id": "a", "birth": "1"}]}, "generators[1].id"),
    ({"generators": [{"id": "a", "birth": "2"}], "relations": [{"level": "1", "support": ["a"]}]},
     "relations[0].level"),
    ({"generators": [{"id": "a", "birth": "0"}], "relations": [{"level": "1", "support": ["b"]}]},
     "relations[0].support"),
    ({"generators": [{"id": "a", "birth": "0"}], "relations": [{"level": "1", "support": ["a", "a"]}]},
     "relations[0].support"),
    ({"relations": []}, "generators"),
])
def test_malformed_presentations(doc, path):
    with pytest.raises(MalformedPresentation) as info:
        Presentation.from_json(doc)
    assert info.value.path == path


def test_barcode_matches_rank_oracle():
    rng = random.Random(7)
    for _ in range(60):
        p = random_presentation(rng)
        b = barcode(p)
        levels = oracles.probe_levels(p.critical_values())
        for s, t in itertools.combinations_with_replacement(levels, 2):
            assert sum(1 for bar in b if bar.birth <= s and t < bar.death) == oracles.structure_rank(p, s, t)


def test_barcode_invariant_under_permutation():
    rng = random.Random(8)
    for _ in range(60):
        p = random_presentation(rng)
        gens, rels = list(p.generators), list(p.relations)
        rng.shuffle(gens)
        rng.shuffle(rels)
        q = Presentation(gens, rels)
        key = lambda bar: (bar.birth, bar.death)  # noqa: E731
        assert sorted(barcode(p), key=key) == sorted(barcode(q), key=key)


def test_infinite_relation_is_absent():
    p = Presentation([("g", 0)], [(INF, ["g"])])
    assert barcode(p).bars == (Bar(F(0)),)


def test_json_round_trips():
    p = Presentation.from_json(fixture_text("fig1.json"))
    assert Presentation.from_json(p.to_json()) == p
    b = fig1()
    assert Barcode.from_json(b.to_json()) == b
    assert b.to_json()["bars"][0] == {"birth": "-inf", "death": "inf"}


def test_render_shape():
    text = render(fig1())
    lines = text.splitlines()
    assert len(lines) == 6
    assert lines[0].startswith("<") and ">" in lines[0]
    assert "[" in lines[3] and ")" in lines[3]
    assert lines[-1].endswith("ticks: -4 0 2 5")
