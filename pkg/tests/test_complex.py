import random
from fractions import Fraction

import pytest

from eternalbar import oracles
from eternalbar.complex import (Chain, FilteredComplex, Generator, filtration_level, homology, min_filtration,
                                optimal_representative, orthogonal_boundary_basis, split_by_class, valuation,
                                verify_complex)
from eternalbar.corpus import random_complex
from eternalbar.errors import MalformedComplex, NotACycle, TruncationOverflow, ZeroClass
from eternalbar.exponents import NEG_INF
from eternalbar.novikov import Nov

G3 = [Generator("x1"), Generator("x2"), Generator("y")]


def test_verify_complex_cases():
    assert verify_complex(FilteredComplex(G3))
    bad = FilteredComplex([Generator("y"), Generator("x"), Generator("z")], {"y": [("x", 0)], "x": [("z", 0)]})
    rep = verify_complex(bad)
    assert not rep and rep.witness[:3] == ("y", "x", "z")
    assert verify_complex(FilteredComplex(G3, {"y": [("x1", -1)]})).message == "negative area"
    cross = FilteredComplex([Generator("a", hclass="0"), Generator("b", hclass="k")], {"a": [("b", 0)]})
    assert not verify_complex(cross)


def test_filtration_level_conventions():
    c = FilteredComplex([Generator("x"), Generator("y", Fraction(1))])
    assert filtration_level(c, Chain.monomial("x", 0)) == 0
    assert filtration_level(c, Chain.monomial("x", 2) + Chain.monomial("x", 5)) == -2
    assert filtration_level(c, Chain()) == NEG_INF
    # level of tau^b x is -(b + action(x))
    assert filtration_level(c, Chain.monomial("y", 3)) == -4
    assert valuation(c, Chain.monomial("y", 3)) == 4


def test_filtration_is_non_archimedean():
    rng = random.Random(5)
    c = FilteredComplex([Generator(f"g{i}", Fraction(rng.randint(0, 3))) for i in range(4)])
    for _ in range(200):
        z = Chain((f"g{rng.randrange(4)}", Nov.monomial(rng.randint(-3, 3))) for _ in range(3))
        w = Chain((f"g{rng.randrange(4)}", Nov.monomial(rng.randint(-3, 3))) for _ in range(3))
        lz, lw = filtration_level(c, z), filtration_level(c, w)
        assert filtration_level(c, z + w) <= max(lz, lw)
        if lz != lw:
            assert filtration_level(c, z + w) == max(lz, lw)


def test_homology_examples():
    two = [Generator("x"), Generator("y")]
    assert homology(FilteredComplex(two)).rank == 2
    assert homology(FilteredComplex(two, {"y": [("x", 0)]})).rank == 0
    assert homology(FilteredComplex(G3, {"y": [("x1", 1), ("x2", 1)]})).rank == 1


def test_homology_rejects_bad_complex():
    with pytest.raises(MalformedComplex):
        homology(FilteredComplex(G3, {"y": [("x1", -2)]}))


def test_homology_rank_invariant_under_reordering():
    rng = random.Random(11)
    for _ in range(30):
        c, _ = random_complex(rng)
        ids = c.ids()
        rng.shuffle(ids)
        assert homology(c.relabel(ids)).rank == homology(c).rank


def test_min_filtration_examples():
    assert min_filtration(FilteredComplex(G3), Chain.monomial("x1")) == 0
    c = FilteredComplex(G3, {"y": [("x1", 0), ("x2", 1)]})
    level, rep = optimal_representative(c, Chain.monomial("x1"))
    assert level == -1 and rep == Chain.monomial("x2", 1)
    with pytest.raises(ZeroClass):
        min_filtration(c, Chain.monomial("x1") + Chain.monomial("x2", 1))
    with pytest.raises(NotACycle):
        min_filtration(c, Chain.monomial("y"))


def test_min_filtration_beats_z2_combinations():
    # d(y) = x1 + tau x2; the class of tau x1 reaches tau^2 x2 using the scalar tau
    c = FilteredComplex(G3, {"y": [("x1", 0), ("x2", 1)]})
    z = Chain.monomial("x1", 1)
    assert min_filtration(c, z) == -2
    boundaries = [c.d_generator("y")]
    assert oracles.min_filtration_z2_combos(c, z, boundaries) == -1
    assert oracles.min_filtration_bruteforce(c, z) == -2


def test_min_filtration_is_attained_and_minimal():
    rng = random.Random(17)
    for _ in range(40):
        c, qs = random_complex(rng)
        for z in qs:
            try:
                level, rep = optimal_representative(c, z)
            except ZeroClass:
                continue
            assert filtration_level(c, rep) == level <= filtration_level(c, z)
            assert c.is_cycle(rep)


def test_orthogonal_basis_has_independent_leading_parts():
    c = FilteredComplex(G3 + [Generator("w")], {"y": [("x1", 0), ("x2", 1)], "w": [("x1", 0), ("x2", 0)]})
    basis = orthogonal_boundary_basis(c)
    assert len(basis) == 2


def test_window_cap_raises():
    # reaching the optimum needs the valuation to climb by 5; a window of 1 cannot certify it
    c = FilteredComplex(G3, {"y": [("x1", 0), ("x2", 5)]})
    with pytest.raises(TruncationOverflow):
        min_filtration(c, Chain.monomial("x1"), window=1)
    assert min_filtration(c, Chain.monomial("x1")) == -5


def test_split_by_class():
    c = FilteredComplex([Generator("a", hclass="0"), Generator("b", hclass="k1"), Generator("c", hclass="k1")],
                        {"b": [("c", 1)]})
    parts = split_by_class(c)
    assert sorted(parts) == ["0", "k1"]
    assert sum(len(p) for p in parts.values()) == 3
    assert parts["k1"].d_generator("b") == Chain.monomial("c", 1)
    assert list(split_by_class(FilteredComplex(G3))) == ["0"]


def test_json_round_trip():
    c = FilteredComplex(G3, {"y": [("x1", 0), ("x2", Fraction(3, 2))]})
    again = FilteredComplex.from_json(c.to_json())
    assert again.to_json() == c.to_json()


@pytest.mark.parametrize("doc, path", [
    ({"generators": [{"id": "a"}, {"id": "a"}]}, "generators[1].id"),
    ({"generators": [{"id": "a"}], "boundary": {"b": []}}, "boundary.b"),
    ({"generators": [{"id": "a"}], "boundary": {"a": [["zz", "0"]]}}, "boundary.a"),
    ({}, "generators"),
])
def test_malformed_documents(doc, path):
    with pytest.raises(MalformedComplex) as info:
        FilteredComplex.from_json(doc)
    assert info.value.path == path


def test_chain_parse():
    z = Chain.parse("x1:0, x2:3/2, x1:0")
    assert z == Chain.monomial("x2", Fraction(3, 2))
