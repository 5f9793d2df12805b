import math
import random
from fractions import Fraction

import numpy as np
import pytest

from eternalbar import oracles
from eternalbar.corpus import random_circle_pl, random_class, random_sphere_pl
from eternalbar.errors import (ClosureViolation, ContractibleClass, IncompatibleMesh, MalformedInput,
                               ResolutionTooCoarse)
from eternalbar.persistence import eternal_subspace
from eternalbar.selftest import fixture_text
from eternalbar.spectral import check_ideal, check_subadditivity, oscillation, pseudo_norm, unit_eternal_criterion
from eternalbar.surd import sqrt
from eternalbar.torus import (LinearHamiltonian, PLHamiltonian, SampledHamiltonian, build_algebra,
                              check_systolic_bound, class_spectral, cross_polytope_mesh, order_leq,
                              oscillation_exact, parse_hamiltonian, shape_spectral, spectrum, systole)

F = Fraction
P = LinearHamiltonian([1])
ZERO1 = LinearHamiltonian([0])


def diamond():
    return PLHamiltonian.from_json(fixture_text("diamond.json"))


def test_shape_invariant_examples():
    assert shape_spectral(P) == 1
    assert shape_spectral(LinearHamiltonian([3, 4])) == 5
    assert shape_spectral(LinearHamiltonian([0, 0])) == 0
    assert shape_spectral(LinearHamiltonian([1, 1])) == sqrt(2)


def test_oscillation_examples():
    assert oscillation_exact(P) == 2
    assert oscillation_exact(LinearHamiltonian([0, 0, 0])) == 0
    for c in (1, 10, 1000):
        assert oscillation_exact(LinearHamiltonian([F(3, 5) * c, F(4, 5) * c])) == 2 * c


def test_class_spectral_examples():
    assert class_spectral(LinearHamiltonian([0, 0]), (3, 4)) == 5
    assert class_spectral(LinearHamiltonian([0, 0]), (0, 0)) == 0
    assert class_spectral(diamond(), (0, 0)) == shape_spectral(diamond()) == sqrt(5)


def test_class_spectral_of_zero_is_systole():
    rng = random.Random(1)
    mesh = cross_polytope_mesh(3)
    for _ in range(50):
        k = random_class(rng, 3)
        if any(k):
            assert class_spectral(mesh, k) == systole(3, k)


def test_spectrum_examples():
    assert spectrum(ZERO1, (2,)) == (-2, 2)
    assert spectrum(P, (0,)) == (-1, 1)


def test_spectrum_contains_extrema():
    rng = random.Random(2)
    for _ in range(40):
        h = random_circle_pl(rng) if rng.random() < 0.6 else random_sphere_pl(rng)
        k = random_class(rng, h.dimension, 3)
        spec = spectrum(h, k)
        top, bottom = h.class_extrema(k)
        assert top in spec and bottom in spec
        assert top == max(spec) and bottom == min(spec)


def test_pl_max_matches_per_arc_oracle():
    rng = random.Random(3)
    for _ in range(40):
        h = random_circle_pl(rng)
        k = random_class(rng, 2, 3)
        assert class_spectral(h, k) == oracles.circle_max_per_arc(h, k)


def test_pl_max_bounded_by_dense_grid():
    rng = random.Random(4)
    for _ in range(10):
        h = random_sphere_pl(rng)
        k = random_class(rng, 3, 2)
        top, _ = oracles.grid_extrema(h, k, 6000)
        c = float(class_spectral(h, k))
        assert -1e-9 <= c - top <= (math.hypot(*k) + h.lipschitz_bound()) * 0.08


def test_sampled_within_tolerance():
    rng = random.Random(5)
    for _ in range(10):
        h = random_circle_pl(rng)
        s = SampledHamiltonian.from_hamiltonian(h, 1500)
        k = random_class(rng, 2, 3)
        assert abs(class_spectral(s, k) - float(class_spectral(h, k))) <= s.tolerance(k)


def test_sampled_resolution_too_coarse():
    # a spike between two neighbours makes a local max sit right next to a local min
    dirs = [(math.cos(t), math.sin(t)) for t in np.linspace(0, 2 * math.pi, 12, endpoint=False)]
    vals = [0, 5, -5, 5, -5, 0, 0, 0, 0, 0, 0, 0]
    s = SampledHamiltonian(dirs, vals, lipschitz=0.1)
    with pytest.raises(ResolutionTooCoarse):
        spectrum(s, (0, 0))


def test_identities():
    rng = random.Random(6)
    for _ in range(30):
        h = random_circle_pl(rng)
        assert oscillation_exact(h) == shape_spectral(h) + shape_spectral(-h)
        assert class_spectral(h, (0, 0)) == shape_spectral(h)


def test_subadditivity_including_refined_sums():
    rng = random.Random(7)
    for _ in range(60):
        h, g = random_circle_pl(rng), random_circle_pl(rng)
        k, l = random_class(rng, 2, 3), random_class(rng, 2, 3)
        s = h + g
        assert class_spectral(s, tuple(a + b for a, b in zip(k, l))) <= class_spectral(h, k) + class_spectral(g, l)
        for v in h.vertices + g.vertices:
            assert s.value(v) == h.value(v) + g.value(v)


def test_pl_sum_needs_shared_mesh_in_three_dimensions():
    rng = random.Random(8)
    h = random_sphere_pl(rng)
    g = cross_polytope_mesh(3)
    if not h.same_mesh(g):
        with pytest.raises(IncompatibleMesh):
            h + g
    assert (h + LinearHamiltonian([1, 2, 3])).same_mesh(h)


def test_systole():
    assert systole(2) == 1 == oracles.shortest_lattice_vector(2)
    assert systole(2, (3, 4)) == 5
    assert systole(3, (1, 1, 0)) == sqrt(2)
    with pytest.raises(ContractibleClass):
        systole(2, (0, 0))


@pytest.mark.parametrize("k", [1, 3, -2, 5, -5])
def test_systolic_bound(k):
    rep = check_systolic_bound(P, k)
    assert rep and rep.witness["c"] == abs(k) and rep.witness["margin"] == 0
    assert rep.witness["gamma"] == 2 * abs(k)


def test_order():
    one = PLHamiltonian([(1, 0), (0, 1), (-1, 0), (0, -1)], [1] * 4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    zero = LinearHamiltonian([0, 0]).to_pl()
    assert order_leq(zero, one)
    assert not order_leq(one, zero)
    assert not order_leq(P, ZERO1)
    assert order_leq(one, one)
    rng = random.Random(9)
    for _ in range(30):
        h, g = random_circle_pl(rng), random_circle_pl(rng)
        both = order_leq(h, g) and order_leq(g, h)
        assert both == (h - g).is_zero()


def test_build_algebra_examples():
    flat = build_algebra({"0": LinearHamiltonian([0, 0])}, [(0, 0), (1, 0), (-1, 0)])
    assert [b.birth for b in flat.modules["0"]] == [0, 1, 1]
    hams = {"0": ZERO1, "p": P, "-p": LinearHamiltonian([-1])}
    a = build_algebra(hams, [(k,) for k in range(-2, 3)])
    assert check_subadditivity(a) and check_ideal(a)
    assert not unit_eternal_criterion(a).eternal
    assert all(not eternal_subspace(a.modules[g]) for g in a.labels)
    assert oscillation(a, "p") == 2 and pseudo_norm(a, "p") == 1 and oscillation(a, "0") == 0


def test_build_algebra_from_random_pl():
    rng = random.Random(10)
    h = random_circle_pl(rng)
    hams = {"0": h.scaled(0), "h": h, "-h": -h}
    a = build_algebra(hams, [(i, j) for i in (-1, 0, 1) for j in (-1, 0, 1)])
    assert check_subadditivity(a) and check_ideal(a) and not unit_eternal_criterion(a).eternal
    assert oscillation(a, "h") == oscillation_exact(h)


def test_build_algebra_closure():
    with pytest.raises(ClosureViolation):
        build_algebra({"p": P, "-p": LinearHamiltonian([-1])}, [(0,)])
    with pytest.raises(ClosureViolation):
        build_algebra({"0": ZERO1, "p": P}, [(0,)])
    with pytest.raises(ClosureViolation):
        build_algebra({"0": ZERO1}, [(1,)])
    with pytest.raises(TypeError):
        build_algebra([SampledHamiltonian.from_hamiltonian(ZERO1, 2)], [(0,)])


def test_parse_hamiltonian(tmp_path):
    assert parse_hamiltonian("linear:1,2").a == (1, 2)
    path = tmp_path / "h.json"
    path.write_text(fixture_text("diamond.json"))
    assert shape_spectral(parse_hamiltonian(f"pl:{path}")) == sqrt(5)
    csv = tmp_path / "s.csv"
    csv.write_text("u1,value\n1,2\n-1,-3\n")
    assert shape_spectral(parse_hamiltonian(f"samples:{csv}")) == 2
    with pytest.raises(MalformedInput):
        parse_hamiltonian("cubic:1")


def test_malformed_pl():
    with pytest.raises(MalformedInput):
        PLHamiltonian([(1, 0), (0, 1)], [1, 1], [(0, 1)])  # does not cover the circle
    with pytest.raises(MalformedInput):
        PLHamiltonian([(1, 0), (2, 0)], [1, 1], [(0, 1)])  # dependent vertices
    with pytest.raises(MalformedInput):
        PLHamiltonian([(1,), (2,)], [1, 1], [(0,), (1,)])  # no negative ray


def test_one_dimensional_fans_are_canonical():
    h = PLHamiltonian([(2,), (-3,)], [4, 3], [(0,), (1,)])
    assert h.values == (2, 1)
    assert shape_spectral(h) == 2 and oscillation_exact(h) == 1
