"""Acceptance properties and tagged examples, runnable without pytest.

Each ``criterion_*`` function returns a ``Report`` whose ``ok`` flag covers
both the property and its time budget.
"""
from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction
from importlib import resources

from . import oracles
from .complex import (Chain, FilteredComplex, Generator, filtration_level, homology, min_filtration,
                      optimal_representative, split_by_class, verify_complex, _cycles_and_boundaries)
from .corpus import (random_barcode, random_circle_pl, random_class, random_complex, random_nov,
                     random_presentation, random_sphere_pl)
from .errors import ContractibleClass, DivisionByZero, EternalClass, ShiftRuleViolation, ZeroClass
from .exponents import INF, NEG_INF
from .novikov import Nov, nov_div_window, nov_val
from .persistence import (Bar, Barcode, ColimitClass, Presentation, barcode, colim_basis, eternal_subspace,
                          hits_at, rfh_rank)
from .report import Report
from .spectral import (PersistenceAlgebra, Relabeling, check_conjugation, check_ideal, check_subadditivity,
                       integer_invariant, integer_level, oscillation, pseudo_norm, spectral_invariant,
                       unit_eternal_criterion)
from .torus import (LinearHamiltonian, PLHamiltonian, SampledHamiltonian, build_algebra, check_systolic_bound,
                    class_spectral, cross_polytope_mesh, order_leq, oscillation_exact, shape_spectral, spectrum,
                    systole)

SEED = 20240917


def fixture_text(name: str) -> str:
    return resources.files("eternalbar").joinpath("data", name).read_text()


def _timed(name: str, limit: float, body) -> Report:
    start = time.perf_counter()
    try:
        ok, detail, witness = body()
    except Exception as exc:  # a crash is a failed criterion, reported with its cause
        ok, detail, witness = False, f"{type(exc).__name__}: {exc}", exc
    elapsed = time.perf_counter() - start
    if elapsed >= limit:
        ok = False
        detail += f"; over budget {limit:g}s"
    return Report(name, ok, f"{detail}; {elapsed:.2f}s", witness)


# -- criteria ------------------------------------------------------------------

def criterion_1(count: int = 200) -> Report:
    def body():
        rng = random.Random(SEED + 1)
        pairs = 0
        for n in range(count):
            p = random_presentation(rng)
            b = barcode(p)
            levels = oracles.probe_levels(p.critical_values())
            for s, t in itertools.combinations_with_replacement(levels, 2):
                pairs += 1
                bars = sum(1 for bar in b if bar.birth <= s and t < bar.death)
                want = oracles.structure_rank(p, s, t)
                if bars != want:
                    return False, f"presentation {n}: {bars} bars over [{s}, {t}] but rank {want}", p
        return True, f"{count} presentations, {pairs} level pairs", None
    return _timed("1 barcode oracle", 10, body)


def criterion_2(count: int = 200) -> Report:
    def body():
        rng = random.Random(SEED + 1)
        checked = 0
        for n in range(count):
            p = random_presentation(rng)
            b = barcode(p)
            basis = colim_basis(b)
            full = set(eternal_subspace(b))
            levels = oracles.probe_levels(p.critical_values())
            for r in range(1, len(basis) + 1):
                for combo in itertools.combinations(basis, r):
                    zeta = ColimitClass(combo)
                    always = all(hits_at(b, zeta, s) for s in levels)
                    if always != (set(combo) <= full):
                        return False, f"presentation {n}: hits_at disagrees with full-bar span on {combo}", p
                    checked += 1
            lc = oracles.lim_colim(p)
            if lc["image"] != len(full):
                return False, f"presentation {n}: image(lim->colim) has rank {lc['image']}, {len(full)} full bars", p
            if lc["colim"] != len(basis):
                return False, f"presentation {n}: colimit rank {lc['colim']} vs {len(basis)} basis bars", p
            if rfh_rank(b) != lc["cone"]:
                return False, f"presentation {n}: rfh_rank {rfh_rank(b)} vs cone rank {lc['cone']}", p
            if lc["colim"] - lc["image"] != sum(1 for i in basis if i not in full):
                return False, f"presentation {n}: an eternal class survives in the cone", p
        return True, f"{count} presentations, {checked} classes", None
    return _timed("2 eternal subspace", 5, body)


def criterion_3(count: int = 1000) -> Report:
    def body():
        rng = random.Random(SEED + 3)
        zero = Nov.zero()
        for n in range(count):
            x, y, z = (random_nov(rng) for _ in range(3))
            if not (x + y == y + x and x * y == y * x and (x + y) + z == x + (y + z)
                    and (x * y) * z == x * (y * z) and x * (y + z) == x * y + x * z):
                return False, f"ring axiom fails on {x}, {y}, {z}", (x, y, z)
            if x + x != zero or x + zero != x or x * Nov.one() != x:
                return False, f"characteristic-2 or identity law fails on {x}", x
            if (x + y) * (x + y) != x * x + y * y:
                return False, f"Frobenius fails on {x}, {y}", (x, y)
            if x and y and nov_val(x * y) != nov_val(x) + nov_val(y):
                return False, f"valuation not multiplicative on {x}, {y}", (x, y)
            den = 6
            off = 200
            if oracles.to_poly(x * y, den, 2 * off) != oracles.clmul(oracles.to_poly(x, den, off),
                                                                     oracles.to_poly(y, den, off)):
                return False, f"product disagrees with bit-polynomial oracle on {x}, {y}", (x, y)
            if y:
                w = Fraction(rng.randint(1, 8))
                q = nov_div_window(x, y, w)
                r = x + q * y
                if x and not nov_val(r) > nov_val(x) + w:
                    return False, f"division residual {r} too large for {x} / {y}", (x, y, w)
                if not x and q:
                    return False, "0 / y is not 0", y
        return True, f"{count} random triples", None
    return _timed("3 novikov field", 2, body)


def criterion_4(count: int = 100) -> Report:
    def body():
        rng = random.Random(SEED + 4)
        queries = improved = 0
        for n in range(count):
            c, qs = random_complex(rng)
            _, boundaries = _cycles_and_boundaries(c)
            for z in qs:
                queries += 1
                try:
                    got = min_filtration(c, z)
                except ZeroClass:
                    got = NEG_INF
                want = oracles.min_filtration_bruteforce(c, z)
                if got != want:
                    return False, f"complex {n}: min_filtration {got} but brute force {want}", (c, z)
                if got != NEG_INF:
                    upper = oracles.min_filtration_z2_combos(c, z, boundaries)
                    if got > upper:
                        return False, f"complex {n}: {got} above a Z/2 combination reaching {upper}", (c, z)
                    improved += got < filtration_level(c, z)
        return True, f"{count} complexes, {queries} classes, {improved} improved by reduction", None
    return _timed("4 minimal filtration", 10, body)


def criterion_5(count: int = 50) -> Report:
    def body():
        h = LinearHamiltonian([1])
        if shape_spectral(h) != 1 or oscillation_exact(h) != 2:
            return False, "H=p does not give c=1, gamma=2", h
        rng = random.Random(SEED + 5)
        for n in range(count):
            h = random_circle_pl(rng)
            c = shape_spectral(h)
            want = oracles.circle_max_per_arc(h, (0, 0))
            low = -oracles.circle_max_per_arc(-h, (0, 0))
            if c != want or oscillation_exact(h) != want - low:
                return False, f"PL {n}: c={c}, per-arc max {want}", h
            s = SampledHamiltonian.from_hamiltonian(h, 1024)
            tol = s.lipschitz * s.resolution
            if abs(shape_spectral(s) - float(c)) > tol or abs(oscillation_exact(s) - float(want - low)) > 2 * tol:
                return False, f"sampled {n}: off by more than {tol:.3g}", h
        for n in range(10):
            h = random_sphere_pl(rng)
            top, bottom = oracles.grid_extrema(h, (0, 0, 0), 4000)
            c = shape_spectral(h)
            if not -1e-9 <= float(c) - top <= h.lipschitz_bound() * 0.1:
                return False, f"sphere PL {n}: c={c} vs grid {top}", h
        return True, f"{count} circle fans, 10 sphere fans, sampled within Lip*eps", None
    return _timed("5 shape invariant", 5, body)


def criterion_6(count: int = 100, tuples: int = 1000) -> Report:
    def body():
        rng = random.Random(SEED + 6)
        zero2 = cross_polytope_mesh(2)
        zero3 = cross_polytope_mesh(3)
        sampled = SampledHamiltonian.from_hamiltonian(LinearHamiltonian([0, 0]), 2048)
        for _ in range(count):
            n = rng.choice((2, 3))
            k = random_class(rng, n)
            norm = systole(n, k) if any(k) else 0
            z = zero2 if n == 2 else zero3
            if class_spectral(z, k) != norm or class_spectral(LinearHamiltonian([0] * n), k) != norm:
                return False, f"class_spectral(0, {k}) != |k|", k
            if n == 2 and abs(class_spectral(sampled, k) - float(norm)) > sampled.resolution * float(norm) + 1e-12:
                return False, f"sampled class_spectral(0, {k}) off by more than eps*|k|", k
        for _ in range(count):
            h = random_circle_pl(rng) if rng.random() < 0.7 else random_sphere_pl(rng)
            k = random_class(rng, h.dimension, 3)
            if class_spectral(h, k) not in spectrum(h, k):
                return False, f"class_spectral not in spectrum for {h}, {k}", (h, k)
        s = SampledHamiltonian.from_hamiltonian(random_circle_pl(rng), 720)
        for _ in range(20):
            k = random_class(rng, 2, 3)
            top, spec = class_spectral(s, k), spectrum(s, k)
            if min(abs(top - v) for v in spec) > s.tolerance(k):
                return False, f"sampled max {top} not near a detected critical value", k
        pool = [random_circle_pl(rng) for _ in range(20)]
        sums: dict = {}
        for _ in range(tuples):
            i, j = rng.randrange(len(pool)), rng.randrange(len(pool))
            if (i, j) not in sums:
                sums[(i, j)] = pool[i] + pool[j]
            k, l = random_class(rng, 2, 3), random_class(rng, 2, 3)
            kl = tuple(a + b for a, b in zip(k, l))
            if not class_spectral(sums[(i, j)], kl) <= class_spectral(pool[i], k) + class_spectral(pool[j], l):
                return False, f"subadditivity fails for pair {(i, j)}, classes {k}, {l}", (i, j, k, l)
        return True, f"{count} norms, {count} spectra, {tuples} subadditivity tuples, 0 violations", None
    return _timed("6 class formula", 20, body)


def criterion_7() -> Report:
    def body():
        h = LinearHamiltonian([1])
        for k in [s * m for m in range(1, 6) for s in (1, -1)]:
            rep = check_systolic_bound(h, k)
            w = rep.witness
            if not rep or w["c"] != abs(k) or w["sys"] != abs(k) or w["margin"] != 0:
                return False, f"k={k}: {rep.message}", rep
        return True, "k in +-1..+-5, margin 0", None
    return _timed("7 systolic bound", 1, body)


def criterion_8(count: int = 100) -> Report:
    def body():
        rng = random.Random(SEED + 8)
        for n in range(count):
            b = random_barcode(rng)
            half = [i for i in colim_basis(b) if b.bars[i].is_half]
            if not half:
                continue
            combo = ColimitClass(rng.sample(half, rng.randint(1, len(half))) + [
                i for i in eternal_subspace(b) if rng.random() < 0.5])
            level = integer_level(b, combo, 1)
            scan = next(m for m in range(-10, 10) if hits_at(b, combo, m))
            if level != scan:
                return False, f"barcode {n}: ceil(c)={level} but grid scan {scan}", (b, combo)
            perm = list(range(len(b)))
            rng.shuffle(perm)
            image = [None] * len(b)
            for i, j in enumerate(perm):
                image[j] = b.bars[i]
            units = {"id": ColimitClass([0])}
            algebra = PersistenceAlgebra(("id", "g", "h"), "id", {}, {},
                                         {"id": Barcode([Bar(Fraction(0))]), "g": b, "h": Barcode(image)}, 0,
                                         (), units, (Relabeling("g", "h", tuple(perm)),))
            if not check_conjugation(algebra):
                return False, f"barcode {n}: declared relabeling rejected", algebra
            moved = ColimitClass(perm[i] for i in combo.bars)
            if integer_invariant(algebra, "g", combo) != integer_invariant(algebra, "h", moved):
                return False, f"barcode {n}: integer invariant changed under relabeling", algebra
        return True, f"{count} barcodes", None
    return _timed("8 integer invariant", 2, body)


def criterion_9() -> Report:
    def body():
        hams = {"0": LinearHamiltonian([0]), "p": LinearHamiltonian([1]), "-p": LinearHamiltonian([-1])}
        a = build_algebra(hams, [(k,) for k in range(-2, 3)])
        if not check_subadditivity(a) or not check_ideal(a) or unit_eternal_criterion(a).eternal:
            return False, "torus algebra fails a verifier", a
        if any(eternal_subspace(a.modules[g]) for g in a.labels):
            return False, "torus algebra has a fully infinite bar", a
        bad = PersistenceAlgebra.from_json(fixture_text("ideal_violation.json"))
        planted = ("id", "id", 1, 2)
        for rep in (check_ideal(bad), check_subadditivity(bad)):
            if rep or rep.witness.key() != planted:
                return False, f"ideal fixture: {rep.line()}", rep
        try:
            PersistenceAlgebra.from_json(fixture_text("shift_violation.json"))
            return False, "shift-rule fixture loaded", None
        except ShiftRuleViolation as exc:
            if exc.entry.key() != ("id", "id", 1, 1):
                return False, f"shift-rule fixture blamed {exc.entry}", exc
        odd = PersistenceAlgebra.from_json(fixture_text("odd_euler.json"))
        if not check_ideal(odd) or not unit_eternal_criterion(odd).eternal:
            return False, "odd-Euler fixture: unit should be eternal and the ideal check should pass", odd
        return True, "torus algebra passes; planted violations caught with their entries", None
    return _timed("9 algebra verifiers", 2, body)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9)


# -- tagged examples -----------------------------------------------------------

def _examples() -> list[tuple[str, bool]]:
    F = Fraction
    t = Nov.monomial
    out = []

    def check(name, cond):
        out.append((name, bool(cond)))

    # novikov
    check("nov_add char 2", t(0) + t(0) == Nov.zero())
    check("nov_add symmetric difference", Nov([0, 1]) + Nov([1, 2]) == Nov([0, 2]))
    check("nov_mul Frobenius", Nov([0, F(3, 2)]) * Nov([0, F(3, 2)]) == Nov([0, 3]))
    check("nov_mul monomials", t(2) * t(3) == t(5))
    check("nov_mul convolution", Nov([0, 1]) * Nov([0, 2]) == Nov([0, 1, 2, 3]))
    check("nov_val", nov_val(Nov([3, 5])) == 3 and nov_val(Nov.zero()) == INF)
    check("nov_div monomial", nov_div_window(t(2), t(1), 10) == t(1))
    q = nov_div_window(t(0), Nov([0, 1]), 3)
    check("nov_div geometric series", nov_val(t(0) + q * Nov([0, 1])) > 3)
    check("nov_div zero dividend", nov_div_window(Nov.zero(), Nov([0, 1]), 3) == Nov.zero())
    try:
        nov_div_window(t(0), Nov.zero(), 3)
        check("nov_div by zero", False)
    except DivisionByZero:
        check("nov_div by zero", True)

    # filtered complex
    g = [Generator("x1"), Generator("x2"), Generator("y")]
    check("verify_complex d=0", verify_complex(FilteredComplex(g)))
    dd = FilteredComplex([Generator("y"), Generator("x"), Generator("x'")], {"y": [("x", 0)], "x": [("x'", 0)]})
    check("verify_complex d^2", not verify_complex(dd) and "d∘d" in verify_complex(dd).message)
    neg = FilteredComplex(g, {"y": [("x1", -1)]})
    check("verify_complex negative area", verify_complex(neg).message == "negative area")
    gx = [Generator("x"), Generator("y")]
    fc = FilteredComplex(gx)
    check("filtration_level monomial", filtration_level(fc, Chain.monomial("x", 0)) == 0)
    check("filtration_level two terms",
          filtration_level(fc, Chain.monomial("x", 2) + Chain.monomial("y", 5)) == -2)
    check("filtration_level zero", filtration_level(fc, Chain()) == NEG_INF)
    check("homology d=0", homology(FilteredComplex(gx)).rank == 2)
    check("homology acyclic", homology(FilteredComplex(gx, {"y": [("x", 0)]})).rank == 0)
    check("homology rank 1", homology(FilteredComplex(g, {"y": [("x1", 1), ("x2", 1)]})).rank == 1)
    check("min_filtration d=0", min_filtration(FilteredComplex(gx), Chain.monomial("x")) == 0)
    ex = FilteredComplex.from_json(fixture_text("complex_example.json"))
    lvl, rep = optimal_representative(ex, Chain.monomial("x1"))
    check("min_filtration example", lvl == -1 and rep == Chain.monomial("x2", 1))
    try:
        min_filtration(ex, Chain.monomial("x1") + Chain.monomial("x2", 1))
        check("min_filtration zero class", False)
    except ZeroClass:
        check("min_filtration zero class", True)
    two = FilteredComplex([Generator("a", hclass="0"), Generator("b", hclass="k1")])
    parts = split_by_class(two)
    check("split_by_class", sorted(parts) == ["0", "k1"] and sum(len(p) for p in parts.values()) == 2)
    check("split_by_class single", list(split_by_class(FilteredComplex(gx))) == ["0"])

    # persistence
    check("barcode free", barcode(Presentation([("g", 0)])).bars == (Bar(F(0)),))
    check("barcode relation",
          sorted(barcode(Presentation([("g1", 0), ("g2", 1)], [(3, ["g1", "g2"])])).bars, key=str)
          == sorted([Bar(F(0)), Bar(F(1), F(3))], key=str))
    check("barcode constant", barcode(Presentation([("e", NEG_INF)])).bars == (Bar(NEG_INF),))
    fig = barcode(Presentation.from_json(fixture_text("fig1.json")))
    check("colim_basis figure", len(colim_basis(fig)) == 3)
    check("eternal figure", len(eternal_subspace(fig)) == 3 and hits_at(fig, ColimitClass([0, 1, 2]), -100))
    check("colim_basis filter", colim_basis(Barcode([Bar(NEG_INF), Bar(F(0)), Bar(F(1), F(3))])) == [0, 1])
    check("colim_basis empty", colim_basis(Barcode()) == [])
    check("eternal none", eternal_subspace(Barcode([Bar(F(0))])) == [])
    check("eternal all", len(eternal_subspace(Barcode([Bar(NEG_INF), Bar(NEG_INF)]))) == 2)
    b2 = Barcode([Bar(F(2))])
    check("hits_at after", hits_at(b2, ColimitClass([0]), 3))
    check("hits_at before", not hits_at(b2, ColimitClass([0]), 1))
    check("hits_at eternal", hits_at(Barcode([Bar(NEG_INF)]), ColimitClass([0]), -10 ** 6))
    check("rfh full", rfh_rank(Barcode([Bar(NEG_INF)])) == 0)
    check("rfh half", rfh_rank(Barcode([Bar(F(0))])) == 1)
    check("rfh dual", rfh_rank(Barcode([Bar(NEG_INF, F(3))])) == 1)

    # spectral
    check("spectral half bar", spectral_invariant(b2, ColimitClass([0])) == 2)
    check("spectral eternal", spectral_invariant(fig, ColimitClass([0, 1])) == NEG_INF)
    mix = Barcode([Bar(F(1)), Bar(F(3)), Bar(NEG_INF)])
    check("spectral mixed", spectral_invariant(mix, ColimitClass([0, 1, 2])) == 3)
    check("integer level 1", integer_level(Barcode([Bar(F(1))]), ColimitClass([0])) == 1)
    check("integer level 3/2", integer_level(Barcode([Bar(F(3, 2))]), ColimitClass([0])) == 2)
    check("integer level -1/2", integer_level(Barcode([Bar(F(-1, 2))]), ColimitClass([0])) == 0)
    try:
        integer_level(fig, ColimitClass([0]))
        check("integer level eternal", False)
    except EternalClass:
        check("integer level eternal", True)
    hams = {"0": LinearHamiltonian([0]), "p": LinearHamiltonian([1]), "-p": LinearHamiltonian([-1])}
    torus = build_algebra(hams, [(k,) for k in range(-2, 3)])
    check("oscillation H=p", oscillation(torus, "p") == 2)
    check("oscillation identity", oscillation(torus, "0") == 0)
    check("pseudo_norm identity", pseudo_norm(torus, "0") == 0)
    check("pseudo_norm H=p", pseudo_norm(torus, "p") == 1)
    check("unit not eternal on torus", not unit_eternal_criterion(torus).eternal)
    full_unit = PersistenceAlgebra(("id",), "id", {}, {}, {"id": Barcode([Bar(NEG_INF)])}, 0)
    check("unit eternal full bar", unit_eternal_criterion(full_unit).eternal)
    half_unit = PersistenceAlgebra(("id",), "id", {}, {}, {"id": Barcode([Bar(F(0))])}, 0)
    check("unit not eternal half bar", not unit_eternal_criterion(half_unit).eternal)
    check("subadditivity vacuous", check_subadditivity(half_unit))
    check("ideal vacuous on torus", check_ideal(torus))
    conj = PersistenceAlgebra.from_json(fixture_text("conjugate_pair.json"))
    check("conjugation fixture", check_conjugation(conj)
          and integer_invariant(conj, "g", ColimitClass([0])) == integer_invariant(conj, "hgh^-1",
                                                                                  ColimitClass([1])) == 2)

    # torus model
    p = LinearHamiltonian([1])
    check("shape H=p", shape_spectral(p) == 1)
    check("shape linear 3,4", shape_spectral(LinearHamiltonian([3, 4])) == 5)
    check("shape zero", shape_spectral(LinearHamiltonian([0, 0])) == 0)
    check("oscillation_exact H=p", oscillation_exact(p) == 2)
    check("oscillation_exact zero", oscillation_exact(LinearHamiltonian([0, 0])) == 0)
    check("oscillation_exact grows", oscillation_exact(LinearHamiltonian([F(3, 5) * 100, F(4, 5) * 100])) == 200)
    check("class 0 k=(3,4)", class_spectral(LinearHamiltonian([0, 0]), (3, 4)) == 5)
    check("class k=0 is shape", class_spectral(PLHamiltonian.from_json(fixture_text("diamond.json")), (0, 0))
          == shape_spectral(PLHamiltonian.from_json(fixture_text("diamond.json"))))
    check("class zero zero", class_spectral(LinearHamiltonian([0, 0]), (0, 0)) == 0)
    check("spectrum H=0 k=2", spectrum(LinearHamiltonian([0]), (2,)) == (-2, 2))
    check("spectrum H=p", spectrum(p, (0,)) == (-1, 1))
    check("systole any", systole(2) == 1 == oracles.shortest_lattice_vector(2))
    check("systole 3,4", systole(2, (3, 4)) == 5)
    try:
        systole(2, (0, 0))
        check("systole contractible", False)
    except ContractibleClass:
        check("systole contractible", True)
    check("systolic k=1,3,-2", all(check_systolic_bound(p, k).witness["c"] == abs(k) for k in (1, 3, -2)))
    one = PLHamiltonian([(1, 0), (0, 1), (-1, 0), (0, -1)], [1, 1, 1, 1], [(0, 1), (1, 2), (2, 3), (3, 0)])
    check("order zero <= positive", order_leq(LinearHamiltonian([0, 0]).to_pl(), one))
    check("order p vs 0", not order_leq(p, LinearHamiltonian([0])))
    check("order reflexive", order_leq(one, one))
    flat = build_algebra({"0": LinearHamiltonian([0, 0])}, [(0, 0), (1, 0), (-1, 0)])
    check("build single label", [b.birth for b in flat.modules["0"]] == [0, 1, 1])
    check("build no eternal bars", all(not eternal_subspace(torus.modules[g]) for g in torus.labels))
    return out


def examples_report() -> Report:
    start = time.perf_counter()
    results = _examples()
    failed = [name for name, ok in results if not ok]
    elapsed = time.perf_counter() - start
    msg = f"{len(results) - len(failed)}/{len(results)} examples" + (f"; failed: {', '.join(failed)}" if failed else "")
    return Report("examples", not failed, f"{msg}; {elapsed:.2f}s", failed or None)


def run_all(stream=None) -> list[Report]:
    """Run the tagged examples, then criteria 1-9, then the overall time budget."""
    start = time.perf_counter()
    reports = []
    for fn in (examples_report,) + CRITERIA:
        rep = fn()
        reports.append(rep)
        if stream is not None:
            print(rep.line(), file=stream, flush=True)
    elapsed = time.perf_counter() - start
    total = Report("10 selftest wall time", elapsed < 60, f"{elapsed:.2f}s of 60s")
    reports.append(total)
    if stream is not None:
        print(total.line(), file=stream, flush=True)
    return reports
