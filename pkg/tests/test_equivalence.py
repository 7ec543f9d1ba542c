"""Canonical forms, presentational symmetries and the isomorphism decision."""

import itertools
import random

import pytest

from t2orbits import (
    EnumerationBounds,
    EquivalenceMode,
    FixedCycle,
    IllegalWeightSystem,
    IsotropyPair,
    NotUnimodular,
    WeightSystem,
    apply_basis_change,
    canonical_cycle,
    canonical_form,
    enumerate_legal,
    is_isomorphic,
    lens_equivalent,
    reverse_orientation,
    space_of_directions,
    suspension_of_lens,
    validate,
    weak_witness,
    weighted_projective,
)
from tests.conftest import random_legal_cycle, random_legal_system

STRICT = EquivalenceMode.STRICT
WEAK = EquivalenceMode.WEAK


def oracle_canonical_cycle(cycle: FixedCycle) -> tuple:
    """Independent brute force: enumerate the whole presentation orbit.

    Rebuilds every candidate from scratch (rotating the pair list, choosing
    a sign for every entry, recomputing all determinants from the chosen
    representatives) and returns the minimal key sequence under the entry
    order (|f|, f, m, n).
    """
    r = len(cycle)
    best = None
    for rot in range(r):
        rotated = cycle.pairs[rot:] + cycle.pairs[:rot]
        for signs in itertools.product((1, -1), repeat=r):
            pairs = [IsotropyPair(s * p.m, s * p.n) for s, p in zip(signs, rotated)]
            dets = [pairs[w].det(pairs[(w + 1) % r]) for w in range(r)]
            key = tuple((abs(f), f, p.m, p.n) for p, f in zip(pairs, dets))
            if best is None or key < best:
                best = key
    return best


def cycle_key(cycle: FixedCycle) -> tuple:
    return tuple((abs(f), f, p.m, p.n) for p, f in cycle.entries())


class TestCanonicalCycle:
    def test_matches_brute_force_on_spec_example(self):
        c = FixedCycle.from_pairs([(0, 1), (1, 0)])
        assert c.dets == (-1, 1)
        assert cycle_key(canonical_cycle(c)) == oracle_canonical_cycle(c)

    def test_matches_brute_force_on_random_cycles(self, rng):
        for _ in range(150):
            c = random_legal_cycle(rng, bound=5)
            assert cycle_key(canonical_cycle(c)) == oracle_canonical_cycle(c)

    def test_idempotent(self, rng):
        for _ in range(100):
            c = random_legal_cycle(rng)
            once = canonical_cycle(c)
            assert canonical_cycle(once) == once

    def test_length_two_antisymmetry_preserved(self, rng):
        for _ in range(100):
            c = random_legal_cycle(rng, length=2)
            canon = canonical_cycle(c)
            assert canon.dets[0] == -canon.dets[1]

    def test_rotation_and_flip_invariance(self, rng):
        for _ in range(100):
            c = random_legal_cycle(rng)
            r = len(c)
            k = rng.randrange(r)
            rotated = FixedCycle(c.pairs[k:] + c.pairs[:k], c.dets[k:] + c.dets[:k])
            assert canonical_cycle(rotated) == canonical_cycle(c)
            w = rng.randrange(r)
            pairs = list(c.pairs)
            pairs[w] = pairs[w].flipped()
            flipped = FixedCycle.from_pairs(pairs)
            assert canonical_cycle(flipped) == canonical_cycle(c)


class TestStrictCanonicalForm:
    def test_rotation_of_cycle_start(self):
        w = suspension_of_lens((1, 0), (2, 5))
        c = w.fixed_cycles[0]
        rotated = WeightSystem(fixed_cycles=(
            FixedCycle(c.pairs[1:] + c.pairs[:1], c.dets[1:] + c.dets[:1]),))
        assert canonical_form(w) == canonical_form(rotated)

    def test_pair_sign_flips(self):
        w = suspension_of_lens((1, 0), (2, 5))
        flipped = suspension_of_lens((-1, 0), (2, 5))
        assert canonical_form(w) == canonical_form(flipped)

    def test_multiset_permutations(self, rng):
        for _ in range(50):
            w = random_legal_system(rng)
            cycles = list(w.fixed_cycles)
            circles = list(w.circle_boundaries)
            rng.shuffle(cycles)
            rng.shuffle(circles)
            permuted = WeightSystem(w.obstruction, w.orientation, w.genus,
                                    tuple(circles), tuple(cycles), w.exceptional)
            assert is_isomorphic(w, permuted, STRICT)

    def test_idempotent_through_reconstruction(self, rng):
        for _ in range(50):
            w = random_legal_system(rng)
            form = canonical_form(w)
            rebuilt = form.to_weight_system()
            assert validate(rebuilt).is_legal
            assert canonical_form(rebuilt) == form

    def test_illegal_input_raises(self):
        bad = WeightSystem(fixed_cycles=(
            FixedCycle((IsotropyPair(1, 0), IsotropyPair(1, 0)), (0, 0)),))
        with pytest.raises(IllegalWeightSystem):
            canonical_form(bad)

    def test_orientation_and_obstruction_kept_verbatim(self):
        a = WeightSystem(obstruction=(1, 2))
        b = WeightSystem(obstruction=(2, 1))
        assert canonical_form(a) != canonical_form(b)
        assert canonical_form(a) != canonical_form(reverse_orientation(a))


class TestApplyBasisChange:
    def test_identity(self, rng):
        w = random_legal_system(rng)
        assert apply_basis_change(w, ((1, 0), (0, 1))) == w

    def test_swap_acts_and_negates_determinants(self):
        w = suspension_of_lens((1, 0), (2, 5))
        swapped = apply_basis_change(w, ((0, 1), (1, 0)))
        assert swapped.fixed_cycles[0].pairs[0] == IsotropyPair(0, 1)
        assert swapped.fixed_cycles[0].pairs[1] == IsotropyPair(5, 2)
        assert swapped.fixed_cycles[0].dets == (-5, 5)

    def test_rejects_non_unimodular(self):
        with pytest.raises(NotUnimodular):
            apply_basis_change(WeightSystem(), ((2, 0), (0, 1)))

    def test_legality_preserved(self, rng):
        shear = ((1, 1), (0, 1))
        swap = ((0, 1), (1, 0))
        flip = ((-1, 0), (0, 1))
        for _ in range(200):
            w = random_legal_system(rng)
            matrix = ((1, 0), (0, 1))
            from t2orbits.equivalence import _mat_mul
            for _ in range(rng.randint(1, 4)):
                matrix = _mat_mul(matrix, rng.choice((shear, swap, flip)))
            moved = apply_basis_change(w, matrix)
            assert validate(moved).is_legal

    def test_obstruction_transforms_as_vector(self):
        w = WeightSystem(obstruction=(2, 3))
        moved = apply_basis_change(w, ((1, 1), (0, 1)))
        assert moved.obstruction == (5, 3)


class TestReverseOrientation:
    def test_suspension_swaps_to_reversed_parameters(self):
        w = suspension_of_lens((1, 0), (2, 5))
        assert reverse_orientation(w) == suspension_of_lens((2, 5), (1, 0), -1)

    def test_involution_up_to_presentation(self, rng):
        for _ in range(100):
            w = random_legal_system(rng)
            assert canonical_form(reverse_orientation(reverse_orientation(w))) \
                == canonical_form(w)

    def test_legality_preserved_on_small_census(self):
        bounds = EnumerationBounds(max_cycles=1, max_cycle_length=3,
                                   max_weight_entry=2, max_exceptional=1,
                                   max_alpha=3, max_circle_boundaries=1,
                                   max_obstruction=1, max_genus=1)
        for w in enumerate_legal(bounds):
            assert validate(reverse_orientation(w)).is_legal

    def test_seifert_conjugation(self):
        from t2orbits import ExceptionalOrbit
        w = WeightSystem(exceptional=(ExceptionalOrbit(5, 2, 0),))
        assert reverse_orientation(w).exceptional[0] == ExceptionalOrbit(5, 3, 0)


class TestIsIsomorphic:
    def test_different_suspensions_differ_but_local_models_agree(self):
        a = suspension_of_lens((1, 0), (2, 5))
        b = suspension_of_lens((1, 0), (3, 5))
        assert not is_isomorphic(a, b, STRICT)
        # the local models alone cannot distinguish them
        assert lens_equivalent(space_of_directions((1, 0), (2, 5)),
                               space_of_directions((1, 0), (3, 5)))

    def test_reversal_weak_but_not_strict_on_asymmetric_system(self):
        w = weighted_projective(1, 2, 3)
        r = reverse_orientation(w)
        assert not is_isomorphic(w, r, STRICT)
        assert is_isomorphic(w, r, WEAK)

    def test_strict_implies_weak_on_census(self):
        bounds = EnumerationBounds(max_cycles=1, max_cycle_length=3,
                                   max_weight_entry=2)
        census = list(enumerate_legal(bounds))
        rng = random.Random(3)
        pairs = [(rng.choice(census), rng.choice(census)) for _ in range(40)]
        pairs += [(w, w) for w in rng.sample(census, 20)]
        for a, b in pairs:
            if is_isomorphic(a, b, STRICT):
                assert is_isomorphic(a, b, WEAK)

    def test_equivalence_relation_on_census_sample(self):
        bounds = EnumerationBounds(max_cycles=1, max_cycle_length=3,
                                   max_weight_entry=2)
        census = list(enumerate_legal(bounds))
        rng = random.Random(4)
        sample = rng.sample(census, 30)
        for w in sample:
            assert is_isomorphic(w, w, STRICT)  # reflexive
        for a, b in zip(sample, sample[1:]):
            assert is_isomorphic(a, b, STRICT) == is_isomorphic(b, a, STRICT)
        # transitivity through shared canonical forms
        for a in sample[:10]:
            matches = [b for b in census if is_isomorphic(a, b, STRICT)]
            for b, c in zip(matches, matches[1:]):
                assert is_isomorphic(b, c, STRICT)


class TestWeakMode:
    def test_shear_example(self):
        w = suspension_of_lens((1, 0), (2, 5))
        moved = apply_basis_change(w, ((1, 1), (0, 1)))
        assert canonical_form(w, WEAK) == canonical_form(moved, WEAK)
        assert weak_witness(w, moved) is not None

    def test_witness_none_when_not_isomorphic(self):
        a = suspension_of_lens((1, 0), (2, 5))
        b = suspension_of_lens((1, 0), (3, 7))
        assert weak_witness(a, b) is None

    def test_witness_verifies(self, rng):
        from t2orbits.equivalence import _mat_mul
        shear = ((1, 1), (0, 1))
        swap = ((0, 1), (1, 0))
        for _ in range(40):
            w = random_legal_system(rng, bound=4)
            matrix = ((1, 0), (0, 1))
            for _ in range(rng.randint(1, 3)):
                matrix = _mat_mul(matrix, rng.choice((shear, swap)))
            moved = apply_basis_change(w, matrix)
            if rng.random() < 0.5:
                moved = reverse_orientation(moved)
            witness = weak_witness(w, moved)
            assert witness is not None  # weak_witness verifies internally

    def test_weak_canonical_idempotent(self, rng):
        for _ in range(30):
            w = random_legal_system(rng, bound=4)
            form = canonical_form(w, WEAK)
            assert canonical_form(form.to_weight_system(), WEAK) == form

    def test_closed_obstruction_gcd_normal_form(self):
        a = WeightSystem(obstruction=(2, 4))
        b = WeightSystem(obstruction=(4, 2))
        c = WeightSystem(obstruction=(2, 3))
        assert is_isomorphic(a, b, WEAK)
        assert not is_isomorphic(a, c, WEAK)

    def test_cross_validated_against_bounded_brute_force(self):
        # Compare weak equality against an exhaustive search over all
        # unimodular matrices with entries bounded by 3, plus reversal.
        entries = range(-3, 4)
        brute = [((a, b), (c, d))
                 for a in entries for b in entries
                 for c in entries for d in entries
                 if abs(a * d - b * c) == 1]

        def brute_weak_equal(x, y):
            fy = canonical_form(y)
            for base in (x, reverse_orientation(x)):
                for matrix in brute:
                    if canonical_form(apply_basis_change(base, matrix)) == fy:
                        return True
            return False

        bounds = EnumerationBounds(max_cycles=1, max_cycle_length=3,
                                   max_weight_entry=2)
        census = list(enumerate_legal(bounds))
        rng = random.Random(11)
        sample = rng.sample(census, 12)
        shear = ((1, 1), (0, 1))
        swap = ((0, 1), (1, 0))
        for w in sample:
            for matrix in (shear, swap, ((1, -2), (0, -1))):
                moved = apply_basis_change(w, matrix)
                assert is_isomorphic(w, moved, WEAK) == brute_weak_equal(w, moved)
                assert is_isomorphic(w, moved, WEAK)
        for a, b in zip(sample, sample[1:]):
            assert is_isomorphic(a, b, WEAK) == brute_weak_equal(a, b)


class TestLargerCycles:
    def test_canonical_cycle_matches_oracle_on_longer_cycles(self, rng):
        # the search space grows as r * 2^r; spot-check well beyond the census
        for length in (5, 6, 8):
            for _ in range(8):
                c = random_legal_cycle(rng, length=length, bound=4)
                assert cycle_key(canonical_cycle(c)) == oracle_canonical_cycle(c)

    def test_weak_witness_between_independent_constructions(self):
        # same action described in two torus parametrizations from scratch
        a = suspension_of_lens((1, 0), (2, 5))
        b = suspension_of_lens((0, 1), (5, 2))
        witness = weak_witness(a, b)
        assert witness is not None
        moved = apply_basis_change(
            reverse_orientation(a) if witness.orientation_reversed else a,
            witness.matrix)
        assert is_isomorphic(moved, b, STRICT)


class TestConcurrentUse:
    def test_shared_values_are_safe_across_threads(self):
        # All values are immutable and operations pure; internal caches are
        # idempotent, so concurrent canonicalization must agree everywhere.
        import concurrent.futures
        import random as _random

        rng = _random.Random(77)
        systems = [random_legal_system(rng) for _ in range(200)]
        expected = [canonical_form(w).key for w in systems]

        def worker(seed):
            order = list(range(len(systems)))
            _random.Random(seed).shuffle(order)
            return [(i, canonical_form(systems[i]).key) for i in order]

        with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
            for result in pool.map(worker, range(8)):
                for i, key in result:
                    assert key == expected[i]
