from fractions import Fraction
from unittest import mock

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from catalog.services import (
    antichain, chain, crown, generate_frame, lock_cycle, random_poset, relay, s_w, spec, w_c2,
)
from core.exact import at_most_power_of_two
from orbit_structure.services import natural_frame
from permgroup.domain import PermGroup
from permgroup.exceptions import OrderMismatchError
from poset_core.services import from_relation
from .endomorphisms import (
    count_endomorphisms, count_frame_endomorphisms, count_order_preserving_into, is_order_preserving,
)
from .exceptions import CapExceededError, CountingError, InvalidFrameError
from .families import (
    ChainRetractionFamily, MaxLockedFanFamily, constructive_endo_lower_bound, three_fan_families,
)
from .invariants import POSET_SUITES, SUITES
from .oracles import (
    brute_force_automorphism_count, brute_force_endomorphism_count, brute_force_frame_endomorphism_count,
)
from .search import aut_group, are_isomorphic, find_isomorphism, iter_automorphisms
from .services import ac_ratio


class PosetFactory:
    counter = 0

    @classmethod
    def create(cls, **kwargs):
        cls.counter += 1
        defaults = {'n': 5, 'pairs': [(0, 2), (1, 2), (2, 3), (2, 4)]}
        defaults.update(kwargs)
        return from_relation(defaults['n'], defaults['pairs'])


class AutomorphismSearchTest(SimpleTestCase):
    def test_antichain(self):
        self.assertEqual(aut_group(antichain(4)).order(), 24)

    def test_standard_example(self):
        self.assertEqual(aut_group(s_w(5)).order(), 120)

    def test_search_order_disagreement_raises(self):
        schreier_sims = mock.Mock()
        schreier_sims.order.return_value = 1
        with mock.patch.object(PermGroup, 'sympy_group', return_value=schreier_sims):
            with self.assertRaises(OrderMismatchError):
                aut_group(s_w(3))

    def test_relay(self):
        group = aut_group(relay())
        self.assertEqual(group.order(), 36)
        self.assertEqual(group.check_order(), 36)
        self.assertEqual(len(group.orbits()), 9)

    def test_enumeration_matches_order(self):
        self.assertEqual(len(iter_automorphisms(w_c2(3))), 6)

    def test_isomorphism(self):
        image = find_isomorphism(s_w(3), crown(3))
        self.assertIsNotNone(image)
        self.assertFalse(are_isomorphic(chain(3), antichain(3)))

    @given(seed=st.integers(min_value=0, max_value=2 ** 32), n=st.integers(min_value=1, max_value=6))
    @settings(max_examples=40, deadline=None)
    def test_search_matches_brute_force(self, seed, n):
        p = random_poset(n, seed=seed)
        self.assertEqual(aut_group(p).order(), brute_force_automorphism_count(p))


class EndomorphismCountTest(SimpleTestCase):
    def test_antichain(self):
        self.assertEqual(count_endomorphisms(antichain(3)), 27)

    def test_chains(self):
        self.assertEqual(count_endomorphisms(chain(2)), 3)
        self.assertEqual(count_endomorphisms(chain(4)), 35)

    def test_cap(self):
        with self.assertRaises(CapExceededError):
            count_endomorphisms(chain(5), cap=4)

    def test_maps_into_a_chain(self):
        bowtie = PosetFactory.create()
        self.assertEqual(count_order_preserving_into(bowtie, [0b01101] * 5), 34)

    @given(seed=st.integers(min_value=0, max_value=2 ** 32), n=st.integers(min_value=1, max_value=5))
    @settings(max_examples=40, deadline=None)
    def test_count_matches_brute_force(self, seed, n):
        p = random_poset(n, seed=seed)
        self.assertEqual(count_endomorphisms(p), brute_force_endomorphism_count(p))


class FrameEndomorphismTest(SimpleTestCase):
    def test_singleton_frame(self):
        p = PosetFactory.create()
        self.assertEqual(count_frame_endomorphisms(p, [(x,) for x in range(5)]), 1)

    def test_chains_natural_frame(self):
        p = w_c2(3)
        frame = natural_frame(p)
        self.assertEqual(count_frame_endomorphisms(p, frame), 27)
        self.assertEqual(brute_force_frame_endomorphism_count(p, frame.cells), 27)

    def test_standard_example_natural_frame(self):
        p = s_w(3)
        cells = natural_frame(p).cells
        count = count_frame_endomorphisms(p, cells)
        self.assertGreaterEqual(count, 8)
        self.assertEqual(count, brute_force_frame_endomorphism_count(p, cells))

    def test_max_locked_frame_endomorphisms_across_widths(self):
        for w in (3, 4, 5):
            with self.subTest(w=w):
                chains = w_c2(w)
                self.assertGreaterEqual(count_frame_endomorphisms(chains, natural_frame(chains)), w ** w)
                standard = s_w(w)
                self.assertGreaterEqual(count_frame_endomorphisms(standard, natural_frame(standard)), (w - 1) ** w)

    def test_lock_cycle_maps_are_automorphisms(self):
        for M in (3, 4):
            frame = generate_frame(spec('lock_cycle', M=M))
            self.assertEqual(count_frame_endomorphisms(lock_cycle(M), frame), 6 if M == 3 else 24)

    def test_frame_must_partition(self):
        with self.assertRaises(InvalidFrameError):
            count_frame_endomorphisms(antichain(3), [(0, 1)])

    def test_oracle_limit(self):
        with self.assertRaises(CountingError):
            brute_force_frame_endomorphism_count(antichain(6), [tuple(range(6))], max_maps=1000)


class FamilyTest(SimpleTestCase):
    def test_height_two_fan(self):
        family = constructive_endo_lower_bound(PosetFactory.create())
        self.assertEqual(family.count, 81)
        self.assertEqual(family.description, 'three-fan height 2, middle collapsed')
        self.assertEqual(family.fanned_levels, (0, 2))
        self.assertTrue(family.verified)

    def test_height_three_fans(self):
        p = PosetFactory.create(pairs=[(0, 1), (1, 2), (2, 3), (2, 4)])
        families = three_fan_families(p)
        self.assertEqual([f.count for f in families], [27, 27, 27])
        self.assertEqual([f.fanned_levels for f in families], [(2, 3), (1, 3), (0, 3)])
        for family in families:
            self.assertTrue(all(is_order_preserving(p, image) for image in family.members()))
        self.assertEqual(ChainRetractionFamily(p).count, 77)

    def test_standard_example_fan(self):
        family = constructive_endo_lower_bound(s_w(4))
        self.assertEqual(family.description, 'max-locked fan')
        self.assertEqual(family.count, 3 ** 4)
        self.assertTrue(family.verified)

    def test_chains_fan(self):
        self.assertEqual(MaxLockedFanFamily(w_c2(3)).count, 27)

    def test_single_element(self):
        family = constructive_endo_lower_bound(antichain(1))
        self.assertEqual((family.description, family.count), ('constant', 1))

    def test_random_members_are_order_preserving(self):
        rng = np.random.default_rng(7)
        p = random_poset(9, seed=11)
        family = ChainRetractionFamily(p)
        for _ in range(20):
            self.assertTrue(is_order_preserving(p, family.random_member(rng)))


class RatioTest(SimpleTestCase):
    def test_antichain(self):
        report = ac_ratio(antichain(3))
        self.assertEqual((report.aut_order, report.end_count), (6, 27))
        self.assertEqual(report.ratio, Fraction(2, 9))
        self.assertTrue(at_most_power_of_two(report.ratio, report.lg_ratio_upper))

    def test_two_chain(self):
        self.assertEqual(ac_ratio(chain(2)).ratio, Fraction(1, 3))

    def test_standard_example(self):
        report = ac_ratio(s_w(4))
        self.assertTrue(report.end_exact)
        self.assertLessEqual(report.ratio, Fraction(24, 81))

    def test_family_bound_over_cap(self):
        report = ac_ratio(antichain(4), end_cap=3)
        self.assertFalse(report.end_exact)
        self.assertEqual((report.end_count, report.family), (4, 'constant'))


class InvariantSuiteTest(SimpleTestCase):
    def test_global_suites(self):
        for name, suite in SUITES.items():
            self.assertEqual(suite(), [], name)

    def test_poset_suites(self):
        for p in (s_w(3), PosetFactory.create(), chain(3), w_c2(2)):
            for name, suite in POSET_SUITES.items():
                self.assertEqual(suite(p), [], f"{name} on {p}")
