from math import factorial

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from catalog.services import (
    antichain, chain, crown, crown_blown_up, generate_frame, lock_cycle, random_poset, relay,
    separated_crown, s_w, spec, w_c2,
)
from counting.search import automorphism_count
from poset_core.services import disjoint_union
from .domain import OrbitFrame
from .dot import orbit_graph_to_dot
from .exceptions import FrameError, NotTightError, SameCellError
from .invariants import POSET_SUITES, check_unions
from .locks import classify_cycles, lock_cycles, locked_restriction_bound
from .services import (
    direct_interdependence, factorization_check, interdependent_orbit_unions, is_max_locked,
    max_locked_unions, natural_frame, orbit_graph, require_tight, restriction_group, structured,
    tighten, union_structured_poset,
)

RELAY_UNIONS = [(0, 1, 4, 5, 6), (2, 3, 7, 8)]


class StructuredPosetFactory:
    counter = 0

    @classmethod
    def create(cls, **kwargs):
        cls.counter += 1
        defaults = {'poset': relay(), 'frame': None}
        defaults.update(kwargs)
        return structured(defaults['poset'], defaults['frame'])


class OrbitFrameTest(SimpleTestCase):
    def test_cells_are_sorted(self):
        frame = OrbitFrame(((3, 2), (1, 0)))
        self.assertEqual(frame.cells, ((0, 1), (2, 3)))
        self.assertEqual(frame.colours(), [0, 0, 1, 1])

    def test_overlap_rejected(self):
        with self.assertRaises(FrameError):
            OrbitFrame(((0, 1), (1, 2)))

    def test_cell_must_be_antichain(self):
        with self.assertRaises(FrameError):
            structured(chain(2), [(0, 1)])

    def test_frame_must_cover(self):
        with self.assertRaises(FrameError):
            structured(antichain(3), [(0, 1)])


class NaturalFrameTest(SimpleTestCase):
    def test_antichain_is_one_cell(self):
        self.assertEqual(natural_frame(antichain(4)).cells, ((0, 1, 2, 3),))

    def test_rigid_poset_gives_singletons(self):
        self.assertTrue(natural_frame(chain(3)).singletons())

    def test_relay_orbits(self):
        self.assertEqual(natural_frame(relay()).cells, generate_frame(spec('relay')))

    def test_singleton_frame_has_trivial_group(self):
        sp = StructuredPosetFactory.create(poset=s_w(3), frame=[(x,) for x in range(6)])
        self.assertEqual(sp.frame_group.order(), 1)


class InterdependenceTest(SimpleTestCase):
    def test_relay_edges(self):
        sp = StructuredPosetFactory.create()
        self.assertTrue(direct_interdependence(sp, 0, 1))
        self.assertFalse(direct_interdependence(sp, 1, 2))
        self.assertFalse(direct_interdependence(sp, 0, 2))

    def test_same_cell(self):
        with self.assertRaises(SameCellError):
            direct_interdependence(StructuredPosetFactory.create(), 3, 3)

    def test_relay_unions(self):
        og = orbit_graph(StructuredPosetFactory.create())
        self.assertEqual(interdependent_orbit_unions(og), RELAY_UNIONS)

    def test_standard_example_single_component(self):
        og = orbit_graph(StructuredPosetFactory.create(poset=s_w(4)))
        self.assertEqual(interdependent_orbit_unions(og), [(0, 1)])
        self.assertEqual(og.orientation[(0, 1)], 'below')

    def test_rigid_poset_components_are_singletons(self):
        og = orbit_graph(StructuredPosetFactory.create(poset=chain(3)))
        self.assertEqual(interdependent_orbit_unions(og), [(0,), (1,), (2,)])


class FactorizationTest(SimpleTestCase):
    def test_relay(self):
        self.assertEqual(factorization_check(relay()), (36, 36, True))

    def test_rigid(self):
        self.assertEqual(factorization_check(chain(4)), (1, 1, True))

    def test_disjoint_union_with_rigid_part(self):
        self.assertEqual(factorization_check(disjoint_union([s_w(3), chain(2)])), (6, 6, True))

    def test_framed_union_group_is_smaller_than_standalone(self):
        sp = StructuredPosetFactory.create()
        union, elements = union_structured_poset(sp, RELAY_UNIONS[1])
        self.assertEqual(len(elements), 12)
        self.assertEqual(union.frame_group.order(), 6)
        self.assertEqual(automorphism_count(union.poset), 12)

    def test_restriction_to_union(self):
        sp = StructuredPosetFactory.create()
        cells = [x for c in RELAY_UNIONS[1] for x in sp.cells[c]]
        self.assertEqual(restriction_group(sp, cells).order(), 6)

    @given(seed=st.integers(min_value=0, max_value=2 ** 32), n=st.integers(min_value=1, max_value=9))
    @settings(max_examples=25, deadline=None)
    def test_random_posets_factor(self, seed, n):
        self.assertTrue(factorization_check(random_poset(n, seed=seed))[2])


class TightnessTest(SimpleTestCase):
    def test_rank_frame_tightens_to_orbits(self):
        p = relay()
        ranks = sorted({tuple(p.rank_level(r)) for r in range(p.height + 1)})
        tightened = tighten(StructuredPosetFactory.create(poset=p, frame=ranks))
        self.assertEqual(tightened.cells, generate_frame(spec('relay')))

    def test_blown_up_crown_has_slack(self):
        sp = StructuredPosetFactory.create(poset=crown_blown_up(3, 2))
        self.assertFalse(sp.without_slack)
        self.assertFalse(sp.tight)
        with self.assertRaises(NotTightError):
            require_tight(sp)

    def test_separated_crown_is_tight(self):
        sp = StructuredPosetFactory.create(poset=separated_crown(3))
        self.assertTrue(sp.tight)
        self.assertEqual(sp.frame_group.order(), 48)


class MaxLockedTest(SimpleTestCase):
    def test_standard_example(self):
        self.assertTrue(is_max_locked(s_w(5)))

    def test_chains(self):
        self.assertTrue(is_max_locked(w_c2(5)))

    def test_max_locked_families_across_widths(self):
        for w in range(3, 9):
            for build in (s_w, w_c2):
                with self.subTest(family=build.__name__, w=w):
                    p = build(w)
                    self.assertEqual(automorphism_count(p), factorial(w))
                    self.assertTrue(is_max_locked(p))

    def test_chain_is_too_narrow(self):
        self.assertFalse(is_max_locked(chain(3)))

    def test_crown_is_not(self):
        self.assertFalse(is_max_locked(crown(4)))

    def test_unions_found(self):
        unions = max_locked_unions(disjoint_union([s_w(3), w_c2(2)]))
        self.assertEqual(sorted((u.kind, u.w) for u in unions), [('chains', 2), ('standard', 3)])
        standard = next(u for u in unions if u.kind == 'standard')
        self.assertEqual(standard.lower, (0, 1, 2))
        self.assertEqual(standard.upper, (3, 4, 5))


class LockCycleTest(SimpleTestCase):
    def _structured(self, shift):
        p = lock_cycle(3, shift)
        return StructuredPosetFactory.create(poset=p, frame=generate_frame(spec('lock_cycle', M=3, shift=shift)))

    def test_trivial_lock(self):
        (report,) = lock_cycles(self._structured(0))
        self.assertEqual(report.cycle, (0, 1, 2, 3))
        self.assertEqual(report.M, 3)
        self.assertEqual(report.steps, ('standard', 'chains', 'chains', 'chains'))
        self.assertEqual(report.locked_pairs, ((0, 0), (1, 1), (2, 2)))
        self.assertFalse(report.nontrivially_locked)

    def test_shifted_lock(self):
        sp = self._structured(1)
        self.assertEqual(sp.frame_group.order(), 3)
        (report,) = lock_cycles(sp)
        self.assertEqual(report.locked_pairs, ((0, 2), (1, 0), (2, 1)))
        order, bound = locked_restriction_bound(sp, report)
        self.assertLessEqual(order, bound)
        self.assertEqual(bound, 3)

    def test_tree_graph_has_no_cycles(self):
        sp = StructuredPosetFactory.create(poset=separated_crown(3))
        self.assertEqual(classify_cycles(sp), [])
        self.assertEqual(lock_cycles(sp), [])


class DotExportTest(SimpleTestCase):
    def test_standard_example(self):
        dot = orbit_graph_to_dot(orbit_graph(StructuredPosetFactory.create(poset=s_w(3))))
        self.assertIn('D0 [label="D0(3)"];', dot)
        self.assertIn('D0 -> D1;', dot)
        self.assertTrue(dot.startswith('digraph orbits {'))


class InvariantSuiteTest(SimpleTestCase):
    def test_suites_pass_on_fixtures(self):
        for p in (relay(), lock_cycle(3, 1), s_w(4), antichain(3), separated_crown(3)):
            for name, suite in POSET_SUITES.items():
                self.assertEqual(suite(p), [], f"{name} on {p}")

    def test_union_properties_on_separated_crown(self):
        self.assertEqual(check_unions(separated_crown(3)), [])
