from django.test import SimpleTestCase

from counting.search import automorphism_count
from poset_core.services import width
from .domain import GeneratorSpec
from .enumeration import enumerate_small_posets
from .exceptions import GeneratorError
from .services import (
    chain, circulant, crown, crown_blown_up, generate, generate_frame, lock_cycle, random_poset, relay,
    s_w, separated_crown, spec, w_c2,
)


class GeneratorSpecFactory:
    counter = 0

    @classmethod
    def create(cls, **kwargs):
        cls.counter += 1
        defaults = {'kind': 'random', 'parameters': {'n': 8}, 'seed': cls.counter}
        defaults.update(kwargs)
        return GeneratorSpec(**defaults)


class GeneratorSpecTest(SimpleTestCase):
    def test_defaults_filled(self):
        self.assertEqual(GeneratorSpecFactory.create().parameters, {'n': 8, 'levels': 3, 'density': 40})

    def test_unknown_kind(self):
        with self.assertRaises(GeneratorError):
            GeneratorSpecFactory.create(kind='tree')

    def test_missing_parameter(self):
        with self.assertRaises(GeneratorError):
            GeneratorSpecFactory.create(kind='s_w', parameters={})

    def test_seeded_kind_requires_seed(self):
        with self.assertRaises(GeneratorError):
            GeneratorSpecFactory.create(seed=None)

    def test_from_arguments(self):
        parsed = GeneratorSpec.from_arguments('lock_cycle', ['M=4', 'shift=1'])
        self.assertEqual((parsed['M'], parsed['shift']), (4, 1))
        with self.assertRaises(GeneratorError):
            GeneratorSpec.from_arguments('chain', ['n'])

    def test_kind_aliases(self):
        self.assertEqual(GeneratorSpec.from_arguments('no_d_endos', ['M=3']).kind, 'lock_cycle')
        self.assertEqual(GeneratorSpecFactory.create(kind='transmit_drive', parameters={}).kind, 'relay')


class FixtureTest(SimpleTestCase):
    def test_standard_example(self):
        p = s_w(4)
        self.assertEqual((p.size, p.height, width(p)), (8, 1, 4))
        self.assertEqual(automorphism_count(p), 24)

    def test_chains_and_crowns(self):
        self.assertEqual(automorphism_count(w_c2(3)), 6)
        self.assertEqual(automorphism_count(crown(4)), 8)
        self.assertEqual(crown_blown_up(3, 2).size, 12)

    def test_small_parameters_rejected(self):
        for build, argument in ((s_w, 2), (crown, 1), (lock_cycle, 2), (chain, 0)):
            with self.assertRaises(GeneratorError):
                build(argument)

    def test_lock_cycle_groups(self):
        self.assertEqual(automorphism_count(lock_cycle(3)), 6)
        self.assertEqual(automorphism_count(lock_cycle(5, 2)), 5)

    def test_relay_labels(self):
        p = relay()
        self.assertEqual(p.size, 27)
        self.assertEqual((p.label(0), p.label(15)), ('A1', 'A~1'))

    def test_separated_crown_frame(self):
        frame = generate_frame(spec('separated_crown', k=3))
        self.assertEqual([len(cell) for cell in frame], [6, 3, 6])
        self.assertEqual(separated_crown(3).size, 15)

    def test_natural_kinds_have_no_frame(self):
        self.assertIsNone(generate_frame(spec('chain', n=3)))


class SeededGeneratorTest(SimpleTestCase):
    def test_random_is_reproducible(self):
        self.assertEqual(random_poset(10, seed=5), random_poset(10, seed=5))

    def test_generate_dispatch(self):
        self.assertEqual(generate(spec('random', seed=9, n=7)), random_poset(7, seed=9))

    def test_circulant_is_rotation_invariant(self):
        p = circulant(4, levels=2, density=60, seed=3)
        rotate = [level * 4 + (i + 1) % 4 for level in range(2) for i in range(4)]
        self.assertTrue((p.lt[rotate][:, rotate] == p.lt).all())


class EnumerationTest(SimpleTestCase):
    def test_class_counts(self):
        self.assertEqual([len(list(enumerate_small_posets(n))) for n in range(1, 6)], [1, 2, 5, 16, 63])

    def test_limit(self):
        with self.assertRaises(GeneratorError):
            list(enumerate_small_posets(7))
