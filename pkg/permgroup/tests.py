import os
import pickle
import tempfile
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from .domain import PermGroup, Permutation
from .exceptional import exceptional_lookup, level_bound_constant, load_table, verify_table
from .exceptions import GroupError, NotABlockError, NotTransitiveError, OrderMismatchError, TableIntegrityError
from .fixtures import (
    agl_1_5, alternating_group, cyclic_group, grid_product_group, pgl_2_5, psl_2_5, psl_3_2,
    row_column_group, row_column_rows, symmetric_group, transitive_fixtures,
)
from .invariants import check_exceptional_table, check_group
from .nesting import (
    all_primitive_nestings, classify_nesting, contains_alternating, has_only_proper_nestings,
    primitive_nesting,
)
from .oracles import brute_force_is_primitive, preserved_partitions
from .services import (
    action_on_partition, block_system, format_group, group_order, induced_block_action,
    induced_on_block, is_primitive, is_transitive, minimal_block_containing, orbits, parse_group,
    parse_permutation,
)


class PermGroupFactory:
    counter = 0

    @classmethod
    def create(cls, **kwargs):
        cls.counter += 1
        defaults = {
            'degree': 4,
            'generators': [Permutation.from_cycles(4, (0, 1, 2, 3))],
        }
        defaults.update(kwargs)
        return PermGroup(**defaults)


class PermutationTest(SimpleTestCase):
    def test_rejects_non_bijection(self):
        with self.assertRaises(GroupError):
            Permutation((0, 0, 1))

    def test_product_applies_left_factor_first(self):
        a = Permutation.from_cycles(3, (0, 1))
        b = Permutation.from_cycles(3, (1, 2))
        self.assertEqual((a * b)(0), 2)
        self.assertTrue((a * a.inverse()).is_identity())

    def test_restricted_requires_invariant_points(self):
        with self.assertRaises(GroupError):
            Permutation.from_cycles(3, (0, 2)).restricted((0, 1))

    def test_text_format(self):
        group = parse_group("# C4\n1 2 3 0\n")
        self.assertEqual(group.order(), 4)
        self.assertEqual(format_group(group), "1 2 3 0\n")
        self.assertEqual(parse_permutation("2 0 1"), Permutation.from_cycles(3, (0, 2, 1)))


class GroupOrderTest(SimpleTestCase):
    def test_symmetric_group_on_five_points(self):
        group = PermGroupFactory.create(degree=5, generators=[
            Permutation.from_cycles(5, (0, 1)), Permutation.from_cycles(5, (0, 1, 2, 3, 4))])
        self.assertEqual(group_order(group), 120)

    def test_cyclic(self):
        self.assertEqual(group_order(PermGroupFactory.create()), 4)

    def test_table_fixtures(self):
        self.assertEqual(agl_1_5().order(), 20)
        self.assertEqual(psl_2_5().order(), 60)
        self.assertEqual(pgl_2_5().order(), 120)
        self.assertEqual(psl_3_2().order(), 168)

    def test_recorded_order_is_checked(self):
        generators = [Permutation.from_cycles(4, (0, 1, 2, 3))]
        self.assertEqual(PermGroup(4, generators, order=4).check_order(), 4)
        with self.assertRaises(OrderMismatchError) as raised:
            PermGroup(4, generators, order=8).check_order()
        self.assertEqual((raised.exception.recorded, raised.exception.computed), (8, 4))

    def test_order_survives_pickling(self):
        group = pickle.loads(pickle.dumps(psl_3_2()))
        self.assertEqual(group.order(), 168)

    @settings(max_examples=30, deadline=None)
    @given(st.permutations(range(5)), st.permutations(range(5)))
    def test_order_matches_enumeration(self, first, second):
        group = PermGroup(5, [first, second])
        self.assertEqual(group.order(), len(group.elements()))


class OrbitTest(SimpleTestCase):
    def test_identity_group(self):
        self.assertEqual(orbits(PermGroup(3)), [(0,), (1,), (2,)])

    def test_cycle_is_transitive(self):
        self.assertTrue(is_transitive(PermGroupFactory.create()))

    def test_transposition_on_three_points(self):
        group = PermGroup(3, [Permutation.from_cycles(3, (0, 1))])
        self.assertEqual(orbits(group), [(0, 1), (2,)])
        self.assertFalse(is_transitive(group))

    def test_row_column_group_is_intransitive(self):
        self.assertEqual(sorted(len(orbit) for orbit in orbits(row_column_group(3))), [3, 6])


class BlockTest(SimpleTestCase):
    def test_minimal_block_in_cyclic_group(self):
        self.assertEqual(minimal_block_containing(cyclic_group(4), (0, 2)), (0, 2))

    def test_symmetric_group_has_no_proper_block(self):
        self.assertEqual(minimal_block_containing(symmetric_group(4), (1, 3)), (0, 1, 2, 3))

    def test_grid_row_is_a_block(self):
        self.assertEqual(minimal_block_containing(grid_product_group(2), (0, 1)), (0, 1))

    def test_requires_transitivity(self):
        with self.assertRaises(NotTransitiveError):
            minimal_block_containing(PermGroup(3, [(1, 0, 2)]), (0, 1))

    def test_primitivity(self):
        self.assertTrue(is_primitive(symmetric_group(3)))
        self.assertFalse(is_primitive(cyclic_group(4)))
        self.assertTrue(is_primitive(agl_1_5()))

    def test_block_system(self):
        self.assertEqual(block_system(cyclic_group(4), {0, 2}).cells, ((0, 2), (1, 3)))
        self.assertEqual(block_system(cyclic_group(4), {1}).cells, ((0,), (1,), (2,), (3,)))
        self.assertEqual(block_system(cyclic_group(4), range(4)).cells, ((0, 1, 2, 3),))

    def test_non_block_is_rejected(self):
        with self.assertRaises(NotABlockError):
            block_system(cyclic_group(4), {0, 1})

    def test_induced_actions(self):
        self.assertEqual(induced_on_block(symmetric_group(4), range(4)).order(), 24)
        action = induced_block_action(cyclic_group(4), (0, 2), range(4))
        self.assertEqual((action.degree, action.order()), (2, 2))

    def test_induced_on_inner_block(self):
        self.assertEqual(induced_on_block(grid_product_group(3), (0, 1, 2)).order(), 6)

    def test_row_action_of_row_column_group(self):
        self.assertEqual(action_on_partition(row_column_group(3), row_column_rows(3)).order(), 6)


class NestingTest(SimpleTestCase):
    def test_primitive_group_has_one_level(self):
        nest = primitive_nesting(agl_1_5())
        self.assertEqual(nest.blocks, ((0,), (0, 1, 2, 3, 4)))
        self.assertEqual(nest.levels[0].degree, 5)

    def test_cyclic_nesting(self):
        nest = primitive_nesting(cyclic_group(4), 0)
        self.assertEqual(nest.blocks, ((0,), (0, 2), (0, 1, 2, 3)))
        self.assertEqual([level.degree for level in nest.levels], [2, 2])
        self.assertTrue(classify_nesting(nest).proper)

    def test_grid_nesting_prefers_least_block(self):
        nest = primitive_nesting(grid_product_group(3), 0)
        self.assertEqual(nest.blocks[1], (0, 1, 2))
        self.assertEqual([level.degree for level in nest.levels], [3, 3])
        self.assertEqual(len(all_primitive_nestings(grid_product_group(3))), 2)

    def test_alternating_containment(self):
        self.assertTrue(contains_alternating(symmetric_group(7)))
        self.assertTrue(contains_alternating(alternating_group(6)))
        self.assertFalse(contains_alternating(agl_1_5()))

    def test_symmetric_level_of_degree_six_is_improper(self):
        classification = classify_nesting(primitive_nesting(symmetric_group(6)))
        self.assertFalse(classification.proper)
        self.assertEqual(classification.factorial_indices, (0,))
        self.assertFalse(has_only_proper_nestings(symmetric_group(6)))
        self.assertTrue(has_only_proper_nestings(pgl_2_5()))


class ExceptionalTableTest(SimpleTestCase):
    def test_lookup(self):
        (entry,) = exceptional_lookup(5)
        self.assertEqual((entry.name, entry.order, entry.lg_over_n_bound), ('AGL(1,5)', 20, Fraction(8644, 10000)))
        self.assertEqual([e.order for e in exceptional_lookup(12)], [7920, 95040])
        self.assertEqual(exceptional_lookup(14), [])

    def test_every_entry_respects_its_bound(self):
        self.assertEqual(len(load_table()), 24)
        self.assertEqual(verify_table(), [])
        self.assertEqual(check_exceptional_table(), [])

    def test_stored_orders_match_generated_groups(self):
        self.assertEqual(exceptional_lookup(5)[0].order, agl_1_5().order())
        self.assertIn(pgl_2_5().order(), [e.order for e in exceptional_lookup(6)])
        self.assertIn(psl_2_5().order(), [e.order for e in exceptional_lookup(6)])
        self.assertEqual(exceptional_lookup(7)[0].order, psl_3_2().order())

    def test_checksum_mismatch_is_fatal(self):
        with tempfile.TemporaryDirectory() as directory:
            table = os.path.join(directory, 'table.csv')
            checksum = os.path.join(directory, 'table.sha256')
            with open(table, 'w') as handle:
                handle.write("# version: 0\ndegree,name,order,lg_over_n_bound,transitivity\n")
            with open(checksum, 'w') as handle:
                handle.write("0" * 64 + "\n")
            with self.assertRaises(TableIntegrityError):
                load_table(table, checksum)

    def test_level_constants(self):
        self.assertEqual(level_bound_constant(2), Fraction(1, 2))
        self.assertEqual(level_bound_constant(3), Fraction(8617, 10000))
        self.assertEqual(level_bound_constant(5), Fraction(13814, 10000))
        self.assertEqual(level_bound_constant(12), Fraction(13781, 10000))
        self.assertEqual(level_bound_constant(14), 1)


class OracleAgreementTest(SimpleTestCase):
    def test_fixture_groups_pass_every_check(self):
        for name, group in transitive_fixtures().items():
            with self.subTest(group=name):
                self.assertEqual(check_group(group), [])

    def test_primitivity_oracle(self):
        for name, group in transitive_fixtures().items():
            with self.subTest(group=name):
                self.assertEqual(is_primitive(group), brute_force_is_primitive(group))

    def test_cyclic_group_preserved_partitions(self):
        self.assertEqual(preserved_partitions(cyclic_group(4)), [[(0, 2), (1, 3)]])
