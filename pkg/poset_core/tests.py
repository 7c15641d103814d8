from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from catalog.services import crown_blown_up, random_poset, s_w
from .domain import Poset
from .exceptions import (
    CycleDetectedError, EmptySubsetError, NotAnAntichainError, PieceCountError, PosetError,
    PosetFormatError,
)
from .serializers import PosetSerializer, RationalField, poset_payload
from .services import (
    brute_force_width, disjoint_union, dual, format_poset, from_relation, induced_subposet,
    is_antichain, is_coconnected, is_order_autonomous, lexicographic_sum, maximal_autonomous_antichain_partition,
    ordinal_sum, parse_poset, parse_poset_document, rank_height_width, width,
)

CHAIN_TEXT = "elements: 3\ncovers:\n0 1\n1 2\n"


class PosetFactory:
    counter = 0

    @classmethod
    def create(cls, **kwargs):
        cls.counter += 1
        defaults = {'n': 4, 'pairs': [(0, 2), (1, 2), (1, 3)]}
        defaults.update(kwargs)
        return from_relation(defaults['n'], defaults['pairs'])


class PosetConstructionTest(SimpleTestCase):
    def test_closure(self):
        p = from_relation(3, [(0, 1), (1, 2)])
        self.assertTrue(p.less(0, 2))
        self.assertEqual(p.covers, ((0, 1), (1, 2)))

    def test_cycle_rejected(self):
        with self.assertRaises(CycleDetectedError):
            from_relation(2, [(0, 1), (1, 0)])

    def test_intransitive_matrix_rejected(self):
        with self.assertRaises(PosetError):
            Poset([[False, True, False], [False, False, True], [False, False, False]])

    def test_ranks(self):
        p = PosetFactory.create()
        self.assertEqual(p.ranks, (0, 0, 1, 1))
        self.assertEqual(p.height, 1)
        self.assertEqual(p.rank_level(1), (2, 3))

    def test_matrix_is_frozen(self):
        with self.assertRaises(ValueError):
            PosetFactory.create().lt[0, 1] = True


class FormatTest(SimpleTestCase):
    def test_parse_and_format(self):
        p = parse_poset(CHAIN_TEXT)
        self.assertEqual(p, Poset.chain(3))
        self.assertEqual(format_poset(p), CHAIN_TEXT)

    def test_comments_and_frame(self):
        document = parse_poset_document("# two points\nelements: 2\ncovers:\nframe:\n0 1\n")
        self.assertEqual(document.frame, ((0, 1),))
        self.assertEqual(document.comments, ('two points',))

    def test_bad_index_reports_line(self):
        with self.assertRaises(PosetFormatError) as caught:
            parse_poset("elements: 2\ncovers:\n0 5\n")
        self.assertEqual(caught.exception.line_number, 3)

    def test_missing_header(self):
        with self.assertRaises(PosetFormatError):
            parse_poset("covers:\n0 1\n")

    def test_cyclic_file(self):
        with self.assertRaises(CycleDetectedError):
            parse_poset("elements: 2\ncovers:\n0 1\n1 0\n")


class WidthTest(SimpleTestCase):
    def test_standard_example(self):
        self.assertEqual(width(s_w(4)), 4)

    def test_profile(self):
        profile = rank_height_width(Poset.chain(4))
        self.assertEqual((profile.height, profile.width), (3, 1))

    @given(seed=st.integers(min_value=0, max_value=2 ** 32), n=st.integers(min_value=1, max_value=9))
    @settings(max_examples=40, deadline=None)
    def test_matching_agrees_with_search(self, seed, n):
        p = random_poset(n, seed=seed)
        self.assertEqual(width(p), brute_force_width(p))


class AutonomyTest(SimpleTestCase):
    def test_witness(self):
        report = is_order_autonomous(Poset.chain(3), [0, 2])
        self.assertFalse(report)
        self.assertEqual(report.witness, 1)

    def test_twins_are_autonomous(self):
        self.assertTrue(is_order_autonomous(PosetFactory.create(n=3, pairs=[(0, 2), (1, 2)]), [0, 1]))

    def test_empty_subset(self):
        with self.assertRaises(EmptySubsetError):
            is_order_autonomous(Poset.chain(2), [])

    def test_blown_up_crown_cells(self):
        p = crown_blown_up(3, 2)
        cells = maximal_autonomous_antichain_partition(p, range(p.size), range(6))
        self.assertEqual([cell.members for cell in cells], [(0, 1), (2, 3), (4, 5)])

    def test_minimal_level_as_ambient_is_one_cell(self):
        p = crown_blown_up(3, 2)
        cells = maximal_autonomous_antichain_partition(p, range(6), range(6))
        self.assertEqual(len(cells), 1)
        self.assertEqual(cells[0].size, 6)

    def test_block_must_be_antichain(self):
        with self.assertRaises(NotAnAntichainError):
            maximal_autonomous_antichain_partition(Poset.chain(2), range(2), [0, 1])


class CompositionTest(SimpleTestCase):
    def test_lexicographic_sum(self):
        p = lexicographic_sum(Poset.chain(2), [Poset.antichain(2), Poset.antichain(3)])
        self.assertEqual(p.size, 5)
        self.assertTrue(p.less(1, 4))
        self.assertTrue(is_antichain(p, [2, 3, 4]))

    def test_piece_count(self):
        with self.assertRaises(PieceCountError):
            lexicographic_sum(Poset.chain(2), [Poset.antichain(1)])

    def test_unions_and_sums(self):
        self.assertEqual(width(disjoint_union([Poset.chain(2), Poset.chain(3)])), 2)
        self.assertEqual(ordinal_sum([Poset.antichain(2), Poset.antichain(2)]).height, 1)

    def test_dual_and_coconnected(self):
        p = PosetFactory.create()
        self.assertEqual(dual(dual(p)), p)
        self.assertTrue(is_coconnected(s_w(3)))
        self.assertFalse(is_coconnected(Poset.chain(2)))

    def test_induced_subposet(self):
        sub, elements = induced_subposet(Poset.chain(4), [3, 1])
        self.assertEqual(elements, (1, 3))
        self.assertTrue(sub.less(0, 1))


class SerializerTest(SimpleTestCase):
    def test_payload_validates(self):
        serializer = PosetSerializer(data=poset_payload(s_w(3)))
        self.assertTrue(serializer.is_valid(), serializer.errors)

    def test_out_of_range_cover(self):
        serializer = PosetSerializer(data={'elements': 2, 'covers': [[0, 2]]})
        self.assertFalse(serializer.is_valid())

    def test_rational_field(self):
        field = RationalField()
        self.assertEqual(field.to_internal_value(field.to_representation(Fraction(3, 4))), Fraction(3, 4))
