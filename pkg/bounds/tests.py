from fractions import Fraction
from itertools import combinations
from math import factorial

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from catalog.services import (
    antichain, chain, crown, crown_blown_up, generate_frame, lock_cycle, random_poset, relay, s_w,
    separated_crown, spec, w_c2,
)
from core.exact import lg_upper
from orbit_structure.services import structured, union_structured_poset
from permgroup.domain import NestingLevel, PrimitiveNesting
from permgroup.fixtures import cyclic_group, symmetric_group
from permgroup.nesting import primitive_nesting
from poset_core.services import from_relation, ordinal_sum
from .certificates import certify_union, combine_deconstruction_bound, iou_bound, primitive_orbit_bound
from .domain import ResidualCell, ResidualData
from .exceptions import CertificateRefused, HypothesisViolation, ImproperNestingError, PrimitivityError, WidthExceededError
from .invariants import POSET_SUITES, SUITES, check_verdict
from .nesting import (
    NESTING_CONSTANT, NESTING_SUM_BOUND, NESTING_TAIL_BOUND, nesting_constant_derivation, nesting_exponent,
    nesting_tail, verify_nesting_constant,
)
from .serializers import (
    CertificateSerializer, RefusalSerializer, Width11VerdictSerializer, certificate_payload, refusal_payload,
    verdict_payload,
)
from .width11 import lexsum_reduction, max_locked_ratio, width11_pipeline


class ResidualFactory:
    counter = 0

    @classmethod
    def create(cls, **kwargs):
        cls.counter += 1
        defaults = {'order': 8, 'cells': ((6, 8),), 'antichain_sizes': (2, 2, 2)}
        defaults.update(kwargs)
        return ResidualData(
            order=defaults['order'],
            cells=tuple(ResidualCell(size=size, order=order) for size, order in defaults['cells']),
            antichain_sizes=tuple(defaults['antichain_sizes']),
        )


class FramedFixtureFactory:
    counter = 0

    @classmethod
    def create(cls, **kwargs):
        cls.counter += 1
        defaults = {'kind': 'separated_crown', 'parameters': {'k': 3}}
        defaults.update(kwargs)
        fixture = spec(defaults['kind'], **defaults['parameters'])
        poset = {'separated_crown': separated_crown, 'lock_cycle': lock_cycle}[fixture.kind](**fixture.parameters)
        return structured(poset, generate_frame(fixture))


def complete_graph_incidence(k):
    """Vertices of K_k below the edges that contain them."""
    edges = list(combinations(range(k), 2))
    pairs = [(v, k + index) for index, edge in enumerate(edges) for v in edge]
    return from_relation(k + len(edges), pairs)


class NestingExponentTest(SimpleTestCase):
    def test_untabulated_degree(self):
        nest = PrimitiveNesting(
            blocks=((0,), tuple(range(25))),
            levels=(NestingLevel(degree=25, group_order=600, proper=True, bound_constant=Fraction(1)),),
        )
        self.assertEqual(nesting_exponent(nest), 1)

    def test_cyclic_four(self):
        self.assertEqual(nesting_exponent(primitive_nesting(cyclic_group(4))), Fraction(3, 4))

    def test_degree_five_level(self):
        self.assertEqual(nesting_exponent(primitive_nesting(symmetric_group(5))), Fraction(13814, 10000))

    def test_factorial_level_is_improper(self):
        with self.assertRaises(ImproperNestingError) as context:
            nesting_exponent(primitive_nesting(symmetric_group(6)))
        self.assertEqual(context.exception.level, 0)


class NestingConstantTest(SimpleTestCase):
    def test_maximum(self):
        best = verify_nesting_constant()
        self.assertLessEqual(best, NESTING_SUM_BOUND)
        self.assertGreater(best, Fraction(17267, 10000))

    def test_tail(self):
        self.assertLessEqual(nesting_tail(), NESTING_TAIL_BOUND)

    def test_full_constant(self):
        derivation = nesting_constant_derivation()
        self.assertEqual(derivation.constants['constant'], Fraction(17376, 10000))
        self.assertLessEqual(NESTING_SUM_BOUND + NESTING_TAIL_BOUND, NESTING_CONSTANT)


class CombineTest(SimpleTestCase):
    def test_four_sevenths(self):
        result = combine_deconstruction_bound(NESTING_CONSTANT / 2, ResidualFactory.create(), 2, NESTING_CONSTANT)
        self.assertEqual(result, Fraction(4, 7) * NESTING_CONSTANT)
        self.assertLessEqual(result, Fraction(993, 1000))

    def test_large_antichains(self):
        residual = ResidualFactory.create(order=2, cells=((10, 2),), antichain_sizes=(10,))
        self.assertEqual(combine_deconstruction_bound(Fraction(1, 2), residual, 10, 1), Fraction(10, 19))

    def test_trivial_residual(self):
        residual = ResidualFactory.create(order=1, cells=(), antichain_sizes=())
        self.assertEqual(combine_deconstruction_bound(Fraction(1, 2), residual, 2, NESTING_CONSTANT), Fraction(1, 2))

    def test_compacted_bound_too_large(self):
        with self.assertRaises(HypothesisViolation) as context:
            combine_deconstruction_bound(NESTING_CONSTANT, ResidualFactory.create(), 2, NESTING_CONSTANT)
        self.assertEqual(context.exception.clause, 1)

    def test_cell_group_too_large(self):
        residual = ResidualFactory.create(cells=((2, 100),))
        with self.assertRaises(HypothesisViolation) as context:
            combine_deconstruction_bound(Fraction(1, 2), residual, 2, 1)
        self.assertEqual(context.exception.clause, 2)

    def test_antichain_below_b(self):
        with self.assertRaises(HypothesisViolation) as context:
            combine_deconstruction_bound(Fraction(1, 2), ResidualFactory.create(), 3, NESTING_CONSTANT)
        self.assertEqual(context.exception.clause, 3)


class IouBoundTest(SimpleTestCase):
    def test_two_cells(self):
        certificate = iou_bound(structured(s_w(3)))
        self.assertEqual(certificate.exponent, Fraction(8688, 10000))
        self.assertTrue(certificate.check(6))
        self.assertIn('nesting-constant', {step.rule for step in certificate.derivation.walk()})

    def test_separated_crown(self):
        certificate = iou_bound(FramedFixtureFactory.create(), 'max_cell')
        self.assertEqual(certificate.exponent, Fraction(4, 7) * NESTING_CONSTANT)
        self.assertEqual(certificate.derivation.rule, 'deconstruction-combination')
        self.assertEqual(certificate.derivation.constants['b'], 2)
        self.assertTrue(certificate.check(48))

    def test_relay_union_without_collapsed_antichains(self):
        union, _ = union_structured_poset(structured(relay()), (0, 1, 4, 5, 6))
        certificate = iou_bound(union, 'first')
        self.assertEqual(certificate.exponent, NESTING_CONSTANT / 2)
        self.assertTrue(certificate.check(union.frame_group.order()))

    def test_factorial_cell_refused(self):
        with self.assertRaises(CertificateRefused) as context:
            iou_bound(structured(s_w(6)))
        self.assertEqual((context.exception.cell, context.exception.level), (0, 0))

    def test_single_element(self):
        self.assertEqual(iou_bound(structured(chain(1))).exponent, 0)


class PrimitiveOrbitBoundTest(SimpleTestCase):
    def test_crown_without_alternating_content(self):
        u = structured(crown(5))
        certificate = primitive_orbit_bound(u)
        self.assertEqual(certificate.exponent, Fraction(69, 100))
        self.assertEqual(certificate.derivation.rule, 'primitive-union')
        self.assertTrue(certificate.check(u.frame_group.order()))

    def test_alternating_cell_with_larger_neighbour(self):
        u = structured(complete_graph_incidence(5))
        certificate = primitive_orbit_bound(u)
        self.assertEqual(u.frame_group.order(), factorial(5))
        self.assertEqual(certificate.exponent, Fraction(1, 2))
        self.assertEqual(certificate.derivation.constants['min_union_size'], 15)
        self.assertTrue(certificate.check(120))

    def test_lock_cycle_refused_with_advisory(self):
        u = FramedFixtureFactory.create(kind='lock_cycle', parameters={'M': 3})
        with self.assertRaises(CertificateRefused) as context:
            certify_union(u)
        self.assertTrue(context.exception.advisory)
        self.assertEqual(context.exception.advisory[0].M, 3)

    def test_imprimitive_cell(self):
        with self.assertRaises(PrimitivityError):
            primitive_orbit_bound(structured(crown(4)))

    def test_auto_falls_back_to_deconstruction(self):
        certificate = certify_union(structured(crown(4)))
        self.assertEqual(certificate.derivation.rule, 'two-cell-union')


class Width11Test(SimpleTestCase):
    def test_rigid(self):
        verdict = width11_pipeline(chain(4))
        self.assertEqual(verdict.branch, 'small_orbits_bound')
        self.assertEqual((verdict.aut_order, verdict.certified_lg_aut_upper), (1, 0))
        self.assertTrue(verdict.end_exact)

    def test_many_standard_examples(self):
        p = ordinal_sum([s_w(3)] * 3)
        verdict = width11_pipeline(p, large_union_threshold=7)
        self.assertEqual(verdict.branch, 'many_maxlocked')
        self.assertEqual([factor.factor for factor in verdict.factors], [Fraction(3, 4)] * 3)
        self.assertEqual(verdict.ratio_bound, Fraction(27, 64))
        self.assertEqual(width11_pipeline(p).branch, 'maxlocked_large_w')

    def test_large_standard_example_with_tail(self):
        verdict = width11_pipeline(ordinal_sum([s_w(8), chain(3)]))
        self.assertEqual(verdict.branch, 'maxlocked_large_w')
        self.assertEqual(verdict.ratio_bound, Fraction(factorial(8), 7 ** 8))

    def test_chains(self):
        factors, ratio = max_locked_ratio(w_c2(3))
        self.assertEqual(ratio, Fraction(6, 27))
        self.assertEqual(check_verdict(width11_pipeline(w_c2(3))), [])

    def test_lexicographic_sum(self):
        p = crown_blown_up(3, 2)
        reduction = lexsum_reduction(p)
        self.assertEqual((reduction.quotient_order, reduction.bound), (6, 48))
        verdict = width11_pipeline(p)
        self.assertEqual(verdict.branch, 'lexsum_reduction')
        self.assertEqual(verdict.certified_lg_aut_upper, lg_upper(48))
        self.assertEqual(check_verdict(verdict), [])

    def test_too_wide(self):
        with self.assertRaises(WidthExceededError):
            width11_pipeline(antichain(12))

    @given(seed=st.integers(min_value=0, max_value=2 ** 32), n=st.integers(min_value=2, max_value=9))
    @settings(max_examples=25, deadline=None)
    def test_random_verdicts_are_sound(self, seed, n):
        self.assertEqual(check_verdict(width11_pipeline(random_poset(n, seed=seed))), [])


class SerializerTest(SimpleTestCase):
    def test_certificate(self):
        certificate = iou_bound(FramedFixtureFactory.create(), 'max_cell')
        serializer = CertificateSerializer(data=certificate_payload(certificate, 48))
        self.assertTrue(serializer.is_valid(), serializer.errors)

    def test_refusal(self):
        u = FramedFixtureFactory.create(kind='lock_cycle', parameters={'M': 3})
        try:
            certify_union(u)
        except CertificateRefused as refusal:
            payload = refusal_payload('lock cycle', refusal)
        serializer = RefusalSerializer(data=payload)
        self.assertTrue(serializer.is_valid(), serializer.errors)

    def test_verdict(self):
        serializer = Width11VerdictSerializer(data=verdict_payload(width11_pipeline(crown_blown_up(3, 2))))
        self.assertTrue(serializer.is_valid(), serializer.errors)


class InvariantSuiteTest(SimpleTestCase):
    def test_poset_suites(self):
        for p in (s_w(3), crown(5), separated_crown(3), chain(4), complete_graph_incidence(5)):
            for name, suite in POSET_SUITES.items():
                self.assertEqual(suite(p, {'end_cap': 10}), [], name)

    def test_global_suites(self):
        self.assertEqual(SUITES['nesting-constant'](), [])
        self.assertEqual(SUITES['width11-corpus'](count=8), [])
