import math
from unittest import mock

from django.test import SimpleTestCase

from catalog.services import crown, crown_blown_up, generate_frame, lock_cycle, relay, s_w, separated_crown, spec
from counting.search import are_isomorphic
from orbit_structure.domain import OrbitGraph
from orbit_structure.exceptions import NotTightError
from orbit_structure.services import structured, union_structured_poset
from permgroup.domain import PermGroup
from .exceptions import CutvertexError, DeconstructionError, GraphNotConnectedError
from .invariants import POSET_SUITES, SUITES
from .serializers import SequenceSerializer, StepSerializer, sequence_payload, step_payload
from .services import choose_noncutvertex, deconstruction_sequence, prune_and_compact
from .verification import (
    bipartite_layer_check, residual_matches_frame_group, separation_partition, split_step, verify_factorization,
)


class OrbitGraphFactory:
    counter = 0

    @classmethod
    def create(cls, **kwargs):
        cls.counter += 1
        defaults = {'edges': ((0, 1), (1, 2)), 'cell_sizes': None}
        defaults.update(kwargs)
        vertices = tuple(sorted({v for edge in defaults['edges'] for v in edge}))
        return OrbitGraph(
            vertices=vertices,
            edges=defaults['edges'],
            orientation={edge: 'below' for edge in defaults['edges']},
            cell_sizes=defaults['cell_sizes'] or tuple(1 for _ in vertices),
        )


class FixtureFactory:
    counter = 0

    @classmethod
    def create(cls, **kwargs):
        cls.counter += 1
        defaults = {'kind': 'separated_crown', 'parameters': {'k': 3}}
        defaults.update(kwargs)
        fixture = spec(defaults['kind'], **defaults['parameters'])
        poset = {'separated_crown': separated_crown, 'lock_cycle': lock_cycle}[fixture.kind](**fixture.parameters)
        return structured(poset, generate_frame(fixture))


def relay_union():
    union, _ = union_structured_poset(structured(relay()), (0, 1, 4, 5, 6))
    return union


class NoncutvertexTest(SimpleTestCase):
    def test_path(self):
        self.assertEqual(choose_noncutvertex(OrbitGraphFactory.create(), 'first'), 0)

    def test_complete(self):
        og = OrbitGraphFactory.create(edges=((0, 1), (0, 2), (1, 2)))
        self.assertEqual(choose_noncutvertex(og, 'first'), 0)

    def test_star_never_returns_center(self):
        og = OrbitGraphFactory.create(edges=((0, 1), (0, 2), (0, 3)), cell_sizes=(5, 2, 4, 3))
        self.assertEqual(choose_noncutvertex(og, 'first'), 1)
        self.assertEqual(choose_noncutvertex(og, 'max_cell'), 2)
        self.assertEqual(choose_noncutvertex(og, 'min_cell'), 1)

    def test_disconnected(self):
        with self.assertRaises(GraphNotConnectedError):
            choose_noncutvertex(OrbitGraphFactory.create(edges=((0, 1), (2, 3))), 'first')

    def test_too_few_cells(self):
        with self.assertRaises(DeconstructionError):
            choose_noncutvertex(OrbitGraphFactory.create(edges=((0, 1),)), 'first')

    def test_unknown_policy(self):
        with self.assertRaises(DeconstructionError):
            choose_noncutvertex(OrbitGraphFactory.create(), 'random')


class PruneAndCompactTest(SimpleTestCase):
    def test_separated_crown_layout(self):
        step = prune_and_compact(FixtureFactory.create(), 2)
        context = step.context
        self.assertEqual(context.labels, (1, 0, 2))
        self.assertEqual((context.s, context.t, context.n, context.r, context.m), (2, 2, 3, 4, 3))
        self.assertEqual(context.ell, {0: 3})
        self.assertEqual(step.antichain_sizes, [2, 2, 2])

    def test_separated_crown_compacts_to_crown(self):
        step = prune_and_compact(FixtureFactory.create(), 2)
        self.assertEqual(step.u_n_elements, (0, 1, 2, 6, 7, 8))
        self.assertTrue(are_isomorphic(step.u_n.poset, crown(3)))
        self.assertTrue(step.u_n.tight)
        self.assertEqual([len(cell) for cell in step.q.cells], [2] * 6)

    def test_singleton_antichains_keep_the_component(self):
        step = prune_and_compact(FixtureFactory.create(kind='lock_cycle', parameters={'M': 3}), 3)
        self.assertEqual(step.u_n.size, 9)
        self.assertEqual(step.antichain_sizes, [])
        self.assertEqual(step.q.frame_group.order(), 1)

    def test_cutvertex(self):
        with self.assertRaises(CutvertexError):
            prune_and_compact(FixtureFactory.create(), 0)

    def test_cutvertex_allowed_keeps_lowest_component(self):
        step = prune_and_compact(FixtureFactory.create(), 0, allow_cutvertex=True)
        self.assertEqual(step.context.component_cells, (1,))
        self.assertEqual(step.context.later_cells, (2,))
        self.assertEqual(step.u_n.size, 1)

    def test_not_tight(self):
        p = crown_blown_up(3, 2)
        with self.assertRaises(NotTightError):
            prune_and_compact(structured(p), 0)

    def test_serializer(self):
        step = prune_and_compact(FixtureFactory.create(), 2)
        serializer = StepSerializer(data=step_payload(1, step))
        self.assertTrue(serializer.is_valid(), serializer.errors)


class FactorizationTest(SimpleTestCase):
    def test_lock_cycle(self):
        u = FixtureFactory.create(kind='lock_cycle', parameters={'M': 3})
        self.assertEqual(verify_factorization(u, 3), (6, 6, 1, True))
        self.assertEqual(separation_partition(u, 3), [(9,), (10,), (11,)])

    def test_separated_crown(self):
        u = FixtureFactory.create()
        self.assertEqual(verify_factorization(u, 2), (48, 6, 8, True))
        self.assertTrue(residual_matches_frame_group(u, 2))

    def test_separation_partition_pairs_the_matching(self):
        self.assertEqual(separation_partition(FixtureFactory.create(), 2), [(9, 12), (10, 13), (11, 14)])

    def test_shared_split_prunes_once(self):
        u = FixtureFactory.create()
        step = deconstruction_sequence(u, 'max_cell').steps[0]
        d_n = step.context.removed_cell
        with mock.patch('deconstruction.verification.prune_and_compact', wraps=prune_and_compact) as pruned:
            split = split_step(u, d_n, step=step)
            shared = (
                verify_factorization(u, d_n, split=split),
                residual_matches_frame_group(u, d_n, split=split),
                separation_partition(u, d_n, split=split),
            )
        self.assertEqual(pruned.call_count, 0)
        self.assertEqual(shared, (
            verify_factorization(u, d_n),
            residual_matches_frame_group(u, d_n),
            separation_partition(u, d_n),
        ))

    def test_trivial_subgroup(self):
        u = FixtureFactory.create()
        identity_only = PermGroup(u.size)
        self.assertEqual(verify_factorization(u, 2, g_star=identity_only), (1, 1, 1, True))

    def test_residual_two_layers(self):
        step = prune_and_compact(FixtureFactory.create(), 2)
        self.assertEqual(bipartite_layer_check(step.q), (8, 8, 8, True))

    def test_standard_example_layers(self):
        self.assertEqual(bipartite_layer_check(structured(s_w(3))), (6, 6, 6, True))


class SequenceTest(SimpleTestCase):
    def test_relay_union(self):
        sequence = deconstruction_sequence(relay_union(), 'first')
        self.assertEqual(len(sequence.steps), 3)
        self.assertEqual(len(sequence.final_residual.cells), 2)
        self.assertEqual(sequence.b, math.inf)
        self.assertTrue(sequence.qualifies(100))

    def test_separated_crown(self):
        sequence = deconstruction_sequence(FixtureFactory.create(), 'max_cell')
        self.assertEqual(len(sequence.steps), 1)
        self.assertEqual(sequence.b, 2)
        self.assertFalse(sequence.qualifies(3))

    def test_two_cells_is_already_final(self):
        u = structured(s_w(3))
        sequence = deconstruction_sequence(u)
        self.assertEqual(sequence.steps, ())
        self.assertIs(sequence.final_residual, u)

    def test_summary_serializer(self):
        u = relay_union()
        payload = sequence_payload(u, deconstruction_sequence(u, 'first'), 'first')
        serializer = SequenceSerializer(data=payload)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertIsNone(payload['b'])


class InvariantSuiteTest(SimpleTestCase):
    def test_poset_suites(self):
        for p in (relay(), separated_crown(3), lock_cycle(3), s_w(3)):
            for name, suite in POSET_SUITES.items():
                self.assertEqual(suite(p), [], name)

    def test_circulant_unions(self):
        self.assertEqual(SUITES['circulant-unions'](count=6), [])
