from django.conf import settings
from django.core.management.base import CommandError

from deconstruction.exceptions import DeconstructionInvariantError
from deconstruction.serializers import SequenceSerializer, StepSerializer, sequence_payload, step_payload, verification_payload
from deconstruction.services import POLICIES, deconstruction_sequence
from deconstruction.verification import (
    residual_matches_frame_group, separation_partition, split_step, verify_factorization,
)
from orbit_structure.services import interdependent_orbit_unions, orbit_graph, structured, union_structured_poset
from ._base import PosetCommand, logger


class Command(PosetCommand):
    help = "Prune-and-compact deconstruction of every interdependent orbit union, one line per step."
    name = 'decompose'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--policy', choices=POLICIES, default=None)
        parser.add_argument('--verify', action='store_true',
                            help="check the product identity of every step by enumeration")

    def targets(self):
        sp = structured(self.document.poset, self.document.frame)
        if self.document.frame is not None:
            return [sp]
        unions = []
        for cells in interdependent_orbit_unions(orbit_graph(sp)):
            union, _ = union_structured_poset(sp, cells)
            if len(cells) < 2:
                continue
            if not union.tight:
                logger.warning(f"skipping union {list(cells)}: not tight")
                continue
            unions.append(union)
        return unions

    def verification(self, step):
        source, d_n, cap = step.source, step.context.removed_cell, self.caps['aut_cap']
        split = split_step(source, d_n, cap=cap, step=step)
        return verification_payload(
            verify_factorization(source, d_n, split=split),
            residual_matches_frame_group(source, d_n, cap=cap, split=split),
            separation_partition(source, d_n, split=split),
        )

    def run(self, **options):
        policy = options['policy'] or settings.NONCUTVERTEX_POLICY
        try:
            for union in self.targets():
                sequence = deconstruction_sequence(union, policy)
                for index, step in enumerate(sequence.steps, start=1):
                    verification = self.verification(step) if options['verify'] else None
                    self.emit(step_payload(index, step, verification), StepSerializer)
                self.emit(sequence_payload(union, sequence, policy), SequenceSerializer)
        except DeconstructionInvariantError as exc:
            raise CommandError(str(exc), returncode=1)
