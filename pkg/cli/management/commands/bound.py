from django.core.management.base import CommandError

from bounds.certificates import STRATEGIES, certify_union
from bounds.exceptions import CertificateRefused, HypothesisViolation, PrimitivityError, SoundnessViolation
from bounds.serializers import CertificateSerializer, RefusalSerializer, certificate_payload, refusal_payload
from deconstruction.exceptions import DeconstructionError
from deconstruction.services import POLICIES
from orbit_structure.exceptions import NotTightError
from orbit_structure.services import interdependent_orbit_unions, orbit_graph, structured, union_structured_poset
from cli.serializers import BoundSummarySerializer
from ._base import PosetCommand


class Command(PosetCommand):
    help = (
        "Certificate |Aut_D(U)| <= 2^(c|U|) for every nontrivial interdependent orbit union, "
        "or for the whole poset with --frame. A refused certificate is reported and exits 0."
    )
    name = 'bound'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--strategy', choices=STRATEGIES, default='auto')
        parser.add_argument('--policy', choices=POLICIES, default=None)

    def targets(self):
        sp = structured(self.document.poset, self.document.frame)
        if self.document.frame is not None:
            return [('framed poset', sp)]
        targets = []
        for cells in interdependent_orbit_unions(orbit_graph(sp)):
            union, _ = union_structured_poset(sp, cells)
            if union.size > 1:
                targets.append((f"union of cells {list(cells)}", union))
        return targets

    def run(self, **options):
        certified = refused = 0
        targets = self.targets()
        for target, union in targets:
            try:
                certificate = certify_union(union, options['strategy'], options['policy'], target)
            except CertificateRefused as refusal:
                refused += 1
                self.emit(refusal_payload(target, refusal), RefusalSerializer)
                continue
            except (PrimitivityError, DeconstructionError, NotTightError) as exc:
                refused += 1
                self.emit(refusal_payload(target, CertificateRefused(str(exc))), RefusalSerializer)
                continue
            except (HypothesisViolation, SoundnessViolation) as exc:
                raise CommandError(f"{target}: {exc}", returncode=1)
            certified += 1
            self.emit(certificate_payload(certificate, union.frame_group.order()), CertificateSerializer)
        self.emit({'targets': len(targets), 'certified': certified, 'refused': refused}, BoundSummarySerializer)
