from django.core.management.base import CommandError

from bounds.exceptions import WidthExceededError
from bounds.serializers import Width11VerdictSerializer, verdict_payload
from bounds.width11 import width11_pipeline
from counting.serializers import RatioReportSerializer, ratio_payload
from counting.services import ac_ratio
from ._base import PosetCommand


class Command(PosetCommand):
    help = "|Aut(P)| against |End(P)|; with --width11 also the case analysis for width at most 11."
    name = 'ratio'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--width11', action='store_true')
        parser.add_argument('--large-union', type=int, default=None, dest='large_union',
                            help="unions of at least this many elements count as large")

    def run(self, **options):
        p = self.document.poset
        self.emit(ratio_payload(ac_ratio(p, self.caps['end_cap'])), RatioReportSerializer)
        if options['width11']:
            try:
                verdict = width11_pipeline(p, options['large_union'], self.caps['end_cap'])
            except WidthExceededError as exc:
                raise CommandError(str(exc), returncode=2)
            self.emit(verdict_payload(verdict), Width11VerdictSerializer)
