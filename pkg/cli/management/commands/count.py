from counting.serializers import CountReportSerializer, count_payload
from counting.services import count_report
from ._base import PosetCommand


class Command(PosetCommand):
    help = "Exact |Aut| and |End|, and |End_D| for the frame given with --frame."
    name = 'count'

    def run(self, **options):
        report = count_report(self.document.poset, self.document.frame, self.caps['end_cap'])
        self.emit(count_payload(report), CountReportSerializer)
