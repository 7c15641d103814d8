from poset_core.serializers import PosetSerializer, poset_payload
from cli.reports import validation_payload
from cli.serializers import ValidationReportSerializer
from ._base import PosetCommand


class Command(PosetCommand):
    help = "Parse a poset file and report its size, height, width and frame."
    name = 'validate'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--echo', action='store_true', help="also emit the parsed covers")

    def run(self, **options):
        self.emit(validation_payload(self.document), ValidationReportSerializer)
        if options['echo']:
            self.emit(poset_payload(self.document.poset, self.document.frame), PosetSerializer)
