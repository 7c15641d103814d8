from orbit_structure.serializers import AnalysisSerializer
from cli.reports import analysis_payload
from ._base import PosetCommand


class Command(PosetCommand):
    help = "Orbits, orbit graph, interdependent orbit unions, max-lockedness and lock cycles of a poset."
    name = 'analyze'

    def run(self, **options):
        self.emit(analysis_payload(self.document.poset, self.document.frame), AnalysisSerializer)
