from orbit_structure.dot import orbit_graph_to_dot
from orbit_structure.services import orbit_graph, structured
from ._base import PosetCommand


class Command(PosetCommand):
    help = "Write the orbit graph of a poset in Graphviz DOT."
    name = 'export-dot'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--name', default='orbits', help="graph name")

    def write_header(self):
        self.write(f"// posetaut {self.name}: seed {self.seed}")

    def run(self, **options):
        og = orbit_graph(structured(self.document.poset, self.document.frame))
        for line in orbit_graph_to_dot(og, name=options['name']).splitlines():
            self.write(line)
