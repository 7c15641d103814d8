from django.conf import settings

from catalog.domain import KIND_ALIASES, KIND_PARAMETERS, SEEDED_KINDS, GeneratorSpec
from catalog.services import generate, generate_frame
from poset_core.serializers import PosetSerializer, poset_payload
from poset_core.services import format_poset
from ._base import PosetCommand


class Command(PosetCommand):
    help = "Build a catalog poset, with its frame section, from a kind and name=value parameters."
    name = 'generate'
    takes_poset = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('kind', choices=sorted([*KIND_PARAMETERS, *KIND_ALIASES]))
        parser.add_argument('parameters', nargs='*', metavar='name=value')
        parser.add_argument('--output', default=None, help="write the poset file here instead of stdout")

    def write_header(self):
        if self.format == 'json':
            super().write_header()

    def run(self, **options):
        kind = KIND_ALIASES.get(options['kind'], options['kind'])
        seed = self.seed if kind in SEEDED_KINDS else None
        spec = GeneratorSpec.from_arguments(kind, options['parameters'], seed)
        p, frame = generate(spec), generate_frame(spec)
        if self.format == 'json':
            self.emit(poset_payload(p, frame), PosetSerializer)
            return
        described = ' '.join(f"{name}={value}" for name, value in spec.parameters.items())
        comments = [f"posetaut {settings.POSETAUT_VERSION}: {spec.kind} {described}".rstrip()]
        if seed is not None:
            comments.append(f"seed {seed}")
        text = format_poset(p, frame, comments)
        if options['output']:
            with open(options['output'], 'w', encoding='utf-8') as handle:
                handle.write(text)
            return
        self.stdout.write(text, ending='')
