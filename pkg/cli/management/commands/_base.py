import logging
from dataclasses import replace

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from catalog.exceptions import GeneratorError
from core.file_utils import read_text
from counting.exceptions import CountingError
from deconstruction.exceptions import DeconstructionError
from orbit_structure.exceptions import FrameError
from permgroup.exceptions import GroupError
from poset_core.exceptions import PosetError
from poset_core.services import parse_poset_document
from cli.reports import render_json, render_text
from cli.serializers import FORMATS, HeaderSerializer, header_payload

logger = logging.getLogger('cli')

USAGE_ERRORS = (PosetError, FrameError, GeneratorError, CountingError, GroupError, DeconstructionError, OSError)


class PosetCommand(BaseCommand):
    """
    Shared options and output for the posetaut commands.

    Subclasses implement ``run(**options)`` and call ``emit`` once per
    report. Domain errors in ``USAGE_ERRORS`` exit with status 2.
    """
    name = ''
    takes_poset = True
    requires_system_checks = []

    def add_arguments(self, parser):
        if self.takes_poset:
            parser.add_argument('path', help="poset file")
            parser.add_argument('--frame', action='store_true',
                                help="use the frame: section of the file instead of the automorphism orbits")
        parser.add_argument('--format', choices=FORMATS, default='text')
        parser.add_argument('--aut-cap', type=int, default=None, dest='aut_cap')
        parser.add_argument('--end-cap', type=int, default=None, dest='end_cap')
        parser.add_argument('--seed', type=int, default=None)

    def handle(self, *args, **options):
        self.format = options['format']
        self.seed = options['seed'] if options['seed'] is not None else settings.DEFAULT_SEED
        self.caps = {
            'aut_cap': options['aut_cap'] if options['aut_cap'] is not None else settings.AUT_ENUMERATION_CAP,
            'end_cap': options['end_cap'] if options['end_cap'] is not None else settings.END_COUNT_CAP,
            'aut_brute_max_n': settings.AUT_BRUTE_FORCE_MAX_N,
        }
        for option, value in [('seed', self.seed)] + list(self.caps.items()):
            if value < 0:
                raise CommandError(f"{option} must be non-negative, got {value}", returncode=2)
        self.lines = []
        try:
            if self.takes_poset:
                self.document = self.read_document(options['path'], options['frame'])
            self.write_header()
            self.run(**options)
        except USAGE_ERRORS as exc:
            logger.error(f"{self.name}: {exc}")
            raise CommandError(str(exc), returncode=2)

    def read_document(self, path, use_frame):
        document = parse_poset_document(read_text(path))
        if use_frame and document.frame is None:
            raise CommandError(f"{path} has no frame: section", returncode=2)
        if not use_frame:
            document = replace(document, frame=None)
        return document

    def write_header(self):
        header = header_payload(settings.POSETAUT_VERSION, self.name, self.seed, self.caps)
        if self.format == 'json':
            self.emit(header, HeaderSerializer)
            return
        self.write(f"# posetaut {settings.POSETAUT_VERSION}")
        caps = ', '.join(f"{key} {value}" for key, value in self.caps.items())
        self.write(f"# {self.name}: seed {self.seed}, {caps}")

    def emit(self, payload, serializer_class):
        serializer = serializer_class(data=payload)
        if not serializer.is_valid():
            logger.error(f"{self.name}: report failed validation: {serializer.errors}")
            raise CommandError(f"report failed validation: {serializer.errors}", returncode=1)
        if self.format == 'json':
            self.write(render_json(payload))
        else:
            self.write('')
            self.write(render_text(payload))

    def write(self, line):
        self.lines.append(line)
        self.stdout.write(line)

    def run(self, **options):
        raise NotImplementedError
