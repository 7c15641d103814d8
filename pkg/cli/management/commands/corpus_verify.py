from django.conf import settings
from django.core.management.base import CommandError
from django.db import transaction
from django.utils import timezone

from core.file_utils import archive_report
from cli.corpus import collect_suites, corpus_posets, select, verify_corpus
from cli.reports import render_json, render_text
from cli.models import CorpusRun, InvariantViolation
from cli.serializers import CorpusSummarySerializer, ViolationSerializer, violation_payload
from ._base import PosetCommand


class Command(PosetCommand):
    help = (
        "Run every invariant suite over all posets up to --max-n elements and --random seeded ones. "
        "Exits 1 when a violation is found."
    )
    name = 'corpus-verify'
    takes_poset = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--max-n', type=int, default=6, dest='max_n')
        parser.add_argument('--random', type=int, default=0, dest='random_count')
        parser.add_argument('--jobs', type=int, default=1)
        parser.add_argument('--suite', action='append', default=[], dest='suites',
                            help="app or app.suite to run; repeatable, all suites by default")
        parser.add_argument('--record', action='store_true', help="store the run in the corpus ledger")
        parser.add_argument('--archive', action='store_true', help="store the JSON-lines report")

    def run(self, **options):
        if options['jobs'] < 1:
            raise CommandError(f"--jobs must be positive, got {options['jobs']}", returncode=2)
        poset_suites, global_suites = collect_suites()
        names = sorted(select(poset_suites, options['suites'])) + sorted(select(global_suites, options['suites']))
        if not names:
            raise CommandError(f"no suite matches {', '.join(options['suites'])}", returncode=2)
        run = None
        if options['record']:
            run = CorpusRun.objects.create(max_n=options['max_n'], random_count=options['random_count'],
                                           seed=self.seed, jobs=options['jobs'])

        texts = corpus_posets(options['max_n'], options['random_count'], self.seed)
        violations = verify_corpus(texts, self.caps, self.seed, options['jobs'], options['suites'])
        for violation in violations:
            self.emit(violation_payload(violation), ViolationSerializer)
        status = 'failed' if violations else 'passed'

        if run is not None:
            with transaction.atomic():
                InvariantViolation.objects.bulk_create(
                    InvariantViolation(run=run, suite=suite, poset_text=text, message=message)
                    for suite, text, message in violations
                )
                run.posets_checked = len(texts)
                run.violation_count = len(violations)
                run.status = status
                run.finished_at = timezone.now()
                run.save()
        summary = {
            'max_n': options['max_n'],
            'random_count': options['random_count'],
            'jobs': options['jobs'],
            'posets_checked': len(texts),
            'suites': names,
            'violations': len(violations),
            'status': status,
            'run': None if run is None else run.pk,
            'archive': None,
        }
        if options['archive']:
            # the archived copy ends with the summary before the storage path is known
            rendered = render_json(summary) if self.format == 'json' else render_text(summary)
            summary['archive'] = archive_report('\n'.join(self.lines + [rendered]) + '\n',
                                                settings.REPORT_ARCHIVE_PREFIX)
        self.emit(summary, CorpusSummarySerializer)
        if violations:
            raise CommandError(f"{len(violations)} invariant violations", returncode=1)
