import json
import os
import tempfile
from io import StringIO
from unittest import mock

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings

from catalog.services import chain, crown, generate_frame, lock_cycle, s_w, separated_crown, spec
from orbit_structure import invariants as orbit_invariants
from poset_core.services import format_poset, parse_poset_document
from .corpus import check_poset, collect_suites, corpus_posets, select
from .models import CorpusRun, InvariantViolation
from .reports import render_text
from .runner import command_name, run


class PosetFileFactory:
    """Writes a poset file into a temporary directory that lives as long as the test case."""
    counter = 0

    @classmethod
    def create(cls, directory, **kwargs):
        cls.counter += 1
        defaults = {'poset': s_w(5), 'frame': None, 'text': None}
        defaults.update(kwargs)
        text = defaults['text'] or format_poset(defaults['poset'], defaults['frame'])
        path = os.path.join(directory, f"poset_{cls.counter}.poset")
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(text)
        return path


def json_lines(output):
    return [json.loads(line) for line in output.splitlines() if line.strip()]


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def poset_file(self, **kwargs):
        return PosetFileFactory.create(self.directory.name, **kwargs)

    def call(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, **options)
        return out.getvalue()


class AnalyzeCommandTest(CommandTestCase):
    def test_standard_example(self):
        header, report = json_lines(self.call('analyze', self.poset_file(), format='json'))
        self.assertEqual(header['posetaut'], settings.POSETAUT_VERSION)
        self.assertEqual(header['command'], 'analyze')
        self.assertEqual(header['seed'], settings.DEFAULT_SEED)
        self.assertEqual(report['elements'], 10)
        self.assertEqual(report['height'], 1)
        self.assertEqual(report['width'], 5)
        self.assertEqual(report['aut_order'], 120)
        self.assertEqual(len(report['orbits']), 2)
        self.assertEqual(len(report['unions']), 1)
        self.assertTrue(report['max_locked'])
        self.assertEqual(report['factorization'], [120, 120])

    def test_text_report(self):
        output = self.call('analyze', self.poset_file(), seed=7, aut_cap=500)
        lines = output.splitlines()
        self.assertEqual(lines[0], f"# posetaut {settings.POSETAUT_VERSION}")
        self.assertIn('seed 7', lines[1])
        self.assertIn('aut_cap 500', lines[1])
        self.assertIn(f"{'aut_order'.ljust(len('without_slack'))}: 120", output)

    def test_identical_runs_are_identical(self):
        path = self.poset_file(poset=separated_crown(3))
        self.assertEqual(self.call('analyze', path, format='json'), self.call('analyze', path, format='json'))

    def test_frame_flag_requires_frame_section(self):
        with self.assertRaises(CommandError) as raised:
            self.call('analyze', self.poset_file(), frame=True)
        self.assertEqual(raised.exception.returncode, 2)

    def test_lock_cycle_frame(self):
        fixture = spec('lock_cycle', M=3)
        path = self.poset_file(poset=lock_cycle(3), frame=generate_frame(fixture))
        _, report = json_lines(self.call('analyze', path, frame=True, format='json'))
        self.assertEqual(len(report['orbits']), 4)
        self.assertTrue(report['lock_cycles'])
        self.assertTrue(all(cycle['M'] == 3 for cycle in report['lock_cycles']))


class ValidateCommandTest(CommandTestCase):
    def test_reports_frame(self):
        path = self.poset_file(poset=separated_crown(3), frame=generate_frame(spec('separated_crown', k=3)))
        _, report = json_lines(self.call('validate', path, frame=True, format='json'))
        self.assertEqual(report['elements'], 15)
        self.assertEqual(report['frame_cells'], [6, 3, 6])
        self.assertIs(report['frame_tight'], True)

    def test_cycle_is_a_usage_error(self):
        path = self.poset_file(text="elements: 2\ncovers:\n0 1\n1 0\n")
        with self.assertRaises(CommandError) as raised:
            self.call('validate', path)
        self.assertEqual(raised.exception.returncode, 2)

    def test_echo(self):
        _, _, poset = json_lines(self.call('validate', self.poset_file(poset=chain(3)), echo=True, format='json'))
        self.assertEqual(poset['covers'], [[0, 1], [1, 2]])


class BoundCommandTest(CommandTestCase):
    def test_lock_cycle_refused(self):
        path = self.poset_file(poset=lock_cycle(3), frame=generate_frame(spec('lock_cycle', M=3)))
        out = StringIO()
        self.assertEqual(run(['bound', path, '--frame', '--format', 'json'], stdout=out), 0)
        _, refusal, summary = json_lines(out.getvalue())
        self.assertEqual(refusal['status'], 'refused')
        self.assertEqual(refusal['advisory'][0]['M'], 3)
        self.assertEqual(summary, {'targets': 1, 'certified': 0, 'refused': 1})

    def test_crown_certified(self):
        _, certificate, summary = json_lines(self.call('bound', self.poset_file(poset=crown(5)), format='json'))
        self.assertEqual(certificate['status'], 'certified')
        self.assertEqual(certificate['aut_order'], 10)
        self.assertTrue(certificate['holds'])
        self.assertEqual(certificate['derivation']['rule'], 'primitive-union')
        self.assertEqual(summary['certified'], 1)

    def test_iou_strategy(self):
        path = self.poset_file(poset=separated_crown(3), frame=generate_frame(spec('separated_crown', k=3)))
        _, certificate, _ = json_lines(self.call('bound', path, frame=True, strategy='iou', policy='max_cell',
                                                 format='json'))
        self.assertEqual(certificate['derivation']['rule'], 'deconstruction-combination')
        self.assertTrue(certificate['holds'])

    def test_chain_has_no_targets(self):
        _, summary = json_lines(self.call('bound', self.poset_file(poset=chain(4)), format='json'))
        self.assertEqual(summary, {'targets': 0, 'certified': 0, 'refused': 0})


class DecomposeCommandTest(CommandTestCase):
    def test_separated_crown_with_verification(self):
        path = self.poset_file(poset=separated_crown(3), frame=generate_frame(spec('separated_crown', k=3)))
        lines = json_lines(self.call('decompose', path, frame=True, verify=True, policy='max_cell', format='json'))
        steps, summary = lines[1:-1], lines[-1]
        self.assertEqual(summary['cells'], 3)
        self.assertEqual(summary['steps'], len(steps))
        self.assertGreaterEqual(len(steps), 1)
        for step in steps:
            self.assertTrue(step['verification']['equal'])
            self.assertTrue(step['verification']['residual_matches'])

    def test_two_cell_union_has_no_steps(self):
        _, summary = json_lines(self.call('decompose', self.poset_file(poset=s_w(4)), format='json'))
        self.assertEqual(summary['steps'], 0)
        self.assertIsNone(summary['b'])


class CountingCommandTest(CommandTestCase):
    def test_count_chain(self):
        _, report = json_lines(self.call('count', self.poset_file(poset=chain(3)), format='json'))
        self.assertEqual(report['aut_order'], 1)
        self.assertEqual(report['end_count'], 10)
        self.assertTrue(report['end_exact'])

    def test_ratio_with_width11(self):
        _, ratio, verdict = json_lines(self.call('ratio', self.poset_file(poset=s_w(3)), width11=True, format='json'))
        self.assertEqual(ratio['aut_order'], 6)
        self.assertEqual(verdict['branch'], 'maxlocked_large_w')
        self.assertEqual(verdict['ratio_bound'], {'numerator': 3, 'denominator': 4})


class GenerateCommandTest(CommandTestCase):
    def test_lock_cycle_with_frame(self):
        document = parse_poset_document(self.call('generate', 'lock_cycle', 'M=3'))
        self.assertEqual(document.poset.size, 12)
        self.assertEqual(len(document.frame), 4)

    def test_random_is_seeded(self):
        first = self.call('generate', 'random', 'n=7', seed=11)
        self.assertEqual(first, self.call('generate', 'random', 'n=7', seed=11))
        self.assertIn('# seed 11', first)

    def test_unknown_parameter(self):
        with self.assertRaises(CommandError) as raised:
            self.call('generate', 'chain', 'k=3')
        self.assertEqual(raised.exception.returncode, 2)


class RunnerTest(CommandTestCase):
    def test_hyphenated_export_dot(self):
        out = StringIO()
        self.assertEqual(run(['export-dot', self.poset_file()], stdout=out), 0)
        self.assertIn('digraph orbits {', out.getvalue())
        self.assertIn('D0 -> D1', out.getvalue())

    def test_parse_error_exits_two(self):
        path = self.poset_file(text="elements: x\ncovers:\n")
        self.assertEqual(run(['analyze', path], stdout=StringIO(), stderr=StringIO()), 2)

    def test_missing_argument_exits_two(self):
        self.assertEqual(run(['analyze'], stdout=StringIO(), stderr=StringIO()), 2)

    def test_generate_accepts_kind_aliases(self):
        out = StringIO()
        self.assertEqual(run(['generate', 'no_d_endos', 'M=3'], stdout=out, stderr=StringIO()), 0)
        document = parse_poset_document(out.getvalue())
        self.assertEqual((document.poset.size, len(document.frame)), (12, 4))
        out = StringIO()
        self.assertEqual(run(['generate', 'transmit_drive'], stdout=out, stderr=StringIO()), 0)
        self.assertEqual(parse_poset_document(out.getvalue()).poset.size, 27)

    def test_command_names(self):
        self.assertEqual(command_name('corpus-verify'), 'corpus_verify')
        self.assertEqual(command_name('bound'), 'bound')

    def test_unknown_command(self):
        err = StringIO()
        self.assertEqual(run(['plot'], stderr=err), 2)
        self.assertIn('unknown command', err.getvalue())


class CorpusTest(SimpleTestCase):
    def test_collects_every_app(self):
        poset_suites, global_suites = collect_suites()
        self.assertIn('bounds.width11-verdict', poset_suites)
        self.assertIn('permgroup.exceptional-table', global_suites)
        self.assertEqual(set(select(poset_suites, ['counting'])),
                         {'counting.automorphism-search', 'counting.autonomy-filter', 'counting.endomorphism-floor'})

    def test_corpus_sizes(self):
        self.assertEqual(len(corpus_posets(4)), 1 + 2 + 5 + 16)
        self.assertEqual(len(corpus_posets(2, random_count=3, seed=5)), 6)

    def test_check_poset_passes(self):
        caps = {'aut_cap': 10 ** 6, 'end_cap': 10, 'aut_brute_max_n': 7}
        self.assertEqual(check_poset(format_poset(s_w(3)), caps), [])

    def test_render_text_rationals(self):
        text = render_text({'ratio': {'numerator': 3, 'denominator': 4}, 'exact': True, 'family': None})
        self.assertEqual(text.splitlines(), ['ratio : 3/4', 'exact : true', 'family: -'])


class CorpusVerifyCommandTest(TestCase):
    def call(self, **options):
        out = StringIO()
        call_command('corpus_verify', stdout=out, format='json', **options)
        return json_lines(out.getvalue())

    def test_small_corpus_passes(self):
        lines = self.call(max_n=3, suites=['orbit_structure'])
        summary = lines[-1]
        self.assertEqual(summary['status'], 'passed')
        self.assertEqual(summary['posets_checked'], 8)
        self.assertIsNone(summary['run'])

    def test_record(self):
        summary = self.call(max_n=3, suites=['orbit_structure.factorization'], record=True)[-1]
        run_record = CorpusRun.objects.get(pk=summary['run'])
        self.assertEqual(run_record.status, 'passed')
        self.assertEqual(run_record.posets_checked, 8)
        self.assertIsNotNone(run_record.finished_at)

    def test_violation_exits_one(self):
        failing = dict(orbit_invariants.POSET_SUITES, factorization=lambda p, caps=None: ['product mismatch'])
        out = StringIO()
        with mock.patch.object(orbit_invariants, 'POSET_SUITES', failing), self.assertRaises(CommandError) as raised:
            call_command('corpus_verify', max_n=2, suites=['orbit_structure.factorization'],
                         record=True, format='json', stdout=out)
        self.assertEqual(raised.exception.returncode, 1)
        violations = [line for line in json_lines(out.getvalue()) if 'suite' in line]
        self.assertEqual(len(violations), 3)
        self.assertEqual(InvariantViolation.objects.count(), 3)
        self.assertEqual(CorpusRun.objects.get().status, 'failed')

    def test_archive(self):
        with tempfile.TemporaryDirectory() as directory, override_settings(MEDIA_ROOT=directory):
            summary = self.call(max_n=2, suites=['orbit_structure.factorization'], archive=True)[-1]
            with open(os.path.join(directory, summary['archive']), encoding='utf-8') as handle:
                archived = json_lines(handle.read())
        self.assertEqual(archived[0]['command'], 'corpus-verify')
        self.assertEqual(archived[-1]['status'], 'passed')

    def test_unknown_suite(self):
        with self.assertRaises(CommandError) as raised:
            self.call(max_n=2, suites=['plotting'])
        self.assertEqual(raised.exception.returncode, 2)
