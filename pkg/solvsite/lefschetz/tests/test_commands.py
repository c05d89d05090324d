import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from ..catalog import catalog_get, catalog_names
from ..files import load_algebra


def run(*args):
    out = StringIO()
    call_command('lefschetz', *args, stdout=out)
    return out.getvalue()


def run_json(*args):
    return json.loads(run(*args, '--json'))


class ReportCommandTests(SimpleTestCase):

    def test_list(self):
        document = run_json('list')
        self.assertEqual([item['name'] for item in document], list(catalog_names()))
        self.assertIn('fms_m6', run('list'))

    def test_betti(self):
        self.assertIn('betti: 1 2 5 8 5 2 1', run('betti', 'fms_m6'))
        self.assertEqual(run_json('betti', 'nil3xr')['betti'], [1, 3, 4, 3, 1])

    def test_cohomology_single_degree(self):
        document = run_json('cohomology', 'sol3xr', '--degree', '2')
        self.assertEqual(list(document['cohomology']), ['2'])
        self.assertEqual(len(document['cohomology']['2']), 2)

    def test_hlc(self):
        document = run_json('hlc', 'sol3xr', '--omega', 'e14+e23')
        self.assertIs(document['verdict'], True)
        self.assertEqual(document['betti'], [1, 2, 2, 2, 1])
        self.assertIn('HLC: false', run('hlc', 'nil3xr'))

    def test_ddlambda_and_audit(self):
        self.assertIs(run_json('ddlambda', 'sol3xr')['holds'], True)
        self.assertIn('consistent: true', run('audit', 'nil3xr'))

    def test_almost_kaehler(self):
        document = run_json('jinv', 'nakamura6')
        self.assertEqual(
            (document['h_plus'], document['h_minus'], document['h_plus_primitive']), (4, 1, 3),
        )
        self.assertEqual(run_json('lejmi', 'nakamura6')['ker_PJ'], 4)
        self.assertIn('dim ker P_J = 4', run('lejmi', 'nakamura6'))

    def test_param_hlc(self):
        document = run_json('param-hlc', 'nakamura6')
        self.assertEqual(document['volume_poly'], '6*c1*c2*c3 + 6*c1*c4*c5')
        self.assertEqual(document['verdict'], 'EverywhereHLC')
        self.assertIn('verdict: EverywhereHLC', run('param-hlc', 'nakamura6'))

    def test_brylinski(self):
        document = run_json('brylinski', 'sol3xr')
        for degree, row in document['degrees'].items():
            with self.subTest(degree=degree):
                self.assertEqual(row['brylinski'], row['dual_betti'])

    def test_cup(self):
        document = run_json('cup', 'sol3xr', '--degree', '1')
        self.assertEqual(document['parameters'], ['c1', 'c2'])
        self.assertEqual((document['source_dimension'], document['target_dimension']), (2, 2))

    def test_validate_catalog_entry(self):
        document = run_json('validate', 'nil4')
        self.assertIs(document['jacobi_ok'], True)
        self.assertIs(document['unimodular'], True)


class FileCommandTests(SimpleTestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.root = Path(self.directory.name)

    def tearDown(self):
        self.directory.cleanup()

    def test_export_then_load(self):
        path = self.root / 'sol3xr.json'
        self.assertIn('wrote sol3xr', run('export', 'sol3xr', str(path)))
        self.assertEqual(load_algebra(path), catalog_get('sol3xr'))

    def test_explore_exported_files(self):
        paths = []
        for name in ('sol3xr', 'nil4'):
            path = self.root / f'{name}.json'
            run('export', name, str(path))
            paths.append(str(path))
        results = run_json('explore', *paths)
        self.assertEqual([result['status'] for result in results], ['consistent', 'consistent'])
        self.assertEqual(
            [result['verdict'] for result in results], ['EverywhereHLC', 'NowhereHLC'],
        )
        self.assertIs(results[0]['hlc_at_default'], True)

    def test_validate_rejects_jacobi_violation(self):
        path = self.root / 'broken.json'
        path.write_text(json.dumps({
            'name': 'broken', 'dim': 4, 'd': {'1': [[3, 4, 1]], '4': [[1, 2, 1]]},
        }))
        with self.assertRaises(CommandError) as caught:
            run('validate', str(path))
        # A Jacobi failure is a load error, the same status loading the file gives.
        self.assertEqual(caught.exception.returncode, 2)
        self.assertIn("Jacobi violation at generator 1", str(caught.exception))


class ExitStatusTests(SimpleTestCase):

    def assertExitStatus(self, status, *args):
        with self.assertRaises(CommandError) as caught:
            run(*args)
        self.assertEqual(caught.exception.returncode, status, str(caught.exception))

    def test_usage_errors(self):
        self.assertExitStatus(2, 'betti', 'nil5')
        self.assertExitStatus(2, 'hlc', 'sol3xr', '--omega', 'e1 + e23')
        self.assertExitStatus(2, 'cup', 'sol3xr')
        self.assertExitStatus(2, 'cup', 'sol3xr', '--degree', '3')
        self.assertExitStatus(2, 'jinv', 'sol3xr')
        self.assertExitStatus(2, 'param-hlc', 'sol3xr', '--basis', 'e14;e23', '--names', 'a')

    def test_precondition_failures(self):
        self.assertExitStatus(1, 'hlc', 'sol3xr', '--omega', 'e12')
        self.assertExitStatus(1, 'hlc', 'sol3xr', '--omega', 'e12+e34')
        self.assertExitStatus(1, 'lejmi', 'r4', '--complex-pairs', '2,1;4,3')
