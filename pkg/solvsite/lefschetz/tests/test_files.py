import json
import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from ..catalog import catalog_entry, catalog_get
from ..exceptions import AlgebraLoadError, UnknownAlgebraError, UsageError
from ..files import load_algebra, load_entry, resolve_entry, save_algebra


class AlgebraFileTests(SimpleTestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.root = Path(self.directory.name)

    def tearDown(self):
        self.directory.cleanup()

    def write(self, name, document):
        path = self.root / name
        path.write_text(document if isinstance(document, str) else json.dumps(document))
        return path

    def test_save_then_load(self):
        path = self.root / 'sol3xr.json'
        save_algebra(catalog_get('sol3xr'), path)
        self.assertEqual(load_algebra(path), catalog_get('sol3xr'))

    def test_entry_defaults_survive(self):
        path = self.root / 'fms.json'
        save_algebra(catalog_entry('fms_m6'), path)
        entry = load_entry(path)
        self.assertEqual(entry.omega, 'e12+e34+e56')
        self.assertEqual(entry.complex_pairs, ((1, 2), (3, 4), (5, 6)))
        self.assertEqual(entry.family_names, ('c', 'c1', 'c2', 'c3', 'a'))
        self.assertEqual(entry.cohomology_label, 'de Rham')
        self.assertTrue(entry.diagnostics.unimodular)

    def test_not_unimodular_is_a_warning(self):
        path = self.write('aff.json', {'name': 'aff', 'dim': 2, 'd': {'2': [[1, 2, '1']]}})
        with self.assertLogs('lefschetz.files', level='WARNING') as logs:
            entry = load_entry(path)
        self.assertIn('not unimodular', logs.output[0])
        self.assertFalse(entry.diagnostics.unimodular)
        self.assertEqual(entry.cohomology_label, 'invariant cohomology')

    def test_jacobi_violation_is_fatal(self):
        path = self.write('broken.json', {
            'name': 'broken', 'dim': 4, 'd': {'1': [[3, 4, 1]], '4': [[1, 2, 1]]},
        })
        with self.assertRaises(AlgebraLoadError) as caught:
            load_algebra(path)
        self.assertIn('Jacobi violation at generator 1', str(caught.exception))
        self.assertEqual(caught.exception.generator, 1)

    def test_malformed_files(self):
        cases = {
            'syntax.json': '{"name": "x", ',
            'list.json': '[1, 2]',
            'pairs.json': json.dumps({'name': 'x', 'dim': 2, 'complex_pairs': [[1]]}),
            'family.json': json.dumps({'name': 'x', 'dim': 2, 'family': {'basis': ['e12'], 'names': ['a', 'b']}}),
        }
        for name, text in cases.items():
            with self.subTest(file=name):
                with self.assertRaises(AlgebraLoadError):
                    load_entry(self.write(name, text))

    def test_missing_file(self):
        with self.assertRaises(UsageError):
            load_entry(self.root / 'absent.json')

    def test_resolve(self):
        self.assertEqual(resolve_entry('nil4').name, 'nil4')
        with self.assertRaises(UnknownAlgebraError):
            resolve_entry('nil5')
        path = self.root / 'nil4.json'
        save_algebra(catalog_entry('nil4'), path)
        self.assertEqual(resolve_entry(str(path)).algebra, catalog_get('nil4'))
