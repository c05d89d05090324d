from django.test import SimpleTestCase
from hypothesis import assume, given, settings, strategies as st
from sympy.polys.domains import QQ

from ..catalog import catalog_entry, catalog_get, catalog_names
from ..cohomology import (
    betti_numbers, class_coordinates, class_representative, cohomology_basis, cup_product,
    hlc_check, lefschetz_matrix,
)
from ..exceptions import DegenerateFormError, NotClosedError
from ..expressions import parse_form
from ..exterior import Form, differential, render_form, volume_data
from .strategies import sparse_forms


class BettiNumberTests(SimpleTestCase):

    def test_catalog_betti_numbers(self):
        expected = {
            'r4': (1, 4, 6, 4, 1),
            'nil3xr': (1, 3, 4, 3, 1),
            'sol3xr': (1, 2, 2, 2, 1),
            'r30xr': (1, 2, 2, 2, 1),
            'fms_m6': (1, 2, 5, 8, 5, 2, 1),
        }
        for name, numbers in expected.items():
            with self.subTest(algebra=name):
                self.assertEqual(betti_numbers(catalog_get(name)), numbers)

    def test_nakamura_low_degrees(self):
        numbers = betti_numbers(catalog_get('nakamura6'))
        self.assertEqual(numbers[1], 2)
        self.assertEqual(numbers[2], 5)

    def test_poincare_duality(self):
        for name in catalog_names():
            with self.subTest(algebra=name):
                numbers = betti_numbers(catalog_get(name))
                self.assertEqual(numbers, tuple(reversed(numbers)))


class RepresentativeTests(SimpleTestCase):

    def test_nakamura_h2_representatives(self):
        basis = cohomology_basis(catalog_get('nakamura6'), 2)
        self.assertEqual(
            [render_form(rep) for rep in basis.representatives],
            ['e12', 'e34', 'e36', 'e45', 'e56'],
        )

    def test_fms_h3_representatives(self):
        basis = cohomology_basis(catalog_get('fms_m6'), 3)
        self.assertEqual(
            [render_form(rep) for rep in basis.representatives],
            ['e125', 'e126', 'e145', 'e146', 'e235', 'e236', 'e345', 'e346'],
        )

    def test_representatives_are_closed(self):
        for name in ('nil3xr', 'nakamura6'):
            algebra = catalog_get(name)
            for k in range(algebra.dim + 1):
                for rep in cohomology_basis(algebra, k).representatives:
                    self.assertTrue(differential(algebra, rep).is_zero)

    def test_coordinates_ignore_exact_terms(self):
        algebra = catalog_get('sol3xr')
        basis = cohomology_basis(algebra, 2)
        # d(e2) = e12 is exact
        form = parse_form('e14 + 3*e12', algebra)
        coords = class_coordinates(basis, form)
        self.assertEqual(coords.coords, (QQ(1), QQ(0)))
        self.assertEqual(render_form(class_representative(basis, coords)), 'e14')

    def test_coordinates_need_a_closed_form(self):
        algebra = catalog_get('sol3xr')
        with self.assertRaises(NotClosedError) as caught:
            class_coordinates(cohomology_basis(algebra, 1), Form.monomial(4, (2,)))
        self.assertEqual(render_form(caught.exception.differential), 'e12')

    def test_cup_product(self):
        algebra = catalog_get('r4')
        coords = cup_product(algebra, Form.monomial(4, (1,)), Form.monomial(4, (2,)))
        self.assertEqual(coords.coords, (QQ(1), QQ(0), QQ(0), QQ(0), QQ(0), QQ(0)))


class HardLefschetzTests(SimpleTestCase):

    def test_fixed_form_verdicts(self):
        cases = [('sol3xr', 'e14+e23', True), ('nil3xr', 'e14+e23', False), ('r4', 'e12+e34', True)]
        for name, omega, verdict in cases:
            with self.subTest(algebra=name):
                algebra = catalog_get(name)
                report = hlc_check(algebra, parse_form(omega, algebra))
                self.assertIs(report.verdict, verdict)

    def test_report_document(self):
        algebra = catalog_get('sol3xr')
        document = hlc_check(algebra, parse_form('e14+e23', algebra)).to_dict()
        self.assertEqual(document['betti'], [1, 2, 2, 2, 1])
        self.assertEqual(document['hlc']['1'], {'rank': 2, 'surjective': True, 'iso': True, 'dual': True})
        self.assertTrue(document['verdict'])

    def test_nil3xr_fails_in_degree_one(self):
        algebra = catalog_get('nil3xr')
        matrix = lefschetz_matrix(algebra, parse_form('e14+e23', algebra), 1)
        self.assertEqual(matrix.determinant(), QQ(0))

    def test_degenerate_form(self):
        algebra = catalog_get('sol3xr')
        with self.assertRaises(DegenerateFormError):
            hlc_check(algebra, parse_form('e12', algebra))

    def test_catalog_defaults_are_hlc_where_expected(self):
        for name in ('r4', 'r6', 'sol3xr', 'r30xr', 'nakamura6', 'fms_m6'):
            with self.subTest(algebra=name):
                entry = catalog_entry(name)
                self.assertTrue(hlc_check(entry.algebra, entry.omega_form()).verdict)


class ExactInvarianceTests(SimpleTestCase):
    """Classes and verdicts depend on cohomology classes only."""

    @settings(max_examples=30, deadline=None)
    @given(st.data())
    def test_exact_forms_have_zero_coordinates(self, data):
        name = data.draw(st.sampled_from(catalog_names()), label='algebra')
        algebra = catalog_get(name)
        degree = data.draw(st.integers(min_value=0, max_value=algebra.dim - 1), label='degree')
        eta = data.draw(sparse_forms(algebra.dim, degree), label='eta')
        basis = cohomology_basis(algebra, degree + 1)
        coords = class_coordinates(basis, differential(algebra, eta))
        self.assertEqual(coords.coords, (QQ.zero,) * basis.dimension)

    @settings(max_examples=15, deadline=None)
    @given(st.data())
    def test_hlc_verdict_ignores_exact_changes(self, data):
        name = data.draw(st.sampled_from(('sol3xr', 'nil3xr', 'nakamura6')), label='algebra')
        entry = catalog_entry(name)
        algebra = entry.algebra
        omega = entry.omega_form()
        moved = omega + differential(algebra, data.draw(sparse_forms(algebra.dim, 1), label='eta'))
        assume(volume_data(moved) is not None)
        self.assertIs(hlc_check(algebra, moved).verdict, hlc_check(algebra, omega).verdict)
        basis = cohomology_basis(algebra, 2)
        self.assertEqual(class_coordinates(basis, moved), class_coordinates(basis, omega))

    def test_nakamura_h4_coordinates(self):
        algebra = catalog_get('nakamura6')
        basis = cohomology_basis(algebra, 4)
        self.assertEqual(
            [render_form(rep) for rep in basis.representatives],
            ['e1234', 'e1236', 'e1245', 'e1256', 'e3456'],
        )
        coords = class_coordinates(basis, parse_form('3*e1256 + 5*e3456', algebra))
        self.assertEqual(coords.coords, (QQ(0), QQ(0), QQ(0), QQ(3), QQ(5)))
