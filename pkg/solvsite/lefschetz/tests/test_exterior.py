from django.test import SimpleTestCase
from hypothesis import given, settings
from sympy.polys.domains import QQ

from ..catalog import catalog_get
from ..exceptions import UsageError
from ..exterior import (
    Form, complement, differential, monomial_basis, power, render_form, sort_sign,
    volume_data, wedge,
)
from .strategies import sparse_forms


class IndexTests(SimpleTestCase):

    def test_monomial_basis(self):
        self.assertEqual(monomial_basis(4, 2), ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)))
        self.assertEqual(monomial_basis(4, 5), ())
        self.assertEqual(monomial_basis(4, -1), ())

    def test_sort_sign(self):
        self.assertEqual(sort_sign((2, 1)), (-1, (1, 2)))
        self.assertEqual(sort_sign((3, 1, 2)), (1, (1, 2, 3)))
        self.assertEqual(sort_sign((1, 1)), (0, None))

    def test_complement_sign(self):
        self.assertEqual(complement(4, (1, 2)), ((3, 4), 1))
        self.assertEqual(complement(4, (2,)), ((1, 3, 4), -1))


class FormTests(SimpleTestCase):

    def test_monomial_with_unsorted_indices(self):
        form = Form.monomial(4, (2, 1))
        self.assertEqual(form.coeffs, {(1, 2): QQ(-1)})

    def test_zero_terms_are_dropped(self):
        form = Form(4, 2, {(1, 2): QQ(1)}) - Form(4, 2, {(1, 2): QQ(1)})
        self.assertTrue(form.is_zero)

    def test_wrong_degree_term(self):
        with self.assertRaises(UsageError):
            Form(4, 2, {(1,): QQ(1)})

    def test_render(self):
        form = Form(6, 2, {(1, 2): QQ(1), (3, 4): QQ(2), (5, 6): QQ(-1, 3)})
        self.assertEqual(render_form(form), 'e12 + 2*e34 - 1/3*e56')
        self.assertEqual(render_form(Form.monomial(10, (1, 10))), 'e{1,10}')
        self.assertEqual(render_form(Form.zero(4, 2)), '0')

    @settings(max_examples=50)
    @given(sparse_forms(5, 1), sparse_forms(5, 2))
    def test_graded_commutativity(self, a, b):
        self.assertEqual(wedge(a, b), wedge(b, a))
        self.assertEqual(wedge(a, a), Form.zero(5, 2))

    @settings(max_examples=30)
    @given(sparse_forms(4, 1), sparse_forms(4, 1), sparse_forms(4, 2))
    def test_associativity(self, a, b, c):
        self.assertEqual(wedge(wedge(a, b), c), wedge(a, wedge(b, c)))


class DifferentialTests(SimpleTestCase):

    def test_structure_equations(self):
        sol = catalog_get('sol3xr')
        self.assertEqual(render_form(differential(sol, Form.monomial(4, (2,)))), 'e12')
        self.assertEqual(render_form(differential(sol, Form.monomial(4, (3,)))), '-e13')
        # e14 + e23 is closed on sol3xr
        omega = Form(4, 2, {(1, 4): QQ(1), (2, 3): QQ(1)})
        self.assertTrue(differential(sol, omega).is_zero)

    @settings(max_examples=30)
    @given(sparse_forms(6, 2), sparse_forms(6, 3))
    def test_d_squared_and_leibniz_on_nakamura(self, a, b):
        algebra = catalog_get('nakamura6')
        self.assertTrue(differential(algebra, differential(algebra, a)).is_zero)
        left = differential(algebra, wedge(a, b))
        right = wedge(differential(algebra, a), b) + wedge(a, differential(algebra, b))
        self.assertEqual(left, right)


class VolumeTests(SimpleTestCase):

    def test_volume_of_standard_form(self):
        omega = Form(6, 2, {(1, 2): QQ(1), (3, 4): QQ(1), (5, 6): QQ(1)})
        volume, coefficient = volume_data(omega)
        self.assertEqual(coefficient, QQ(6))
        self.assertEqual(volume, Form.monomial(6, (1, 2, 3, 4, 5, 6)))
        self.assertEqual(power(omega, 4), Form.zero(6, 8))

    def test_degenerate_form(self):
        self.assertIsNone(volume_data(Form.monomial(4, (1, 2))))

    def test_odd_dimension(self):
        with self.assertRaises(UsageError):
            volume_data(Form.monomial(3, (1, 2)))
