from functools import lru_cache

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from sympy.polys.domains import QQ

from ..catalog import catalog_entry, catalog_names
from ..cohomology import betti
from ..exceptions import DegenerateFormError, NotClosedError, UsageError
from ..expressions import parse_form
from ..exterior import Form, omega_inv_pairing, render_form
from ..symplectic import (
    SymplecticStructure, brylinski_cohomology, d_lambda, ddlambda_lemma_check,
    equivalence_audit, harmonic_representative, lambda_sign, sl2_operators, symplectic_star,
    tseng_yau_cohomology,
)
from ..cohomology import ClassCoords
from .strategies import any_degree_forms


@lru_cache(maxsize=None)
def default_structure(name):
    entry = catalog_entry(name)
    return SymplecticStructure.from_form(entry.algebra, entry.omega_form())


class StructureTests(SimpleTestCase):

    def test_inverse_pairing_convention(self):
        structure = default_structure('r4')
        value = omega_inv_pairing(structure, Form.monomial(4, (1,)), Form.monomial(4, (2,)))
        self.assertEqual(value, QQ(1))

    def test_rejects_bad_forms(self):
        entry = catalog_entry('sol3xr')
        with self.assertRaises(DegenerateFormError):
            SymplecticStructure.from_form(entry.algebra, parse_form('e12', entry.algebra))
        with self.assertRaises(NotClosedError):
            SymplecticStructure.from_form(entry.algebra, parse_form('e12 + e34', entry.algebra))
        with self.assertRaises(UsageError):
            SymplecticStructure.from_form(entry.algebra, parse_form('e123', entry.algebra))

    def test_star_on_the_standard_torus(self):
        structure = default_structure('r4')
        self.assertEqual(render_form(symplectic_star(structure, Form.monomial(4, (1, 2)))), 'e34')
        self.assertEqual(render_form(symplectic_star(structure, Form.monomial(4, (1,)))), 'e134')
        self.assertEqual(render_form(symplectic_star(structure, Form.one(4))), 'e1234')


class OperatorIdentityTests(SimpleTestCase):

    def test_lambda_sign_anchor(self):
        for n in (1, 2, 3):
            self.assertIn(lambda_sign(n), (1, -1))

    def test_lambda_of_omega(self):
        for name in ('r4', 'sol3xr', 'nakamura6'):
            structure = default_structure(name)
            triple = sl2_operators(structure)
            self.assertEqual(triple.Lam(structure.omega), Form.one(structure.dim).scale(QQ(-structure.n)))

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_identities_on_every_catalog_algebra(self, data):
        for name in catalog_names():
            structure = default_structure(name)
            # The label names the algebra in a falsifying example.
            self._check_identities(structure, data.draw(any_degree_forms(structure.dim), label=name))

    def _check_identities(self, structure, form):
        star = structure.star
        triple = sl2_operators(structure)
        L, Lam, H = triple.L, triple.Lam, triple.H
        k = form.degree

        self.assertEqual(star(star(form)), form)
        self.assertEqual(H(form), form.scale(QQ(structure.n - k)))
        self.assertEqual(H(L(form)) - L(H(form)), L(form).scale(QQ(-2)))
        self.assertEqual(H(Lam(form)) - Lam(H(form)), Lam(form).scale(QQ(2)))
        # d_lambda raises when its two formulas disagree.
        once = d_lambda(structure, form)
        self.assertTrue(d_lambda(structure, once).is_zero)


class BrylinskiTests(SimpleTestCase):

    def test_star_duality_with_de_rham(self):
        for name in catalog_names():
            entry = catalog_entry(name)
            structure = SymplecticStructure.from_form(entry.algebra, entry.omega_form())
            dim = entry.algebra.dim
            for k in range(dim + 1):
                with self.subTest(algebra=name, degree=k):
                    group = brylinski_cohomology(structure, k)
                    self.assertEqual(group.dimension, betti(entry.algebra, dim - k))


class EquivalenceAuditTests(SimpleTestCase):

    def test_five_conditions_agree(self):
        expected = {'r4': True, 'sol3xr': True, 'nil3xr': False, 'nakamura6': True, 'fms_m6': True}
        for name, verdict in expected.items():
            with self.subTest(algebra=name):
                report = equivalence_audit(default_structure(name))
                self.assertTrue(report.consistent, report.to_dict())
                self.assertIs(report.i_hlc, verdict)

    def test_nil3xr_lemma_fails_somewhere(self):
        structure = default_structure('nil3xr')
        self.assertFalse(all(ddlambda_lemma_check(structure, k) for k in range(5)))
        self.assertFalse(all(tseng_yau_cohomology(structure, k).map_to_dR_injective for k in range(5)))

    def test_harmonic_representative_on_sol3xr(self):
        structure = default_structure('sol3xr')
        rep = harmonic_representative(structure, ClassCoords(2, (QQ(1), QQ(0))))
        self.assertIsNotNone(rep)
        self.assertTrue(d_lambda(structure, rep).is_zero)
