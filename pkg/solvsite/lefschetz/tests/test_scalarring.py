from django.test import SimpleTestCase
from hypothesis import assume, given, settings, strategies as st
from sympy.polys.domains import QQ

from ..exceptions import ScalarFormatError, UsageError
from ..parametric import PointSampler
from ..scalarring import (
    factors_within, parse_scalar, poly_divides, poly_eval, poly_gcd, poly_proportional,
    polynomial_ring, render_poly, render_scalar,
)
from .strategies import rationals, small_polys


class ScalarTests(SimpleTestCase):

    def test_parse_reduces_to_lowest_terms(self):
        self.assertEqual(parse_scalar('6/4'), QQ(3, 2))
        self.assertEqual(parse_scalar(' -3 '), QQ(-3))
        self.assertEqual(parse_scalar('-2/4'), QQ(-1, 2))

    def test_malformed_scalars(self):
        for text in ('1/0', 'a', '1/', '1.5', ''):
            with self.subTest(text=text):
                with self.assertRaises(ScalarFormatError):
                    parse_scalar(text)

    def test_render(self):
        self.assertEqual(render_scalar(QQ(5)), '5')
        self.assertEqual(render_scalar(QQ(-1, 3)), '-1/3')

    @given(rationals)
    def test_render_then_parse(self, value):
        self.assertEqual(parse_scalar(render_scalar(value)), value)


class PolynomialTests(SimpleTestCase):

    def setUp(self):
        self.ring = polynomial_ring(('c1', 'c2', 'c3', 'c4', 'c5'))
        self.c1, self.c2, self.c3, self.c4, self.c5 = self.ring.gens

    def test_same_names_share_a_ring(self):
        self.assertIs(polynomial_ring(('c1', 'c2', 'c3', 'c4', 'c5')), self.ring)

    def test_render_graded_lex(self):
        p = 6 * self.c1 * self.c2 * self.c3 + 6 * self.c1 * self.c4 * self.c5
        self.assertEqual(render_poly(p), '6*c1*c2*c3 + 6*c1*c4*c5')
        self.assertEqual(render_poly(self.c1 ** 2 - self.c2 + 3), 'c1**2 - c2 + 3')
        self.assertEqual(render_poly(self.ring.zero), '0')

    def test_gcd_is_monic(self):
        q = self.c2 * self.c3 + self.c4 * self.c5
        g = poly_gcd(6 * self.c1 * q, 4 * q ** 2)
        self.assertEqual(g, q)
        self.assertEqual(poly_gcd(self.ring.zero, self.ring.zero), self.ring.zero)

    def test_exact_division(self):
        q = self.c2 * self.c3 + self.c4 * self.c5
        self.assertEqual(poly_divides(q, 6 * self.c1 * q), 6 * self.c1)
        self.assertIsNone(poly_divides(self.c1 + 1, q))
        with self.assertRaises(UsageError):
            poly_divides(self.ring.zero, q)

    def test_proportional(self):
        q = self.c2 * self.c3 + self.c4 * self.c5
        self.assertEqual(poly_proportional(q, -3 * q), QQ(-3))
        self.assertIsNone(poly_proportional(q, self.c1 * q))
        self.assertEqual(poly_proportional(self.ring.zero, self.ring.zero), QQ(1))

    def test_factors_within(self):
        q = self.c2 * self.c3 + self.c4 * self.c5
        volume = 6 * self.c1 * q
        self.assertTrue(factors_within(4 * q ** 2, volume))
        self.assertTrue(factors_within(-2 * self.c1 ** 3 * q, volume))
        self.assertFalse(factors_within(self.c2, volume))
        self.assertTrue(factors_within(self.ring(7), volume))

    def test_eval(self):
        p = self.c1 * self.c2 - QQ(1, 2)
        point = {'c1': QQ(3), 'c2': QQ(1, 3), 'c3': 0, 'c4': 0, 'c5': 0}
        self.assertEqual(poly_eval(p, point), QQ(1, 2))
        with self.assertRaises(UsageError):
            poly_eval(p, {'c1': 1})

    def test_mismatched_rings(self):
        other = polynomial_ring(('x', 'y'))
        with self.assertRaises(UsageError):
            poly_gcd(self.c1, other.gens[0])


XYZ = polynomial_ring(('x', 'y', 'z'))
nonzero_rationals = rationals.filter(bool)


class PolynomialPropertyTests(SimpleTestCase):

    @settings(deadline=None)
    @given(small_polys(XYZ), small_polys(XYZ))
    def test_gcd_divides_both(self, p, q):
        g = poly_gcd(p, q)
        assume(g)
        for poly in (p, q):
            cofactor = poly_divides(g, poly)
            self.assertIsNotNone(cofactor)
            self.assertEqual(g * cofactor, poly)

    @settings(deadline=None)
    @given(small_polys(XYZ), small_polys(XYZ))
    def test_divides_returns_the_quotient(self, p, q):
        assume(p)
        quotient = poly_divides(p, p * q)
        self.assertEqual(p * quotient, p * q)
        self.assertEqual(quotient, q)

    @settings(deadline=None)
    @given(small_polys(XYZ), nonzero_rationals, st.integers(min_value=0, max_value=10 ** 6))
    def test_proportional_ratio_matches_values(self, p, r, seed):
        ratio = poly_proportional(p, p.mul_ground(r))
        self.assertEqual(ratio, r if p else QQ.one)
        sampler = PointSampler(('x', 'y', 'z'), seed=seed)
        for _ in range(10):
            point = sampler.point()
            self.assertEqual(poly_eval(p.mul_ground(r), point), ratio * poly_eval(p, point))

    @given(small_polys(XYZ), small_polys(XYZ))
    def test_gcd_is_normalized_once(self, p, q):
        g = poly_gcd(p, q)
        self.assertEqual(poly_gcd(g, g), g)

    def test_factor_cancels_from_the_fms_cubic(self):
        ring = polynomial_ring(('c', 'c1', 'c2', 'c3', 'a'))
        c, c1, c2, c3, a = ring.gens
        quadric = c ** 2 - c1 ** 2 + a ** 2 + c * c2 + c * c3 + c2 * c3
        linear = c - c2 - c3
        self.assertEqual(poly_gcd(linear * quadric, quadric), quadric)
        self.assertEqual(poly_divides(linear, linear * quadric), quadric)
        self.assertEqual(poly_divides(quadric, linear * quadric), linear)
