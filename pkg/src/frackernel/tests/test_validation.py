import math

from django.test import SimpleTestCase

from frackernel.core.asymptotics import invsub_asym_large_t
from frackernel.core.exceptions import DivergenceException, DomainException, UncoveredCaseException
from frackernel.core.kernels import as_profile
from frackernel.core.stable import StableLaw
from frackernel.core.transform import inverse_subordinated_density
from frackernel.core.validation import ratio_sweep, half_stable_inverse_cauchy, bessel_ib, ib_quadrature, CASES


EULER_GAMMA = 0.5772156649015329


class SubordinationSweepTest(SimpleTestCase):
    def test_far(self):
        rows, summary = ratio_sweep('thm1a', 'gauss', 1, .5, a_min=10., a_max=1e4, points=7)
        self.assertEqual(len(rows), 7)
        self.assertEqual(rows[-1].A, 1e4)
        # Subordinated Gauss at beta=1/2 is Cauchy: ratio A^2 / (1 + A^2)
        for row in rows:
            self.assertAlmostEqual(row.ratio, row.A ** 2 / (1 + row.A ** 2), places=6)
        self.assertLess(summary.max_deviation, 1e-3)
        self.assertEqual(summary.decade, (1e3, 1e4))
        self.assertEqual(summary.failures, 0)

    def test_near(self):
        rows, summary = ratio_sweep('cor1b', None, 1, .5, a_min=1e-4, a_max=1e-1, points=4)
        for row in rows:
            self.assertAlmostEqual(row.ratio, 1 / (1 + row.A ** 2), places=6)
        self.assertEqual(summary.decade[0], 1e-4)
        self.assertAlmostEqual(summary.decade[1], 1e-3, places=15)
        self.assertLess(summary.max_deviation, 1e-5)

    def test_near_deviation_shrinks(self):
        rows, _ = ratio_sweep('thm1b', 'cauchy', 2, .7, a_min=1e-4, a_max=1e-1, points=4)
        self.assertLess(abs(rows[0].ratio - 1), abs(rows[2].ratio - 1))
        self.assertLess(abs(rows[1].ratio - 1), abs(rows[3].ratio - 1))

    def test_far_cauchy_base(self):
        rows, summary = ratio_sweep('cor2a', None, 2, .9, a_min=10., a_max=1e4, points=4)
        self.assertLess(summary.max_deviation, .02)
        self.assertTrue(all(row.ratio > 0 for row in rows))


class InverseSubordinationSweepTest(SimpleTestCase):
    def test_large_time_below_index(self):
        rows, summary = ratio_sweep('thm2a', 'gauss', 1, .5, a_min=1e4, a_max=1e8, points=7)
        self.assertLess(summary.max_deviation, .02)
        self.assertLess(abs(rows[-1].ratio - 1), abs(rows[-4].ratio - 1))

    def test_large_time_above_index(self):
        rows, summary = ratio_sweep('thm2a', 'gauss', 3, .5, a_min=1e4, a_max=1e8, points=7)
        self.assertLess(summary.max_deviation, .02)
        self.assertLess(abs(rows[-1].ratio - 1), abs(rows[-4].ratio - 1))

    def test_large_time_at_index(self):
        rows, summary = ratio_sweep('cor2c', None, 1, .5, a_min=1e4, a_max=1e10, points=7)
        self.assertLess(summary.max_deviation, .05)
        self.assertLess(abs(rows[-1].ratio - 1), abs(rows[-3].ratio - 1))
        for row in rows:
            self.assertAlmostEqual(row.ratio, 1 + (math.log(4) - EULER_GAMMA) / math.log(row.A), places=3)

    def test_small_time_polynomial(self):
        rows, summary = ratio_sweep('thm2b', 'cauchy', 1, .5, a_min=10., a_max=1e4, points=4)
        self.assertLess(summary.max_deviation, .02)
        self.assertLess(abs(rows[-1].ratio - 1), abs(rows[-3].ratio - 1))

    def test_small_time_exponential(self):
        rows, summary = ratio_sweep('thm2c', 'gauss', 1, .5, a_min=10., a_max=1e3, points=5)
        self.assertTrue(summary.log_space)
        self.assertLessEqual(summary.max_deviation, .02)
        self.assertEqual(rows[-1].quadrature, 0.)
        self.assertLess(abs(rows[-1].log_deviation), .02)

    def test_stable_base(self):
        rows, summary = ratio_sweep('cor3b', None, 1, .5, gamma=.75, a_min=10., a_max=1e3, points=3)
        self.assertLess(summary.max_deviation, .05)


class SweepArgumentsTest(SimpleTestCase):
    def test_cases(self):
        self.assertEqual(CASES['cor1d'].theorem, 'thm2c')
        self.assertEqual(CASES['cor1b'].direction, -1)

    def test_unknown_case(self):
        with self.assertRaises(UncoveredCaseException):
            ratio_sweep('thm9', 'gauss', 1, .5)

    def test_kind_mismatch(self):
        with self.assertRaises(UncoveredCaseException):
            ratio_sweep('thm2c', 'cauchy', 1, .5, points=2)
        with self.assertRaises(UncoveredCaseException):
            ratio_sweep('thm2b', 'gauss', 1, .5, points=2)

    def test_grid(self):
        with self.assertRaises(DomainException):
            ratio_sweep('thm1a', 'gauss', 1, .5, a_min=10., a_max=1.)
        with self.assertRaises(DomainException):
            ratio_sweep('thm1a', 'gauss', 1, .5, points=1)

    def test_default_grid_follows_direction(self):
        rows, summary = ratio_sweep('thm1b', 'gauss', 1, .5, points=4)
        self.assertAlmostEqual(rows[0].A / 1e-4, 1., places=12)
        self.assertAlmostEqual(rows[-1].A / 1e-1, 1., places=12)
        self.assertEqual(summary.decade[0], 1e-4)
        rows, _ = ratio_sweep('thm1a', 'gauss', 1, .5, points=2)
        self.assertEqual([row.A for row in rows], [10., 1e4])

    def test_deterministic(self):
        first = ratio_sweep('thm2b', 'cauchy', 2, .7, a_min=10., a_max=100., points=3, workers=1)
        second = ratio_sweep('thm2b', 'cauchy', 2, .7, a_min=10., a_max=100., points=3, workers=3)
        self.assertEqual(first, second)


class OracleTest(SimpleTestCase):
    def test_half_stable_inverse_cauchy(self):
        kernel, law = as_profile('cauchy', 1), StableLaw(.5)
        for point in ((.1, 1.), (10., 1.), (1e3, 2.), (1e6, 1.)):
            quadrature = inverse_subordinated_density(kernel, law, point).value
            self.assertLess(abs(quadrature / half_stable_inverse_cauchy(point) - 1), 1e-6, point)

    def test_half_stable_inverse_cauchy_limit(self):
        kernel = as_profile('cauchy', 1)
        for A in (1e6, 1e10):
            ratio = half_stable_inverse_cauchy((A, 1.)) / invsub_asym_large_t(kernel, .5, (A, 1.)).value
            self.assertAlmostEqual(ratio, 1 + (math.log(4) - EULER_GAMMA) / math.log(A), places=5)
        with self.assertRaises(DivergenceException):
            half_stable_inverse_cauchy((1., 0.))

    def test_bessel(self):
        for B in (.5, 10., 300.):
            self.assertAlmostEqual(ib_quadrature(0, 1, 1, 1, B) / bessel_ib(B), 1., places=8)
