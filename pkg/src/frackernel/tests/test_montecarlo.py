import math

import numpy as np

from django.test import SimpleTestCase

from frackernel.core.exceptions import DomainException, DegenerateSampleException
from frackernel.core.kernels import levy_moment, chi_moment
from frackernel.core.montecarlo import (Mode, SampleBatch, sample_subordinator, sample_inverse_subordinator,
                                        sample_timechanged, base_radius, moment_estimate, compare_ecdf,
                                        ks_critical_value)
from frackernel.core.special import gamma
from frackernel.core.stable import StableLaw


class SubordinatorTest(SimpleTestCase):
    def assertWithinErrors(self, estimate, expected, errors=4):
        self.assertLess(abs(estimate.mean - expected), errors * estimate.standard_error,
                        '%r vs %r' % (estimate, expected))

    def test_negative_half_moment(self):
        batch = sample_subordinator(StableLaw(.5), 1., 10 ** 6, seed=1)
        self.assertWithinErrors(moment_estimate(batch, -.5), 2 / math.sqrt(math.pi))

    def test_moments(self):
        for i, beta in enumerate((.3, .5, .8)):
            law = StableLaw(beta)
            batch = sample_subordinator(law, 1., 10 ** 6, seed=100 + i)
            for kappa in (-1., -.5):
                self.assertWithinErrors(moment_estimate(batch, kappa), law.moment(kappa))

    def test_positive(self):
        batch = sample_subordinator(StableLaw(.9), 2., 10 ** 4, seed=5)
        self.assertTrue(np.all(batch.values > 0))
        self.assertEqual(batch.n, 10 ** 4)
        self.assertEqual(batch.seed, 5)

    def test_against_distribution(self):
        law = StableLaw(.7)
        batch = sample_subordinator(law, 1., 10 ** 5, seed=2)
        report = compare_ecdf(batch, law.cdf)
        self.assertLess(report.ks_statistic, ks_critical_value(batch.n))

    def test_against_distribution_at_other_time(self):
        law, t = StableLaw(.4), 3.
        batch = sample_subordinator(law, t, 10 ** 5, seed=7)
        report = compare_ecdf(batch, lambda x: law.cdf(x * t ** (-1 / law.beta)))
        self.assertLess(report.ks_statistic, ks_critical_value(batch.n))

    def test_scaling(self):
        law = StableLaw(.6)
        one = sample_subordinator(law, 1., 1000, seed=9)
        other = sample_subordinator(law, 8., 1000, seed=9)
        np.testing.assert_allclose(other.values, 8. ** (1 / .6) * one.values, rtol=1e-12)


class InverseSubordinatorTest(SimpleTestCase):
    def test_distribution_at_one(self):
        n = 10 ** 5
        batch = sample_inverse_subordinator(StableLaw(.5), 1., n, seed=3)
        fraction = np.mean(batch.values <= 1.)
        self.assertLess(abs(fraction - 0.5205), 4 * math.sqrt(.52 * .48 / n))

    def test_against_distribution(self):
        law = StableLaw(.5)
        batch = sample_inverse_subordinator(law, 1., 10 ** 5, seed=4)
        report = compare_ecdf(batch, lambda s: law.inverse_cdf_time(1., s))
        self.assertLess(report.ks_statistic, ks_critical_value(batch.n))

    def test_mean(self):
        batch = sample_inverse_subordinator(StableLaw(.5), 4., 10 ** 6, seed=6)
        estimate = moment_estimate(batch, 1.)
        self.assertAlmostEqual(2 / gamma(1.5), 2.2568, places=4)
        self.assertLess(abs(estimate.mean - 2 / gamma(1.5)), 4 * estimate.standard_error)


class TimeChangedTest(SimpleTestCase):
    def test_subordinated_gauss_is_cauchy(self):
        batch = sample_timechanged('gauss', 1, StableLaw(.5), Mode.SUBORDINATE, 1., 10 ** 6, seed=7)
        self.assertAlmostEqual(np.median(batch.values), 1., delta=.02)

    def test_levy_moment(self):
        batch = sample_timechanged('gauss', 2, StableLaw(.5), 'sub', 1., 10 ** 6, seed=8)
        estimate = moment_estimate(batch, -1.)
        self.assertLess(abs(estimate.mean - levy_moment(1., 2, -1.)), 4 * estimate.standard_error)

    def test_cauchy_route(self):
        # Cauchy at a 1/2-stable time is Gauss at a 1/4-stable time
        batch = sample_timechanged('cauchy', 1, StableLaw(.5), 'sub', 1., 10 ** 5, seed=10)
        estimate = moment_estimate(batch, -.25)
        expected = chi_moment(1, -.25, 1.) * gamma(1.5) / gamma(1.125)
        self.assertLess(abs(estimate.mean - expected), 4 * estimate.standard_error)

    def test_inverse_radii(self):
        batch = sample_timechanged('cauchy', 3, StableLaw(.4), 'invsub', 2., 10 ** 4, seed=11)
        self.assertTrue(np.all(batch.values >= 0))
        self.assertIn('invsub', batch.law_tag)

    def test_chi_scaling(self):
        rng = np.random.default_rng(12)
        radii = base_radius('gauss', 3, np.full(10 ** 6, 2.), rng)
        batch = SampleBatch(radii, 'chi', 12, len(radii))
        for kappa in (1., -1.):
            estimate = moment_estimate(batch, kappa)
            self.assertLess(abs(estimate.mean - chi_moment(3, kappa, 2.)), 4 * estimate.standard_error)


class ReproducibilityTest(SimpleTestCase):
    def test_same_seed(self):
        law = StableLaw(.5)
        first = sample_timechanged('gauss', 2, law, 'invsub', 1., 1000, seed=2 ** 63)
        second = sample_timechanged('gauss', 2, law, 'invsub', 1., 1000, seed=2 ** 63)
        self.assertTrue(np.array_equal(first.values, second.values))
        self.assertTrue(np.array_equal(sample_subordinator(law, 1., 50, 1).values,
                                       sample_subordinator(law, 1., 50, 1).values))

    def test_other_seed(self):
        law = StableLaw(.5)
        self.assertFalse(np.array_equal(sample_subordinator(law, 1., 50, 1).values,
                                        sample_subordinator(law, 1., 50, 2).values))


class ErrorTest(SimpleTestCase):
    def test_arguments(self):
        law = StableLaw(.5)
        with self.assertRaises(DomainException):
            sample_subordinator(law, 1., 0, 1)
        with self.assertRaises(DomainException):
            sample_inverse_subordinator(law, 0., 10, 1)
        with self.assertRaises(DomainException):
            sample_subordinator(law, 1., 10, -1)
        with self.assertRaises(DomainException):
            sample_timechanged('levy', 1, law, 'sub', 1., 10, 1)
        with self.assertRaises(ValueError):
            sample_timechanged('gauss', 1, law, 'both', 1., 10, 1)

    def test_batch_length(self):
        with self.assertRaises(DomainException):
            SampleBatch([1., 2.], 'short', 0, 3)

    def test_single_value(self):
        batch = sample_subordinator(StableLaw(.5), 1., 1, 0)
        with self.assertRaises(DegenerateSampleException):
            moment_estimate(batch, 1.)


class EcdfTest(SimpleTestCase):
    def test_own_distribution(self):
        batch = sample_subordinator(StableLaw(.5), 1., 1000, seed=13)
        x = np.sort(batch.values)
        report = compare_ecdf(batch, lambda s: np.searchsorted(x, s, side='right') / float(len(x)))
        self.assertEqual(report.ks_statistic, 0.)
        self.assertEqual(report.n, 1000)
        self.assertEqual(len(report.grid), 101)

    def test_distinguishes_laws(self):
        batch = sample_subordinator(StableLaw(.3), 1., 10 ** 4, seed=14)
        report = compare_ecdf(batch, StableLaw(.7).cdf)
        self.assertGreater(report.ks_statistic, ks_critical_value(batch.n))

    def test_small_and_degenerate(self):
        with self.assertRaises(DomainException):
            compare_ecdf(SampleBatch(np.arange(1., 51.), 'small', 0, 50), lambda s: s)
        with self.assertRaises(DegenerateSampleException):
            compare_ecdf(SampleBatch(np.ones(200), 'ones', 0, 200), lambda s: s)

    def test_critical_value(self):
        self.assertAlmostEqual(ks_critical_value(10 ** 4), 0.016276, places=5)
        with self.assertRaises(DomainException):
            ks_critical_value(100, level=1.)
