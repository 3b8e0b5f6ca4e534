import math

import numpy as np

from scipy import integrate

from django.test import SimpleTestCase

from frackernel.core.exceptions import DomainException
from frackernel.core.kernels import (EvalPoint, ExponentialProfile, PolynomialProfile, ProfileKernel, as_profile,
                                     profile_value, profile_moment, gauss_kernel, cauchy_kernel, levy_moment,
                                     chi_moment, fractional_laplacian_kernel_constant, space_fractional_kernel)
from frackernel.core.special import INFINITE, gamma, surface_area
from frackernel.core.stable import StableLaw


class EvalPointTest(SimpleTestCase):
    def test_validation(self):
        self.assertEqual(EvalPoint(1, 2), (1., 2.))
        with self.assertRaises(DomainException):
            EvalPoint(0., 1.)
        with self.assertRaises(DomainException):
            EvalPoint(1., -1.)


class ProfileTest(SimpleTestCase):
    def test_values(self):
        self.assertEqual(profile_value(ExponentialProfile(2), 0.), 1.)
        self.assertAlmostEqual(profile_value(ExponentialProfile(2), 1.), math.exp(-1), places=15)
        self.assertAlmostEqual(profile_value(PolynomialProfile(1, 1), 1.), .5, places=15)

    def test_far_polynomial_does_not_overflow(self):
        profile = PolynomialProfile(3, 1)
        self.assertAlmostEqual(profile.log_value(1e200), -4 * 200 * math.log(10), places=6)

    def test_moments(self):
        self.assertEqual(profile_moment(PolynomialProfile(1, 1), 2.), INFINITE)
        self.assertAlmostEqual(profile_moment(ExponentialProfile(2), 1.), math.sqrt(math.pi) / 2, places=14)
        self.assertAlmostEqual(profile_moment(PolynomialProfile(1, 1), 1.5),
                               .5 * math.pi / math.sin(math.pi / 4), places=13)

    def test_exponential_moment_by_quadrature(self):
        profile = ExponentialProfile(3)
        value, _ = integrate.quad(lambda s: s ** 1.5 * profile.value(s), 0, math.inf)
        self.assertAlmostEqual(profile.moment(2.5) / value, 1., places=9)

    def test_decreasing(self):
        rng = np.random.default_rng(11)
        for profile in (ExponentialProfile(2), ExponentialProfile(3), PolynomialProfile(2, 1.5)):
            for a, b in np.sort(10 ** rng.uniform(-3, 2, size=(100, 2)), axis=1):
                self.assertGreaterEqual(profile_value(profile, a), profile_value(profile, b), (profile, a, b))

    def test_polynomial_moment_by_quadrature(self):
        for d, alpha in ((1, 1), (3, 2)):
            profile = PolynomialProfile(d, alpha)
            for p in (.5, 1., 1.5):
                value, _ = integrate.quad(lambda x: math.exp(p * x + profile.log_value_at_log(x)), -100, 100,
                                          epsabs=0, epsrel=1e-12, limit=200)
                self.assertAlmostEqual(profile_moment(profile, p) / value, 1., places=8)

    def test_domain(self):
        with self.assertRaises(DomainException):
            ExponentialProfile(1.5)
        with self.assertRaises(DomainException):
            profile_value(ExponentialProfile(2), -1.)
        with self.assertRaises(DomainException):
            profile_moment(ExponentialProfile(2), 0.)


class BaseKernelTest(SimpleTestCase):
    def test_gauss(self):
        self.assertAlmostEqual(gauss_kernel((1., 0.), 1), 0.28209479177387814, places=15)
        self.assertAlmostEqual(gauss_kernel((.5, 1.), 2), math.exp(-.5) / (2 * math.pi), places=15)

    def test_gauss_normalization(self):
        value, _ = integrate.quad(lambda r: surface_area(3) * r ** 2 * gauss_kernel((.7, r), 3), 0, math.inf,
                                  epsabs=0, epsrel=1e-12)
        self.assertAlmostEqual(value, 1., places=8)

    def test_cauchy(self):
        self.assertAlmostEqual(cauchy_kernel((1., 0.), 1), 1 / math.pi, places=15)
        self.assertAlmostEqual(cauchy_kernel((1., 1.), 1), 1 / (2 * math.pi), places=15)

    def test_cauchy_normalization(self):
        value, _ = integrate.quad(lambda r: surface_area(2) * r * cauchy_kernel((2., r), 2), 0, math.inf,
                                  epsabs=0, epsrel=1e-12, limit=200)
        self.assertAlmostEqual(value, 1., places=8)

    def test_profile_forms(self):
        self.assertAlmostEqual(as_profile('gauss', 1).value((1., 0.)), 0.28209479177387814, places=14)
        for point in ((.3, 2.), (1., 0.), (4., .1)):
            self.assertAlmostEqual(as_profile('gauss', 2).value(point) / gauss_kernel(point, 2), 1., places=13)
        self.assertAlmostEqual(as_profile('cauchy', 2).value((2., 3.)) / cauchy_kernel((2., 3.), 2), 1., places=14)

    def test_profile_forms_on_a_grid(self):
        points = [(t, rho) for t in np.logspace(-2, 2, 5) for rho in np.logspace(-2, 2, 10)]
        for d in (1, 3):
            gauss, cauchy = as_profile('gauss', d), as_profile('cauchy', d)
            for point in points:
                t, rho = point
                expected = -d / 2. * math.log(4 * math.pi * t) - rho * rho / (4 * t)
                self.assertAlmostEqual(gauss.log_value(point), expected, delta=1e-12 * max(1., abs(expected)))
                self.assertAlmostEqual(cauchy.value(point) / cauchy_kernel(point, d), 1., places=12)

    def test_stable_profile_far_field(self):
        kernel = as_profile('stable', 1, gamma=.75)
        r = 1e3
        ratio = kernel.value((1., r)) / (kernel.profile.far_field_coefficient * r ** -2.5)
        self.assertAlmostEqual(ratio, 1., delta=.02)

    def test_stable_profile_is_cauchy_at_one_half(self):
        kernel = as_profile('stable', 1, gamma=.5)
        self.assertAlmostEqual(kernel.value((1., 1.)) * 2 * math.pi, 1., delta=2e-3)
        self.assertAlmostEqual(kernel.profile.at_zero, 1 / math.pi, places=14)
        self.assertAlmostEqual(kernel.profile.far_field_coefficient, 1 / math.pi, places=14)

    def test_stable_profile_moment(self):
        # Cauchy in d=1: int_0^inf s^(p-1) / (pi (1 + s^2)) ds = 1 / (2 sin(pi p / 2))
        profile = as_profile('stable', 1, gamma=.5).profile
        self.assertAlmostEqual(profile.moment(.5), 1 / (2 * math.sin(math.pi / 4)), delta=5e-3)
        self.assertEqual(profile.moment(2.), INFINITE)

    def test_mismatched_profile(self):
        with self.assertRaises(DomainException):
            ProfileKernel(1., 1., 2., 1., PolynomialProfile(1, 1))
        with self.assertRaises(DomainException):
            ProfileKernel(1., 1., 1., 2., ExponentialProfile(3))
        with self.assertRaises(DomainException):
            as_profile('stable', 1)
        with self.assertRaises(DomainException):
            as_profile('levy', 1)


class MomentTest(SimpleTestCase):
    def test_levy_moment(self):
        self.assertAlmostEqual(levy_moment(1.3, 2, 0.), 1., places=14)
        self.assertAlmostEqual(levy_moment(1, 2, -1), 1., places=14)
        self.assertAlmostEqual(levy_moment(1, 1, .5), math.sqrt(2), places=14)
        self.assertEqual(levy_moment(1, 1, 1.), INFINITE)
        self.assertEqual(levy_moment(1, 1, -1.), INFINITE)

    def test_levy_moment_scaling(self):
        self.assertAlmostEqual(levy_moment(.8, 3, .4, t=5.) / levy_moment(.8, 3, .4), 5 ** .5, places=13)

    def test_levy_moment_is_subordinated_chi_moment(self):
        # X_t = B_{S_t} with S an alpha/2-stable subordinator
        for alpha, n, kappa, t in ((1., 1, .5, 1.), (1.5, 3, -1., 2.), (.6, 2, .3, .5)):
            expected = chi_moment(n, kappa, 1.) * StableLaw(alpha / 2).moment(kappa / 2, t=t)
            self.assertAlmostEqual(levy_moment(alpha, n, kappa, t=t) / expected, 1., places=12)

    def test_chi_moment(self):
        # E|B_T|^2 = 2 n T for the Laplacian-generated motion
        self.assertAlmostEqual(chi_moment(3, 2., .5), 3., places=13)
        self.assertAlmostEqual(chi_moment(1, -.5, 1.), 2 ** -.5 * gamma(.25) / gamma(.5), places=13)
        self.assertEqual(chi_moment(2, -2., 1.), INFINITE)


class SpaceFractionalTest(SimpleTestCase):
    def test_constant_matches_far_field(self):
        # c(d, beta) coincides with the 2beta-stable far field constant
        for d, beta in ((3, .3), (1, .5), (2, .8)):
            far = beta * 4 ** beta * gamma(d / 2. + beta) / (math.pi ** (d / 2.) * gamma(1 - beta))
            self.assertAlmostEqual(fractional_laplacian_kernel_constant(d, beta) / far, 1., places=12)

    def test_kernel(self):
        # d=1, beta=1/2 is the Cauchy kernel
        for point in ((1., 0.), (2., 3.)):
            self.assertAlmostEqual(space_fractional_kernel(point, 1, .5) / cauchy_kernel(point, 1), 1., places=13)
