#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Base heat kernels in profile form

    p(t, x, y) = C1 t^(-d/alpha) F(C2 rho(x, y) t^(-1/alpha)),

with F of exponential type exp(-r^(alpha/(alpha-1))), of polynomial type
(1 + r^2)^(-(d+alpha)/2), or the radial profile of a symmetric
2gamma-stable process.
"""
import math
import logging
import functools
from collections import namedtuple

import numpy as np
from scipy import integrate, interpolate

from frackernel.core.exceptions import DomainException
from frackernel.core.special import INFINITE, gamma, log_gamma, beta_fn
from frackernel.utils import get_setting


logger = logging.getLogger(__name__)


class EvalPoint(namedtuple('EvalPoint', 't rho')):
    """
    Time t > 0 and distance rho >= 0.
    """
    __slots__ = ()

    def __new__(cls, t, rho=0.):
        t, rho = float(t), float(rho)
        if not t > 0:
            raise DomainException('EvalPoint', 't must be positive, got %r' % t)
        if not rho >= 0:
            raise DomainException('EvalPoint', 'rho must be non-negative, got %r' % rho)
        return super(EvalPoint, cls).__new__(cls, t, rho)


def _log1p_square(x):
    """
    log(1 + e^(2x)) without overflow.
    """
    if x > 0:
        return 2 * x + math.log1p(math.exp(-2 * x))
    return math.log1p(math.exp(2 * x))


# =======[ Profiles ]======

class Profile(object):
    """
    Base class for the profile functions F. Subclasses implement
    `log_value_at_log(x)` = log F(e^x), `at_zero` and `moment(p)`.
    """
    kind = None

    # Coefficient c of the far field F(r) ~ c r^(-(d+alpha)); None when F
    # decays faster than any power.
    far_field_coefficient = None

    def log_value(self, r):
        if r < 0:
            raise DomainException(self, 'r must be non-negative, got %r' % r)
        if r == 0:
            return math.log(self.at_zero)
        return self.log_value_at_log(math.log(r))

    def value(self, r):
        return math.exp(self.log_value(r))


class ExponentialProfile(Profile):
    kind = 'exponential'
    at_zero = 1.

    def __init__(self, alpha):
        alpha = float(alpha)
        if not alpha >= 2:
            raise DomainException('ExponentialProfile', 'alpha must be >= 2, got %r' % alpha)
        self.alpha = alpha
        self.exponent = alpha / (alpha - 1)

    def __repr__(self):
        return 'ExponentialProfile(alpha=%r)' % self.alpha

    def log_value_at_log(self, x):
        x = self.exponent * x
        if x > 709.:
            return -math.inf
        return -math.exp(x)

    def moment(self, p):
        if not p > 0:
            raise DomainException(self, 'p must be positive, got %r' % p)
        return (self.alpha - 1) / self.alpha * gamma(p * (self.alpha - 1) / self.alpha)


class PolynomialProfile(Profile):
    kind = 'polynomial'
    at_zero = 1.
    far_field_coefficient = 1.

    def __init__(self, d, alpha):
        d, alpha = float(d), float(alpha)
        if not (d > 0 and alpha > 0):
            raise DomainException('PolynomialProfile', 'd and alpha must be positive, got (%r, %r)' % (d, alpha))
        self.d = d
        self.alpha = alpha

    def __repr__(self):
        return 'PolynomialProfile(d=%r, alpha=%r)' % (self.d, self.alpha)

    def log_value_at_log(self, x):
        return -(self.d + self.alpha) / 2. * _log1p_square(x)

    def moment(self, p):
        if not p > 0:
            raise DomainException(self, 'p must be positive, got %r' % p)
        if p >= self.d + self.alpha:
            return INFINITE
        return .5 * beta_fn(p / 2., (self.d + self.alpha - p) / 2.)


class StableProfile(Profile):
    """
    F(r) = p_{2gamma}(1, r), the radial density at time 1 of the
    rotationally symmetric 2gamma-stable process in dimension d.

    Tabulated once on a log-grid by subordinating the Gauss kernel; outside
    the grid the small-r value is held and the far field is continued with
    its power law.
    """
    kind = 'stable'
    R_MIN = 1e-3
    R_MAX = 1e4

    def __init__(self, gamma, d, points=None):
        gamma, d = float(gamma), float(d)
        if not 0 < gamma < 1:
            raise DomainException('StableProfile', 'gamma must lie in (0, 1), got %r' % gamma)
        if not d > 0:
            raise DomainException('StableProfile', 'd must be positive, got %r' % d)
        self.gamma = gamma
        self.d = d
        self.alpha = 2 * gamma

        if points is None:
            points = int(get_setting('FRACKERNEL_STABLE_PROFILE_POINTS', 512))
        self._grid, self._values = _stable_profile_table(gamma, d, points)
        self._spline = interpolate.PchipInterpolator(self._grid, self._values)

    def __repr__(self):
        return 'StableProfile(gamma=%r, d=%r)' % (self.gamma, self.d)

    @property
    def at_zero(self):
        n, g = self.d, self.gamma
        return math.exp(log_gamma((n + 1) / 2.) + log_gamma(n / (2 * g)) - log_gamma(n)
                        - math.log(2 * g) - (n + 1) / 2. * math.log(math.pi))

    @property
    def far_field_coefficient(self):
        n, g = self.d, self.gamma
        return g * 4 ** g * gamma(n / 2. + g) / (math.pi ** (n / 2.) * gamma(1 - g))

    def log_value_at_log(self, x):
        if x <= self._grid[0]:
            return float(self._values[0])
        if x >= self._grid[-1]:
            return float(self._values[-1]) - (self.d + self.alpha) * (x - self._grid[-1])
        return float(self._spline(x))

    def moment(self, p):
        """
        int_0^inf s^(p-1) F(s) ds by quadrature of the table, with the
        power-law far field integrated in closed form.
        """
        if not p > 0:
            raise DomainException(self, 'p must be positive, got %r' % p)
        decay = self.d + self.alpha
        if p >= decay:
            return INFINITE

        x0, x1 = self._grid[0], self._grid[-1]
        head = math.exp(self._values[0] + p * x0) / p
        tail = math.exp(self._values[-1] + p * x1) / (decay - p)
        body, _ = integrate.quad(lambda x: math.exp(p * x + self.log_value_at_log(x)), x0, x1,
                                 epsrel=1e-10, epsabs=0, limit=400)
        return head + body + tail


@functools.lru_cache(maxsize=16)
def _stable_profile_table(gamma, d, points):
    # Imported here: transform depends on this module.
    from frackernel.core.stable import StableLaw
    from frackernel.core.transform import subordinated_density

    logger.debug('Tabulating the 2gamma-stable profile for gamma=%r, d=%r on %i points', gamma, d, points)
    kernel = as_profile('gauss', d)
    law = StableLaw(gamma)
    grid = np.linspace(math.log(StableProfile.R_MIN), math.log(StableProfile.R_MAX), points)
    values = np.array([subordinated_density(kernel, law, EvalPoint(1., math.exp(x))).log_value
                       for x in grid])
    return grid, values


def profile_value(profile, r):
    """
    F(r) for r >= 0.
    """
    return profile.value(r)


def profile_moment(profile, p):
    """
    int_0^inf s^(p-1) F(s) ds, or INFINITE.
    """
    return profile.moment(p)


# =======[ Kernels ]======

class ProfileKernel(object):
    """
    C1 t^(-d/alpha) F(C2 rho t^(-1/alpha)). Immutable.
    """
    def __init__(self, C1, C2, d, alpha, profile, name=None):
        C1, C2, d, alpha = float(C1), float(C2), float(d), float(alpha)
        if not (C1 > 0 and C2 > 0 and d > 0 and alpha > 0):
            raise DomainException('ProfileKernel', 'C1, C2, d and alpha must be positive')

        if profile.kind == 'exponential' and profile.alpha != alpha:
            raise DomainException('ProfileKernel', 'exponential profile with alpha=%r on a kernel with alpha=%r'
                                  % (profile.alpha, alpha))
        if profile.kind in ('polynomial', 'stable') and (profile.d, profile.alpha) != (d, alpha):
            raise DomainException('ProfileKernel', '%r does not match (d, alpha) = (%r, %r)' % (profile, d, alpha))

        self.C1 = C1
        self.C2 = C2
        self.d = d
        self.alpha = alpha
        self.profile = profile
        self.name = name or 'kernel'

    def __repr__(self):
        return 'ProfileKernel(%s, C1=%r, C2=%r, d=%r, alpha=%r, %r)' % (
                self.name, self.C1, self.C2, self.d, self.alpha, self.profile)

    def log_value(self, point):
        t, rho = point
        return (math.log(self.C1) - self.d / self.alpha * math.log(t)
                + self.profile.log_value(self.C2 * rho * t ** (-1. / self.alpha)))

    def value(self, point):
        return math.exp(self.log_value(point))


def gauss_kernel(point, d):
    """
    (4 pi t)^(-d/2) exp(-rho^2 / (4t)).
    """
    t, rho = point
    if not d > 0:
        raise DomainException('gauss_kernel', 'd must be positive, got %r' % d)
    return (4 * math.pi * t) ** (-d / 2.) * math.exp(-rho ** 2 / (4 * t))


def cauchy_constant(d):
    return math.pi ** (-(d + 1) / 2.) * gamma((d + 1) / 2.)


def cauchy_kernel(point, d):
    """
    c(d) t / (t^2 + rho^2)^((d+1)/2), the Poisson kernel.
    """
    t, rho = point
    if not d > 0:
        raise DomainException('cauchy_kernel', 'd must be positive, got %r' % d)
    return cauchy_constant(d) * t / (t ** 2 + rho ** 2) ** ((d + 1) / 2.)


def as_profile(which, d, gamma=None):
    """
    Profile form of a base kernel: 'gauss', 'cauchy' or 'stable'
    (the latter needs gamma in (0, 1)).
    """
    d = float(d)
    if which == 'gauss':
        return ProfileKernel((4 * math.pi) ** (-d / 2.), .5, d, 2., ExponentialProfile(2.), name='gauss')
    elif which == 'cauchy':
        return ProfileKernel(cauchy_constant(d), 1., d, 1., PolynomialProfile(d, 1.), name='cauchy')
    elif which == 'stable':
        if gamma is None or not 0 < gamma < 1:
            raise DomainException('as_profile', 'stable base needs gamma in (0, 1), got %r' % (gamma, ))
        return ProfileKernel(1., 1., d, 2 * gamma, StableProfile(gamma, d), name='stable')
    raise DomainException('as_profile', 'unknown base kernel %r' % (which, ))


# =======[ Moments of the base processes ]======

def levy_moment(alpha, n, kappa, t=1.):
    """
    E|X_t|^kappa for the rotationally symmetric alpha-stable process in
    dimension n; INFINITE outside (-n, alpha).
    """
    if not (0 < alpha < 2 and n > 0 and t > 0):
        raise DomainException('levy_moment', 'need 0 < alpha < 2, n > 0, t > 0')
    if not -n < kappa < alpha:
        return INFINITE
    return math.exp(kappa * math.log(2) + log_gamma((n + kappa) / 2.) + log_gamma(1 - kappa / alpha)
                    - log_gamma(n / 2.) - log_gamma(1 - kappa / 2.) + kappa / alpha * math.log(t))


def chi_moment(n, kappa, T):
    """
    E|B_T|^kappa = 2^kappa Gamma((n+kappa)/2) / Gamma(n/2) T^(kappa/2) for
    the Brownian motion generated by the Laplacian.
    """
    if not (n > 0 and T > 0):
        raise DomainException('chi_moment', 'need n > 0 and T > 0')
    if not kappa > -n:
        return INFINITE
    return math.exp(kappa * math.log(2) + log_gamma((n + kappa) / 2.) - log_gamma(n / 2.)
                    + kappa / 2. * math.log(T))


def fractional_laplacian_kernel_constant(d, beta):
    """
    c(d, beta) = beta 4^beta pi^(-1-d/2) sin(pi beta) Gamma((d+2beta)/2) Gamma(beta).
    """
    if not (d > 0 and 0 < beta < 1):
        raise DomainException('fractional_laplacian_kernel_constant', 'need d > 0 and beta in (0, 1)')
    return (beta * 4 ** beta * math.pi ** (-1 - d / 2.) * math.sin(math.pi * beta)
            * gamma((d + 2 * beta) / 2.) * gamma(beta))


def space_fractional_kernel(point, d, beta):
    """
    c(d, beta) t / (rho^2 + t^(1/beta))^((d+2beta)/2); comparable to the
    2beta-stable kernel, with the same far field.
    """
    t, rho = point
    return (fractional_laplacian_kernel_constant(d, beta) * t
            / (rho ** 2 + t ** (1. / beta)) ** ((d + 2 * beta) / 2.))
