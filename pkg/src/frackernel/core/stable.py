#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
One-sided beta-stable subordinator: E exp(-r S_t) = exp(-t r^beta).

The density of S_1 is computed from Kanter's angular representation

    S_1 = (A(U) / E)^((1-beta)/beta),   U ~ Unif(0, pi), E ~ Exp(1),

    A(u) = sin(beta u)^(beta/(1-beta)) sin((1-beta) u) / sin(u)^(1/(1-beta)),

which gives, with h(u) = A(u) s^(-beta/(1-beta)),

    p(s) = beta / ((1-beta) pi s) * int_0^pi h(u) exp(-h(u)) du
    G(s) = 1/pi * int_0^pi exp(-h(u)) du.

For large s both are summed from the convergent series in x = s^-beta

    p(s)     = 1/pi sum_k (-1)^(k+1) Gamma(k beta + 1) / k! sin(pi k beta) s^(-k beta - 1)
    1 - G(s) = 1/pi sum_k (-1)^(k+1) Gamma(k beta) / k! sin(pi k beta) s^(-k beta)
"""
import enum
import math
import logging
import functools

import numpy as np
from numpy.polynomial import polynomial
from scipy import optimize, interpolate, special
from scipy.optimize import brentq

from frackernel.core.context import density_range
from frackernel.core.exceptions import DomainException, ConvergenceException
from frackernel.core.quadrature import quad, safe_exp
from frackernel.core.special import INFINITE, gamma, log_gamma


logger = logging.getLogger(__name__)

# Spacing of the log-grid backing `log_density_fast` for beta >= 1/2; log S_1
# spreads over a range of order 1/beta, and the spacing grows with it.
TABLE_STEP = .025

# Beyond this value of h(0+) the density is its zero-side asymptotic form, whose
# relative error is O(1/h(0+)).
LAPLACE_SWITCH = 1e8

# The fast density holds the zero-side form below the point where h(0+) reaches
# this value (or below the lower end of the density range, if smaller).
TABLE_H0 = 1e4

# The series are summed where x = s^-beta is below this, and always above the
# upper end of the density range.
SERIES_SWITCH = .25
SERIES_TERMS = 400

# Relative tolerance of the angular integrals.
ANGULAR_TOL = 1e-10


class Regime(enum.Enum):
    ZERO = 'zero'
    INFINITY = 'infinity'


class StableLaw(object):
    """
    Law of a beta-stable subordinator, 0 < beta < 1. Immutable.
    """
    def __init__(self, beta):
        beta = float(beta)
        if not 0 < beta < 1:
            raise DomainException('StableLaw', 'beta must lie in (0, 1), got %r' % beta)
        self.beta = beta

        # h(u) = A(u) * s^-q
        self._q = beta / (1 - beta)
        self._log_a0 = self._q * math.log(beta) + math.log(1 - beta)

        # log s where h(0+) = LAPLACE_SWITCH, and where the series take over
        self._y_laplace = self._y_at_h0(LAPLACE_SWITCH)
        self._y_series = -math.log(SERIES_SWITCH) / beta

    def __repr__(self):
        return 'StableLaw(beta=%r)' % self.beta

    def __eq__(self, other):
        return isinstance(other, StableLaw) and other.beta == self.beta

    def __hash__(self):
        return hash(('StableLaw', self.beta))

    # =======[ Angular representation ]======

    def log_kanter(self, u):
        """
        log A(u) on (0, pi); increasing from log A(0+) to +infinity.
        """
        b = self.beta
        return (self._q * math.log(math.sin(b * u)) + math.log(math.sin((1 - b) * u))
                - math.log(math.sin(u)) / (1 - b))

    def _log_kanter_near_pi(self, v):
        # log A(pi - v), with sin(pi - v) taken as sin(v)
        b = self.beta
        u = math.pi - v
        return (self._q * math.log(math.sin(b * u)) + math.log(math.sin((1 - b) * u))
                - math.log(math.sin(v)) / (1 - b))

    def _y_at_h0(self, h0):
        return (self._log_a0 - math.log(h0)) / self._q

    def _crossing(self, log_eps):
        """
        Angle where h(u) = 1, or None when h > 1 on the whole interval.
        """
        if self._log_a0 + log_eps >= 0:
            return None
        f = lambda u: self.log_kanter(u) + log_eps
        low, high = 1e-12, math.pi - 1e-12
        if f(high) <= 0:
            return None
        return brentq(f, low, high, xtol=1e-14)

    def _break_points(self, log_eps):
        u_star = self._crossing(log_eps)
        if u_star is not None:
            return [u_star]

        # Peak at u = 0 with width ~ 1/sqrt(h0 beta); log A(u) ~ log A(0+) + beta u^2 / 2.
        h0 = safe_exp(self._log_a0 + log_eps)
        width = 1. / math.sqrt(h0 * self.beta)
        return [w for w in (width, 4 * width, 16 * width) if w < 3.]

    # =======[ Density ]======

    def _check(self, s):
        if not s > 0:
            raise DomainException(self, 'argument must be positive, got %r' % s)

    def _near_pi(self, log_eps, u_star):
        """
        int_{u_star}^pi h exp(-h) du in w = log(pi - u); h grows without
        bound as u -> pi, so the integrand is cut where h > 750.
        """
        w_star = math.log(math.pi - u_star)

        def integrand(w):
            log_h = self._log_kanter_near_pi(math.exp(w)) + log_eps
            if log_h > 700:
                return 0.
            return math.exp(log_h - math.exp(log_h) + w)

        step = 1.
        while self._log_kanter_near_pi(math.exp(w_star - step)) + log_eps < math.log(750.):
            step *= 2
            if step >= 64:
                break
        value, _ = quad(integrand, w_star - step, w_star, ANGULAR_TOL, 0., 200)
        return value

    def _log_density_quad(self, s):
        log_eps = -self._q * math.log(s)
        h0 = safe_exp(self._log_a0 + log_eps)
        if h0 > LAPLACE_SWITCH:
            return self._log_asym_zero(math.log(s))
        shift = h0 if h0 > 1 else 0.

        def integrand(u):
            log_h = self.log_kanter(u) + log_eps
            if log_h > 700:
                return 0.
            return math.exp(log_h - math.exp(log_h) + shift)

        u_star = self._crossing(log_eps)
        if u_star is None:
            value, _ = quad(integrand, 0, math.pi, ANGULAR_TOL, 0., 200, points=self._break_points(log_eps))
        else:
            # h < 1 left of the crossing; right of it the mass sits in a spike
            # that narrows towards pi as s grows.
            value, _ = quad(integrand, 0, u_star, ANGULAR_TOL, 0., 200)
            value += self._near_pi(log_eps, u_star)
        return (math.log(self.beta / ((1 - self.beta) * math.pi)) - math.log(s)
                - shift + math.log(value))

    def _use_series(self, y, upper=None):
        if upper is None:
            upper = density_range()[1]
        return y >= self._y_series or y > math.log(upper)

    def _log_density_series(self, y):
        x = math.exp(-self.beta * y)
        total = float(polynomial.polyval(x, _series_coefficients(self.beta)[0]))
        if not total > 0:
            return self._log_density_quad(math.exp(y))
        return self._log_asym_infinity(y) + math.log(total)

    def log_density(self, s):
        """
        log p_beta(s); finite where the density itself underflows.
        """
        self._check(s)
        y = math.log(s)
        if self._use_series(y):
            return self._log_density_series(y)
        return self._log_density_quad(s)

    def density(self, s):
        return math.exp(self.log_density(s))

    def _table_span(self, lower, upper):
        y_lo = max(min(math.log(lower), self._y_at_h0(TABLE_H0)), self._y_laplace)
        y_hi = min(math.log(upper), self._y_series)
        return y_lo, y_hi

    def log_density_fast(self, y):
        """
        log p_beta(e^y) from a quintic spline of log(1 + phi) on a log-grid,
        for use inside other quadratures. The series are used on the right of
        the grid, the zero-side form on its left.
        """
        lower, upper = density_range()
        if self._use_series(y, upper):
            return self._log_density_series(y)
        log_zero = self._log_asym_zero(y)
        y_lo, y_hi = self._table_span(lower, upper)
        if y < y_lo:
            return log_zero
        return log_zero + float(_density_table(self.beta, y_lo, y_hi)(y))

    @property
    def mode(self):
        """
        Location of the maximum of p_beta.
        """
        return _mode(self.beta)

    # =======[ Distribution function ]======

    def _angular_integral(self, x, survival):
        log_eps = -self._q * math.log(x)
        if survival:
            integrand = lambda u: -math.expm1(-safe_exp(self.log_kanter(u) + log_eps))
        else:
            integrand = lambda u: math.exp(-safe_exp(self.log_kanter(u) + log_eps))
        value, _ = quad(integrand, 0, math.pi, ANGULAR_TOL, 1e-15, 200, points=self._break_points(log_eps))
        return min(max(value / math.pi, 0.), 1.)

    def survival(self, x):
        """
        1 - G_beta(x), without cancellation for large x.
        """
        if isinstance(x, np.ndarray):
            return _on_log_grid(self.survival, x, lambda x: x == 0, 1., 0.)
        if x < 0:
            raise DomainException(self, 'x must be non-negative, got %r' % x)
        if x == 0:
            return 1.
        if x == math.inf:
            return 0.
        if self._use_series(math.log(x)):
            z = x ** -self.beta
            total = float(polynomial.polyval(z, _series_coefficients(self.beta)[1]))
            return min(max(z / gamma(1 - self.beta) * total, 0.), 1.)
        return self._angular_integral(x, survival=True)

    def cdf(self, x):
        """
        G_beta(x) = P(S_1 <= x).
        """
        if isinstance(x, np.ndarray):
            return _on_log_grid(self.cdf, x, lambda x: x == 0, 0., 1.)
        if x < 0:
            raise DomainException(self, 'x must be non-negative, got %r' % x)
        if x == 0:
            return 0.
        tail = self.survival(x)
        if tail < .5:
            return 1. - tail
        return self._angular_integral(x, survival=False)

    def inverse_cdf_time(self, t, s):
        """
        P(S_t^{-1} <= s) = 1 - G_beta(s^(-1/beta) t).
        """
        if not t > 0:
            raise DomainException(self, 't must be positive, got %r' % t)
        if isinstance(s, np.ndarray):
            if np.any(s < 0):
                raise DomainException(self, 's must be non-negative')
            with np.errstate(divide='ignore'):
                x = np.where(s > 0, t * np.power(np.where(s > 0, s, 1.), -1. / self.beta), np.inf)
            return self.survival(x)
        if s < 0:
            raise DomainException(self, 's must be non-negative, got %r' % s)
        if s == 0:
            return 0.
        if s == math.inf:
            return 1.
        return self.survival(t * s ** (-1. / self.beta))

    # =======[ Moments and asymptotics ]======

    def moment(self, kappa, t=1.):
        """
        E S_t^kappa = Gamma(1 - kappa/beta) / Gamma(1 - kappa) t^(kappa/beta);
        INFINITE for kappa >= beta.
        """
        if not t > 0:
            raise DomainException(self, 't must be positive, got %r' % t)
        if kappa >= self.beta:
            return INFINITE
        return math.exp(log_gamma(1 - kappa / self.beta) - log_gamma(1 - kappa)
                        + kappa / self.beta * math.log(t))

    def _log_asym_zero(self, y):
        b = self.beta
        exponent = self._q * (math.log(b) - y)
        if exponent > 709.:
            return -math.inf
        return (-.5 * math.log(2 * math.pi * (1 - b)) + math.log(b) / (2 * (1 - b))
                - (2 - b) / (2 * (1 - b)) * y - (1 - b) * math.exp(exponent))

    def _log_asym_infinity(self, y):
        b = self.beta
        return math.log(b) - log_gamma(1 - b) - (b + 1) * y

    def log_density_asym(self, s, regime):
        self._check(s)
        if Regime(regime) is Regime.ZERO:
            return self._log_asym_zero(math.log(s))
        return self._log_asym_infinity(math.log(s))

    def density_asym(self, s, regime):
        """
        Leading-order form of p_beta at zero or at infinity.
        """
        return math.exp(self.log_density_asym(s, regime))

    def correction_phi(self, s):
        """
        phi_beta(s) = p_beta(s) / asym_zero(s) - 1.
        """
        self._check(s)
        return math.expm1(self.log_density(s) - self.log_density_asym(s, Regime.ZERO))

    def correction_psi(self, s):
        """
        psi_beta(s) = p_beta(s) / asym_infinity(s) - 1.
        """
        self._check(s)
        return math.expm1(self.log_density(s) - self.log_density_asym(s, Regime.INFINITY))


@functools.lru_cache(maxsize=64)
def _series_coefficients(beta):
    """
    Coefficients of the large-s series of the density and of the survival
    function, in powers of x = s^-beta and normalised by the leading term.
    """
    k = np.arange(1, SERIES_TERMS + 1, dtype=float)
    sign = np.where(k % 2 == 1, 1., -1.) * np.sin(math.pi * k * beta) / math.sin(math.pi * beta)
    density = sign * np.exp(special.gammaln(k * beta + 1) - special.gammaln(k + 1) - special.gammaln(beta + 1))
    survival = sign * np.exp(special.gammaln(k * beta) - special.gammaln(k + 1) - special.gammaln(beta))
    return density, survival


@functools.lru_cache(maxsize=64)
def _density_table(beta, y_lo, y_hi):
    law = StableLaw(beta)
    step = TABLE_STEP * max(1., .5 / beta)
    logger.debug('Building density table for %r on log s in [%g, %g]', law, y_lo, y_hi)
    ys = np.linspace(y_lo, y_hi, int(math.ceil((y_hi - y_lo) / step)) + 1)
    values = [law._log_density_quad(math.exp(y)) - law._log_asym_zero(y) for y in ys]
    return interpolate.make_interp_spline(ys, values, k=5)


@functools.lru_cache(maxsize=64)
def _mode(beta):
    law = StableLaw(beta)
    f = lambda y: -law.log_density(math.exp(y))
    # log S_1 spreads over a range of order 1/beta
    width = 8. / beta
    ys = np.linspace(-width, width, 121)
    values = [f(y) for y in ys]
    i = int(np.argmin(values))
    if i in (0, len(ys) - 1):
        raise ConvergenceException('no interior maximum of the density on log s in [%g, %g]' % (-width, width))
    found = optimize.minimize_scalar(f, bounds=(ys[i - 1], ys[i + 1]), method='bounded',
                                     options={'xatol': 1e-10})
    return math.exp(found.x)


def _on_log_grid(function, x, is_low_end, low_value, high_value, per_unit=40, limit=3000):
    """
    Evaluate a monotone function of x > 0 on many points: exact values on a
    log-grid spanning the data, monotone (PCHIP) interpolation in between.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x < 0) or np.any(np.isnan(x)):
        raise DomainException(function.__name__, 'arguments must be non-negative')

    result = np.empty_like(x)
    low = is_low_end(x)
    high = np.isinf(x)
    inner = ~low & ~high
    result[low] = low_value
    result[high] = high_value

    if np.any(inner):
        y = np.log(x[inner])
        y_min, y_max = float(y.min()), float(y.max())
        if y_max - y_min < 1e-12:
            result[inner] = function(float(np.exp(y_min)))
        else:
            n = int(min(max(per_unit * (y_max - y_min), 64), limit))
            grid = np.linspace(y_min, y_max, n)
            values = np.array([function(float(np.exp(g))) for g in grid])
            spline = interpolate.PchipInterpolator(grid, values)
            result[inner] = np.clip(spline(y), 0., 1.)
    return result
