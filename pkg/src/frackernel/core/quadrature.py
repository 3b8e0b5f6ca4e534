#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Adaptive Gauss-Kronrod quadrature (QUADPACK through scipy) with the error
policy of the package, and a log-space integrator for the unimodal
integrands that show up after the substitution s = e^y.
"""
import math
import logging

import numpy as np
from scipy import integrate, optimize

from frackernel.core.exceptions import ConvergenceException


logger = logging.getLogger(__name__)

# Integrand values below exp(-CUTOFF) times the peak are dropped.
CUTOFF = 60.

# Accepted relative error when QUADPACK reports roundoff.
ROUNDOFF_ACCEPT = 1e-8


def safe_exp(x):
    if x > 709.:
        return math.inf
    return math.exp(x)


def quad(f, a, b, rel_tol, abs_tol, limit, points=None):
    """
    scipy.integrate.quad with two changes: no IntegrationWarning, and a
    ConvergenceException when the error estimate misses the tolerance by
    more than a factor 10. A roundoff report is accepted while the error
    estimate stays below ROUNDOFF_ACCEPT relative to the value. Returns
    (value, error).
    """
    kwargs = dict(epsabs=abs_tol, epsrel=rel_tol, limit=int(limit), full_output=1)
    if points:
        kwargs['points'] = points
    result = integrate.quad(f, a, b, **kwargs)
    value, error = result[0], result[1]

    if len(result) > 3:
        message = result[3].strip()
        accepted = 10 * max(abs_tol, rel_tol * abs(value))
        roundoff = message.startswith('The occurrence of roundoff error')
        if roundoff:
            accepted = max(accepted, ROUNDOFF_ACCEPT * abs(value))
        if not np.isfinite(value) or error > accepted:
            raise ConvergenceException(message, estimate=value, error=error)
        if roundoff:
            logger.debug('Quadrature on [%g, %g] hit roundoff at error %g', a, b, error)
        else:
            logger.warning('Quadrature on [%g, %g] accepted with error %g: %s', a, b, error, message)

    return value, error


def _argmax(log_f, lower, upper, grid=64):
    """
    Locate the maximum of a (nearly) unimodal function: coarse scan, then
    bounded Brent on the bracketing cells.
    """
    ys = np.linspace(lower, upper, grid)
    values = np.array([log_f(y) for y in ys])
    values[np.isnan(values)] = -np.inf
    i = int(np.argmax(values))
    if not np.isfinite(values[i]):
        return ys[i], -math.inf

    a, b = ys[max(i - 1, 0)], ys[min(i + 1, grid - 1)]
    found = optimize.minimize_scalar(lambda y: -log_f(y), bounds=(a, b), method='bounded',
                                     options={'xatol': 1e-7})
    if -found.fun >= values[i]:
        return float(found.x), float(-found.fun)
    return float(ys[i]), float(values[i])


def _expand(log_f, y0, peak, direction, limit, reach):
    """
    Walk away from the peak with doubling steps until the integrand has
    dropped by CUTOFF. Returns (edge, decayed).
    """
    step = .25
    while True:
        y = y0 + direction * step
        if (y - limit) * direction >= 0:
            return limit, True
        if abs(y - y0) > reach:
            return y, False
        if log_f(y) < peak - CUTOFF:
            return y, True
        step *= 2


def integrate_log(log_f, cfg, search, lower=-math.inf, upper=math.inf, points=(), reach=80.):
    """
    Compute log of the integral of exp(log_f(y)) over (lower, upper).

    `search` is the interval scanned for the peak. The integrand is
    normalised by its peak value, so the result stays finite when the
    integral itself under- or overflows a double. Whatever is left after
    `reach` beyond the peak on the upper side is added with an
    infinite-range rule. Returns (log_value, relative_error).
    """
    y_star, peak = _argmax(log_f, max(search[0], lower), min(search[1], upper))
    if peak == -math.inf:
        return -math.inf, 0.

    def f(y):
        return safe_exp(log_f(y) - peak)

    y_lo, _ = _expand(log_f, y_star, peak, -1, lower, reach=1e4)
    y_hi, decayed = _expand(log_f, y_star, peak, +1, upper, reach=reach)

    breaks = sorted(set(p for p in tuple(points) + (y_star, ) if y_lo < p < y_hi))
    try:
        total, error = quad(f, y_lo, y_hi, cfg.rel_tol, cfg.abs_tol, cfg.max_depth, points=breaks)

        if not decayed and y_hi < upper:
            logger.debug('Adding infinite-range tail beyond y=%g', y_hi)
            tail, tail_error = quad(f, y_hi, upper, cfg.rel_tol, cfg.abs_tol, cfg.max_depth)
            total += tail
            error += tail_error
    except ConvergenceException as e:
        if e.estimate and e.estimate > 0:
            e.log_estimate = peak + math.log(e.estimate)
        raise

    if total <= 0:
        return -math.inf, 0.
    return peak + math.log(total), error / total
