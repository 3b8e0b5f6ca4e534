#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Independent oracles for the asymptotic formulas, and the sweeps in the
similarity variable that compare kernels against their asymptotics.
"""
import math
import logging
from collections import namedtuple

import numpy as np
from scipy import special

from frackernel.core import asymptotics
from frackernel.core.context import QuadConfig
from frackernel.core.exceptions import (ConvergenceException, DivergenceException, DomainException,
                                        UncoveredCaseException)
from frackernel.core.kernels import EvalPoint, as_profile
from frackernel.core.quadrature import integrate_log
from frackernel.core.stable import StableLaw
from frackernel.core.transform import subordinated_density, inverse_subordinated_density
from frackernel.utils import map_ordered


logger = logging.getLogger(__name__)


# =======[ Quadrature oracles ]======

def log_laplace_quadrature(problem, cfg=None):
    """
    log of int_v^w exp(-C h(r)) dr by adaptive quadrature around r0.
    """
    cfg = cfg or QuadConfig()
    r0, C = problem.r0, problem.C
    search = (max(r0 - 1., problem.v), min(r0 + 1., problem.w))
    log_value, _ = integrate_log(lambda r: -C * problem.h(r), cfg, search, lower=problem.v,
                                 upper=problem.w, points=(r0, ))
    return log_value


def laplace_quadrature(problem, cfg=None):
    return math.exp(log_laplace_quadrature(problem, cfg))


def _neg_exp(log_x):
    return -math.inf if log_x > 709. else -math.exp(log_x)


def log_ib_quadrature(a, b, c, dd, B, cfg=None):
    """
    log of I(B) = int_0^inf s^a exp(-B s^b - c s^(-dd)) ds, integrated in
    y = log s.
    """
    if not (b > 0 and c > 0 and dd > 0 and B > 0):
        raise DomainException('ib_quadrature', 'b, c, dd and B must be positive')
    cfg = cfg or QuadConfig()
    log_b, log_c = math.log(B), math.log(c)

    def log_f(y):
        return (a + 1) * y + _neg_exp(log_b + b * y) + _neg_exp(log_c - dd * y)

    # The exponent is stationary where b B s^b = dd c s^(-dd).
    y_star = (math.log(dd * c) - math.log(b * B)) / (b + dd)
    log_value, _ = integrate_log(log_f, cfg, (y_star - 20., y_star + 20.), points=(y_star, ))
    return log_value


def ib_quadrature(a, b, c, dd, B, cfg=None):
    return math.exp(log_ib_quadrature(a, b, c, dd, B, cfg))


def log_bessel_ib(B):
    """
    log of int_0^inf exp(-B s - 1/s) ds = 2 B^(-1/2) K_1(2 sqrt(B)).
    """
    if not B > 0:
        raise DomainException('bessel_ib', 'B must be positive, got %r' % B)
    z = 2 * math.sqrt(B)
    return math.log(2) - .5 * math.log(B) + math.log(special.kve(1, z)) - z


def bessel_ib(B):
    return math.exp(log_bessel_ib(B))


def _scaled_exp1(x):
    """
    e^x E_1(x).
    """
    if x < 700.:
        return math.exp(x) * float(special.exp1(x))
    return (1 - 1 / x + 2 / x ** 2 - 6 / x ** 3) / x


def half_stable_inverse_cauchy(point):
    """
    Exact inverse-subordinated Cauchy kernel in d=1 for beta=1/2, from
    S_t^{-1} = sqrt(2t) |Z| in law:

        p(t, rho) = e^(a/2) E_1(a/2) / (pi sigma sqrt(2 pi)),  sigma^2 = 2t,  a = rho^2 / sigma^2.

    For large rho^(-2) t this is beta/(pi Gamma(1-beta)) t^(-beta) log(rho^(-2) t)
    times 1 + (log 4 - euler_gamma) / log(rho^(-2) t).
    """
    t, rho = EvalPoint(*point)
    if rho == 0:
        raise DivergenceException('half_stable_inverse_cauchy', 'infinite at rho=0')
    sigma = math.sqrt(2 * t)
    a = (rho / sigma) ** 2
    return _scaled_exp1(a / 2.) / (math.pi * sigma * math.sqrt(2 * math.pi))


# =======[ Similarity sweeps ]======

SweepRow = namedtuple('SweepRow', 'A quadrature asymptotic ratio log_deviation flag')
SweepSummary = namedtuple('SweepSummary', 'max_deviation decade failures log_space')


class SweepCase(namedtuple('SweepCase', 'theorem base direction')):
    """
    `theorem` selects the transform and asymptotic formula, `base` is
    forced for the closed-form cases (None: taken from the caller) and
    `direction` is +1 when the limit is A -> infinity, -1 for A -> 0.
    """
    __slots__ = ()


CASES = {
    'thm1a': SweepCase('thm1a', None, +1),
    'thm1b': SweepCase('thm1b', None, -1),
    'thm2a': SweepCase('thm2a', None, +1),
    'thm2b': SweepCase('thm2b', None, +1),
    'thm2c': SweepCase('thm2c', None, +1),

    'cor1a': SweepCase('thm1a', 'gauss', +1),
    'cor1b': SweepCase('thm1b', 'gauss', -1),
    'cor1c': SweepCase('thm2a', 'gauss', +1),
    'cor1d': SweepCase('thm2c', 'gauss', +1),
    'cor2a': SweepCase('thm1a', 'cauchy', +1),
    'cor2b': SweepCase('thm1b', 'cauchy', -1),
    'cor2c': SweepCase('thm2a', 'cauchy', +1),
    'cor2d': SweepCase('thm2b', 'cauchy', +1),
    'cor3a': SweepCase('thm2a', 'stable', +1),
    'cor3b': SweepCase('thm2b', 'stable', +1),
}

# Default grid of A per direction: far for +1, near the origin for -1.
DEFAULT_RANGES = {
    +1: (10., 1e4),
    -1: (1e-4, 1e-1),
}


def _point(theorem, A):
    """
    Map the similarity variable A onto (t, rho), keeping the other at 1.
    """
    if theorem in ('thm1a', 'thm1b', 'thm2b', 'thm2c'):
        return EvalPoint(1., A)
    return EvalPoint(A, 1.)


def _asymptotic(theorem, kernel, beta, point, frac_gamma=None):
    if frac_gamma is not None:
        direction = asymptotics.Direction.LARGE_T if theorem == 'thm2a' else asymptotics.Direction.SMALL_T
        return asymptotics.frac_frac_asym(beta, frac_gamma, kernel.d, point, direction).log_value
    if theorem == 'thm1a':
        return asymptotics.sub_asym_far(kernel, beta, point).log_value
    if theorem == 'thm1b':
        return asymptotics.sub_asym_near(kernel, beta, point.t, point.rho).log_value
    if theorem == 'thm2a':
        return asymptotics.invsub_asym_large_t(kernel, beta, point).log_value
    return asymptotics.invsub_asym_small_t(kernel, beta, point).log_value


def _check_case(theorem, kernel):
    kind = kernel.profile.kind
    if theorem == 'thm2b' and kind not in ('polynomial', 'stable'):
        raise UncoveredCaseException(theorem, 'needs a kernel of polynomial type, got %s' % kind)
    if theorem == 'thm2c' and kind != 'exponential':
        raise UncoveredCaseException(theorem, 'needs a kernel of exponential type, got %s' % kind)


def ratio_sweep(case, base, d, beta, gamma=None, a_min=None, a_max=None, points=13, cfg=None, workers=None):
    """
    Compare a transformed kernel with its asymptotic form on a log-spaced
    grid of the similarity variable A. Missing ends of the grid are taken
    from DEFAULT_RANGES for the direction of the case.

    Returns (rows, summary). The summary holds the largest deviation over
    the extreme decade of A: |ratio - 1| in general, and
    |log p - log asym| / |log asym| for the exponential small-time case.
    Rows whose quadrature failed are flagged and left out of the summary.
    """
    try:
        case = CASES[case]
    except KeyError:
        raise UncoveredCaseException('ratio_sweep', 'unknown case %r' % (case, ))
    default_min, default_max = DEFAULT_RANGES[case.direction]
    a_min = default_min if a_min is None else a_min
    a_max = default_max if a_max is None else a_max
    if not (0 < a_min < a_max):
        raise DomainException('ratio_sweep', 'need 0 < a_min < a_max')
    if int(points) < 2:
        raise DomainException('ratio_sweep', 'need at least two grid points')

    theorem = case.theorem
    base = case.base or base
    frac_gamma = gamma if case.base == 'stable' else None
    kernel = as_profile(base, d, gamma)
    law = StableLaw(beta)
    _check_case(theorem, kernel)
    transform = subordinated_density if theorem in ('thm1a', 'thm1b') else inverse_subordinated_density
    log_space = theorem == 'thm2c'
    cfg = cfg or QuadConfig()

    grid = np.logspace(math.log10(a_min), math.log10(a_max), int(points))

    def evaluate(A):
        point = _point(theorem, A)
        log_asym = _asymptotic(theorem, kernel, beta, point, frac_gamma)
        try:
            log_quad = transform(kernel, law, point, cfg).log_value
        except ConvergenceException as e:
            logger.warning('Sweep %s failed at A=%g: %s', theorem, A, e)
            return SweepRow(float(A), math.nan, math.exp(log_asym), math.nan, math.nan, 'convergence')

        log_deviation = (log_quad - log_asym) / abs(log_asym) if log_asym != 0 else math.nan
        return SweepRow(float(A), math.exp(log_quad), math.exp(log_asym), math.exp(log_quad - log_asym),
                        log_deviation, '')

    rows = map_ordered(evaluate, grid, workers)

    if case.direction > 0:
        decade = (a_max / 10., a_max)
    else:
        decade = (a_min, a_min * 10.)

    low, high = decade[0] * (1 - 1e-9), decade[1] * (1 + 1e-9)
    deviations = []
    for row in rows:
        if row.flag == 'convergence' or not low <= row.A <= high:
            continue
        if log_space:
            deviations.append(abs(row.log_deviation))
        else:
            deviations.append(abs(row.ratio - 1))

    failures = sum(1 for row in rows if row.flag == 'convergence')
    summary = SweepSummary(max(deviations) if deviations else math.nan, decade, failures, log_space)
    return rows, summary
