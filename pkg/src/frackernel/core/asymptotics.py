#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Leading-order asymptotics of the subordinated and inverse-subordinated
kernels, the closed-form constants for the Gauss, Cauchy and 2gamma-stable
bases, and the Laplace-method approximations behind them.

Every formula is evaluated in log-space; `value` is exp(log_value), which
may underflow to 0.
"""
import enum
import math
from collections import namedtuple, OrderedDict

from frackernel.core.exceptions import (DomainException, UnsupportedProfileException,
                                        UncoveredCaseException)
from frackernel.core.special import log_gamma, is_infinite


class Regime(enum.Enum):
    SUB_FAR = 'SubFar'
    SUB_NEAR = 'SubNear'
    INVSUB_LARGE_T_D_LT_ALPHA = 'InvSubLargeT_dLtAlpha'
    INVSUB_LARGE_T_D_EQ_ALPHA = 'InvSubLargeT_dEqAlpha'
    INVSUB_LARGE_T_D_GT_ALPHA = 'InvSubLargeT_dGtAlpha'
    INVSUB_SMALL_T_POLY = 'InvSubSmallT_Poly'
    INVSUB_SMALL_T_EXP = 'InvSubSmallT_Exp'


class Direction(enum.Enum):
    LARGE_T = 'large_t'
    SMALL_T = 'small_t'


AsymptoticResult = namedtuple('AsymptoticResult', 'value log_value regime similarity')


def _result(log_value, regime, similarity):
    value = math.exp(log_value) if log_value > -745. else 0.
    return AsymptoticResult(value, log_value, regime, similarity)


def _check_beta(beta, name='beta'):
    if not 0 < beta < 1:
        raise DomainException('asymptotics', '%s must lie in (0, 1), got %r' % (name, beta))


def _check_rho(rho, where):
    if not rho > 0:
        raise DomainException(where, 'needs rho > 0, got %r' % rho)


def _log_moment(kernel, p):
    moment = kernel.profile.moment(p)
    if is_infinite(moment):
        raise UnsupportedProfileException(kernel.profile, 'moment of order %r is infinite' % p)
    return math.log(moment)


def same_index(d, alpha):
    return math.isclose(d, alpha, rel_tol=1e-12, abs_tol=0.)


# =======[ Subordination ]======

def sub_asym_far(kernel, beta, point):
    """
    p^S ~ C1 alpha beta / Gamma(1-beta) C2^(-d-alpha beta) M(d+alpha beta) rho^(-d-alpha beta) t
    as rho t^(-1/(alpha beta)) -> infinity; M(p) = int s^(p-1) F(s) ds.
    """
    _check_beta(beta)
    t, rho = point
    _check_rho(rho, 'sub_asym_far')
    C1, C2, d, alpha = kernel.C1, kernel.C2, kernel.d, kernel.alpha
    order = d + alpha * beta

    log_value = (math.log(C1) + math.log(alpha * beta) - log_gamma(1 - beta) - order * math.log(C2)
                 + _log_moment(kernel, order) - order * math.log(rho) + math.log(t))
    return _result(log_value, Regime.SUB_FAR, rho * t ** (-1. / (alpha * beta)))


def sub_asym_near(kernel, beta, t, rho=0.):
    """
    p^S ~ C1 F(0+) Gamma(d/(alpha beta)) / (beta Gamma(d/alpha)) t^(-d/(alpha beta))
    as rho t^(-1/(alpha beta)) -> 0.
    """
    _check_beta(beta)
    if not t > 0:
        raise DomainException('sub_asym_near', 't must be positive, got %r' % t)
    C1, d, alpha = kernel.C1, kernel.d, kernel.alpha

    log_value = (math.log(C1) + math.log(kernel.profile.at_zero) + log_gamma(d / (alpha * beta))
                 - math.log(beta) - log_gamma(d / alpha) - d / (alpha * beta) * math.log(t))
    return _result(log_value, Regime.SUB_NEAR, rho * t ** (-1. / (alpha * beta)))


# =======[ Inverse subordination ]======

def invsub_asym_large_t(kernel, beta, point):
    """
    p^{S^-1} as rho^(-alpha/beta) t -> infinity; the regime follows the sign of d - alpha.
    """
    _check_beta(beta)
    t, rho = point
    C1, C2, d, alpha = kernel.C1, kernel.C2, kernel.d, kernel.alpha
    log_f0 = math.log(kernel.profile.at_zero)

    if rho > 0:
        log_similarity = -alpha / beta * math.log(rho) + math.log(t)
        similarity = math.exp(log_similarity) if log_similarity < 709 else math.inf
    else:
        log_similarity = similarity = math.inf

    if same_index(d, alpha):
        if not log_similarity > 0 or log_similarity == math.inf:
            raise DomainException('invsub_asym_large_t', 'the logarithmic regime needs 1 < rho^(-alpha/beta) t < inf')
        log_value = (math.log(C1) + math.log(beta) - log_gamma(1 - beta) + log_f0 - beta * math.log(t)
                     + math.log(log_similarity))
        return _result(log_value, Regime.INVSUB_LARGE_T_D_EQ_ALPHA, similarity)

    elif d < alpha:
        log_value = (math.log(C1) + log_f0 + log_gamma(1 - d / alpha) - log_gamma(1 - beta * d / alpha)
                     - beta * d / alpha * math.log(t))
        return _result(log_value, Regime.INVSUB_LARGE_T_D_LT_ALPHA, similarity)

    else:
        _check_rho(rho, 'invsub_asym_large_t')
        log_value = (math.log(C1) + (alpha - d) * math.log(C2) + math.log(alpha) - log_gamma(1 - beta)
                     + _log_moment(kernel, d - alpha) + (alpha - d) * math.log(rho) - beta * math.log(t))
        return _result(log_value, Regime.INVSUB_LARGE_T_D_GT_ALPHA, similarity)


def log_k_constants(kernel, beta):
    """
    (log K1, K2) of the exponential small-time regime.
    """
    _check_beta(beta)
    C1, C2, d, alpha = kernel.C1, kernel.C2, kernel.d, kernel.alpha
    log_k1 = (math.log(C1) - d * (1 - beta) / (alpha - beta) * math.log(C2)
              + .5 * math.log((alpha - 1) / ((alpha - beta) * beta))
              + d * (alpha - 1) * (1 - beta) / (alpha * (alpha - beta)) * math.log(alpha - 1)
              + d * (alpha - 1) * beta / (alpha * (alpha - beta)) * math.log(beta))
    k2 = (C2 ** (alpha / (alpha - beta)) * (alpha - beta) * (alpha - 1) ** (-(alpha - 1) / (alpha - beta))
          * beta ** (beta / (alpha - beta)))
    return log_k1, k2


def invsub_asym_small_t(kernel, beta, point):
    """
    p^{S^-1} as rho^(-alpha/beta) t -> 0, i.e. A = rho t^(-beta/alpha) -> infinity.
    """
    _check_beta(beta)
    t, rho = point
    _check_rho(rho, 'invsub_asym_small_t')
    C1, C2, d, alpha = kernel.C1, kernel.C2, kernel.d, kernel.alpha
    profile = kernel.profile
    similarity = rho * t ** (-beta / alpha)

    if profile.kind in ('polynomial', 'stable'):
        log_value = (math.log(C1) - (d + alpha) * math.log(C2) + math.log(profile.far_field_coefficient)
                     - math.log(beta) - log_gamma(beta) - (d + alpha) * math.log(rho) + beta * math.log(t))
        return _result(log_value, Regime.INVSUB_SMALL_T_POLY, similarity)

    elif profile.kind == 'exponential':
        log_k1, k2 = log_k_constants(kernel, beta)
        log_value = (log_k1 - d * (1 - beta) / (alpha - beta) * math.log(rho)
                     - d * (alpha - 1) * beta / (alpha * (alpha - beta)) * math.log(t)
                     - k2 * rho ** (alpha / (alpha - beta)) * t ** (-beta / (alpha - beta)))
        return _result(log_value, Regime.INVSUB_SMALL_T_EXP, similarity)

    raise UnsupportedProfileException(profile, 'no small-time asymptotics for this profile')


def invsub_exp_via_ib(kernel, beta, point):
    """
    The exponential small-time regime rebuilt from `log_ib_asym`: the
    stable density is replaced by its form at zero, which turns the
    integral into I(B). Returns the log-value.
    """
    _check_beta(beta)
    t, rho = point
    _check_rho(rho, 'invsub_exp_via_ib')
    C1, C2, d, alpha = kernel.C1, kernel.C2, kernel.d, kernel.alpha
    if kernel.profile.kind != 'exponential':
        raise UnsupportedProfileException(kernel.profile, 'needs an exponential profile')

    a = beta * d / alpha - (2 - beta) / (2 * (1 - beta))
    b = beta / (alpha - 1)
    c = (1 - beta) * beta ** (beta / (1 - beta))
    dd = beta / (1 - beta)
    log_similarity = -alpha / beta * math.log(rho) + math.log(t)
    B = math.exp(alpha / (alpha - 1) * math.log(C2) - beta / (alpha - 1) * log_similarity)

    log_prefactor = (math.log(C1) - .5 * math.log(2 * math.pi * (1 - beta)) + math.log(beta) / (2 * (1 - beta))
                     - beta * d / alpha * math.log(t))
    return log_prefactor + log_ib_asym(a, b, c, dd, B)


# =======[ Space-time fractional kernel ]======

def frac_frac_asym(beta, gamma, n, point, direction):
    """
    Fundamental solution of the equation with a Caputo derivative of order
    beta in time and the fractional Laplacian of order gamma in space.
    """
    _check_beta(beta)
    _check_beta(gamma, 'gamma')
    if not n > 0:
        raise DomainException('frac_frac_asym', 'n must be positive, got %r' % n)
    t, rho = point
    direction = Direction(direction)

    if direction is Direction.SMALL_T:
        _check_rho(rho, 'frac_frac_asym')
        log_value = (math.log(gamma) + gamma * math.log(4) + log_gamma(n / 2. + gamma)
                     - n / 2. * math.log(math.pi) - log_gamma(1 - gamma) - math.log(beta) - log_gamma(beta)
                     - (n + 2 * gamma) * math.log(rho) + beta * math.log(t))
        return _result(log_value, Regime.INVSUB_SMALL_T_POLY, rho * t ** (-beta / (2 * gamma)))

    if rho > 0:
        log_similarity = -2 * gamma / beta * math.log(rho) + math.log(t)
        similarity = math.exp(log_similarity) if log_similarity < 709 else math.inf
    else:
        log_similarity = similarity = math.inf

    if n == 1 and .5 < gamma < 1:
        log_value = (log_gamma(1 / (2 * gamma)) + log_gamma(1 - 1 / (2 * gamma)) - math.log(2 * math.pi * gamma)
                     - log_gamma(1 - beta / (2 * gamma)) - beta / (2 * gamma) * math.log(t))
        return _result(log_value, Regime.INVSUB_LARGE_T_D_LT_ALPHA, similarity)

    elif n == 1 and gamma == .5:
        if not log_similarity > 0 or log_similarity == math.inf:
            raise DomainException('frac_frac_asym', 'the logarithmic case needs 1 < rho^(-1/beta) t < inf')
        log_value = (math.log(beta) - math.log(math.pi) - log_gamma(1 - beta) - beta * math.log(t)
                     + math.log(log_similarity))
        return _result(log_value, Regime.INVSUB_LARGE_T_D_EQ_ALPHA, similarity)

    elif n > 2 * gamma:
        _check_rho(rho, 'frac_frac_asym')
        log_value = (math.log(2 * gamma) + log_gamma((n - 2 * gamma) / 2.) - (1 + 2 * gamma) * math.log(2)
                     - n / 2. * math.log(math.pi) - log_gamma(1 - beta) - log_gamma(1 + gamma)
                     + (2 * gamma - n) * math.log(rho) - beta * math.log(t))
        return _result(log_value, Regime.INVSUB_LARGE_T_D_GT_ALPHA, similarity)

    raise UncoveredCaseException('frac_frac_asym', 'no large-time asymptotics for n=%r, gamma=%r' % (n, gamma))


# =======[ Closed-form constants ]======

def corollary_constants(name, d, beta, gamma=None):
    """
    Constants of the closed-form asymptotics for the Gauss ('1a'-'1d'),
    Cauchy ('2a'-'2d') and 2gamma-stable ('3a', '3b'; d is the dimension n)
    bases. Returns an ordered mapping name -> value.
    """
    _check_beta(beta)
    if not d > 0:
        raise DomainException('corollary_constants', 'd must be positive, got %r' % d)
    pi, lg = math.pi, log_gamma
    e = math.exp

    if name == '1a':
        value = e(math.log(beta) + beta * math.log(4) + lg(d / 2. + beta) - d / 2. * math.log(pi) - lg(1 - beta))
    elif name == '1b':
        value = e(lg((d + 1) / 2.) + lg(d / (2 * beta)) - math.log(2 * beta) - (d + 1) / 2. * math.log(pi) - lg(d))
    elif name == '1c':
        if d == 1:
            value = .5 * e(-lg(1 - beta / 2.))
        elif d == 2:
            value = beta / (4 * pi) * e(-lg(1 - beta))
        elif d >= 3:
            value = e(lg(d / 2. - 1) - math.log(4) - d / 2. * math.log(pi) - lg(1 - beta))
        else:
            raise UncoveredCaseException('corollary 1c', 'covers d=1, d=2 and d>=3, got d=%r' % d)
    elif name == '1d':
        k1 = (pi ** (-d / 2.) * 2 ** (-d / (2 - beta)) * beta ** (d * beta / (2 * (2 - beta)))
              / math.sqrt(beta * (2 - beta)))
        k2 = (2 - beta) * 2 ** (-2 / (2 - beta)) * beta ** (beta / (2 - beta))
        return OrderedDict([('K1', k1), ('K2', k2)])
    elif name == '2a':
        value = e(math.log(beta) + (beta - 1) * math.log(2) + lg((d + beta) / 2.) - d / 2. * math.log(pi)
                  - lg(1 - beta / 2.))
    elif name == '2b':
        value = e(lg((d + 1) / 2.) + lg(d / beta) - math.log(beta) - (d + 1) / 2. * math.log(pi) - lg(d))
    elif name == '2c':
        if d == 1:
            value = beta / pi * e(-lg(1 - beta))
        elif d >= 2:
            value = e(lg((d - 1) / 2.) - math.log(2) - (d + 1) / 2. * math.log(pi) - lg(1 - beta))
        else:
            raise UncoveredCaseException('corollary 2c', 'covers d=1 and d>=2, got d=%r' % d)
    elif name == '2d':
        value = e(lg((d + 1) / 2.) - (d + 1) / 2. * math.log(pi) - math.log(beta) - lg(beta))
    elif name in ('3a', '3b'):
        if gamma is None:
            raise DomainException('corollary %s' % name, 'needs gamma')
        direction = Direction.LARGE_T if name == '3a' else Direction.SMALL_T
        # Constant = value at t = 1, rho = 1 (the log case reads its factor at rho^(-1/beta) t = e).
        t = math.e if (name == '3a' and d == 1 and gamma == .5) else 1.
        value = frac_frac_asym(beta, gamma, d, (t, 1.), direction).value
        if t != 1.:
            value *= t ** beta
    else:
        raise DomainException('corollary_constants', 'unknown corollary %r' % (name, ))

    return OrderedDict([('constant', value)])


# =======[ Laplace method ]======

class LaplaceProblem(namedtuple('LaplaceProblem', 'h h_second_at_r0 r0 h_at_r0 C v w')):
    """
    int_v^w exp(-C h(r)) dr with h minimal at r0.
    """
    __slots__ = ()

    def __new__(cls, h, h_second_at_r0, r0, h_at_r0, C, v=-math.inf, w=math.inf):
        if not h_second_at_r0 > 0:
            raise DomainException('LaplaceProblem', "h''(r0) must be positive, got %r" % h_second_at_r0)
        if not h_at_r0 >= 0:
            raise DomainException('LaplaceProblem', 'h(r0) must be non-negative, got %r' % h_at_r0)
        if not C > 0:
            raise DomainException('LaplaceProblem', 'C must be positive, got %r' % C)
        if not v < r0 < w:
            raise DomainException('LaplaceProblem', 'r0 must lie in (v, w)')
        return super(LaplaceProblem, cls).__new__(cls, h, float(h_second_at_r0), float(r0), float(h_at_r0),
                                                  float(C), float(v), float(w))


def log_laplace_approx(problem):
    return -problem.C * problem.h_at_r0 + .5 * math.log(2 * math.pi / (problem.C * problem.h_second_at_r0))


def laplace_approx(problem):
    """
    exp(-C h(r0)) sqrt(2 pi / (C h''(r0))).
    """
    return math.exp(log_laplace_approx(problem))


def log_ib_asym(a, b, c, dd, B):
    """
    log of the large-B form of I(B) = int_0^inf s^a exp(-B s^b - c s^(-dd)) ds.
    """
    if not (b > 0 and c > 0 and dd > 0 and B > 0):
        raise DomainException('ib_asym', 'b, c, dd and B must be positive')
    bd = b + dd
    return (.5 * math.log(2 * math.pi / bd)
            - (2 * (a + 1) + dd) / (2 * bd) * math.log(b * B)
            + (2 * (a + 1) - b) / (2 * bd) * math.log(c * dd)
            - bd * math.exp(b / bd * math.log(c / b) + dd / bd * math.log(B / dd)))


def ib_asym(a, b, c, dd, B):
    return math.exp(log_ib_asym(a, b, c, dd, B))
