#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Gamma-family special functions and the classical identities the
asymptotic constants rely on.
"""
import math
from collections import namedtuple

from scipy import special as sc

from frackernel.core.exceptions import DomainException


# Infinite moments are legitimate answers, not errors.
INFINITE = float('inf')

# Largest argument for which Gamma(x) is a finite double.
GAMMA_OVERFLOW = 171.6


def is_infinite(value):
    return value == INFINITE


IdentityResidual = namedtuple('IdentityResidual', 'lhs rhs residual')


def _is_pole(x):
    return x <= 0 and float(x).is_integer()


def gamma(x):
    """
    Gamma function for real x outside the poles.
    """
    x = float(x)
    if math.isnan(x) or _is_pole(x):
        raise DomainException('gamma', 'pole at x=%r' % x)
    if x > GAMMA_OVERFLOW:
        raise DomainException('gamma', 'Gamma(%r) overflows, use log_gamma' % x)
    return float(sc.gamma(x))


def log_gamma(x):
    """
    log Gamma(x) for x > 0; safe for large arguments.
    """
    x = float(x)
    if not x > 0:
        raise DomainException('log_gamma', 'argument must be positive, got %r' % x)
    return float(sc.gammaln(x))


def beta_fn(r, s):
    if not (r > 0 and s > 0):
        raise DomainException('beta_fn', 'arguments must be positive, got (%r, %r)' % (r, s))
    # Ordered arguments make B(r, s) == B(s, r) bit for bit.
    r, s = sorted((float(r), float(s)))
    return float(sc.beta(r, s))


def _residual(lhs, rhs):
    scale = max(abs(lhs), abs(rhs))
    if scale == 0:
        return IdentityResidual(lhs, rhs, 0.0)
    return IdentityResidual(lhs, rhs, abs(lhs - rhs) / scale)


def check_duplication(z):
    """
    Legendre's duplication formula Gamma(z)Gamma(z+1/2) = 2^(1-2z) sqrt(pi) Gamma(2z).
    """
    if not z > 0:
        raise DomainException('check_duplication', 'z must be positive, got %r' % z)

    if 2 * z < GAMMA_OVERFLOW:
        lhs = gamma(z) * gamma(z + .5)
        rhs = 2. ** (1 - 2 * z) * math.sqrt(math.pi) * gamma(2 * z)
        if math.isfinite(lhs) and math.isfinite(rhs):
            return _residual(lhs, rhs)

    # Compare in log-space once the products leave the double range.
    lhs = log_gamma(z) + log_gamma(z + .5)
    rhs = (1 - 2 * z) * math.log(2) + .5 * math.log(math.pi) + log_gamma(2 * z)
    return IdentityResidual(lhs, rhs, abs(math.expm1(lhs - rhs)))


def check_reflection(beta):
    """
    Euler's reflection formula Gamma(beta)Gamma(1-beta) = pi / sin(pi beta).
    """
    if not 0 < beta < 1:
        raise DomainException('check_reflection', 'beta must lie in (0, 1), got %r' % beta)
    lhs = gamma(beta) * gamma(1 - beta)
    rhs = math.pi / math.sin(math.pi * beta)
    return _residual(lhs, rhs)


def surface_area(d):
    """
    Surface measure 2 pi^(d/2) / Gamma(d/2) of the unit sphere in R^d.
    """
    if not d > 0:
        raise DomainException('surface_area', 'dimension must be positive, got %r' % d)
    return 2 * math.pi ** (d / 2.) / gamma(d / 2.)

