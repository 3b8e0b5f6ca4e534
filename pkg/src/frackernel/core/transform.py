#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Subordinated and inverse-subordinated heat kernels.

    p^S(t, rho)      = C1 t^(-d/(alpha beta)) int s^(-d/alpha) F(C2 A s^(-1/alpha)) p_beta(s) ds,
                       A = rho t^(-1/(alpha beta))

    p^{S^-1}(t, rho) = C1 t^(-beta d/alpha) int s^(beta d/alpha) F(C2 A s^(beta/alpha)) p_beta(s) ds,
                       A = rho t^(-beta/alpha)

Both integrals are taken in y = log s, with the whole integrand in
log-space.
"""
import math
from collections import namedtuple

from frackernel.core.context import QuadConfig
from frackernel.core.exceptions import ConvergenceException, DivergenceException
from frackernel.core.kernels import EvalPoint
from frackernel.core.quadrature import integrate_log


# Range of y = log s scanned for the peak of the integrand.
SEARCH = (-50., 80.)

# Values below this are reported through log_value only.
UNDERFLOW = 1e-300


KernelValue = namedtuple('KernelValue', 'value log_value est_error underflow')


def _kernel_value(log_value, rel_error):
    if log_value == -math.inf or log_value < math.log(UNDERFLOW):
        return KernelValue(0., log_value, 0., True)
    value = math.exp(log_value)
    return KernelValue(value, log_value, value * rel_error, False)


def _integrate(log_f, log_prefactor, law, cfg, edge):
    policy = cfg.tail_policy
    upper = math.log(policy.M) if policy.truncate else math.inf

    points = [math.log(law.mode)]
    if edge is not None:
        points.append(edge)

    try:
        log_integral, rel_error = integrate_log(log_f, cfg, SEARCH, upper=upper, points=points)
    except ConvergenceException as e:
        e.estimate = math.exp(log_prefactor + e.log_estimate) if e.log_estimate is not None else None
        raise

    return _kernel_value(log_prefactor + log_integral, rel_error)


def subordinated_density(kernel, law, point, cfg=None):
    """
    Heat kernel of the process time-changed by the beta-stable subordinator.
    """
    cfg = cfg or QuadConfig()
    t, rho = EvalPoint(*point)
    alpha, beta, d = kernel.alpha, law.beta, kernel.d
    profile = kernel.profile

    log_prefactor = math.log(kernel.C1) - d / (alpha * beta) * math.log(t)

    if rho > 0:
        # log(C2 A)
        log_ca = math.log(kernel.C2) + math.log(rho) - math.log(t) / (alpha * beta)
        log_profile = lambda y: profile.log_value_at_log(log_ca - y / alpha)
        edge = alpha * log_ca
    else:
        log_f0 = math.log(profile.at_zero)
        log_profile = lambda y: log_f0
        edge = None

    def log_f(y):
        return (1 - d / alpha) * y + log_profile(y) + law.log_density_fast(y)

    return _integrate(log_f, log_prefactor, law, cfg, edge)


def inverse_subordinated_density(kernel, law, point, cfg=None):
    """
    Heat kernel of the process time-changed by the inverse beta-stable
    subordinator.
    """
    cfg = cfg or QuadConfig()
    t, rho = EvalPoint(*point)
    alpha, beta, d = kernel.alpha, law.beta, kernel.d
    profile = kernel.profile

    log_prefactor = math.log(kernel.C1) - beta * d / alpha * math.log(t)

    if rho > 0:
        log_ca = math.log(kernel.C2) + math.log(rho) - beta / alpha * math.log(t)
        log_profile = lambda y: profile.log_value_at_log(log_ca + beta * y / alpha)
        edge = -alpha / beta * log_ca
    else:
        if d >= alpha:
            raise DivergenceException(kernel, 'inverse-subordinated kernel is infinite at rho=0 when d >= alpha')
        log_f0 = math.log(profile.at_zero)
        log_profile = lambda y: log_f0
        edge = None

    def log_f(y):
        return (1 + beta * d / alpha) * y + log_profile(y) + law.log_density_fast(y)

    return _integrate(log_f, log_prefactor, law, cfg, edge)
