#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Monte Carlo samplers for the stable subordinator, its inverse and the
time-changed Gauss and Cauchy processes, with empirical-CDF comparison.

Every batch draws from its own numpy Generator, seeded from an explicit
SeedSequence; there is no global random state.
"""
import enum
import math
from collections import namedtuple

import numpy as np
from scipy import stats

from frackernel.core.exceptions import DomainException, DegenerateSampleException


MIN_ECDF_SAMPLES = 100
ECDF_GRID_POINTS = 101


class Mode(enum.Enum):
    SUBORDINATE = 'sub'
    INVERSE_SUBORDINATE = 'invsub'


class SampleBatch(namedtuple('SampleBatch', 'values law_tag seed n')):
    __slots__ = ()

    def __new__(cls, values, law_tag, seed, n):
        values = np.asarray(values, dtype=float)
        if len(values) != n:
            raise DomainException('SampleBatch', 'expected %i values, got %i' % (n, len(values)))
        return super(SampleBatch, cls).__new__(cls, values, law_tag, seed, n)


EcdfReport = namedtuple('EcdfReport', 'ks_statistic n grid')
MomentEstimate = namedtuple('MomentEstimate', 'mean standard_error')


def _check(t, n, seed):
    if not t > 0:
        raise DomainException('sampler', 't must be positive, got %r' % t)
    if int(n) != n or n < 1:
        raise DomainException('sampler', 'n must be a positive integer, got %r' % n)
    if int(seed) != seed or not 0 <= seed < 2 ** 64:
        raise DomainException('sampler', 'seed must be a 64-bit unsigned integer, got %r' % seed)
    return int(n), int(seed)


def _streams(seed, count):
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def _stable_one(beta, n, rng):
    """
    n draws of S_1 through Kanter's representation (A(U) / E)^((1-beta)/beta).
    """
    u = math.pi * (1. - rng.random(n))     # (0, pi]
    e = rng.standard_exponential(n)
    log_a = (beta / (1 - beta) * np.log(np.sin(beta * u)) + np.log(np.sin((1 - beta) * u))
             - np.log(np.sin(u)) / (1 - beta))
    return np.exp((1 - beta) / beta * (log_a - np.log(e)))


def sample_subordinator(law, t, n, seed):
    """
    n i.i.d. draws of S_t = t^(1/beta) S_1.
    """
    n, seed = _check(t, n, seed)
    rng, = _streams(seed, 1)
    values = t ** (1. / law.beta) * _stable_one(law.beta, n, rng)
    return SampleBatch(values, 'subordinator(beta=%r, t=%r)' % (law.beta, t), seed, n)


def sample_inverse_subordinator(law, t, n, seed):
    """
    n i.i.d. draws of S_t^{-1} = (t / S_1)^beta.
    """
    n, seed = _check(t, n, seed)
    rng, = _streams(seed, 1)
    values = np.power(t / _stable_one(law.beta, n, rng), law.beta)
    return SampleBatch(values, 'inverse_subordinator(beta=%r, t=%r)' % (law.beta, t), seed, n)


def _gauss_radius(d, times, rng):
    # Generator of the Gauss kernel is the Laplacian: B_T ~ N(0, 2T I).
    return np.sqrt(2 * times * rng.chisquare(d, len(times)))


def base_radius(base, d, times, rng):
    """
    |X_T| for the base process started at the origin, one draw per entry of
    `times`. The Cauchy process is Brownian motion run at a 1/2-stable time.
    """
    if not d > 0:
        raise DomainException('base_radius', 'd must be positive, got %r' % d)
    times = np.asarray(times, dtype=float)
    if base == 'gauss':
        return _gauss_radius(d, times, rng)
    elif base == 'cauchy':
        inner = times ** 2 * _stable_one(.5, len(times), rng)
        return _gauss_radius(d, inner, rng)
    raise DomainException('base_radius', 'unknown base process %r' % (base, ))


def sample_timechanged(base, d, law, mode, t, n, seed):
    """
    Radii |X_T| with T = S_t (subordinate) or T = S_t^{-1} (inverse).
    """
    n, seed = _check(t, n, seed)
    mode = Mode(mode)
    time_stream, space_stream = _streams(seed, 2)

    ones = _stable_one(law.beta, n, time_stream)
    if mode is Mode.SUBORDINATE:
        times = t ** (1. / law.beta) * ones
    else:
        times = np.power(t / ones, law.beta)

    values = base_radius(base, d, times, space_stream)
    tag = '%s(d=%r) at %s(beta=%r, t=%r)' % (base, d, mode.value, law.beta, t)
    return SampleBatch(values, tag, seed, n)


def moment_estimate(batch, kappa):
    """
    Sample mean of values^kappa with its standard error.
    """
    if batch.n < 2:
        raise DegenerateSampleException(batch.law_tag, 'need at least two values for a standard error')
    powered = np.power(batch.values, kappa)
    return MomentEstimate(float(np.mean(powered)), float(np.std(powered, ddof=1) / math.sqrt(batch.n)))


def compare_ecdf(batch, reference_cdf):
    """
    Kolmogorov-Smirnov distance max |F_n(x_i) - F(x_i)| over the sample
    points, with F_n the right-continuous empirical CDF. `reference_cdf`
    is called once with the sorted sample array.
    """
    if batch.n < MIN_ECDF_SAMPLES:
        raise DomainException('compare_ecdf', 'need at least %i samples, got %i' % (MIN_ECDF_SAMPLES, batch.n))
    x = np.sort(batch.values)
    if x[0] == x[-1]:
        raise DegenerateSampleException(batch.law_tag, 'all %i samples are equal' % batch.n)

    empirical = np.searchsorted(x, x, side='right') / float(batch.n)
    reference = np.asarray(reference_cdf(x), dtype=float)
    distance = np.abs(empirical - reference)
    ks = float(min(np.max(distance), 1.))

    picks = np.unique(np.linspace(0, batch.n - 1, ECDF_GRID_POINTS).astype(int))
    grid = [(float(x[i]), float(empirical[i]), float(reference[i])) for i in picks]
    return EcdfReport(ks, batch.n, grid)


def ks_critical_value(n, level=.01):
    """
    Asymptotic critical value of the one-sample KS statistic; 1.6276/sqrt(n) at the 1% level.
    """
    if not 0 < level < 1:
        raise DomainException('ks_critical_value', 'level must lie in (0, 1), got %r' % level)
    return float(stats.kstwobign.ppf(1 - level)) / math.sqrt(n)
