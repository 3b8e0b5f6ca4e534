"""
Fractional moments of the stable subordinator, the isotropic stable
process and Brownian motion, optionally checked by sampling.

    frackernel moments --beta 0.5 --kappa=-0.5
    frackernel moments --process levy --alpha 1 --d 2 --kappa=-1 --samples 100000
"""
import math

import numpy as np

from frackernel.core.exceptions import ConfigurationException
from frackernel.core.kernels import levy_moment, chi_moment
from frackernel.core.montecarlo import (sample_subordinator, sample_timechanged, base_radius, moment_estimate,
                                        SampleBatch, Mode)
from frackernel.core.stable import StableLaw
from frackernel.management.base import FracKernelCommand, parse_grid


COLUMNS = ('kappa', 't', 'moment', 'mc_mean', 'mc_standard_error')


class Command(FracKernelCommand):
    help = "Exact fractional moments, with an optional Monte Carlo estimate next to them."
    command_name = 'moments'
    config_keys = ('process', 'beta', 'alpha', 'd', 'kappa', 't', 'samples', 'seed')

    def add_arguments(self, parser):
        FracKernelCommand.add_arguments(self, parser)
        parser.add_argument('--process', dest='process', choices=('subordinator', 'levy', 'brownian'),
                            default=None, help='S_t (default), the isotropic alpha-stable X_t, or B_t')
        parser.add_argument('--beta', dest='beta', default=None)
        parser.add_argument('--alpha', dest='alpha', default=None)
        parser.add_argument('--d', dest='d', default=None)
        parser.add_argument('--kappa', dest='kappa', default=None, help="Orders, e.g. --kappa=-1,-0.5")
        parser.add_argument('--t', dest='t', default=None, help='Time (default 1)')
        parser.add_argument('--samples', dest='samples', default=None, help='Monte Carlo sample size')
        parser.add_argument('--seed', dest='seed', default=None)

    def real_handle(self, **options):
        process = self.option(options, 'process', str, 'subordinator')
        kappas = parse_grid(options.get('kappa'))
        if not kappas:
            raise ConfigurationException('--kappa', 'no orders given')
        t = self.option(options, 't', float, 1.)
        samples = self.option(options, 'samples', int)
        seed = self.option(options, 'seed', int, 0)
        d = self.option(options, 'd', float, 1.)
        if samples is not None and samples < 2:
            raise ConfigurationException('--samples', 'need at least two samples, got %i' % samples)

        if process == 'subordinator':
            beta = self.option(options, 'beta', float, required=True)
            law = StableLaw(beta)
            exact = lambda kappa: law.moment(kappa, t)
            draw = lambda: sample_subordinator(law, t, samples, seed)
            params = {'process': process, 'beta': beta, 't': t}
        elif process == 'levy':
            alpha = self.option(options, 'alpha', float, required=True)
            exact = lambda kappa: levy_moment(alpha, d, kappa, t)
            # The isotropic alpha-stable process is Brownian motion at an (alpha/2)-stable time.
            draw = lambda: sample_timechanged('gauss', d, StableLaw(alpha / 2.), Mode.SUBORDINATE, t, samples, seed)
            params = {'process': process, 'alpha': alpha, 'd': d, 't': t}
        else:
            exact = lambda kappa: chi_moment(d, kappa, t)
            rng = np.random.default_rng(np.random.SeedSequence(seed))
            draw = lambda: SampleBatch(base_radius('gauss', d, np.full(samples, t), rng),
                                       'brownian(d=%r, T=%r)' % (d, t), seed, samples)
            params = {'process': process, 'd': d, 't': t}

        batch = draw() if samples is not None else None

        rows = []
        for i, kappa in enumerate(kappas):
            self.progress(i, len(kappas), 'kappa=%g' % kappa)
            moment = exact(kappa)
            if batch is not None and math.isfinite(moment):
                estimate = moment_estimate(batch, kappa)
                rows.append((kappa, t, moment, estimate.mean, estimate.standard_error))
            else:
                rows.append((kappa, t, moment, '', ''))

        params['samples'] = samples
        self.emit(options, COLUMNS, rows, params, seed=seed if samples is not None else None)
        self.summary(len(rows), 'moments computed')
