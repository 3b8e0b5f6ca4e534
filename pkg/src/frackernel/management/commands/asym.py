"""
Closed-form asymptotic constants and leading-order asymptotic values.

    frackernel asym --corollary 1d --beta 0.5 --d 1
    frackernel asym --regime invsub-small-t --base cauchy --d 1 --beta 0.5 --t 1 --rho 1,10,100
"""
import itertools

from frackernel.core import asymptotics
from frackernel.core.exceptions import ConfigurationException
from frackernel.core.kernels import EvalPoint, as_profile
from frackernel.management.base import FracKernelCommand, parse_grid


COROLLARIES = ('1a', '1b', '1c', '1d', '2a', '2b', '2c', '2d', '3a', '3b')
REGIMES = ('sub-far', 'sub-near', 'invsub-large-t', 'invsub-small-t', 'frac-large-t', 'frac-small-t')

CONSTANT_COLUMNS = ('name', 'value')
VALUE_COLUMNS = ('t', 'rho', 'value', 'log_value', 'regime', 'similarity')


class Command(FracKernelCommand):
    help = "Print asymptotic constants (--corollary) or asymptotic values on a grid (--regime)."
    command_name = 'asym'
    config_keys = ('corollary', 'regime', 'base', 'd', 'gamma', 'beta', 't', 'rho')

    def add_arguments(self, parser):
        FracKernelCommand.add_arguments(self, parser)
        parser.add_argument('--corollary', dest='corollary', choices=COROLLARIES, default=None)
        parser.add_argument('--regime', dest='regime', choices=REGIMES, default=None)
        parser.add_argument('--base', dest='base', choices=('gauss', 'cauchy', 'stable'), default=None)
        parser.add_argument('--d', dest='d', default=None)
        parser.add_argument('--gamma', dest='gamma', default=None)
        parser.add_argument('--beta', dest='beta', default=None)
        parser.add_argument('--t', dest='t', default=None)
        parser.add_argument('--rho', dest='rho', default=None)

    def real_handle(self, **options):
        corollary = self.option(options, 'corollary', str)
        regime = self.option(options, 'regime', str)
        if (corollary is None) == (regime is None):
            raise ConfigurationException('asym', 'give exactly one of --corollary and --regime')

        d = self.option(options, 'd', float, 1.)
        gamma = self.option(options, 'gamma', float)
        beta = self.option(options, 'beta', float, required=True)
        params = {'d': d, 'gamma': gamma, 'beta': beta}

        if corollary:
            constants = asymptotics.corollary_constants(corollary, d, beta, gamma)
            rows = list(constants.items())
            for name, value in rows:
                self.feedback('%s = %.10g' % (name, value), 'green')
            params['corollary'] = corollary
            self.emit(options, CONSTANT_COLUMNS, rows, params)
            self.summary(len(rows), 'constants computed')
            return

        base = self.option(options, 'base', str, 'gauss')
        grid = list(itertools.product(parse_grid(options.get('t') or '1'), parse_grid(options.get('rho') or '1')))
        kernel = None if regime.startswith('frac') else as_profile(base, d, gamma)

        rows = []
        for i, (t, rho) in enumerate(grid):
            self.progress(i, len(grid), 't=%g rho=%g' % (t, rho))
            result = self._evaluate(regime, kernel, d, beta, gamma, EvalPoint(t, rho))
            rows.append((t, rho, result.value, result.log_value, result.regime.value, result.similarity))

        params.update({'regime': regime, 'base': base})
        self.emit(options, VALUE_COLUMNS, rows, params)
        self.summary(len(rows))

    def _evaluate(self, regime, kernel, d, beta, gamma, point):
        if regime == 'sub-far':
            return asymptotics.sub_asym_far(kernel, beta, point)
        elif regime == 'sub-near':
            return asymptotics.sub_asym_near(kernel, beta, point.t, point.rho)
        elif regime == 'invsub-large-t':
            return asymptotics.invsub_asym_large_t(kernel, beta, point)
        elif regime == 'invsub-small-t':
            return asymptotics.invsub_asym_small_t(kernel, beta, point)

        if gamma is None:
            raise ConfigurationException('--gamma', 'is required for %s' % regime)
        direction = asymptotics.Direction.LARGE_T if regime == 'frac-large-t' else asymptotics.Direction.SMALL_T
        return asymptotics.frac_frac_asym(beta, gamma, d, point, direction)
