"""
Evaluate the subordinated or inverse-subordinated kernel on a (t, rho) grid.

    frackernel eval --base gauss --d 1 --beta 0.5 --mode sub --t 1 --rho 0,0.5,1
"""
import math
import itertools

from django.core.management.base import CommandError

from frackernel.core import evaluate_kernel
from frackernel.core.exceptions import ConvergenceException, ConfigurationException
from frackernel.core.kernels import as_profile
from frackernel.core.stable import StableLaw
from frackernel.management.base import FracKernelCommand, EXIT_NUMERICAL, parse_grid
from frackernel.utils import map_ordered


COLUMNS = ('t', 'rho', 'value', 'log_value', 'est_error', 'flag')


class Command(FracKernelCommand):
    help = "Evaluate the time-changed heat kernel on a grid of (t, rho)."
    command_name = 'eval'
    config_keys = ('base', 'd', 'gamma', 'beta', 'mode', 't', 'rho')

    def add_arguments(self, parser):
        FracKernelCommand.add_arguments(self, parser)
        parser.add_argument('--base', dest='base', choices=('gauss', 'cauchy', 'stable'), default=None)
        parser.add_argument('--d', dest='d', default=None, help='Dimension')
        parser.add_argument('--gamma', dest='gamma', default=None, help='Index of the stable base')
        parser.add_argument('--beta', dest='beta', default=None, help='Index of the subordinator')
        parser.add_argument('--mode', dest='mode', choices=('sub', 'invsub'), default=None)
        parser.add_argument('--t', dest='t', default=None, help="Times: '1,2,5' or 'min:max:n'")
        parser.add_argument('--rho', dest='rho', default=None, help="Distances: '0,1' or 'min:max:n'")

    def real_handle(self, **options):
        base = self.option(options, 'base', str, 'gauss')
        d = self.option(options, 'd', float, 1.)
        gamma = self.option(options, 'gamma', float)
        beta = self.option(options, 'beta', float, required=True)
        mode = self.option(options, 'mode', str, 'sub')
        if mode not in ('sub', 'invsub'):
            raise ConfigurationException('--mode', 'expected sub or invsub, got %r' % mode)

        grid = list(itertools.product(parse_grid(options.get('t')), parse_grid(options.get('rho'))))
        if not grid:
            raise ConfigurationException('grid', 'empty (t, rho) grid')

        cfg = self.quad_config(options)
        kernel = as_profile(base, d, gamma)
        law = StableLaw(beta)

        def run(item):
            i, (t, rho) = item
            self.progress(i, len(grid), 't=%g rho=%g' % (t, rho))
            try:
                result = evaluate_kernel(kernel, law, mode, (t, rho), cfg)
            except ConvergenceException as e:
                return (t, rho, e.estimate if e.estimate is not None else math.nan, math.nan,
                        e.error if e.error is not None else math.nan, 'convergence'), str(e)
            flag = 'underflow' if result.underflow else ''
            return (t, rho, result.value, result.log_value, result.est_error, flag), None

        results = map_ordered(run, list(enumerate(grid)), self.threads(options))

        rows = []
        for row, error in results:
            rows.append(row)
            if error:
                self.print_error('ERROR: t=%g rho=%g: %s' % (row[0], row[1], error))

        params = {'base': base, 'd': d, 'gamma': gamma, 'beta': beta, 'mode': mode}
        self.emit(options, COLUMNS, rows, params, extra={'failures': len(self._errors)})
        self.summary(len(rows))

        if self._errors:
            raise CommandError('%i grid points did not converge' % len(self._errors), returncode=EXIT_NUMERICAL)
