"""
Draw a reproducible batch from the subordinator, its inverse, or the
time-changed Gauss/Cauchy process (radii).

    frackernel sample --beta 0.5 --n 100000 --seed 7 --kind inverse --ks
"""
import numpy as np

from frackernel.core.exceptions import ConfigurationException
from frackernel.core.montecarlo import (sample_subordinator, sample_inverse_subordinator, sample_timechanged,
                                        compare_ecdf, ks_critical_value, Mode)
from frackernel.core.stable import StableLaw
from frackernel.management.base import FracKernelCommand


COLUMNS = ('index', 'value')


class Command(FracKernelCommand):
    help = "Sample the subordinator, its inverse, or a time-changed base process."
    command_name = 'sample'
    config_keys = ('kind', 'beta', 't', 'n', 'seed', 'base', 'd', 'mode')

    def add_arguments(self, parser):
        FracKernelCommand.add_arguments(self, parser)
        parser.add_argument('--kind', dest='kind', choices=('subordinator', 'inverse', 'timechanged'), default=None)
        parser.add_argument('--beta', dest='beta', default=None)
        parser.add_argument('--t', dest='t', default=None)
        parser.add_argument('--n', dest='n', default=None, help='Sample size')
        parser.add_argument('--seed', dest='seed', default=None, help='64-bit seed (default 0)')
        parser.add_argument('--base', dest='base', choices=('gauss', 'cauchy'), default=None)
        parser.add_argument('--d', dest='d', default=None)
        parser.add_argument('--mode', dest='mode', choices=('sub', 'invsub'), default=None)
        parser.add_argument('--ks', action='store_true', dest='ks',
                            help='Compare the empirical CDF with the computed one (subordinator and inverse)')

    def real_handle(self, **options):
        kind = self.option(options, 'kind', str, 'subordinator')
        law = StableLaw(self.option(options, 'beta', float, required=True))
        t = self.option(options, 't', float, 1.)
        n = self.option(options, 'n', int, 1000)
        seed = self.option(options, 'seed', int, 0)
        params = {'kind': kind, 'beta': law.beta, 't': t, 'n': n}

        if kind == 'subordinator':
            batch = sample_subordinator(law, t, n, seed)
            reference = lambda x: law.cdf(x / t ** (1. / law.beta))
        elif kind == 'inverse':
            batch = sample_inverse_subordinator(law, t, n, seed)
            reference = lambda s: law.inverse_cdf_time(t, s)
        else:
            base = self.option(options, 'base', str, 'gauss')
            d = self.option(options, 'd', float, 1.)
            mode = self.option(options, 'mode', str, 'sub')
            batch = sample_timechanged(base, d, law, Mode(mode), t, n, seed)
            reference = None
            params.update({'base': base, 'd': d, 'mode': mode})

        extra = {'law': batch.law_tag}
        if options.get('ks'):
            if reference is None:
                raise ConfigurationException('--ks', 'only available for the subordinator and its inverse')
            report = compare_ecdf(batch, reference)
            critical = ks_critical_value(batch.n)
            extra['ks'] = {'statistic': report.ks_statistic, 'critical_value_1pct': critical}
            self.feedback('KS statistic %.6g, 1%% critical value %.6g' % (report.ks_statistic, critical),
                          'green' if report.ks_statistic < critical else 'red')

        rows = list(zip(range(batch.n), (float(v) for v in np.asarray(batch.values))))
        self.emit(options, COLUMNS, rows, params, seed=batch.seed, extra=extra)
        self.summary(batch.n, 'samples drawn')
