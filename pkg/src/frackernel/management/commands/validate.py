"""
Ratio of the computed kernel to its asymptotic form over a sweep of the
similarity variable A.

    frackernel validate --case thm1a --base gauss --d 1 --beta 0.5 --a-min 10 --a-max 1e4

Without --a-min and --a-max the grid runs over A in [10, 1e4] for the limits
at infinity and over [1e-4, 1e-1] for the limits at the origin.
"""
from django.core.management.base import CommandError

from frackernel.core.validation import CASES, ratio_sweep
from frackernel.core.exceptions import ConfigurationException
from frackernel.management.base import FracKernelCommand, EXIT_NUMERICAL


COLUMNS = ('A', 'quadrature', 'asymptotic', 'ratio', 'log_deviation', 'flag')


class Command(FracKernelCommand):
    help = "Compare the time-changed kernel with its asymptotics along a similarity sweep."
    command_name = 'validate'
    config_keys = ('case', 'base', 'd', 'gamma', 'beta', 'a_min', 'a_max', 'points', 'tolerance')

    def add_arguments(self, parser):
        FracKernelCommand.add_arguments(self, parser)
        parser.add_argument('--case', dest='case', default=None,
                            help='One of: %s' % ', '.join(sorted(CASES)))
        parser.add_argument('--base', dest='base', choices=('gauss', 'cauchy', 'stable'), default=None)
        parser.add_argument('--d', dest='d', default=None)
        parser.add_argument('--gamma', dest='gamma', default=None)
        parser.add_argument('--beta', dest='beta', default=None)
        parser.add_argument('--a-min', dest='a_min', default=None)
        parser.add_argument('--a-max', dest='a_max', default=None)
        parser.add_argument('--points', dest='points', default=None)
        parser.add_argument('--tolerance', dest='tolerance', default=None,
                            help='Largest accepted deviation over the extreme decade (default 0.02)')

    def real_handle(self, **options):
        case = self.option(options, 'case', str, required=True)
        if case not in CASES:
            raise ConfigurationException('--case', 'unknown case %r' % case)
        base = self.option(options, 'base', str, 'gauss')
        d = self.option(options, 'd', float, 1.)
        gamma = self.option(options, 'gamma', float)
        beta = self.option(options, 'beta', float, required=True)
        a_min = self.option(options, 'a_min', float)
        a_max = self.option(options, 'a_max', float)
        points = self.option(options, 'points', int, 13)
        tolerance = self.option(options, 'tolerance', float, .02)

        rows, summary = ratio_sweep(case, base, d, beta, gamma, a_min, a_max, points,
                                    cfg=self.quad_config(options), workers=self.threads(options))

        for i, row in enumerate(rows):
            self.progress(i, len(rows), 'A=%g ratio=%.6g' % (row.A, row.ratio))
            if row.flag:
                self.print_error('ERROR: no convergence at A=%g' % row.A)

        params = {'case': case, 'base': base, 'd': d, 'gamma': gamma, 'beta': beta,
                  'a_min': rows[0].A, 'a_max': rows[-1].A, 'points': points, 'tolerance': tolerance}
        extra = {'summary': {
            'max_deviation': summary.max_deviation,
            'decade': list(summary.decade),
            'measure': 'log' if summary.log_space else 'ratio',
            'failures': summary.failures,
        }}
        self.emit(options, COLUMNS, [tuple(r) for r in rows], params, extra=extra)

        measure = '|log p - log asym| / |log asym|' if summary.log_space else '|ratio - 1|'
        self.feedback('max %s over A in [%g, %g]: %.6g (tolerance %g)'
                      % (measure, summary.decade[0], summary.decade[1], summary.max_deviation, tolerance))
        self.summary(len(rows))

        if self._errors:
            raise CommandError('%i sweep points did not converge' % len(self._errors), returncode=EXIT_NUMERICAL)
        if not summary.max_deviation <= tolerance:
            raise CommandError('deviation %.6g exceeds the tolerance %g' % (summary.max_deviation, tolerance),
                               returncode=EXIT_NUMERICAL)
