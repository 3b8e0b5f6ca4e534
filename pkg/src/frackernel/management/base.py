"""
Shared plumbing of the frackernel management commands: colored feedback,
table output, config-file handling and the mapping of numerical errors
onto exit codes.
"""
import io
import math

import numpy as np
import termcolor

from django.core.management.base import BaseCommand, CommandError

import frackernel
from frackernel.core.context import QuadConfig
from frackernel.core.exceptions import FracKernelException, ConvergenceException, ConfigurationException
from frackernel.utils import read_config_file, write_table


# Exit codes
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def parse_grid(text):
    """
    '0.1,1,10' lists the values; 'a:b:n' spans n log-spaced values from a to b.
    """
    text = (text or '').strip()
    if not text:
        return []
    try:
        if ':' in text:
            a, b, n = text.split(':')
            a, b, n = float(a), float(b), int(n)
            if not (a > 0 and b > 0 and n >= 1):
                raise ValueError
            return [float(v) for v in np.logspace(math.log10(a), math.log10(b), n)]
        return [float(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise ConfigurationException('grid', 'cannot parse %r' % text)


class FracKernelCommand(BaseCommand):
    """
    Base class; subclasses implement `real_handle(**options)` and return
    nothing. Data goes to stdout (or --output), feedback to stderr.
    """
    requires_system_checks = []

    # Options read as `key = value` from --config; explicit flags win.
    config_keys = ()

    def add_arguments(self, parser):
        parser.add_argument('--format', dest='format', choices=('csv', 'json'), default=None,
                            help='Output format (default: csv)')
        parser.add_argument('--output', dest='output', default=None, help='Write the table to this file')
        parser.add_argument('--config', dest='config', default=None, help='Key-value file with default options')
        parser.add_argument('--threads', dest='threads', type=int, default=None, help='Worker threads')
        parser.add_argument('--boring', action='store_true', dest='boring', help='No colors in output')
        parser.add_argument('--rel-tol', dest='rel_tol', type=float, default=None)
        parser.add_argument('--abs-tol', dest='abs_tol', type=float, default=None)
        parser.add_argument('--max-depth', dest='max_depth', type=int, default=None)
        parser.add_argument('--truncate-tail', dest='truncate_tail', type=float, default=None,
                            help='Cut the subordinator integral at s = M instead of using the analytic tail')

    def colored(self, text, *args, **kwargs):
        if self.boring:
            return text
        else:
            return termcolor.colored(text, *args, **kwargs)

    def print_error(self, text):
        self._errors.append(text)
        self.stderr.write(self.colored(text, 'white', 'on_red'), style_func=lambda x: x)

    def feedback(self, text, color='yellow'):
        self.stderr.write(self.colored(text, color), style_func=lambda x: x)

    def progress(self, i, total, text):
        if self.verbosity >= 2:
            self.feedback('%i / %i | %s' % (i + 1, total, text))

    def handle(self, *args, **options):
        self.verbosity = int(options.get('verbosity', 1))
        self.boring = bool(options.get('boring'))
        self._errors = []

        try:
            options = self._merge_config(options)
            self.real_handle(**options)
        except ConvergenceException as e:
            raise CommandError(str(e), returncode=EXIT_NUMERICAL)
        except FracKernelException as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

    def _merge_config(self, options):
        """
        Fill in options not given on the command line from the --config file.
        """
        if not options.get('config'):
            return options
        try:
            values = read_config_file(options['config'])
        except (IOError, OSError) as e:
            raise ConfigurationException('--config', str(e))

        known = set(self.config_keys) | set(('format', 'output', 'threads', 'rel_tol', 'abs_tol',
                                             'max_depth', 'truncate_tail'))
        for key, value in values.items():
            if key not in known:
                raise ConfigurationException(options['config'], 'unknown key %r' % key)
            if options.get(key) is None:
                options[key] = value
        return options

    def option(self, options, name, convert=float, default=None, required=False):
        """
        Converted value of an option after config-file merging; config-file
        values arrive as strings.
        """
        value = options.get(name)
        flag = '--%s' % name.replace('_', '-')
        if value is None:
            if required:
                raise ConfigurationException(flag, 'is required')
            return default
        try:
            return convert(value)
        except (TypeError, ValueError):
            raise ConfigurationException(flag, 'bad value %r' % (value, ))

    def quad_config(self, options):
        changes = []
        if options.get('rel_tol') is not None:
            changes.append('rel-tol=%s' % options['rel_tol'])
        if options.get('abs_tol') is not None:
            changes.append('abs-tol=%s' % options['abs_tol'])
        if options.get('max_depth') is not None:
            changes.append('max-depth=%s' % options['max_depth'])
        if options.get('truncate_tail') is not None:
            changes.append('truncate-tail=%s' % options['truncate_tail'])
        return QuadConfig(changes)

    def threads(self, options):
        value = options.get('threads')
        if value is None:
            return None
        try:
            value = int(value)
        except ValueError:
            raise ConfigurationException('--threads', 'not an integer: %r' % (value, ))
        if value < 1:
            raise ConfigurationException('--threads', 'must be at least 1')
        return value

    def emit(self, options, columns, rows, params, seed=None, extra=None):
        """
        Write the table in the requested format.
        """
        fmt = options.get('format') or 'csv'
        meta = {
            'command': self.command_name,
            'params': params,
            'seed': seed,
            'version': frackernel.__version__,
        }
        meta.update(extra or {})

        buffer = io.StringIO()
        write_table(buffer, fmt, columns, rows, meta)

        if options.get('output'):
            with io.open(options['output'], 'w', encoding='utf-8', newline='') as f:
                f.write(buffer.getvalue())
        else:
            self.stdout.write(buffer.getvalue(), ending='')

    def summary(self, count, noun='points evaluated'):
        self.feedback('*** %i %s, %i failures ***' % (count, noun, len(self._errors)),
                      'green' if not self._errors else 'red')
