#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Quadrature settings shared by every integral in the numerical core.
"""
from frackernel.core.exceptions import ConfigurationException
from frackernel.utils import get_setting, get_quad_options


def density_range():
    """
    Range of the stable density. Above the upper end the large-s series
    is always used and the analytic tail starts there. The tabulated density
    reaches at least down to the lower end; further down it holds the
    zero-side form.
    """
    lower, upper = get_setting('FRACKERNEL_DENSITY_RANGE', (1e-8, 1e12))
    return float(lower), float(upper)


class AnalyticTail(object):
    """
    Integrate up to the upper end of the density range with the integrated
    density, and beyond it with the power-law tail of the stable law.
    """
    truncate = False

    @property
    def M(self):
        return density_range()[1]

    def __repr__(self):
        return 'AnalyticTail()'

    def __eq__(self, other):
        return isinstance(other, AnalyticTail)


class HardTruncate(object):
    """
    Drop the part of the integral above s = M.
    """
    truncate = True

    def __init__(self, M):
        M = float(M)
        if not M > 0:
            raise ConfigurationException('truncate-tail', 'M must be positive, got %r' % M)
        self.M = M

    def __repr__(self):
        return 'HardTruncate(%r)' % self.M

    def __eq__(self, other):
        return isinstance(other, HardTruncate) and other.M == self.M


class QuadConfig(object):
    """
    Tolerances, subdivision limit and tail policy for the quadratures.
    Defaults can be changed for a whole project through
    settings.FRACKERNEL_QUADRATURE; `options` and keyword arguments are
    applied on top of that.
    """
    def __init__(self, options=None, **kwargs):
        # Default settings
        self.rel_tol = 1e-9
        self.abs_tol = 1e-300
        self.max_depth = 40
        self.tail_policy = AnalyticTail()

        for o in get_quad_options():
            self.change(o)
        for o in options or []:
            self.change(o)

        for key, value in kwargs.items():
            if key not in ('rel_tol', 'abs_tol', 'max_depth', 'tail_policy'):
                raise ConfigurationException('QuadConfig', 'unknown field %r' % key)
            setattr(self, key, value)

        self.validate()

    def change(self, value):
        """
        Change an option, given as 'name' or 'name=argument'.
        """
        actions = {
            'analytic-tail': ('tail_policy', lambda arg: AnalyticTail()),
            'truncate-tail': ('tail_policy', HardTruncate),
            'rel-tol': ('rel_tol', float),
            'abs-tol': ('abs_tol', float),
            'max-depth': ('max_depth', int),
        }
        name, _, argument = value.partition('=')
        name = name.strip()

        if name not in actions:
            raise ConfigurationException('QuadConfig', 'No such quadrature option: %s' % value)

        attr, convert = actions[name]
        if argument == '' and name != 'analytic-tail':
            raise ConfigurationException('QuadConfig', 'Option %s needs a value' % name)
        try:
            setattr(self, attr, convert(argument.strip()))
        except ValueError:
            raise ConfigurationException('QuadConfig', 'Bad value for %s: %r' % (name, argument))

    def validate(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ConfigurationException('QuadConfig', 'tolerances must be positive')
        if int(self.max_depth) != self.max_depth or self.max_depth < 4:
            raise ConfigurationException('QuadConfig', 'max_depth must be an integer >= 4')
        if not isinstance(self.tail_policy, (AnalyticTail, HardTruncate)):
            raise ConfigurationException('QuadConfig', 'unknown tail policy %r' % (self.tail_policy,))

    def __repr__(self):
        return 'QuadConfig(rel_tol=%r, abs_tol=%r, max_depth=%r, tail_policy=%r)' % (
                self.rel_tol, self.abs_tol, self.max_depth, self.tail_policy)
