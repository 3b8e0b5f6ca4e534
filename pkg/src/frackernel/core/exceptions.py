#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exceptions raised by the frackernel numerical core.
"""


class FracKernelException(Exception):
    def __init__(self, *args):
        """
        Call:
        FracKernelException(message)
        FracKernelException(subject, message)

        `subject` is whatever the message is about (a law, a kernel, an
        option name...); it is rendered in front of the message.
        """
        if len(args) == 1:
            self.subject, self.message = None, args[0]
        else:
            self.subject, self.message = args[0], args[1]

        if self.subject is None:
            Exception.__init__(self, self.message)
        else:
            Exception.__init__(self, '%s: %s' % (self.subject, self.message))


class DomainException(FracKernelException):
    """
    An argument lies outside the domain of the operation.
    """
    pass


class ConfigurationException(FracKernelException):
    pass


class UnsupportedProfileException(FracKernelException):
    """
    The profile has an infinite moment where the formula needs a finite one.
    """
    pass


class UncoveredCaseException(FracKernelException):
    pass


class DivergenceException(FracKernelException):
    """
    The requested value is infinite.
    """
    pass


class DegenerateSampleException(FracKernelException):
    pass


class ConvergenceException(FracKernelException):
    """
    Quadrature did not reach the requested tolerance. The best estimate
    found so far is kept on the exception.
    """
    def __init__(self, message, estimate=None, error=None):
        FracKernelException.__init__(self, 'quadrature', message)
        self.estimate = estimate
        self.error = error
        # Same estimate in log-space, filled in by the log-space integrator.
        self.log_estimate = None
