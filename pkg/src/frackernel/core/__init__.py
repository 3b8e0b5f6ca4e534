#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Numerical core of frackernel.
"""
from frackernel.core.context import QuadConfig
from frackernel.core.exceptions import DomainException
from frackernel.core.kernels import EvalPoint, as_profile
from frackernel.core.stable import StableLaw
from frackernel.core.transform import subordinated_density, inverse_subordinated_density


def evaluate_kernel(kernel, law, mode, point, cfg=None):
    """
    Transformed kernel for a ProfileKernel and a StableLaw built by the
    caller, `mode` being 'sub' or 'invsub'. Returns a KernelValue.
    """
    if mode not in ('sub', 'invsub'):
        raise DomainException('evaluate', "mode must be 'sub' or 'invsub', got %r" % (mode, ))
    transform = subordinated_density if mode == 'sub' else inverse_subordinated_density
    return transform(kernel, law, EvalPoint(*point), cfg or QuadConfig())


def evaluate(base, d, beta, mode, point, gamma=None, cfg=None):
    """
    Same for a named base ('gauss', 'cauchy' or 'stable').
    """
    return evaluate_kernel(as_profile(base, d, gamma), StableLaw(beta), mode, point, cfg)
