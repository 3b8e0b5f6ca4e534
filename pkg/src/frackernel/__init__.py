"""
Heat kernels of processes time-changed by a stable subordinator or its
inverse, with their asymptotics.
"""
__version__ = '0.3.0'
