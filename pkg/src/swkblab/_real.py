"""Scalar helpers that let the same code run in double or mpf arithmetic.

Working precision is selected by a decimal digit count: 0 means native
doubles, anything else routes through mpmath at that many digits.
"""

import math
from contextlib import nullcontext

from mpmath import mp


def working_precision(digits):
    """Context manager setting mpmath's precision; no-op when digits == 0."""
    return mp.workdps(digits) if digits else nullcontext()


def to_working(value, digits):
    """Convert a number to the working scalar type (mpf or float)."""
    if digits:
        return value if isinstance(value, mp.mpf) else mp.mpf(value)
    return float(value)


def sqrt_r(v):
    return mp.sqrt(v) if isinstance(v, mp.mpf) else math.sqrt(v)


def sin_r(v):
    return mp.sin(v) if isinstance(v, mp.mpf) else math.sin(v)


def cos_r(v):
    return mp.cos(v) if isinstance(v, mp.mpf) else math.cos(v)


def pi_r(digits):
    """Pi in the working type at the current precision."""
    return +mp.pi if digits else math.pi
