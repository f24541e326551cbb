"""Helpers for truncated power series in a small coupling and their remainders.

Coefficients are kept as exact ``Fraction`` values where possible and are
evaluated either in double precision or with ``mpmath`` when a remainder far
below machine epsilon has to be resolved.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

import mpmath
import numpy as np

__all__ = ["sqrt", "partial_sums", "loglog_slope", "remainder_slope", "HIGH_PRECISION_DPS"]

HIGH_PRECISION_DPS = 60


def sqrt(x):
    """Square root that stays in mpmath when given an mpf."""
    if isinstance(x, mpmath.mpf):
        return mpmath.sqrt(x)
    return math.sqrt(x)


def _as_number(c, like):
    if isinstance(like, mpmath.mpf):
        if isinstance(c, Fraction):
            return mpmath.mpf(c.numerator) / c.denominator
        return mpmath.mpf(c)
    return float(c)


def partial_sums(coefficients: Sequence, x) -> list:
    """Partial sums of sum_k c_k x^(2k), one entry per included even order."""
    sums = []
    total = _as_number(0, x)
    x2 = x * x
    power = _as_number(1, x)
    for c in coefficients:
        total = total + _as_number(c, x) * power
        sums.append(total)
        power = power * x2
    return sums


def loglog_slope(xs: Sequence[float], errors: Sequence[float]) -> float:
    """Least-squares slope of log|error| against log x."""
    lx = np.log(np.asarray([float(v) for v in xs]))
    le = np.log(np.abs(np.asarray([float(v) for v in errors])))
    slope, _ = np.polyfit(lx, le, 1)
    return float(slope)


def remainder_slope(
    exact: Callable, truncated: Callable, x0: float, halvings: int = 3, dps: int = HIGH_PRECISION_DPS
) -> float:
    """Empirical order of ``exact(x) - truncated(x)`` over x0, x0/2, ..., x0/2**halvings.

    Both callables receive an ``mpmath.mpf`` so remainders down to 10**-(dps-5)
    are resolved.
    """
    with mpmath.workdps(dps):
        xs = [mpmath.mpf(x0) / 2**i for i in range(halvings + 1)]
        errors = [exact(x) - truncated(x) for x in xs]
        return loglog_slope(xs, errors)
