"""The periodic Bernoulli kernel P1 and its relatives.

P1(x) = x - floor(x) - 1/2 is the weight appearing in every integral
representation of this package; ``g_k`` are the step functions obtained by
subtracting a k-fold compressed copy of -P1 from itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .result import DomainError


@dataclass(frozen=True)
class KernelPoint:
    x: float
    value: float


def _finite(x, name="x"):
    if isinstance(x, np.ndarray):
        if not np.all(np.isfinite(x)):
            raise DomainError(f"{name} must be finite")
    elif not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")


def frac(x):
    """Fractional part ``x - floor(x)`` in [0, 1); accepts scalars or arrays."""
    _finite(x)
    if isinstance(x, np.ndarray):
        f = x - np.floor(x)
        # x - floor(x) can round up to 1.0 for tiny negative x
        return np.where(f >= 1.0, 0.0, f)
    f = x - math.floor(x)
    return 0.0 if f >= 1.0 else f


def p1(x):
    """First periodic Bernoulli polynomial; equals -1/2 at the integers."""
    return frac(x) - 0.5


def p1_point(x: float) -> KernelPoint:
    return KernelPoint(x, p1(x))


def g_k(k: int, x):
    """Step function -P1(x) + P1(kx)/k.

    On [(j-1)/k, j/k) of each period it equals (1 - 1/k)/2 - (j-1)/k; the
    intervals are closed on the left.
    """
    if int(k) != k or k < 2:
        raise DomainError(f"k must be an integer >= 2, got {k!r}")
    k = int(k)
    f = frac(x)
    if isinstance(f, np.ndarray):
        j = np.minimum(np.floor(f * k), k - 1)
    else:
        j = min(math.floor(f * k), k - 1)
    return 0.5 * (1.0 - 1.0 / k) - j / k


def p1_fourier(x, J: int):
    """Fourier partial sum -sum_{j<=J} sin(2 pi j x)/(pi j)."""
    if int(J) != J or J < 1:
        raise DomainError(f"J must be a positive integer, got {J!r}")
    _finite(x)
    # reduce first so that large |x| loses no accuracy in the sines
    xr = frac(x)
    j = np.arange(1, int(J) + 1, dtype=np.float64)
    if isinstance(xr, np.ndarray):
        return -(np.sin(2.0 * np.pi * np.multiply.outer(xr, j)) / (np.pi * j)).sum(axis=-1)
    return float(-np.sum(np.sin(2.0 * np.pi * j * xr) / (np.pi * j)))
