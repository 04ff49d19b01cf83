"""Small numeric helpers: exact summation and extended-precision phase reduction.

Demerit factors accumulate up to ~10**6 squared magnitudes and Gauss sums
accumulate up to ~10**6 unit phasors, so plain running sums are not good
enough; sums go through math.fsum, which is exact for binary doubles.
Quadratic phases x*j**2/2 + theta*j are reduced modulo 1 with a Dekker
two-product so the reduced fraction keeps ~1e-16 absolute accuracy even
when the unreduced phase is ~1e6.
"""

from __future__ import annotations

import math

import numpy as np

_SPLIT = 134217729.0  # 2**27 + 1, Dekker splitting constant


def next_pow2(n: int) -> int:
    """Smallest power of two >= n (n >= 1)."""
    return 1 << (int(n) - 1).bit_length()


def two_prod(a: float, b: np.ndarray | float):
    """Return (p, e) with p = fl(a*b) and a*b = p + e exactly."""
    p = a * b
    c = _SPLIT * a
    a_hi = c - (c - a)
    a_lo = a - a_hi
    cb = _SPLIT * b
    b_hi = cb - (cb - b)
    b_lo = b - b_hi
    e = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, e


def quadratic_phase_fractions(x: float, theta: float, j: np.ndarray) -> np.ndarray:
    """Fractional parts of x*j**2/2 + theta*j, accurate to ~1e-16 absolute.

    j must hold integers small enough that j*j is exact in a double
    (|j| <= 2**26). The full phase is then 2*pi times the result.
    """
    j2h = (j * j) / 2.0
    p1, e1 = two_prod(float(x), j2h)
    p2, e2 = two_prod(float(theta), j)
    # fmod is exact on doubles; the error terms are far below 1, so one
    # final reduction suffices.
    r = np.fmod(p1, 1.0) + np.fmod(p2, 1.0) + e1 + e2
    return np.fmod(r, 1.0)


def sum_exact(values) -> float:
    """Compensated (exact) sum of a float array."""
    return math.fsum(values)


def sum_exact_complex(values: np.ndarray) -> complex:
    """Compensated (exact) sum of a complex array."""
    return complex(math.fsum(values.real), math.fsum(values.imag))


def sum_squared_magnitudes(values: np.ndarray) -> float:
    """Exact sum of |v|**2 over a complex array."""
    return math.fsum(values.real * values.real + values.imag * values.imag)
