"""Closed-form Chu autocorrelation magnitudes and demerit factors.

The autocorrelation of a Chu sequence collapses to a geometric sum, which
gives exact sine-ratio expressions for the shift magnitudes and for the
whole demerit factor. These are used as the fast path for large lengths
and as the independent oracle against the direct correlation route.

With d = gcd(a, n), m = n/d and b = a/d:

    |C(u)| = |sin(pi*b*u^2/m) / sin(pi*b*u/m)|   when m does not divide u,
    |C(km)| = n - km                             at multiples of m,

and

    adf = (4d/n^2) * sum_{1 <= u <= m/2} (sin(pi*b*u^2/m)/sin(pi*b*u/m))^2
          + (d-1)(2d-1)/(3d) - 2*d*eps_m/n^2,

where eps_m = 1 if m = 2 (mod 4) and 0 otherwise. The sum includes the
endpoint u = m/2 for even m; the eps term removes exactly the resulting
double count, which is how the formula is validated against brute force.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument, InvalidShift, InvalidSpec


@dataclass(frozen=True)
class ChuAdfBreakdown:
    """Closed-form adf of a Chu sequence, term by term.

    adf = (4d/n^2)*sine_sum + gcd_term - epsilon_term.
    """

    d: int
    m: int
    sine_sum: float
    gcd_term: float
    epsilon_term: float
    adf: float


def _split_parameter(n: int, a: int) -> tuple[int, int, int]:
    """Return (d, m, b) with d = gcd(a, n), n = d*m, a = d*b."""
    if n < 1:
        raise InvalidSpec(f"length must be >= 1, got {n}")
    r = abs(a) % n
    d = math.gcd(r, n) if r else n
    return d, n // d, a // d


def _sine_ratio_terms(m: int, b: int, u: np.ndarray) -> np.ndarray:
    """(sin(pi*b*u^2/m) / sin(pi*b*u/m))^2 for u not a multiple of m.

    Arguments are reduced mod 2m in integer arithmetic first, so the sine
    arguments stay in [0, 2*pi) and keep full precision at large m.
    """
    two_m = np.uint64(2 * m)
    b_red = np.uint64(b % (2 * m))
    uu = u.astype(np.uint64)
    num = ((uu * uu) % two_m * b_red) % two_m
    den = (uu * b_red) % two_m
    assert not np.any(den == 0), "zero denominator inside the sine sum"
    sn = np.sin(np.pi * (num.astype(np.float64) / m))
    sd = np.sin(np.pi * (den.astype(np.float64) / m))
    return (sn / sd) ** 2


def chu_adf_closed(n: int, a: int) -> ChuAdfBreakdown:
    """Closed-form autocorrelation demerit factor of the (n, a) Chu sequence."""
    d, m, b = _split_parameter(n, a)
    u = np.arange(1, m // 2 + 1, dtype=np.int64)
    sine_sum = math.fsum(_sine_ratio_terms(m, b, u)) if u.size else 0.0
    eps = 1 if m % 4 == 2 else 0
    gcd_term = (d - 1) * (2 * d - 1) / (3 * d)
    epsilon_term = 2.0 * d * eps / (n * n)
    value = (4.0 * d / (n * n)) * sine_sum + gcd_term - epsilon_term
    return ChuAdfBreakdown(d=d, m=m, sine_sum=sine_sum,
                           gcd_term=gcd_term, epsilon_term=epsilon_term, adf=value)


def chu_acf_magnitude(n: int, a: int, u: int) -> float:
    """|C(u)| of the (n, a) Chu autocorrelation at shift 0 <= u < n."""
    if not 0 <= u < n:
        raise InvalidShift(f"shift {u} outside [0, n) for n={n}")
    d, m, b = _split_parameter(n, a)
    if u % m == 0:
        return float(n - u)
    return float(np.sqrt(_sine_ratio_terms(m, b, np.array([u], dtype=np.int64))[0]))


def chu_acf_magnitudes(n: int, a: int) -> np.ndarray:
    """Closed-form |C(u)| for every shift 0 <= u < n at once."""
    d, m, b = _split_parameter(n, a)
    u = np.arange(n, dtype=np.int64)
    out = np.empty(n, dtype=np.float64)
    multiple = u % m == 0
    out[multiple] = (n - u[multiple]).astype(np.float64)
    if not multiple.all():
        out[~multiple] = np.sqrt(_sine_ratio_terms(m, b, u[~multiple]))
    return out


def sine_ratio_partial_sums(n: int) -> tuple[float, float]:
    """The two normalised partial sums

        n^{-3/2} * sum_{1 <= u <= n/2} (sin(pi*u^2/n) / sin(pi*u/n))^2,
        n^{-3/2} * sum_{1 <= u <= n/2} (sin(pi*u^2/n) / (pi*u/n))^2.

    Both converge to 1/(2*pi) as n grows.
    """
    if n < 2:
        raise InvalidArgument(f"need n >= 2, got {n}")
    u = np.arange(1, n // 2 + 1, dtype=np.uint64)
    two_n = np.uint64(2 * n)
    num = ((u * u) % two_n).astype(np.float64)
    sn = np.sin(np.pi * num / n)
    uf = u.astype(np.float64)
    first = math.fsum((sn / np.sin(np.pi * uf / n)) ** 2)
    second = math.fsum((sn / (np.pi * uf / n)) ** 2)
    scale = n ** 1.5
    return first / scale, second / scale
