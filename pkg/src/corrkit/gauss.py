"""Generalized quadratic Gauss sums and their exact reciprocity decomposition.

The central object is

    S_N(x, theta) = sum_{j=1}^{N} exp(pi*i*x*j**2 + 2*pi*i*theta*j),

evaluated here by direct compensated summation with extended-precision
phase reduction. For x in (0, 1) and theta in (-1/2, 1/2] the sum also
satisfies an exact reciprocity-style decomposition into a dual sum of
length M (where N*x + theta = M + epsilon, epsilon in (-1/2, 1/2]),
boundary error-function terms, cotangent corrections, and a remainder R
with |R| < x. The decomposition comes from Poisson summation: each
boundary of the truncated sum contributes one erfc factor per dual
frequency; the two smallest-argument factors are kept exactly and the
tails of the rest sum to the cotangent corrections.

Crosscorrelations of the Chu pairs built in generators reduce exactly to
these sums, which is what correlation_gauss_identity checks shift by
shift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import fresnel

from .errors import InvalidArgument, InvalidShift
from .generators import balanced_chu_pair, conjugate_chu_pair
from .numutil import quadratic_phase_fractions, sum_exact_complex, two_prod
from .seqcore import Sequence, crosscorrelation_fft

_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)
_COT_SERIES_CUTOFF = 1e-3

PAIR_KINDS = ("thm1", "thm2")


def gauss_sum_direct(N: int, x: float, theta: float) -> complex:
    """S_N(x, theta) by direct summation; exact definition, O(N).

    N = 0 is the empty sum. Phases are reduced mod 2*pi through a
    double-double product, so each term carries ~1e-16 phase error even
    when x*N**2 is of order 1e6.
    """
    N = int(N)
    if N < 0:
        raise InvalidArgument(f"sum length must be >= 0, got {N}")
    if N == 0:
        return 0j
    j = np.arange(1.0, N + 1.0)
    frac = quadratic_phase_fractions(x, theta, j)
    return sum_exact_complex(np.exp((2j * np.pi) * frac))


def erfc_diag(t: float) -> complex:
    """erfc evaluated on the diagonal ray: erfc(exp(i*pi/4) * t) for real t.

    Computed through the Fresnel integrals
    C(z) = int_0^z cos(pi*s^2/2) ds and S(z) = int_0^z sin(pi*s^2/2) ds:

        erfc(e^{i pi/4} t) = 1 - e^{i pi/4} * sqrt(2) * (C(v) - i*S(v)),
        v = t * sqrt(2/pi).

    Absolute accuracy is ~1e-15, comfortably inside the 1e-10 contract.
    """
    s, c = fresnel(float(t) * _SQRT_2_OVER_PI)
    return 1.0 - np.exp(0.25j * np.pi) * math.sqrt(2.0) * complex(c, -s)


def erfc_factor(x: float, theta: float) -> complex:
    """exp(-pi*i*theta^2/x) * erfc(e^{i pi/4} * theta * sqrt(pi/x)) for x > 0.

    Equals 1 at theta = 0. For theta*sqrt(pi/x) large this is
    exp(-2*pi*i*theta^2/x - i*pi/4) * sqrt(x)/(pi*theta) up to a relative
    correction of order x/theta^2.
    """
    if x <= 0.0:
        raise InvalidArgument(f"need x > 0, got {x}")
    if theta == 0.0:
        return 1.0 + 0j
    t = theta * math.sqrt(math.pi / x)
    return np.exp(-1j * np.pi * theta * theta / x) * erfc_diag(t)


def erfc_factor_conj(x: float, theta: float) -> complex:
    """Variant of erfc_factor with the erfc factor conjugated.

    exp(-pi*i*theta^2/x) * erfc(e^{-i pi/4} * theta * sqrt(pi/x)).

    This is the form the boundary terms of the exact decomposition take:
    the truncated quadratic sum has boundary integrals int e^{+pi*i*x*s^2} ds,
    whose erfc lives on the opposite diagonal ray from erfc_factor.
    """
    if x <= 0.0:
        raise InvalidArgument(f"need x > 0, got {x}")
    if theta == 0.0:
        return 1.0 + 0j
    t = theta * math.sqrt(math.pi / x)
    return np.exp(-1j * np.pi * theta * theta / x) * np.conj(erfc_diag(t))


def cot_correction(t: float) -> float:
    """cot(pi*t) - 1/(pi*t) on [-1/2, 1/2], with cot_correction(0) = 0.

    Below |t| = 1e-3 the difference is evaluated by series to avoid the
    cancellation between the two poles.
    """
    if not -0.5 <= t <= 0.5:
        raise InvalidArgument(f"need |t| <= 1/2, got {t}")
    if t == 0.0:
        return 0.0
    y = math.pi * t
    if abs(t) < _COT_SERIES_CUTOFF:
        y2 = y * y
        return -y * (1.0 / 3.0 + y2 * (1.0 / 45.0 + y2 * (2.0 / 945.0 + y2 / 4725.0)))
    return math.cos(y) / math.sin(y) - 1.0 / y


def _integer_offset(N: int, x: float, theta: float) -> tuple[int, float]:
    """Split N*x + theta = M + epsilon with M integral, epsilon in (-1/2, 1/2].

    The product N*x is formed with a two-product so the split is exact to
    ~1e-16 even when N*x is of order 1e4; exact half-integers land on
    epsilon = +1/2.
    """
    p, e = two_prod(float(x), float(N))
    hi = p + theta
    v = hi - p
    lo = (p - (hi - v)) + (theta - v) + e
    M = math.ceil(hi - 0.5)
    eps = (hi - M) + lo
    if eps > 0.5:
        M += 1
        eps = (hi - M) + lo
    elif eps <= -0.5:
        M -= 1
        eps = (hi - M) + lo
    return M, eps


@dataclass(frozen=True)
class GaussSumDecomposition:
    """All terms of the exact decomposition of S_N(x, theta).

    total = main_term + half_mu_term + e_terms + g_terms + remainder,
    where total is the directly summed S_N(x, theta), mu is the last
    summand exp(pi*i*x*N^2 + 2*pi*i*theta*N), and |remainder| < x.
    """

    N: int
    x: float
    theta: float
    M: int
    epsilon: float
    mu: complex
    main_term: complex
    half_mu_term: complex
    e_terms: complex
    g_terms: complex
    remainder: complex
    total: complex


def decompose_gauss_sum(N: int, x: float, theta: float) -> GaussSumDecomposition:
    """Exact reciprocity decomposition of S_N(x, theta).

    Requires N >= 1, x in (0, 1), theta in (-1/2, 1/2]. The dual sum
    S_M(-1/x, theta/x) is evaluated by direct summation (M <= N*x + 1/2,
    and M = 0 gives the empty sum).
    """
    N = int(N)
    if N < 1:
        raise InvalidArgument(f"need N >= 1, got {N}")
    if not 0.0 < x < 1.0:
        raise InvalidArgument(f"need x in (0, 1), got {x}")
    if not -0.5 < theta <= 0.5:
        raise InvalidArgument(f"need theta in (-1/2, 1/2], got {theta}")

    M, eps = _integer_offset(N, x, theta)
    mu = complex(np.exp((2j * np.pi) * quadratic_phase_fractions(x, theta, np.array([float(N)]))[0]))
    root_x = math.sqrt(x)

    main = np.exp(1j * (-math.pi * theta * theta / x + 0.25 * math.pi)) / root_x \
        * gauss_sum_direct(M, -1.0 / x, theta / x)
    half_mu = (mu - 1.0) / 2.0
    e_terms = np.exp(0.25j * math.pi) / (2.0 * root_x) \
        * (erfc_factor_conj(x, theta) - mu * erfc_factor_conj(x, eps))
    g_terms = 0.5j * (cot_correction(theta) - mu * cot_correction(eps))

    total = gauss_sum_direct(N, x, theta)
    remainder = total - (main + half_mu + e_terms + g_terms)
    return GaussSumDecomposition(
        N=N, x=x, theta=theta, M=M, epsilon=eps, mu=mu,
        main_term=complex(main), half_mu_term=complex(half_mu),
        e_terms=complex(e_terms), g_terms=complex(g_terms),
        remainder=complex(remainder), total=total,
    )


def magnitude_estimate_admissible(m: int, u: int) -> bool:
    """True when u or m - u lies in [m^(2/3), m/2 - m^(2/3)]."""
    lo = m ** (2.0 / 3.0)
    hi = 0.5 * m - lo
    return lo <= u <= hi or lo <= m - u <= hi


def gauss_magnitude_estimate(m: int, u: int) -> tuple[float, float]:
    """(|S_{m-u}(2/m, u/m)|, sqrt(m/2)) for admissible offsets u.

    The measured magnitude approaches the target with an O(m^(1/3))
    absolute error, i.e. an O(m^(-1/6)) relative one.
    """
    if m < 1:
        raise InvalidArgument(f"need m >= 1, got {m}")
    if not magnitude_estimate_admissible(m, u):
        raise InvalidArgument(
            f"offset u={u} outside the admissible set for m={m}; "
            f"need u or m-u in [m^(2/3), m/2 - m^(2/3)]")
    value = abs(gauss_sum_direct(m - u, 2.0 / m, u / m))
    return value, math.sqrt(m / 2.0)


def _pair_for_kind(pair_kind: str, n: int) -> tuple[Sequence, Sequence]:
    if pair_kind == "thm1":
        return conjugate_chu_pair(n)
    if pair_kind == "thm2":
        return balanced_chu_pair(n)
    raise InvalidArgument(f"unknown pair kind {pair_kind!r}; expected one of {PAIR_KINDS}")


def _identity_rhs(pair_kind: str, n: int, u: int) -> float:
    if pair_kind == "thm1":
        return abs(gauss_sum_direct(n - u, 2.0 / n, u / n))
    if u % 2 == 1:
        return 1.0
    v = u // 2
    return abs(gauss_sum_direct(2 * n - 2 * v, 1.0 / n, v / n))


def correlation_gauss_identity(pair_kind: str, n: int, u: int) -> tuple[float, float]:
    """Both sides of the crosscorrelation/Gauss-sum identity at one shift.

    For the conjugate pair of length n (kind "thm1") and 0 <= u < n:

        |C(u)| = |S_{n-u}(2/n, u/n)|.

    For the balanced pair of length 2n (kind "thm2") and 0 <= u < 2n:
    even shifts u = 2v satisfy |C(u)| = |S_{2n-2v}(1/n, v/n)| and odd
    shifts satisfy |C(u)| = 1, because the summands at j and 2n-u-j
    cancel in pairs leaving only the j = 0 term.
    """
    a, b = _pair_for_kind(pair_kind, n)
    length = a.n
    if not 0 <= u < length:
        raise InvalidShift(f"shift {u} outside [0, {length})")
    lhs = abs(crosscorrelation_fft(a, b).value_at(u))
    return lhs, _identity_rhs(pair_kind, n, u)


def correlation_gauss_identity_sweep(pair_kind: str, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Both identity sides for every shift 0 <= u < length, sharing one profile."""
    a, b = _pair_for_kind(pair_kind, n)
    length = a.n
    profile = crosscorrelation_fft(a, b)
    lhs = np.abs(profile.values[length - 1:])
    rhs = np.array([_identity_rhs(pair_kind, n, u) for u in range(length)])
    return lhs, rhs
