"""Complex sequences, aperiodic correlation, and demerit factors.

A sequence A = (a_0, ..., a_{n-1}) is correlated against an equal-length
sequence B at integer shift u through

    C_{A,B}(u) = sum_j a_j * conj(b_{j+u}),

with a_j = b_j = 0 outside 0 <= j < n, so u ranges over [-(n-1), n-1].
Demerit factors normalise the squared correlation magnitudes:

    adf(A)    = sum_{u != 0} |C_{A,A}(u)|^2 / C_{A,A}(0)^2
    cdf(A,B)  = sum_u |C_{A,B}(u)|^2 / (C_{A,A}(0) * C_{B,B}(0))
    psc(A,B)  = sqrt(adf(A) * adf(B)) + cdf(A,B)

psc is always >= 1, with equality exactly for Golay pairs (pairs whose
autocorrelations cancel at every nonzero shift).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSequence, InvalidShift, InvalidSpec, LengthMismatch
from .numutil import next_pow2, sum_squared_magnitudes

# C_{A,A}(0) below this times n is treated as an all-zero sequence; avoids
# division blowup in the demerit factors.
_DEGENERATE_C0 = 1e-12

_PHASE_TOL = 1e-12


@dataclass(frozen=True)
class Sequence:
    """Finite complex sequence, optionally with an exact phase representation.

    When ``phase_modulus`` L and integer ``phases`` p_j are present the
    entries are exactly exp(i*pi*p_j/L); this makes unimodular sequences
    regenerable bit-for-bit and equality testable on integers.
    """

    entries: np.ndarray
    phase_modulus: int | None = None
    phases: np.ndarray | None = None

    def __post_init__(self):
        entries = np.ascontiguousarray(self.entries, dtype=np.complex128)
        if entries.ndim != 1 or entries.size == 0:
            raise InvalidSpec("sequence must be one-dimensional with length >= 1")
        if not np.any(entries != 0):
            raise DegenerateSequence("sequence must contain at least one nonzero entry")
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)
        if (self.phase_modulus is None) != (self.phases is None):
            raise InvalidSpec("phase_modulus and phases must be given together")
        if self.phases is not None:
            modulus = int(self.phase_modulus)
            if modulus < 1:
                raise InvalidSpec("phase modulus must be >= 1")
            phases = np.ascontiguousarray(self.phases, dtype=np.int64)
            if phases.shape != entries.shape:
                raise InvalidSpec("phases must have one integer per entry")
            regenerated = np.exp(1j * np.pi * (phases / modulus))
            if np.max(np.abs(np.abs(entries) - 1.0)) > _PHASE_TOL:
                raise InvalidSpec("phase-exact entries must be unimodular")
            if np.max(np.abs(entries - regenerated)) > _PHASE_TOL:
                raise InvalidSpec("entries do not match exp(i*pi*p/L) phases")
            phases.flags.writeable = False
            object.__setattr__(self, "phase_modulus", modulus)
            object.__setattr__(self, "phases", phases)

    @classmethod
    def from_entries(cls, values) -> "Sequence":
        return cls(np.asarray(values, dtype=np.complex128))

    @classmethod
    def from_phases(cls, modulus: int, phases) -> "Sequence":
        """Build exp(i*pi*p_j/modulus) from integer phases (canonicalised mod 2L)."""
        modulus = int(modulus)
        if modulus < 1:
            raise InvalidSpec("phase modulus must be >= 1")
        p = np.asarray(phases, dtype=np.int64) % (2 * modulus)
        entries = np.exp(1j * np.pi * (p / modulus))
        return cls(entries, phase_modulus=modulus, phases=p)

    @property
    def n(self) -> int:
        return self.entries.size

    @property
    def phase_exact(self) -> bool:
        return self.phases is not None


@dataclass(frozen=True)
class CorrelationProfile:
    """Correlation values for shifts u in [-(n-1), n-1].

    Stored as a flat complex array of length 2n-1 under the index map
    u -> u + (n-1).
    """

    values: np.ndarray
    n: int
    method: str

    def __post_init__(self):
        values = np.ascontiguousarray(self.values, dtype=np.complex128)
        if values.size != 2 * self.n - 1:
            raise InvalidSpec("profile must hold 2n-1 values")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    def value_at(self, u: int) -> complex:
        if not -self.n < u < self.n:
            raise InvalidShift(f"shift {u} outside [-(n-1), n-1] for n={self.n}")
        return complex(self.values[u + self.n - 1])

    def shifts(self) -> np.ndarray:
        return np.arange(-(self.n - 1), self.n)


def _check_equal_length(a: Sequence, b: Sequence) -> int:
    if a.n != b.n:
        raise LengthMismatch(f"sequence lengths differ: {a.n} != {b.n}")
    return a.n


def crosscorrelation_naive(a: Sequence, b: Sequence) -> CorrelationProfile:
    """Aperiodic crosscorrelation by direct O(n^2) summation.

    Returns the profile with values[u] = sum_j a_j * conj(b_{j+u}) for
    u in [-(n-1), n-1].
    """
    n = _check_equal_length(a, b)
    # np.correlate computes sum_j a_{j+k} conj(b_j); reversing gives our
    # orientation values[u + n - 1] = C(u).
    vals = np.correlate(a.entries, b.entries, mode="full")[::-1]
    return CorrelationProfile(vals, n=n, method="naive")


def crosscorrelation_fft(a: Sequence, b: Sequence) -> CorrelationProfile:
    """Aperiodic crosscorrelation via FFTs of power-of-two length >= 2n-1.

    Agrees with crosscorrelation_naive within 1e-9*n per shift; O(n log n).
    """
    n = _check_equal_length(a, b)
    size = next_pow2(2 * n - 1)
    fa = np.fft.fft(a.entries, size)
    fb = fa if b.entries is a.entries else np.fft.fft(b.entries, size)
    # conj(ifft(conj(FA)*FB))[k] = sum_j a_j conj(b_{j+k}) circularly; the
    # zero padding makes the circular correlation equal the aperiodic one.
    t = np.conj(np.fft.ifft(np.conj(fa) * fb))
    vals = np.concatenate((t[size - (n - 1):], t[:n]))
    return CorrelationProfile(vals, n=n, method="fft")


def _autocorrelation(a: Sequence, method: str) -> CorrelationProfile:
    if method == "naive":
        return crosscorrelation_naive(a, a)
    if method == "fft":
        return crosscorrelation_fft(a, a)
    raise InvalidSpec(f"unknown correlation method: {method!r}")


def _crosscorrelation(a: Sequence, b: Sequence, method: str) -> CorrelationProfile:
    if method == "naive":
        return crosscorrelation_naive(a, b)
    if method == "fft":
        return crosscorrelation_fft(a, b)
    raise InvalidSpec(f"unknown correlation method: {method!r}")


def _zero_shift_energy(a: Sequence) -> float:
    c0 = math.fsum(a.entries.real**2 + a.entries.imag**2)
    if c0 < _DEGENERATE_C0 * a.n:
        raise DegenerateSequence("zero-shift autocorrelation is numerically zero")
    return c0


def _adf_from_profile(profile: CorrelationProfile, c0: float) -> float:
    mags = profile.values.real**2 + profile.values.imag**2
    center = profile.n - 1
    total = math.fsum(mags[:center]) + math.fsum(mags[center + 1:])
    return total / (c0 * c0)


def adf(a: Sequence, method: str = "fft") -> float:
    """Autocorrelation demerit factor of a (zero shift excluded)."""
    c0 = _zero_shift_energy(a)
    return _adf_from_profile(_autocorrelation(a, method), c0)


def cdf(a: Sequence, b: Sequence, method: str = "fft") -> float:
    """Crosscorrelation demerit factor of (a, b); the zero shift is included."""
    _check_equal_length(a, b)
    c0a = _zero_shift_energy(a)
    c0b = _zero_shift_energy(b)
    total = sum_squared_magnitudes(_crosscorrelation(a, b, method).values)
    return total / (c0a * c0b)


@dataclass(frozen=True)
class DemeritReport:
    """Demerit factors of a pair plus the slack in the two-sided bound

    1 - sqrt(adf_a*adf_b) <= cdf <= 1 + sqrt(adf_a*adf_b),

    and the worst violation of the Golay cancellation condition.
    """

    adf_a: float
    adf_b: float
    cdf: float
    psc: float
    bound_lower_slack: float
    bound_upper_slack: float
    golay_defect: float

    _KEYS = ("adf_a", "adf_b", "cdf", "psc",
             "bound_lower_slack", "bound_upper_slack", "golay_defect")

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self._KEYS}


def golay_defect(a: Sequence, b: Sequence, method: str = "fft") -> float:
    """max over u != 0 of |C_{A,A}(u) + C_{B,B}(u)|; zero exactly for Golay pairs."""
    n = _check_equal_length(a, b)
    if n == 1:
        return 0.0
    paa = _autocorrelation(a, method)
    pbb = _autocorrelation(b, method)
    s = np.abs(paa.values + pbb.values)
    center = n - 1
    return float(max(s[:center].max(), s[center + 1:].max()))


def psc(a: Sequence, b: Sequence, method: str = "fft") -> DemeritReport:
    """Full demerit report for the pair (a, b)."""
    n = _check_equal_length(a, b)
    c0a = _zero_shift_energy(a)
    c0b = _zero_shift_energy(b)
    paa = _autocorrelation(a, method)
    pbb = _autocorrelation(b, method)
    pab = _crosscorrelation(a, b, method)

    adf_a = _adf_from_profile(paa, c0a)
    adf_b = _adf_from_profile(pbb, c0b)
    cdf_ab = sum_squared_magnitudes(pab.values) / (c0a * c0b)
    root = math.sqrt(adf_a * adf_b)

    if n == 1:
        defect = 0.0
    else:
        s = np.abs(paa.values + pbb.values)
        defect = float(max(s[: n - 1].max(), s[n:].max()))

    return DemeritReport(
        adf_a=adf_a,
        adf_b=adf_b,
        cdf=cdf_ab,
        psc=root + cdf_ab,
        bound_lower_slack=cdf_ab - 1.0 + root,
        bound_upper_slack=root - (cdf_ab - 1.0),
        golay_defect=defect,
    )
