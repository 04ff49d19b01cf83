"""Constructors for the sequence families the toolkit studies.

All generators produce phase-exact sequences (integer multiples of pi/L),
so generated files round-trip losslessly and equality is an integer test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpec
from .seqcore import Sequence

_RS_MAX_ORDER = 24  # 2**24 entries is the desk-scale cap


@dataclass(frozen=True)
class ChuSpec:
    """Parameters of a Chu sequence: length n and integer parameter a.

    The generated phases satisfy p_j = a*j**2 (mod 2n) with p_j in [0, 2n),
    giving entries exp(i*pi*a*j**2/n).
    """

    n: int
    a: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpec(f"Chu length must be >= 1, got {self.n}")


def chu_phases(n: int, a: int) -> np.ndarray:
    """Canonical residues a*j**2 mod 2n, computed without overflow.

    j**2 and the reduced products stay below 2**64 for n <= 2**31 and any
    integer a, since a is reduced mod 2n before multiplying.
    """
    ChuSpec(n, a)
    two_n = np.uint64(2 * n)
    a_red = np.uint64(a % (2 * n))
    j = np.arange(n, dtype=np.uint64)
    j2 = (j * j) % two_n
    return ((j2 * a_red) % two_n).astype(np.int64)


def chu(n: int, a: int) -> Sequence:
    """Chu sequence of length n with parameter a: entries exp(i*pi*a*j**2/n)."""
    return Sequence.from_phases(n, chu_phases(n, a))


def rudin_shapiro_pair(m: int) -> tuple[Sequence, Sequence]:
    """Binary pair (A_m, B_m) of length 2**m from the append recursion.

    A_{k+1} = A_k || B_k and B_{k+1} = A_k || (-B_k) starting from
    A_0 = B_0 = (1). Every pair is a Golay pair: the autocorrelations
    cancel at all nonzero shifts.
    """
    if m < 0:
        raise InvalidSpec(f"order must be >= 0, got {m}")
    if m > _RS_MAX_ORDER:
        raise InvalidSpec(f"order {m} exceeds the cap of {_RS_MAX_ORDER}")
    a = np.array([1], dtype=np.int64)
    b = np.array([1], dtype=np.int64)
    for _ in range(m):
        a, b = np.concatenate((a, b)), np.concatenate((a, -b))
    # +1 -> phase 0, -1 -> phase 1 with modulus 1
    return (
        Sequence.from_phases(1, (1 - a) // 2),
        Sequence.from_phases(1, (1 - b) // 2),
    )


def conjugate_chu_pair(n: int) -> tuple[Sequence, Sequence]:
    """The pair (Z, conj(Z)) of length-n Chu sequences with parameters +1, -1.

    Both members have vanishing adf as n grows while the pair's cdf tends
    to 1, so the pair criterion tends to its lower bound.
    """
    return chu(n, 1), chu(n, -1)


def balanced_chu_pair(n: int) -> tuple[Sequence, Sequence]:
    """Length-2n Chu pair with parameters n+1 and n-1.

    Its two adf values and the cdf all tend to the same constant 1/2,
    again driving the pair criterion to 1.
    """
    ChuSpec(n, 0)
    return chu(2 * n, n + 1), chu(2 * n, n - 1)
