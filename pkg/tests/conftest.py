import numpy as np
import pytest


def xcorr_reference(a, b):
    """Correlation oracle: the definition as a literal double loop.

    Returns {u: sum_j a_j * conj(b_{j+u})} for u in [-(n-1), n-1].
    Deliberately independent of the library's correlation code paths.
    """
    a = list(a)
    b = list(b)
    n = len(a)
    out = {}
    for u in range(-(n - 1), n):
        s = 0j
        for j in range(n):
            k = j + u
            if 0 <= k < n:
                s += complex(a[j]) * complex(b[k]).conjugate()
        out[u] = s
    return out


def random_unimodular(rng: np.random.Generator, n: int) -> np.ndarray:
    return np.exp(2j * np.pi * rng.random(n))


@pytest.fixture
def rng():
    return np.random.default_rng(987654321)
