"""Convergence studies: measured quantities against their limits over a grid.

Each study returns ConvergenceRow records and can be serialised to CSV with
the fixed schema ``n,quantity,measured,target,deviation`` (17 significant
digits, rows sorted by (quantity, n)), so identical grids always produce
bit-identical output regardless of how the grid points were scheduled.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import closedform, gauss, generators, seqcore
from .errors import InvalidArgument

CSV_HEADER = "n,quantity,measured,target,deviation"

#: Default grids: geometric with ratio 4 from 64. Each quadrupling roughly
#: halves the slowest (n^(-1/6)-scale) deviations, so trends are visible in
#: a handful of rows. The balanced-pair grid interleaves odd lengths since
#: its exact identities differ by parity.
DEFAULT_GRID = (64, 256, 1024, 4096, 16384)
DEFAULT_BALANCED_GRID = (64, 65, 256, 257, 1024, 1025, 4096, 4097)
DEFAULT_GAUSS_GRID = (1024, 4096, 16384)
DEFAULT_FRACTIONS = (0.25,)

BIG_GRID = DEFAULT_GRID + (65536, 262144, 1048576)
BIG_BALANCED_GRID = DEFAULT_BALANCED_GRID + (16384, 16385, 65536, 65537, 262144, 262145)
BIG_GAUSS_GRID = DEFAULT_GAUSS_GRID + (65536, 262144, 1048576)

_CROSSCHECK_TOL = 1e-9


@dataclass(frozen=True)
class ConvergenceRow:
    """One grid point of a study: measured value, its limit, and the gap."""

    n: int
    quantity: str
    measured: float
    target: float
    deviation: float
    elapsed_s: float = 0.0  # wall clock for the whole grid point; not in CSV


def _row(n: int, quantity: str, measured: float, target: float, elapsed_s: float) -> ConvergenceRow:
    return ConvergenceRow(n=n, quantity=quantity, measured=measured, target=target,
                          deviation=abs(measured - target), elapsed_s=elapsed_s)


def worker_count() -> int:
    """Worker cap from CORRKIT_THREADS; 0 or unset means auto (cpu count)."""
    raw = os.environ.get("CORRKIT_THREADS", "0").strip()
    try:
        value = int(raw)
    except ValueError:
        raise InvalidArgument(f"CORRKIT_THREADS must be an integer, got {raw!r}")
    if value < 0:
        raise InvalidArgument(f"CORRKIT_THREADS must be >= 0, got {value}")
    return value if value > 0 else (os.cpu_count() or 1)


def _map_grid(fn, grid):
    """Evaluate fn over the grid, possibly in parallel; order-preserving."""
    workers = min(worker_count(), len(grid))
    if workers <= 1:
        return [fn(n) for n in grid]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, grid))


def _check_grid(grid) -> list[int]:
    grid = [int(n) for n in grid]
    if not grid:
        raise InvalidArgument("grid must not be empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise InvalidArgument("grid must be strictly increasing")
    return grid


def run_chu_adf_study(grid=DEFAULT_GRID) -> list[ConvergenceRow]:
    """sqrt(n) * adf of the parameter-1 Chu sequence against its limit 2/pi.

    Measured through the closed form; at the smallest grid point the FFT
    route is recomputed as a cross-check of the closed form.
    """
    grid = _check_grid(grid)
    if grid[0] < 2:
        raise InvalidArgument("grid points must be >= 2")

    direct = seqcore.adf(generators.chu(grid[0], 1), method="fft")
    closed = closedform.chu_adf_closed(grid[0], 1).adf
    if abs(direct - closed) > _CROSSCHECK_TOL:
        raise RuntimeError(
            f"closed-form adf disagrees with the FFT route at n={grid[0]}: "
            f"{closed} vs {direct}")

    def point(n: int) -> list[ConvergenceRow]:
        t0 = time.perf_counter()
        measured = math.sqrt(n) * closedform.chu_adf_closed(n, 1).adf
        return [_row(n, "sqrt_n_adf_chu1", measured, 2.0 / math.pi,
                     time.perf_counter() - t0)]

    return sort_rows(r for rows in _map_grid(point, grid) for r in rows)


def run_conjugate_pair_study(grid=DEFAULT_GRID) -> list[ConvergenceRow]:
    """adf, cdf and psc of the conjugate Chu pair; limits 0, 1 and 1."""
    grid = _check_grid(grid)

    def point(n: int) -> list[ConvergenceRow]:
        t0 = time.perf_counter()
        a, b = generators.conjugate_chu_pair(n)
        report = seqcore.psc(a, b, method="fft")
        dt = time.perf_counter() - t0
        return [
            _row(n, "adf_x", report.adf_a, 0.0, dt),
            _row(n, "cdf", report.cdf, 1.0, dt),
            _row(n, "psc", report.psc, 1.0, dt),
        ]

    return sort_rows(r for rows in _map_grid(point, grid) for r in rows)


def run_balanced_pair_study(grid=DEFAULT_BALANCED_GRID) -> list[ConvergenceRow]:
    """Balanced Chu pair: adf/cdf against 1/2, psc against 1, plus exact checks.

    The grid must contain both parities. Extra rows report the identities
    that hold exactly rather than in the limit: equal member adf for odd n
    ("adf_parity_gap"), per-shift equal autocorrelation magnitudes for
    even n ("acf_mag_mismatch"), and unit crosscorrelation magnitude at
    every odd shift ("odd_shift_dev"); all three target 0.
    """
    grid = _check_grid(grid)
    parities = {n % 2 for n in grid}
    if len(parities) != 2:
        raise InvalidArgument("balanced-pair grid must cover both parities of n")

    def point(n: int) -> list[ConvergenceRow]:
        t0 = time.perf_counter()
        a, b = generators.balanced_chu_pair(n)
        report = seqcore.psc(a, b, method="fft")

        pab = seqcore.crosscorrelation_fft(a, b)
        odd_dev = float(np.max(np.abs(np.abs(pab.values[pab.shifts() % 2 == 1]) - 1.0)))

        dt = time.perf_counter() - t0
        rows = [
            _row(n, "adf_x", report.adf_a, 0.5, dt),
            _row(n, "adf_y", report.adf_b, 0.5, dt),
            _row(n, "cdf", report.cdf, 0.5, dt),
            _row(n, "psc", report.psc, 1.0, dt),
            _row(n, "odd_shift_dev", odd_dev, 0.0, dt),
        ]
        if n % 2 == 1:
            rows.append(_row(n, "adf_parity_gap", abs(report.adf_a - report.adf_b), 0.0, dt))
        else:
            paa = seqcore.crosscorrelation_fft(a, a)
            pbb = seqcore.crosscorrelation_fft(b, b)
            mismatch = float(np.max(np.abs(np.abs(paa.values) - np.abs(pbb.values))))
            rows.append(_row(n, "acf_mag_mismatch", mismatch, 0.0, dt))
        return rows

    return sort_rows(r for rows in _map_grid(point, grid) for r in rows)


def run_gauss_ratio_study(grid=DEFAULT_GAUSS_GRID, fractions=DEFAULT_FRACTIONS) -> list[ConvergenceRow]:
    """|S_{m-u}(2/m, u/m)| / sqrt(m/2) at u = floor(f*m) against 1."""
    grid = _check_grid(grid)
    fractions = tuple(float(f) for f in fractions)
    if not fractions:
        raise InvalidArgument("need at least one fraction")
    for m in grid:
        for f in fractions:
            if not gauss.magnitude_estimate_admissible(m, int(f * m)):
                raise InvalidArgument(
                    f"u=floor({f}*{m}) is outside the admissible offset set")

    def point(m: int) -> list[ConvergenceRow]:
        rows = []
        for f in fractions:
            t0 = time.perf_counter()
            value, target = gauss.gauss_magnitude_estimate(m, int(f * m))
            rows.append(_row(m, f"gauss_ratio_f{f:g}", value / target, 1.0,
                             time.perf_counter() - t0))
        return rows

    return sort_rows(r for rows in _map_grid(point, grid) for r in rows)


def sort_rows(rows) -> list[ConvergenceRow]:
    return sorted(rows, key=lambda r: (r.quantity, r.n))


def rows_to_csv(rows) -> str:
    """Fixed CSV schema; floats at 17 significant digits."""
    lines = [CSV_HEADER]
    for r in sort_rows(rows):
        lines.append(f"{r.n},{r.quantity},{r.measured:.17g},{r.target:.17g},{r.deviation:.17g}")
    return "\n".join(lines) + "\n"


def deviation_trend_ok(rows, quantity: str, per_parity: bool = True) -> bool:
    """True when deviations are non-increasing along n (within a parity class).

    Non-strict comparison: closed-form epsilon terms oscillate with n mod 4,
    and the balanced pair's exact identities flip between parities, so
    trends are judged per parity class by default.
    """
    selected = [r for r in sort_rows(rows) if r.quantity == quantity]
    classes = {}
    for r in selected:
        classes.setdefault(r.n % 2 if per_parity else 0, []).append(r.deviation)
    return all(
        all(b <= a for a, b in zip(devs, devs[1:]))
        for devs in classes.values()
    )


def study_runners() -> dict:
    """Name -> (runner, default grid kwargsless callable) mapping for the CLI."""
    return {
        "chu1": run_chu_adf_study,
        "thm1": run_conjugate_pair_study,
        "thm2": run_balanced_pair_study,
        "gauss-ratio": run_gauss_ratio_study,
    }
