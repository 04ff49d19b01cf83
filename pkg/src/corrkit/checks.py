"""Self-verification suites behind the ``corrkit verify`` command.

Each check pits one computation route against an independent one (closed
form against brute-force correlation, reconstructed decomposition against
the direct sum, correlation profiles against Gauss sums) and reports the
worst observed deviation against a hard tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import closedform, gauss, generators, seqcore

_ORACLE_TOL = 1e-9


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_closedform_adf(n_max: int = 128) -> CheckResult:
    """Closed-form adf against the direct-summation route, all (n, a)."""
    worst = 0.0
    for n in range(1, n_max + 1):
        for a in range(1, 2 * n + 1):
            brute = seqcore.adf(generators.chu(n, a), method="naive")
            closed = closedform.chu_adf_closed(n, a).adf
            worst = max(worst, abs(brute - closed))
    return CheckResult(
        name="closedform_adf_oracle",
        passed=worst <= _ORACLE_TOL,
        detail=f"max |closed - brute| = {worst:.3e} over n <= {n_max}, 1 <= a <= 2n",
    )


def check_closedform_magnitudes(n_max: int = 128) -> CheckResult:
    """Per-shift closed-form |C(u)| against the direct correlation."""
    worst = 0.0
    for n in range(1, n_max + 1):
        for a in range(1, 2 * n + 1):
            z = generators.chu(n, a)
            profile = seqcore.crosscorrelation_naive(z, z)
            measured = np.abs(profile.values[n - 1:])
            predicted = closedform.chu_acf_magnitudes(n, a)
            worst = max(worst, float(np.max(np.abs(measured - predicted))))
    return CheckResult(
        name="closedform_magnitude_oracle",
        passed=worst <= _ORACLE_TOL,
        detail=f"max per-shift deviation = {worst:.3e} over n <= {n_max}",
    )


def check_decomposition_residual(samples: int = 1000, n_max: int = 10_000,
                                 seed: int = 20180322) -> CheckResult:
    """|R| < x and total == direct sum over a random parameter sweep."""
    rng = np.random.default_rng(seed)
    worst_ratio = 0.0
    worst_recon = 0.0
    for _ in range(samples):
        N = int(rng.integers(1, n_max + 1))
        x = float(rng.uniform(0.0, 1.0)) or 0.5
        theta = float(rng.uniform(-0.5, 0.5))
        d = gauss.decompose_gauss_sum(N, x, theta)
        worst_ratio = max(worst_ratio, abs(d.remainder) / x)
        recon = d.main_term + d.half_mu_term + d.e_terms + d.g_terms + d.remainder
        worst_recon = max(worst_recon, abs(d.total - recon) / (1e-9 * N))
    passed = worst_ratio < 1.0 and worst_recon <= 1.0
    return CheckResult(
        name="decomposition_residual",
        passed=passed,
        detail=(f"max |R|/x = {worst_ratio:.4f}, "
                f"max |total - recon|/(1e-9*N) = {worst_recon:.3e} over {samples} samples"),
    )


def check_correlation_identities(n_max: int = 512) -> CheckResult:
    """|C(u)| against the matching Gauss-sum magnitude for both pair families."""
    worst = 0.0
    for n in range(1, n_max + 1):
        for kind in gauss.PAIR_KINDS:
            lhs, rhs = gauss.correlation_gauss_identity_sweep(kind, n)
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return CheckResult(
        name="correlation_gauss_identities",
        passed=worst <= _ORACLE_TOL,
        detail=f"max per-shift |lhs - rhs| = {worst:.3e} over n <= {n_max}",
    )


SUITES = {
    "lemma21": (check_closedform_adf, check_closedform_magnitudes),
    "prop31": (check_decomposition_residual,),
    "identities": (check_correlation_identities,),
}
SUITES["all"] = SUITES["lemma21"] + SUITES["prop31"] + SUITES["identities"]


def run_suite(name: str) -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}")
    return [check() for check in SUITES[name]]
