"""Figure rendering for study reports.

One figure per study: measured values against n on the left, deviations
from the target on log-log axes on the right. Written next to the CSV so
a study directory is self-describing.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_MARKERS = "osd^vP*X"


def render_study_figure(rows, title: str, out_path) -> None:
    """Render ConvergenceRow records to a two-panel PNG."""
    quantities = sorted({r.quantity for r in rows})
    fig, (ax_val, ax_dev) = plt.subplots(1, 2, figsize=(9.6, 3.8))

    for i, q in enumerate(quantities):
        pts = sorted((r.n, r.measured, r.target, r.deviation)
                     for r in rows if r.quantity == q)
        ns = [p[0] for p in pts]
        marker = _MARKERS[i % len(_MARKERS)]

        ax_val.plot(ns, [p[1] for p in pts], marker=marker, ms=4, lw=1, label=q)
        ax_val.axhline(pts[0][2], color="gray", lw=0.6, ls=":")

        # log axes cannot show exact zeros; drop those points
        dev_pts = [(n_, d) for n_, _, _, d in pts if d > 0]
        if dev_pts:
            ax_dev.loglog([p[0] for p in dev_pts], [p[1] for p in dev_pts],
                          marker=marker, ms=4, lw=1, label=q)

    ax_val.set_xscale("log")
    ax_val.set_xlabel("n")
    ax_val.set_ylabel("measured")
    ax_val.legend(fontsize=8)
    ax_dev.set_xlabel("n")
    ax_dev.set_ylabel("|measured - target|")
    ax_dev.grid(True, which="both", lw=0.3, alpha=0.5)
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
