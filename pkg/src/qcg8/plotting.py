"""Matplotlib renderings of scan and simulation results.

Figures are built with the object-oriented API (no pyplot state), so these
functions are safe to call from the CLI and from worker threads.
"""

from __future__ import annotations

from matplotlib.figure import Figure
from matplotlib.ticker import MaxNLocator


def _figure(width=6.4, height=4.2):
    fig = Figure(figsize=(width, height))
    fig.set_layout_engine("constrained")
    return fig, fig.add_subplot()


def plot_feasible_sizes(scans, bounds, path, title=None):
    """Feasible circulant sizes per row weight, with CCS bound and closed-form size.

    ``scans`` and ``bounds`` are matching sequences of ``ScanResult`` and
    ``BoundSet`` for increasing L.
    """
    fig, ax = _figure()
    xs, ys = [], []
    for s in scans:
        xs.extend([s.L] * len(s.feasible))
        ys.extend(s.feasible)
    ax.plot(xs, ys, "+", color="k", markersize=5, label="feasible P (girth 8)")
    Ls = [b.L for b in bounds]
    ax.plot(Ls, [b.ccs_class_bound for b in bounds], ":o", color="tab:red",
            markersize=3, label="CCS bound of selected family")
    ax.plot(Ls, [b.special_p for b in bounds], ":s", color="tab:blue",
            markersize=3, label="closed-form small P")
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_xlabel("row weight L")
    ax.set_ylabel("circulant size P")
    if bounds:
        ax.set_title(title or f"J = {bounds[0].J}")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="upper left")
    fig.savefig(path, dpi=150)
    return path


def plot_error_rates(result, path, label=None):
    """BER and FER against Eb/N0 on a log scale; zero-error points are dropped."""
    fig, ax = _figure()
    snr = [p.snr_db for p in result.points]
    for attr, marker in (("ber", "o-"), ("fer", "s--")):
        pts = [(x, getattr(p, attr)) for x, p in zip(snr, result.points) if getattr(p, attr) > 0]
        if pts:
            ax.semilogy(*zip(*pts), marker, label=f"{label + ' ' if label else ''}{attr.upper()}")
    ax.set_xlabel("Eb/N0 (dB)")
    ax.set_ylabel("error rate")
    ax.grid(True, which="both", alpha=0.3)
    if ax.get_legend_handles_labels()[0]:
        ax.legend()
    fig.savefig(path, dpi=150)
    return path
