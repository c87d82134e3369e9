"""Render a scenario report to a figure file next to its CSV."""

import numpy as np

from .scenarios import ScenarioReport


def save_figure(report: ScenarioReport, path: str) -> None:
    """Plot the report's columns and save to path (format from extension)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    data = np.array(report.rows, dtype=float).reshape(len(report.rows), len(report.columns))
    fig, ax = plt.subplots(figsize=(7.0, 4.5))

    if report.scenario == "group-demo":
        ax.scatter(data[:, 0] * data[:, 1], data[:, 2], marker="o")
        lim = float(max(data[:, 2].max(), 1e-12))
        ax.plot([0.0, lim], [0.0, lim], lw=0.8, ls="--", color="gray")
        ax.set_xlabel("M1 * M2")
        ax.set_ylabel("M_group")
    elif report.scenario == "basis-roundtrip":
        ax.loglog(data[:, 0], np.maximum(data[:, 1], 1e-18), "o-", label=report.columns[1])
        ax.loglog(data[:, 0], np.maximum(data[:, 2], 1e-18), "s-", label=report.columns[2])
        ax.set_xlabel(report.columns[0])
        ax.legend()
    else:
        for j, name in enumerate(report.columns[1:], start=1):
            ax.plot(data[:, 0], data[:, j], label=name)
        if report.scenario == "uncertainty":
            ax.axhline(0.5, lw=0.8, ls="--", color="gray")
        ax.set_xlabel(report.columns[0])
        ax.legend()

    ax.set_title(report.scenario)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
