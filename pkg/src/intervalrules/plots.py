"""Rendering of sweep reports as figure files.

Produces two PNGs next to the delimited sweep output: pattern counts per
support threshold (closed / rules / relevant, one line triple per class) and
mining time per support threshold.
"""

from __future__ import annotations

from pathlib import Path

from .pipeline import SweepRow


def _numeric_minsup(token: str) -> float:
    if token.endswith("%"):
        return float(token[:-1])
    return float(token)


def save_sweep_figures(rows: list[SweepRow], out_prefix: str | Path) -> list[Path]:
    """Write <prefix>_counts.png and <prefix>_times.png; returns the paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    prefix = Path(out_prefix)
    labels = list(dict.fromkeys(r.label for r in rows))
    percent_axis = any(r.minsup_token.endswith("%") for r in rows)
    xlabel = "minimum support (%)" if percent_axis else "minimum support"

    counts_path = prefix.with_name(prefix.name + "_counts.png")
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for label in labels:
        series = [r for r in rows if r.label == label]
        xs = [_numeric_minsup(r.minsup_token) for r in series]
        prefix_lbl = f"{label} " if len(labels) > 1 else ""
        ax.plot(xs, [r.closed for r in series], marker="o", label=prefix_lbl + "closed")
        ax.plot(xs, [r.rules for r in series], marker="s", label=prefix_lbl + "rules")
        ax.plot(xs, [r.relevant for r in series], marker="^", label=prefix_lbl + "relevant")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("pattern count")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(counts_path, dpi=150)
    plt.close(fig)

    times_path = prefix.with_name(prefix.name + "_times.png")
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for label in labels:
        series = [r for r in rows if r.label == label]
        xs = [_numeric_minsup(r.minsup_token) for r in series]
        ax.plot(xs, [r.time_ms for r in series], marker="o", label=label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("time (ms)")
    if len(labels) > 1:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(times_path, dpi=150)
    plt.close(fig)

    return [counts_path, times_path]
