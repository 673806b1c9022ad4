"""Render sweep results as metric-vs-fan-in line plots."""

from __future__ import annotations

from typing import Sequence

_MARKERS = {"gemnif": "o", "gemfic": "s"}


def render_sweep_figure(rows: Sequence, path: str) -> None:
    """Write a line plot of the sweep rows (one line per family/metric) to path.

    The output format follows the file extension (png, pdf, svg, ...).
    Rows need family/n/metric/numerator/denominator attributes, as produced
    by the sweep command.
    """
    from matplotlib.figure import Figure

    series: dict[tuple[str, str], list[tuple[int, float]]] = {}
    for row in rows:
        key = (row.family, row.metric)
        series.setdefault(key, []).append((row.n, row.numerator / row.denominator))

    fig = Figure(figsize=(7.0, 4.5))
    ax = fig.add_subplot(1, 1, 1)
    for (family, metric), points in series.items():
        points.sort()
        xs = [n for n, _ in points]
        ys = [v for _, v in points]
        ax.plot(xs, ys, marker=_MARKERS.get(metric, "."), label=f"{family} {metric}")
    ax.set_xlabel("fan-in n")
    ax.set_ylabel("metric value")
    ax.set_ylim(bottom=0.0)
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize="small", ncols=2)
    fig.savefig(path, bbox_inches="tight", dpi=150)
