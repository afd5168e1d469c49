"""Hasse diagrams of an algebra and of its filter lattice, written to image files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .algebra import Algebra, covers_of  # noqa: E402
from .boolean_center import boolean_center  # noqa: E402
from .filters import all_filters, max_filters, radical, spec  # noqa: E402

RAD_COLOR = "#d9822b"
PLAIN_COLOR = "#ffffff"
MAX_COLOR = "#3b6ea5"
PRIME_COLOR = "#a7c4e2"


def hasse_layout(n: int, covers) -> dict[int, tuple[float, float]]:
    """Rank by longest chain from below; within a rank, order by the mean
    position of lower covers to cut down crossings."""
    below = {i: [] for i in range(n)}
    for lo, hi in covers:
        below[hi].append(lo)
    rank: dict[int, int] = {}

    def height(v):
        if v not in rank:
            rank[v] = 1 + max((height(u) for u in below[v]), default=-1)
        return rank[v]

    for v in range(n):
        height(v)
    layers: dict[int, list[int]] = {}
    for v in sorted(range(n), key=lambda v: (rank[v], v)):
        layers.setdefault(rank[v], []).append(v)
    pos: dict[int, tuple[float, float]] = {}
    for r in sorted(layers):
        row = layers[r]
        if r > 0:
            row.sort(key=lambda v: (sum(pos[u][0] for u in below[v]) / max(len(below[v]), 1), v))
        width = len(row)
        for k, v in enumerate(row):
            pos[v] = (k - (width - 1) / 2, float(r))
    return pos


def _draw(ax, pos, covers, labels, colors, shapes=None, title=""):
    for lo, hi in covers:
        (x0, y0), (x1, y1) = pos[lo], pos[hi]
        ax.plot([x0, x1], [y0, y1], color="0.55", lw=1.0, zorder=1)
    for v, (x, y) in pos.items():
        marker = shapes[v] if shapes else "o"
        if len(labels[v]) <= 3:
            ax.scatter([x], [y], s=420, c=colors[v], marker=marker, edgecolors="k", zorder=2)
            ax.annotate(labels[v], (x, y), ha="center", va="center", fontsize=8, zorder=3)
        else:
            # long names go beside a small node
            ax.scatter([x], [y], s=90, c=colors[v], marker=marker, edgecolors="k", zorder=2)
            ax.annotate(labels[v], (x, y), xytext=(7, 0), textcoords="offset points",
                        ha="left", va="center", fontsize=7, zorder=3)
    ax.set_title(title, fontsize=10)
    ax.set_axis_off()
    ax.margins(0.15)


def plot_algebra(A: Algebra, ax=None):
    """Hasse diagram of A; Rad(A) filled, complemented elements drawn as squares."""
    if ax is None:
        _, ax = plt.subplots(figsize=(4, 4.5))
    rad = radical(A).members
    B = boolean_center(A)
    colors = [RAD_COLOR if a in rad else PLAIN_COLOR for a in A.elements]
    shapes = ["s" if a in B else "o" for a in A.elements]
    covers = covers_of(A)
    _draw(ax, hasse_layout(A.n, covers), covers, A.labels, colors, shapes, f"{A.name}: Rad and B(A)")
    return ax.figure


def plot_filter_lattice(A: Algebra, ax=None):
    """Filters under inclusion; maximal filters dark, other primes light."""
    if ax is None:
        _, ax = plt.subplots(figsize=(4, 4.5))
    fs = all_filters(A)
    maxes, primes = set(max_filters(A)), set(spec(A))
    idx = {F: i for i, F in enumerate(fs)}
    covers = []
    for F in fs:
        for G in fs:
            if F < G and not any(F < H < G for H in fs):
                covers.append((idx[F], idx[G]))
    labels = ["{" + ",".join(F.labels) + "}" for F in fs]
    colors = [MAX_COLOR if F in maxes else PRIME_COLOR if F in primes else PLAIN_COLOR for F in fs]
    _draw(ax, hasse_layout(len(fs), covers), covers, labels, colors, title="filters: Max and Spec")
    return ax.figure


def render_report_figures(A: Algebra, out_dir) -> list[Path]:
    """Write hasse.png and filters.png for A into out_dir and return the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for fname, draw in (("hasse.png", plot_algebra), ("filters.png", plot_filter_lattice)):
        fig = draw(A)
        path = out / fname
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
        written.append(path)
    return written
