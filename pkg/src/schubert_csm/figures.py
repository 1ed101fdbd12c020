"""Matplotlib renderings of coefficient tables, saved alongside CSV output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .engine import CsmTable
from .serialize import part_key


def table_figure(t: CsmTable, path: str | Path) -> Path:
    """Render a table as an annotated heatmap and save it to path."""
    n = len(t.index)
    data = np.zeros((n, n))
    for i, a in enumerate(t.index):
        for j, b in enumerate(t.index):
            data[i, j] = t.rows[a].get(b, 0)
    masked = np.ma.masked_equal(data, 0)

    side = max(4.0, 0.45 * n + 1.5)
    fig, ax = plt.subplots(figsize=(side, side))
    ax.imshow(np.log1p(masked), cmap="viridis", interpolation="nearest")
    labels = [part_key(p) for p in t.index]
    ax.set_xticks(range(n), labels, rotation=90, fontsize=7)
    ax.set_yticks(range(n), labels, fontsize=7)
    ax.set_title(f"{t.kind} coefficients, Gr({t.k},{t.n})", fontsize=10)
    if n <= 24:
        vmax = data.max() if n else 0
        for i in range(n):
            for j in range(n):
                v = int(data[i, j])
                if v:
                    color = "white" if np.log1p(v) < 0.6 * np.log1p(vmax) else "black"
                    ax.text(j, i, str(v), ha="center", va="center", fontsize=6, color=color)
    fig.tight_layout()
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150, metadata={"Software": None} if out.suffix == ".png" else None)
    plt.close(fig)
    return out
