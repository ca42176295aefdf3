"""Matplotlib rendering of verification and multiplicity reports to files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_pair_heatmap(report, path) -> None:
    """Per-basis-pair heatmap: worst deviation (numeric) or failed certificates (exact)."""
    data = np.asarray(report.pair_worst, dtype=float)
    data = np.maximum(data, data.T)  # results live in the upper triangle
    fig, ax = plt.subplots(figsize=(6.4, 5.2))
    im = ax.imshow(data, cmap="viridis", origin="lower")
    label = "worst deviation" if report.mode == "numeric" else "failed certificates"
    fig.colorbar(im, ax=ax, label=label)
    ax.set_xlabel("basis index (last = standard)")
    ax.set_ylabel("basis index (last = standard)")
    verdict = "pass" if report.passed else "FAIL"
    ax.set_title(f"N={report.n}, mode={report.mode}, {verdict}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_multiplicity_figure(omega_table, r_table, joint_table, path, title="") -> None:
    """Bar/scatter panels for the three multiplicity tables.

    omega_table and joint_table may be None (even characteristic); only the
    panels with data are drawn.
    """
    panels = [(name, t) for name, t in
              (("quadratic family", omega_table), ("linear family", r_table),
               ("joint labels", joint_table)) if t is not None]
    fig, axes = plt.subplots(1, len(panels), figsize=(4.2 * len(panels), 3.6))
    if len(panels) == 1:
        axes = [axes]
    for ax, (name, table) in zip(axes, panels):
        if name == "joint labels":
            # occurring (a, b) pairs on an index grid, one dot per label
            dim = table.dimension
            xs, ys = [], []
            for (a, b) in table.counts:
                xs.append(_lex_index(b, dim))
                ys.append(_lex_index(a, dim))
            ax.scatter(xs, ys, s=18, marker="s")
            ax.set_xlim(-0.5, dim - 0.5)
            ax.set_ylim(-0.5, dim - 0.5)
            ax.set_xlabel("second label index")
            ax.set_ylabel("first label index")
        else:
            labels = sorted(table.counts)
            heights = [table.counts[a] for a in labels]
            ax.bar(range(len(labels)), heights, width=0.8)
            ax.set_xlabel("label index (lex)")
            ax.set_ylabel("multiplicity")
            ax.set_yticks(range(0, max(heights) + 2))
        ax.set_title(name)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _lex_index(label, dim) -> int:
    # mixed-radix index of a coefficient tuple, first coefficient most significant
    base = 2
    while base ** len(label) < dim:
        base += 1
    idx = 0
    for c in label:
        idx = idx * base + c
    return idx
