"""
Bar-chart rendering for suite reports. Charts land next to the delimited
output as PNG files; they mirror the three study views (rotation-op
reductions per configuration, XX reduction under full connectivity, and
cycle reductions under hardware upgrades).
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_R_CONFIGS = ["old_noopt", "old_rz", "ours_noopt", "only_trailing",
              "only_from_rz", "only_up_to_rz", "only_rx",
              "only_skip_identity", "all_opt"]
_CYCLE_KINDS = [("parallel", "parallel 1q"), ("full", "fully connected"),
                ("full_parallel", "both")]


def _bar_group(ax, benches, series, labels):
    width = 0.8 / len(series)
    for i, vals in enumerate(series):
        xs = [b + i * width for b in range(len(benches))]
        ax.bar(xs, vals, width=width, label=labels[i])
    ax.set_xticks([b + 0.4 - width / 2 for b in range(len(benches))])
    ax.set_xticklabels(benches, rotation=20)
    ax.axhline(1.0, color="grey", lw=0.8, ls=":")
    ax.legend(fontsize=7, ncol=2)


def render_figures(report: dict, out_dir: str) -> list[str]:
    """Write the three study charts; returns the file paths."""
    os.makedirs(out_dir, exist_ok=True)
    benches = sorted(report["benchmarks"])
    paths = []

    red = report["reductions"]["r_ops_vs_old_rz"]
    fig, ax = plt.subplots(figsize=(8, 4))
    series = [[red[b][cfg] or 0.0 for b in benches] for cfg in _R_CONFIGS]
    _bar_group(ax, benches, series, _R_CONFIGS)
    ax.set_ylabel("rotation-op reduction vs legacy RZ baseline")
    fig.tight_layout()
    path = os.path.join(out_dir, "rotation_reduction.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)

    xx = report["reductions"]["xx_full_vs_linear"]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar(benches, [xx[b] or 0.0 for b in benches], color="#356fa8")
    ax.axhline(1.0, color="grey", lw=0.8, ls=":")
    ax.set_ylabel("XX count reduction, full vs linear")
    fig.tight_layout()
    path = os.path.join(out_dir, "xx_reduction.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)

    cyc = report["reductions"]["r_cycles_vs_linear_serial"]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    series = [[cyc[b][kind] or 0.0 for b in benches] for kind, _ in _CYCLE_KINDS]
    _bar_group(ax, benches, series, [lbl for _, lbl in _CYCLE_KINDS])
    ax.set_ylabel("rotation-cycle reduction vs linear serial")
    fig.tight_layout()
    path = os.path.join(out_dir, "cycle_reduction.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)
    return paths
