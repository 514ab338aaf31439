"""The three figure layouts.

fig2: quasienergy spectrum versus drive amplitude plus the disorder
      response (mode deviations and skin-effect strength).
fig3: smallest singular values of the shifted one-period operator
      versus drive amplitude with the winding-number steps beneath.
fig4: winding-number heatmaps over the (f, w) plane with gap-closing
      boundaries overlaid.

Rendering never recomputes physics; every plotted quantity is a column
of an input CSV and its column name appears on an axis or in a legend.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import read_table

FIGURES = ("fig2", "fig3", "fig4")

_SAVE_KW = dict(dpi=150, metadata={"Software": "make-figures"})


@dataclass(frozen=True)
class FigureSpec:
    figure: str
    indir: str
    outpath: str
    projection: str = "real"

    def __post_init__(self):
        if self.figure not in FIGURES:
            raise ValueError(f"figure must be one of {FIGURES}, got {self.figure!r}")
        if self.projection not in ("real", "abs"):
            raise ValueError(f"projection must be 'real' or 'abs', got {self.projection!r}")


@dataclass(frozen=True)
class RenderResult:
    path: str
    summary: dict = field(default_factory=dict)


def _energy_projection(rows, projection):
    re = np.array([r["re_E"] for r in rows], dtype=float)
    im = np.array([r["im_E"] for r in rows], dtype=float)
    if projection == "abs":
        return np.hypot(re, im), im
    return re, im


def _winding_steps(rows, column):
    """Midpoints of parameter intervals where an integer column changes."""
    pts = sorted((r["f"], r[column]) for r in rows if r[column] is not None)
    steps = []
    for (f0, v0), (f1, v1) in zip(pts, pts[1:]):
        if v0 != v1:
            steps.append(0.5 * (f0 + f1))
    return steps


def _render_fig2(spec: FigureSpec):
    spectrum = read_table(spec.indir, "spectrum")
    disorder = read_table(spec.indir, "disorder")
    fig, axes = plt.subplots(2, 2, figsize=(9, 7))
    (ax_spec, ax_zero), (ax_pi, ax_wipr) = axes

    if spectrum:
        f = np.array([r["f"] for r in spectrum], dtype=float)
        y, im = _energy_projection(spectrum, spec.projection)
        alpha = 1.0 / (1.0 + 50.0 * np.abs(im))  # opacity encodes |im_E|
        ax_spec.scatter(f, y, s=2, c="tab:blue", alpha=alpha, linewidths=0)
    ylabel = "re_E" if spec.projection == "real" else "|re_E + i im_E|"
    ax_spec.set_xlabel("f")
    ax_spec.set_ylabel(ylabel)
    ax_spec.set_title("quasienergies (opacity: |im_E|)")

    averaged = [r for r in disorder if r["realization"] == -1]
    averaged.sort(key=lambda r: r["d"])
    d = [r["d"] for r in averaged]
    for ax, col, color in (
        (ax_zero, "zero_mode_dev", "tab:green"),
        (ax_pi, "pi_mode_dev", "tab:red"),
        (ax_wipr, "wipr", "tab:purple"),
    ):
        ax.plot(d, [r[col] for r in averaged], "o-", color=color, label=col)
        ax.set_xlabel("d")
        ax.set_ylabel(col)
        ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(spec.outpath, **_SAVE_KW)
    plt.close(fig)
    return {"spectrum_rows": len(spectrum), "disorder_points": len(averaged)}


def _render_fig3(spec: FigureSpec):
    singulars = read_table(spec.indir, "singulars")
    winding = read_table(spec.indir, "winding")
    fig, axes = plt.subplots(2, 2, figsize=(10, 7), sharex=True)
    summary_steps = {}
    for col_idx, (sign, v_col) in enumerate((("minus", "V1"), ("plus", "V2"))):
        ax_s, ax_v = axes[0][col_idx], axes[1][col_idx]
        rows = [r for r in singulars if r["sign"] == sign]
        by_f = {}
        for r in rows:
            by_f.setdefault(r["f"], []).append(r["s"])
        fs = sorted(by_f)
        n_show = 4
        for rank in range(n_show):
            ys = [sorted(by_f[f])[rank] if len(by_f[f]) > rank else np.nan for f in fs]
            ax_s.semilogy(fs, np.maximum(ys, 1e-18), lw=1,
                          label="s (smallest)" if rank == 0 else None)
        ax_s.set_ylabel(f"s ({sign})")
        ax_s.legend(loc="lower right")

        pts = sorted((r["f"], r[v_col]) for r in winding if r[v_col] is not None)
        if pts:
            ax_v.step([p[0] for p in pts], [p[1] for p in pts], where="post")
        steps = _winding_steps(winding, v_col)
        for x in steps:
            ax_s.axvline(x, color="0.7", lw=0.8, zorder=0)
            ax_v.axvline(x, color="0.7", lw=0.8, zorder=0)
        summary_steps[v_col] = steps
        ax_v.set_xlabel("f")
        ax_v.set_ylabel(v_col)
    fig.tight_layout()
    fig.savefig(spec.outpath, **_SAVE_KW)
    plt.close(fig)
    return {"steps": summary_steps}


def _render_fig4(spec: FigureSpec):
    winding = read_table(spec.indir, "winding")
    boundaries = read_table(spec.indir, "boundaries")
    fs = sorted({r["f"] for r in winding})
    ws = sorted({r["w"] for r in winding})
    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    plateaus = {}
    for ax, col in zip(axes, ("V1", "V2")):
        grid = np.full((len(ws), len(fs)), np.nan)
        fi = {f: i for i, f in enumerate(fs)}
        wi = {w: i for i, w in enumerate(ws)}
        for r in winding:
            if r[col] is not None:
                grid[wi[r["w"]], fi[r["f"]]] = r[col]
        if fs and ws:
            im = ax.imshow(
                grid,
                origin="lower",
                aspect="auto",
                extent=(min(fs), max(fs), min(ws), max(ws)),
                interpolation="nearest",
            )
            fig.colorbar(im, ax=ax, label=col)
        flagged = [(r["f"], r["w"]) for r in winding if r["flag"]]
        if flagged:
            ax.scatter(*zip(*flagged), marker=".", s=12, c="white", label="flag")
            ax.legend(loc="upper left")
        for b in boundaries:
            ax.axvline(b["value"], color="white", lw=0.8, ls="--")
        ax.set_xlabel("f")
        ax.set_ylabel("w")
        ax.set_title(col)
        vals = sorted({int(v) for v in grid[np.isfinite(grid)]})
        plateaus[col] = vals
    fig.tight_layout()
    fig.savefig(spec.outpath, **_SAVE_KW)
    plt.close(fig)
    return {
        "plateaus": plateaus,
        "boundary_lines": sorted(b["value"] for b in boundaries),
        "flagged": sum(1 for r in winding if r["flag"]),
    }


def render(spec: FigureSpec) -> RenderResult:
    """Render one figure; returns the output path and a summary dict."""
    impl = {"fig2": _render_fig2, "fig3": _render_fig3, "fig4": _render_fig4}[spec.figure]
    summary = impl(spec)
    return RenderResult(spec.outpath, summary)
