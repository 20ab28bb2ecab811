"""Matplotlib renderings of the stratification plots, written to files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.collections import LineCollection, PatchCollection
from matplotlib.patches import Rectangle

from . import quintic, sextic

_CURVE_COLORS = {"disc": "tab:blue", "ties": "tab:red", "zeros": "tab:green",
                 "triangle": "tab:blue"}


def quintic_figure(path: str, resolution: int = 256) -> None:
    """Three stratifying curves and the labeled landmarks on [0,3] x [0,1]."""
    curves = quintic.trace_curves(resolution)
    fig, ax = plt.subplots(figsize=(8, 5))
    for name, lines in curves.items():
        style = "--" if name == "zeros" else "-"
        for k, line in enumerate(lines):
            xs = [p[0] for p in line]
            ys = [p[1] for p in line]
            ax.plot(xs, ys, style, color=_CURVE_COLORS[name], lw=1.2,
                    label=name if k == 0 else None)
    for name, (b, c) in quintic.landmarks().items():
        ax.plot([float(b)], [float(c)], "ko", ms=4)
        ax.annotate(name, (float(b), float(c)), textcoords="offset points",
                    xytext=(5, 4), fontsize=11)
    ax.set_xlim(0, 3)
    ax.set_ylim(0, 1)
    ax.set_xlabel("b")
    ax.set_ylabel("c")
    ax.legend(loc="upper left", fontsize=9)
    ax.set_title("degree-5 stratification")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def section_figure(scan: "sextic.SectionScan", path: str) -> None:
    """Two panels: domains in root coordinates and the coefficient-plane view.

    Needs a scan made with keep_grid=True.
    """
    grid = scan.grid
    if grid is None:
        raise ValueError("scan was made without keep_grid=True")
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(13, 6))

    key_colors = {}
    cmap = plt.get_cmap("tab20")
    for comp in scan.components:
        key_colors.setdefault(comp.passport, cmap(len(key_colors) % 20))

    depth = grid.depth
    fine = grid.resolution << depth
    w = grid.window
    s1 = float(w.y1_hi - w.y1_lo) / fine
    s2 = float(w.y2_hi - w.y2_lo) / fine
    patches, colors = [], []
    from .rootgrid import decode_key
    for (d, i, j), k in grid.leaves.items():
        if k <= 0:
            continue
        pp = decode_key(k)
        if pp not in key_colors:
            continue
        ww = 1 << (depth - d)
        patches.append(Rectangle((float(w.y1_lo) + i * ww * s1,
                                  float(w.y2_lo) + j * ww * s2),
                                 ww * s1, ww * s2))
        colors.append(key_colors[pp])
    ax1.add_collection(PatchCollection(patches, facecolor=colors, edgecolor="none"))
    for cls, segs in sextic.section_boundaries(grid, in_roots=True).items():
        if segs:
            ax1.add_collection(LineCollection(segs, colors="k", lw=0.4))
    for comp in scan.components:
        y1, y2 = float(comp.rep_roots[0]), float(comp.rep_roots[1])
        ax1.annotate("".join(map(str, comp.passport)), (y1, y2), fontsize=7,
                     ha="center")
    ax1.set_xlim(float(w.y1_lo), float(w.y1_hi))
    ax1.set_ylim(float(w.y2_lo), float(w.y2_hi))
    ax1.set_xlabel("smallest root magnitude")
    ax1.set_ylabel("second root magnitude")
    ax1.set_title("domains in root coordinates")

    for cls, segs in sextic.section_boundaries(grid, in_roots=False).items():
        if segs:
            style = {"zeros": ":", "ties": "-", "triangle": "-"}[cls]
            ax2.add_collection(LineCollection(
                segs, colors=_CURVE_COLORS[cls], lw=0.6, linestyle=style))
    for comp in scan.components:
        a, b = float(comp.rep[0]), float(comp.rep[1])
        ax2.plot([a], [b], "k.", ms=3)
    ax2.autoscale()
    ax2.set_xlabel("a")
    ax2.set_ylabel("b")
    ax2.set_title("the same section in coefficient coordinates")
    fig.suptitle("c = %s: %d domains" % (scan.gamma, len(scan.components)))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def bifurcation_figure(report: "sextic.BifurcationReport", path: str) -> None:
    """Component count against c with the detected thresholds marked."""
    fig, ax = plt.subplots(figsize=(9, 4.5))
    mids = []
    for t in report.thresholds:
        mid = float((t.lo + t.hi) / 2)
        mids.append(mid)
        ax.axvline(mid, color="tab:red", lw=1)
        ax.annotate("%.5f" % mid, (mid, 0.96), rotation=90, fontsize=8,
                    va="top", ha="right", xycoords=("data", "axes fraction"))
    lo, hi = float(report.lo), float(report.hi)
    if report.samples:
        xs = [x for x, _ in report.samples]
        ys = [n for _, n in report.samples]
        ax.step(xs, ys, where="post", color="tab:blue")
        ax.plot(xs, ys, "b.", ms=3)
    ax.set_xlabel("c")
    ax.set_ylabel("component count")
    ax.set_xlim(lo, hi)
    ax.set_title("bifurcations of the section partition")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
