"""Render verification reports to PNG files.

Kept out of the verifier so matplotlib only loads when figures were asked
for.  Two views: the spread of relative residuals per identity (exact
passes pinned to a floor well below float resolution) and a grid of
variant verdicts.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .verify import IdentityReport

_EXACT_FLOOR = 1e-18


def _residual(report: IdentityReport) -> float:
    if report.rel_err in ("exact", "structural"):
        return _EXACT_FLOOR
    try:
        value = float(report.rel_err)
    except ValueError:
        return _EXACT_FLOOR
    return max(value, _EXACT_FLOOR)


def _residual_figure(reports: Sequence[IdentityReport], path: Path) -> None:
    idents = sorted({r.ident for r in reports})
    index = {ident: i for i, ident in enumerate(idents)}
    fig, ax = plt.subplots(figsize=(max(6.0, 0.6 * len(idents) + 2.0), 4.8))
    for passed, color, label in ((True, "tab:blue", "pass"), (False, "tab:red", "fail")):
        xs = [index[r.ident] for r in reports if r.passed is passed]
        ys = [math.log10(_residual(r)) for r in reports if r.passed is passed]
        if xs:
            ax.scatter(xs, ys, s=12, alpha=0.6, color=color, label=label)
    ax.axhline(math.log10(_EXACT_FLOOR), lw=0.8, ls=":", color="gray")
    ax.set_xticks(range(len(idents)))
    ax.set_xticklabels(idents, rotation=60, ha="right", fontsize=8)
    ax.set_ylabel("log10 relative residual")
    ax.set_title("Residual spread by identity (exact hits pinned to the floor)")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _outcome_figure(reports: Sequence[IdentityReport], path: Path) -> None:
    idents = sorted({r.ident for r in reports})
    variants = ["as-printed", "corrected", "derived"]
    verdict: dict[tuple[str, str], bool] = {}
    for r in reports:
        key = (r.ident, r.variant)
        verdict[key] = verdict.get(key, True) and r.passed
    fig, ax = plt.subplots(figsize=(5.0, max(3.0, 0.3 * len(idents) + 1.5)))
    for i, ident in enumerate(idents):
        for j, variant in enumerate(variants):
            key = (ident, variant)
            if key not in verdict:
                color = "0.92"
            elif verdict[key]:
                color = "tab:green"
            else:
                color = "tab:red"
            ax.add_patch(plt.Rectangle((j, i), 0.94, 0.94, color=color))
    ax.set_xlim(0, len(variants))
    ax.set_ylim(0, len(idents))
    ax.set_xticks([j + 0.47 for j in range(len(variants))])
    ax.set_xticklabels(variants, fontsize=8)
    ax.set_yticks([i + 0.47 for i in range(len(idents))])
    ax.set_yticklabels(idents, fontsize=8)
    ax.invert_yaxis()
    ax.set_title("Variant verdicts (green: all cases pass, red: some fail)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_figures(reports: Sequence[IdentityReport], outdir) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = [outdir / "residual-spread.png", outdir / "outcome-grid.png"]
    _residual_figure(reports, paths[0])
    _outcome_figure(reports, paths[1])
    return paths
