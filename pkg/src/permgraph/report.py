"""Rendered artifacts for the counting pipeline.

write_report() drops everything a reviewer needs into one directory: the
count tables as TSV, the crosscheck verdict as aligned text and as JSON,
and three figures (counts, composition counts, a boxcar gallery).  Output
is deterministic so reruns are byte-identical.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .boxcars import _boxcar_blocks, boxcar_graph, check_sequence, format_sequence
from .enumeration import (
    CountTable,
    CrosscheckReport,
    build_count_table,
    crosscheck,
    crosscheck_to_json,
    format_compositions_tsv,
    format_counts_tsv,
    format_crosscheck_text,
    generate_sequences,
)
from .generation import MAX_CENSUS_ORDER

# Fixed savefig settings keep reruns byte-identical; the metadata override
# drops the library version string PNG writers embed by default.
_SAVEFIG_KWARGS = {"dpi": 100, "metadata": {"Software": "permgraph"}}


def render_counts_figure(table: CountTable, path: Path) -> None:
    ns = sorted(table.a_values)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(ns, [table.a_values[n] for n in ns], marker="o", markersize=3, linewidth=1)
    ax.set_xlabel("order n")
    ax.set_ylabel("a(n)")
    ax.set_title("Connected 3-regular inversion graphs by order")
    ax.grid(True, linewidth=0.3)
    fig.tight_layout()
    fig.savefig(path, **_SAVEFIG_KWARGS)
    plt.close(fig)


def render_compositions_figure(table: CountTable, path: Path) -> None:
    xs = sorted(table.t_values)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(xs, [table.t_values[x] for x in xs], marker="o", markersize=3, linewidth=1)
    ax.set_xlabel("x")
    ax.set_ylabel("t(x)")
    ax.set_title("Compositions of x into parts 2 and 3")
    ax.grid(True, linewidth=0.3)
    fig.tight_layout()
    fig.savefig(path, **_SAVEFIG_KWARGS)
    plt.close(fig)


def _draw_boxcar(ax, seq: tuple[int, ...]) -> None:
    blocks = _boxcar_blocks(seq)
    pos: dict[int, tuple[float, float]] = {}
    for x, (token, vs) in enumerate(blocks):
        if len(vs) == 1:
            pos[vs[0]] = (float(x), 0.0)
        else:
            pos[vs[0]] = (float(x), 0.6)
            pos[vs[1]] = (float(x), -0.6)
    g = boxcar_graph(seq)
    for u, v in sorted(g.edges):
        (x1, y1), (x2, y2) = pos[u], pos[v]
        ax.plot([x1, x2], [y1, y2], color="steelblue", linewidth=0.8, zorder=1)
    xs = [pos[v][0] for v in sorted(pos)]
    ys = [pos[v][1] for v in sorted(pos)]
    ax.scatter(xs, ys, s=18, color="black", zorder=2)
    label = format_sequence(seq)
    ax.set_title(f"sequence {label} (order {g.n})", fontsize=9)
    ax.set_axis_off()
    ax.set_ylim(-1.2, 1.2)


def render_boxcar_gallery(n: int, path: Path) -> None:
    """One row per boxcar of order n, drawn by its left-to-right block layout."""
    seqs = generate_sequences(n)
    rows = max(1, len(seqs))
    fig, axes = plt.subplots(rows, 1, figsize=(8, 1.8 * rows), squeeze=False)
    for ax in axes.flat:
        ax.set_axis_off()
    for ax, seq in zip(axes.flat, seqs):
        _draw_boxcar(ax, check_sequence(seq))
    if not seqs:
        axes[0][0].text(0.5, 0.5, f"no graphs of order {n}", ha="center", va="center")
    fig.tight_layout()
    fig.savefig(path, **_SAVEFIG_KWARGS)
    plt.close(fig)


def write_report(
    out_dir: str | Path,
    n_max: int = 60,
    census_max: int = MAX_CENSUS_ORDER,
    materialize_max: int = 40,
    x_max: int = 40,
    gallery_n: int = 26,
    use_catalog: bool = False,
    figures: bool = True,
) -> list[Path]:
    """Write tables, crosscheck verdicts, and figures; return the paths written."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    table = build_count_table(n_max, x_max)
    report = crosscheck(n_max, census_max=census_max, materialize_max=materialize_max,
                        use_catalog=use_catalog)
    written = []

    def emit(name: str, text: str) -> None:
        target = out / name
        target.write_text(text, encoding="ascii")
        written.append(target)

    emit("counts.tsv", format_counts_tsv(table))
    emit("compositions.tsv", format_compositions_tsv(table))
    emit("crosscheck.txt", format_crosscheck_text(report))
    emit("crosscheck.json", crosscheck_to_json(report))
    if figures:
        for name, render in (
            ("counts.png", lambda p: render_counts_figure(table, p)),
            ("compositions.png", lambda p: render_compositions_figure(table, p)),
            ("boxcars.png", lambda p: render_boxcar_gallery(gallery_n, p)),
        ):
            target = out / name
            render(target)
            written.append(target)
    return sorted(written)
