"""Report writers: delimited sweep tables plus companion figures.

CSV output is reproducibility-first: 17 significant digits, '.' decimal point,
no locale, '#'-prefixed meta lines, RFC-4180 quoting. The same run with the same
seed produces byte-identical files.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def _cell(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return f"{value + 0.0:.17g}"  # folds -0.0 into 0
    return str(value)


def render_csv(rows: list[dict], columns, meta: dict) -> str:
    buf = io.StringIO()
    for key, value in meta.items():
        buf.write(f"# {key}: {_cell(value)}\r\n")
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row[c]) for c in columns])
    return buf.getvalue()


def render_json(rows: list[dict], columns, meta: dict) -> str:
    ordered = [{c: row[c] for c in columns} for row in rows]
    return json.dumps({"meta": meta, "rows": ordered}, indent=2)


def write_report(rows, columns, meta, fmt: str, path: str | Path | None) -> str:
    text = render_csv(rows, columns, meta) if fmt == "csv" else render_json(rows, columns, meta)
    if path is not None:
        Path(path).write_text(text, newline="")
    return text


def _by_group(rows, key):
    groups: dict = {}
    for row in rows:
        groups.setdefault(row[key], []).append(row)
    return groups


def _figure(nrows=1, ncols=1):
    return plt.subplots(nrows, ncols, figsize=(6.4 * ncols, 4.2 * nrows))


def _entropy_figure(rows):
    fig, ax = _figure()
    for xi, grp in sorted(_by_group(rows, "xi_over_m").items()):
        vs = [r["v"] for r in grp]
        ax.plot(vs, [r["S_numeric"] for r in grp], "o-", label=f"numeric, xi/m={xi:g}")
        ax.plot(vs, [r["S_analytic"] for r in grp], "--", label=f"model, xi/m={xi:g}")
    ax.set_xlabel("detector velocity v")
    ax.set_ylabel("spin entropy S (nats)")
    ax.set_title("Entropy of the reduced spin state seen by a moving observer")
    ax.legend(fontsize=8)
    return fig


def _efficiency_figure(rows):
    fig, ax = _figure()
    for xi, grp in sorted(_by_group(rows, "xi_over_m").items()):
        vs = [r["v"] for r in grp]
        ax.plot(vs, [r["eta_packet_avg"] for r in grp], "o-", label=f"packet avg, xi/m={xi:g}")
        ax.plot(vs, [r["eta_mean_momentum"] for r in grp], "s--", label=f"mean momentum, xi/m={xi:g}")
    ax.axhline(1.0, color="gray", lw=0.8)
    ax.set_xlabel("detector velocity v")
    ax.set_ylabel("efficiency eta")
    ax.set_title("Detector efficiency of the moving observer")
    ax.legend(fontsize=8)
    return fig


def _collapse_figure(rows):
    fig, ax = _figure()
    for c, grp in sorted(_by_group(rows, "overlap_c").items()):
        vs = [r["v"] for r in grp]
        ax.plot(vs, [r["residual"] for r in grp], "o-", label=f"overlap c={c:g}")
    ax.set_xlabel("detector velocity v")
    ax.set_ylabel("orthogonality residual")
    ax.set_title("Record-orthogonality residual across frames")
    ax.legend(fontsize=8)
    return fig


def _clicks_figure(rows):
    fig, ax = _figure()
    labels, phat, err4, born = [], [], [], []
    for r in rows:
        labels.append(f"{r['frame']}\nv={r['v']:g}, xi/m={r['xi_over_m']:g}")
        phat.append(r["p_hat_up"])
        err4.append(4.0 * r["stderr_up"])
        born.append(r["born_up"])
    x = range(len(rows))
    ax.errorbar(x, phat, yerr=err4, fmt="o", capsize=4, label="simulated (4 sigma)")
    ax.plot(x, born, "_", markersize=18, color="tab:red", label="quadrature Born")
    ax.set_xticks(list(x), labels, fontsize=7)
    ax.set_ylabel("up-outcome frequency")
    ax.set_title("Click statistics vs Born probabilities")
    ax.legend(fontsize=8)
    return fig


_FIGURES = {
    "entropy-sweep": _entropy_figure,
    "efficiency-sweep": _efficiency_figure,
    "collapse-check": _collapse_figure,
    "clicks": _clicks_figure,
}


def render_figure(mode: str, rows: list[dict], path: str | Path) -> Path:
    """Render the companion figure for a sweep next to its delimited output."""
    fig = _FIGURES[mode](rows)
    path = Path(path)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def figure_path_for(output_path: str | Path) -> Path:
    return Path(output_path).with_suffix(".png")
