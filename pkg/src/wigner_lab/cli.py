"""Command-line experiment runner.

    wigner-lab <mode> --config cfg.json [--out table.csv] [--seed N] [--quad-order N]

Flags override the corresponding config fields. With --out the delimited table is
written to the given path and a companion figure is rendered next to it; without
--out the table goes to stdout. Exit status is 0 for a clean run, 1 if any row was
flagged by an invariant or convergence check, 2 for usage or config errors.
"""
from __future__ import annotations

import argparse
import sys

from .config import load_config
from .report import figure_path_for, render_figure, write_report
from .sweeps import COLUMNS_BY_MODE, run_mode


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wigner-lab",
        description="Parameter sweeps for boosted spin packets: entropy, efficiency, "
        "record orthogonality, and Monte Carlo click statistics.",
    )
    parser.add_argument(
        "mode",
        choices=sorted(COLUMNS_BY_MODE),
        help="experiment to run",
    )
    parser.add_argument("--config", required=True, help="path to a JSON config file")
    parser.add_argument("--out", default=None, help="output table path (default: stdout)")
    parser.add_argument("--seed", type=int, default=None, help="override the config seed")
    parser.add_argument(
        "--quad-order", type=int, default=None, help="override the per-axis quadrature order"
    )
    parser.add_argument("--samples", type=int, default=None, help="override the sample count")
    parser.add_argument(
        "--format", choices=("csv", "json"), default=None, help="override the output format"
    )
    parser.add_argument(
        "--no-plots", action="store_true", help="skip rendering the companion figure"
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
    except (OSError, ValueError) as exc:
        parser.exit(2, f"wigner-lab: config error: {exc}\n")

    cfg.mode = args.mode
    if args.seed is not None:
        cfg.seed = args.seed
    if args.quad_order is not None:
        cfg.quad_order = args.quad_order
    if args.samples is not None:
        cfg.samples = args.samples
    if args.format is not None:
        cfg.format = args.format
    if args.out is not None:
        cfg.output_path = args.out
    try:
        cfg.__post_init__()  # re-validate after overrides
    except ValueError as exc:
        parser.exit(2, f"wigner-lab: config error: {exc}\n")

    rows, meta = run_mode(cfg)
    columns = COLUMNS_BY_MODE[cfg.mode]
    text = write_report(rows, columns, meta, cfg.format, cfg.output_path)
    if cfg.output_path is None:
        sys.stdout.write(text)
    else:
        if not args.no_plots:
            render_figure(cfg.mode, rows, figure_path_for(cfg.output_path))

    return 1 if any(row.get("flagged") for row in rows) else 0


if __name__ == "__main__":
    raise SystemExit(main())
