"""Command line interface: ``landau-defects {spectrum,verify,wavefunction,sweep}``."""

from __future__ import annotations

import argparse
import sys
import warnings

from .errors import ConfigError, DomainError, InteriorDiskWarning
from .config import load_config
from .workbench import (
    SPECTRUM_COLUMNS,
    SWEEP_COLUMNS,
    VERIFY_COLUMNS,
    WAVEFUNCTION_COLUMNS,
    format_table,
    run_spectrum,
    run_sweep,
    run_verify,
    run_wavefunction,
)


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="scenario configuration file")
    common.add_argument("--output", help="output path (overrides output.path; '-' is stdout)")
    common.add_argument("--format", choices=("csv", "json"), help="overrides output.format")
    common.add_argument("--seed", help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="landau-defects",
        description="Landau levels of charged particles around line defects.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="closed-form energy table")
    sub.add_parser("verify", parents=[common], help="cross-check energies against the numerical oracle")
    sub.add_parser("sweep", parents=[common], help="spectrum over the sweep.* parameter grid")
    wf = sub.add_parser("wavefunction", parents=[common], help="sampled normalized radial profile")
    wf.add_argument("--n", type=int, required=True, help="radial quantum number")
    wf.add_argument("--l", type=int, required=True, help="angular quantum number")
    wf.add_argument("--samples", type=int, default=400)
    wf.add_argument("--k", type=float, help="longitudinal momentum (default: first quantum.k)")
    wf.add_argument("--Q", type=float, help="fifth-dimension charge (default: first quantum.Q)")
    return parser


def _emit(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv=None):
    parser = _parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        parser.error("--seed is not accepted: every command is deterministic")

    try:
        config = load_config(args.config)
    except ConfigError as exc:
        for lineno, msg in exc.errors:
            where = f"{args.config}:{lineno}" if lineno is not None else args.config
            print(f"{where}: {msg}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return 2

    fmt = args.format or config.output_format
    path = args.output or config.output_path
    status = 0
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", InteriorDiskWarning)
        try:
            if args.command == "spectrum":
                text = format_table(SPECTRUM_COLUMNS, run_spectrum(config), fmt)
            elif args.command == "sweep":
                if config.sweep_parameter is None:
                    print("sweep needs sweep.parameter and sweep.values in the config", file=sys.stderr)
                    return 2
                text = format_table(SWEEP_COLUMNS, run_sweep(config), fmt)
            elif args.command == "verify":
                rows, reports = run_verify(config)
                text = format_table(VERIFY_COLUMNS, rows, fmt)
                for report in reports:
                    print(report.summary(), file=sys.stderr)
                status = 0 if all(r.passed for r in reports) else 1
            else:
                rows, meta = run_wavefunction(config, args.n, args.l, args.samples, args.k, args.Q)
                text = format_table(WAVEFUNCTION_COLUMNS, rows, fmt, meta=meta)
        except DomainError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    for message in sorted({str(w.message) for w in caught}):
        print(f"warning: {message}", file=sys.stderr)
    _emit(text, path)
    return status


if __name__ == "__main__":
    sys.exit(main())
