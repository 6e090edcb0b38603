"""Table-producing jobs behind the command line interface."""

from __future__ import annotations

import csv
import io
import json
import math

import numpy as np

from .geometry import angular_scale, core_flux, torsion
from .oracle import cross_validate
from .spectra import cluster_levels, enumerate_levels, level_scale
from .wavefunctions import count_nodes, normalize, radial_eigenfunction

SPECTRUM_COLUMNS = (
    "scenario", "alpha", "beta", "phi", "omega", "charge_sign",
    "n", "l", "k", "Q", "E", "E_over_omega", "nu", "cluster_id",
)
VERIFY_COLUMNS = (
    "n", "l", "k", "Q", "Q_shift", "E_analytic", "E_oracle", "abs_dev", "rel_dev", "pass",
)
WAVEFUNCTION_COLUMNS = ("rho", "R", "density")
SWEEP_COLUMNS = ("sweep_parameter", "sweep_value") + SPECTRUM_COLUMNS

# written with 17 significant digits; everything else uses the shortest repr
ENERGY_COLUMNS = {"E", "E_over_omega", "E_analytic", "E_oracle"}


def run_spectrum(config):
    """Closed-form levels for every ``(k, Q)`` of ``config`` as a list of row dicts."""
    d, f = config.defect, config.field
    rows = []
    for k in config.k:
        for Q in config.Q:
            levels = enumerate_levels(d, f, config.n_max, config.l_range, k, Q)
            scale = level_scale(d, f, Q)
            clusters = cluster_levels(levels, 1e-9 * scale) if levels else []
            cluster_of = {m: i for i, c in enumerate(clusters) for m in c.members}
            for lv in levels:
                rows.append({
                    "scenario": d.kind,
                    "alpha": angular_scale(d),
                    "beta": torsion(d),
                    "phi": core_flux(d),
                    "omega": scale,
                    "charge_sign": f.charge_sign,
                    "n": lv.qn.n,
                    "l": lv.qn.l,
                    "k": float(k),
                    "Q": float(Q),
                    "E": lv.E,
                    "E_over_omega": lv.E / scale,
                    "nu": lv.nu,
                    "cluster_id": cluster_of[(lv.qn.n, lv.qn.l)],
                })
    rows.sort(key=lambda r: (r["k"], r["Q"], r["E"], r["l"], r["n"]))
    return rows


def run_sweep(config):
    """Spectrum at every value of the declared sweep parameter, in long format."""
    rows = []
    for value in config.sweep_values:
        for row in run_spectrum(config.with_parameter(config.sweep_parameter, value)):
            rows.append({"sweep_parameter": config.sweep_parameter, "sweep_value": value, **row})
    return rows


def run_verify(config):
    """Oracle cross-check of every level; returns ``(rows, reports)``."""
    rows = []
    reports = []
    ls = range(config.l_min, config.l_max + 1)
    for k in config.k:
        for Q in config.Q:
            report = cross_validate(
                config.defect,
                config.field,
                config.n_max,
                ls,
                k,
                Q,
                tol=config.oracle_tol,
                N=config.oracle_N,
                rho_max=config.oracle_rho_max,
                richardson=config.oracle_richardson,
            )
            reports.append(report)
            for r in report.rows:
                rows.append({
                    "n": r.n,
                    "l": r.l,
                    "k": r.k,
                    "Q": r.Q,
                    "Q_shift": 0.5 * r.Q * r.Q,
                    "E_analytic": r.E_analytic,
                    "E_oracle": r.E_oracle,
                    "abs_dev": r.abs_dev,
                    "rel_dev": r.rel_dev,
                    "pass": r.passed,
                })
    return rows, reports


def run_wavefunction(config, n, l, samples=400, k=None, Q=None):
    """Normalized profile on ``samples`` uniform radii in ``(0, rho_cut]``.

    Returns ``(rows, meta)`` where ``meta`` carries ``C``, ``nu`` and the node count.
    """
    k = config.k[0] if k is None else k
    Q = config.Q[0] if Q is None else Q
    profile = normalize(radial_eigenfunction(config.defect, config.field, n, l, k, Q))
    rho = profile.rho_cut * np.arange(1, samples + 1) / samples
    R = profile(rho)
    dens = profile.density(rho)
    rows = [{"rho": float(r), "R": float(v), "density": float(p)} for r, v, p in zip(rho, R, dens)]
    meta = {
        "scenario": profile.scenario,
        "n": profile.n,
        "l": profile.l,
        "k": profile.k,
        "Q": profile.Q,
        "C": profile.C,
        "nu": profile.nu,
        "w": profile.w,
        "nodes": count_nodes(profile),
        "rho_cut": profile.rho_cut,
    }
    return rows, meta


def _cell(column, value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if column in ENERGY_COLUMNS and math.isfinite(value):
            return format(value, ".17g")
        return repr(value)
    return str(value)


def _json_value(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def format_table(columns, rows, fmt="csv", meta=None):
    """Serialize rows (dicts keyed by ``columns``) to CSV or JSON text.

    In CSV, ``meta`` entries become leading ``# key=value`` comment lines.
    """
    if fmt == "json":
        doc = {}
        if meta is not None:
            doc["meta"] = {key: _json_value(v) for key, v in meta.items()}
        doc["columns"] = list(columns)
        doc["rows"] = [[_json_value(row[c]) for c in columns] for row in rows]
        return json.dumps(doc, indent=1) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown output format {fmt!r}")
    buf = io.StringIO()
    if meta is not None:
        for key, value in meta.items():
            buf.write(f"# {key}={_cell(key, value)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(c, row[c]) for c in columns])
    return buf.getvalue()
