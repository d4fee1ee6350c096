"""Sweeps over the neck radius and the per-row invariants they must satisfy."""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .geometry import bounds_summary
from .integral_curvature import kbar, neck_bound_integrals
from .profile import DumbbellParams, ProfileCurve, build_meridian
from .rayleigh import rayleigh_bound
from .spectrum import first_eigenvalue

__all__ = [
    "SCHEMA_VERSION",
    "SWEEP_FIELDS",
    "SweepConfig",
    "compute_row",
    "run_sweep",
    "check_rows",
    "rows_to_csv",
    "rows_to_json",
    "fmt",
]

SCHEMA_VERSION = 1
SWEEP_FIELDS = (
    "eps", "lambda1", "rayleigh_bound", "kbar_p0", "kbar_pK", "M1_est", "M2_est",
    "area", "meridian_length", "diam_bound", "gauss_bonnet", "convergence_gap", "status",
)
GAP_TOL = 0.01
GB_TOL = 1e-6
MINKOWSKI_TOL = 1e-8


@dataclass(frozen=True)
class SweepConfig:
    R: float = 2.0
    L: float = 1.0
    eps_list: tuple[float, ...] = (1 / 5, 1 / 10, 1 / 20, 1 / 40)
    p: float = 1.5
    K: float = 0.0
    grid_n: int = 4000
    m_max: int = 2
    k_eigs: int = 4
    jobs: int = 1
    tol_quad: float = 1e-10


def compute_row(cfg: SweepConfig, eps: float) -> dict:
    """All sweep columns for one neck radius; failures land in ``status``."""
    row = {name: math.nan for name in SWEEP_FIELDS}
    row["eps"] = eps
    try:
        params = DumbbellParams(cfg.R, cfg.L, eps)
        row["rayleigh_bound"] = rayleigh_bound(params)
        curve = ProfileCurve(params)
        spec = first_eigenvalue(build_meridian(params, cfg.grid_n), cfg.m_max, cfg.k_eigs)
        row["lambda1"] = spec.lambda1
        row["convergence_gap"] = spec.convergence_gap
        row["kbar_p0"] = kbar(curve, cfg.p, 0.0, cfg.tol_quad).kbar
        row["kbar_pK"] = kbar(curve, cfg.p, cfg.K, cfg.tol_quad).kbar
        nb = neck_bound_integrals(params, rtol=cfg.tol_quad)
        row["M1_est"], row["M2_est"] = nb.M1, nb.M2
        geo = bounds_summary(params, curve)
        row["area"] = geo.area
        row["meridian_length"] = geo.meridian_length
        row["diam_bound"] = geo.diam_bound
        row["gauss_bonnet"] = geo.gauss_bonnet
        row["status"] = "ok"
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        row["status"] = f"error: {exc}"
    return row


def _row_task(args):
    return compute_row(*args)


def run_sweep(cfg: SweepConfig) -> list[dict]:
    """Rows in the order of ``cfg.eps_list`` regardless of ``jobs``."""
    tasks = [(cfg, eps) for eps in cfg.eps_list]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(_row_task, tasks))
    return [_row_task(t) for t in tasks]


def check_rows(cfg: SweepConfig, rows: list[dict]) -> list[str]:
    """Human-readable invariant violations; empty when every check holds."""
    R, L, K = cfg.R, cfg.L, cfg.K
    problems = []
    prev = None
    for row in rows:
        tag = f"eps={row['eps']:.12g}"
        if row["status"] != "ok":
            problems.append(f"{tag}: {row['status']}")
            continue
        if not row["lambda1"] <= row["rayleigh_bound"]:
            problems.append(f"{tag}: lambda1 exceeds the test-function bound")
        if prev is not None and not row["lambda1"] < prev:
            problems.append(f"{tag}: lambda1 not strictly decreasing")
        prev = row["lambda1"]
        if not row["kbar_pK"] <= K + row["kbar_p0"] + MINKOWSKI_TOL:
            problems.append(f"{tag}: kbar(p,K) > K + kbar(p,0)")
        if cfg.p == 1.5:
            bound = ((row["M1_est"] + row["M2_est"]) / (2 * R * R)) ** (2 / 3)
            if not row["kbar_p0"] <= bound:
                problems.append(f"{tag}: kbar(3/2,0) above the majorant bound")
        if not 4 * math.pi * R * R <= row["area"] <= 10 * math.pi * R * R + 2 * math.pi * L:
            problems.append(f"{tag}: area outside [4 pi R^2, 10 pi R^2 + 2 pi L]")
        if not row["meridian_length"] <= row["diam_bound"]:
            problems.append(f"{tag}: meridian longer than the diameter bound")
        if not abs(row["gauss_bonnet"] - 4 * math.pi) <= GB_TOL * 4 * math.pi:
            problems.append(f"{tag}: total curvature differs from 4 pi")
        if not row["convergence_gap"] <= GAP_TOL:
            problems.append(f"{tag}: grid convergence gap above {GAP_TOL}")
    return problems


def fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _rounded(value):
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        return float(f"{value:.12g}")
    return value


def rows_to_csv(rows: list[dict], fields=SWEEP_FIELDS) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([fmt(row[f]) for f in fields])
    return buf.getvalue()


def rows_to_json(rows: list[dict], fields=SWEEP_FIELDS) -> str:
    out = [
        {"schema_version": SCHEMA_VERSION, **{f: _rounded(row[f]) for f in fields}}
        for row in rows
    ]
    return json.dumps(out, indent=2) + "\n"
