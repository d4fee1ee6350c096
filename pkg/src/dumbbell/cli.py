"""Command-line front end.

Exit codes: 0 when every computed invariant holds, 2 on an invariant
violation, 1 on a usage or configuration error.

Settings come from flags, then from a ``--config`` file, then from the
defaults.  The config file holds one ``key = value`` per line (``#`` starts
a comment); keys are the long flag names with dashes replaced by
underscores, e.g. ``grid_n = 2000`` or ``eps_dyadic = 5:40``.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import claims as claims_mod
from .geometry import gauss_bonnet_total, gaussian_curvature
from .profile import DumbbellParams, ProfileCurve, RoundSphere, build_meridian, round_sphere_grid
from .spectrum import first_eigenvalue
from .sweep import (
    GAP_TOL, GB_TOL, SCHEMA_VERSION, SweepConfig, check_rows, fmt, rows_to_csv, rows_to_json,
    run_sweep,
)

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2

DEFAULTS = {
    "R": 2.0, "L": 1.0, "eps": 0.1, "eps_list": None, "eps_dyadic": "5:40",
    "p": 1.5, "K": 0.0, "grid_n": 4000, "m_max": 2, "k_eigs": 4, "jobs": 1,
    "out_csv": None, "out_json": None, "tol_quad": 1e-10, "samples": 201,
    "sphere": False, "format": "json",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_float(text):
    v = float(text)
    if not v > 0 or not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def _add_common(p, *keys):
    S = argparse.SUPPRESS
    p.add_argument("--config", help="flat key = value settings file")
    p.add_argument("--R", type=_positive_float, default=S, help="cap radius (default 2)")
    p.add_argument("--L", type=_positive_float, default=S, help="cylinder length (default 1)")
    opts = {
        "eps": dict(type=_positive_float, help="neck radius (default 0.1)"),
        "eps_list": dict(help="comma-separated neck radii, descending"),
        "eps_dyadic": dict(help="i0:i1, neck radii 1/i for i = i0, 2 i0, ... <= i1 (default 5:40)"),
        "p": dict(type=float, help="curvature exponent (default 1.5)"),
        "K": dict(type=float, help="curvature level (default 0)"),
        "grid_n": dict(type=int, help="interior meridian nodes (default 4000)"),
        "m_max": dict(type=int, help="largest angular mode (default 2)"),
        "k_eigs": dict(type=int, help="eigenvalues per mode (default 4)"),
        "jobs": dict(type=int, help="parallel sweep workers (default 1)"),
        "out_csv": dict(help="write CSV here"),
        "out_json": dict(help="write JSON here"),
        "tol_quad": dict(type=float, help="quadrature relative tolerance (default 1e-10)"),
        "samples": dict(type=int, help="profile sample count (default 201)"),
        "format": dict(choices=["json", "csv"], help="output format (default json)"),
    }
    for key in keys:
        if key == "sphere":
            p.add_argument("--sphere", action="store_true", default=S,
                           help="use the round sphere of radius R instead of a dumbbell")
        else:
            p.add_argument("--" + key.replace("_", "-"), dest=key, default=S, **opts[key])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dumbbell", description="Dumbbell surfaces: spectra and curvature.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add_common(sub.add_parser("sweep", help="eigenvalue and curvature table over eps"),
                "eps_list", "eps_dyadic", "p", "K", "grid_n", "m_max", "k_eigs", "jobs",
                "out_csv", "out_json", "tol_quad")
    _add_common(sub.add_parser("spectrum", help="per-mode eigenvalues of one surface"),
                "eps", "sphere", "grid_n", "m_max", "k_eigs", "format")
    _add_common(sub.add_parser("profile", help="sampled profile curve as CSV"),
                "eps", "samples", "out_csv")
    _add_common(sub.add_parser("claims", help="sampled checks of the construction lemmas"))
    _add_common(sub.add_parser("gaussbonnet", help="total curvature of one surface"),
                "eps", "sphere", "tol_quad")
    return parser


def read_config(path: str) -> dict:
    """Parse a flat ``key = value`` file; unknown keys are rejected."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in DEFAULTS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = value
    return out


def _coerce(key, value):
    default = DEFAULTS[key]
    if isinstance(value, str):
        if isinstance(default, bool):
            return value.lower() in ("1", "true", "yes", "on")
        if isinstance(default, int):
            return int(value)
        if isinstance(default, float):
            return float(value)
    return value


def resolve(args: argparse.Namespace) -> dict:
    """Merge defaults, config file and flags (highest precedence last)."""
    settings = dict(DEFAULTS)
    if getattr(args, "config", None):
        settings.update(read_config(args.config))
    for key, value in vars(args).items():
        if key in DEFAULTS:
            settings[key] = value
    try:
        return {k: _coerce(k, v) for k, v in settings.items()}
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def eps_values(settings: dict) -> tuple[float, ...]:
    if settings["eps_list"]:
        try:
            vals = tuple(float(v) for v in str(settings["eps_list"]).split(",") if v.strip())
        except ValueError as exc:
            raise UsageError(f"bad --eps-list: {exc}") from exc
    else:
        try:
            i0, i1 = (int(v) for v in str(settings["eps_dyadic"]).split(":"))
        except ValueError as exc:
            raise UsageError("--eps-dyadic expects i0:i1") from exc
        if not 0 < i0 <= i1:
            raise UsageError("--eps-dyadic needs 0 < i0 <= i1")
        vals, i = [], i0
        while i <= i1:
            vals.append(1.0 / i)
            i *= 2
        vals = tuple(vals)
    if not vals or any(not v > 0 for v in vals):
        raise UsageError("neck radii must be positive")
    if any(b >= a for a, b in zip(vals, vals[1:])):
        raise UsageError("neck radii must be strictly decreasing")
    return vals


def _params(settings) -> DumbbellParams:
    try:
        return DumbbellParams(settings["R"], settings["L"], settings["eps"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_sweep(settings) -> int:
    eps = eps_values(settings)
    if settings["jobs"] < 1 or settings["grid_n"] < 100 or settings["m_max"] < 1 or settings["k_eigs"] < 2:
        raise UsageError("need jobs >= 1, grid-n >= 100, m-max >= 1, k-eigs >= 2")
    if not settings["p"] > 1 or settings["K"] < 0:
        raise UsageError("need p > 1 and K >= 0")
    cfg = SweepConfig(
        R=settings["R"], L=settings["L"], eps_list=eps, p=settings["p"], K=settings["K"],
        grid_n=settings["grid_n"], m_max=settings["m_max"], k_eigs=settings["k_eigs"],
        jobs=settings["jobs"], tol_quad=settings["tol_quad"],
    )
    rows = run_sweep(cfg)
    if settings["out_csv"]:
        _emit(rows_to_csv(rows), settings["out_csv"])
    if settings["out_json"] or not settings["out_csv"]:
        _emit(rows_to_json(rows), settings["out_json"])
    problems = check_rows(cfg, rows)
    for msg in problems:
        print(f"invariant violated: {msg}", file=sys.stderr)
    return EXIT_VIOLATION if problems else EXIT_OK


def cmd_spectrum(settings) -> int:
    if settings["grid_n"] < 100 or settings["m_max"] < 1 or settings["k_eigs"] < 2:
        raise UsageError("need grid-n >= 100, m-max >= 1, k-eigs >= 2")
    if settings["sphere"]:
        grid = round_sphere_grid(settings["R"], settings["grid_n"])
        surface = {"sphere": True, "R": settings["R"]}
    else:
        p = _params(settings)
        grid = build_meridian(p, settings["grid_n"])
        surface = {"sphere": False, "R": p.R, "L": p.L, "eps": p.eps}
    res = first_eigenvalue(grid, settings["m_max"], settings["k_eigs"])
    if settings["format"] == "csv":
        lines = ["m,index,eigenvalue"]
        for ms in res.per_mode:
            lines += [f"{ms.m},{i},{fmt(float(v))}" for i, v in enumerate(ms.eigenvalues)]
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        out = {
            "schema_version": SCHEMA_VERSION,
            "surface": surface,
            "n": grid.n,
            "lambda1": float(fmt(res.lambda1)),
            "mode_of_lambda1": res.mode_of_lambda1,
            "convergence_gap": float(fmt(res.convergence_gap)),
            "modes": [
                {"m": ms.m, "eigenvalues": [float(fmt(float(v))) for v in ms.eigenvalues]}
                for ms in res.per_mode
            ],
        }
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return EXIT_OK if res.convergence_gap <= GAP_TOL else EXIT_VIOLATION


def cmd_profile(settings) -> int:
    p = _params(settings)
    if not p.eps > 0 or settings["samples"] < 2:
        raise UsageError("need eps > 0 and at least 2 samples")
    curve = ProfileCurve(p)
    # the pole itself has no finite curvature, so stop just short of it
    x = np.linspace(0.0, p.x_pole, settings["samples"] + 1)[:-1]
    g, g1, g2 = curve.eval(x)
    kappa = gaussian_curvature(curve, x)
    lines = ["x,g,g1,g2,kappa"]
    lines += [",".join(fmt(float(v)) for v in row) for row in zip(x, g, g1, g2, kappa)]
    _emit("\n".join(lines) + "\n", settings["out_csv"])
    neck = (x >= p.x1) & (x <= p.x2)
    return EXIT_OK if np.all(np.diff(g[neck]) >= -1e-12) else EXIT_VIOLATION


def cmd_claims(settings) -> int:
    try:
        reports = claims_mod.verify_all(settings["R"], settings["L"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = [r.to_json() for r in reports]
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATION


def cmd_gaussbonnet(settings) -> int:
    if settings["sphere"]:
        curve = RoundSphere(settings["R"])
        surface = {"sphere": True, "R": settings["R"]}
    else:
        p = _params(settings)
        curve = ProfileCurve(p)
        surface = {"sphere": False, "R": p.R, "L": p.L, "eps": p.eps}
    total = gauss_bonnet_total(curve, settings["tol_quad"])
    rel = abs(total - 4 * math.pi) / (4 * math.pi)
    out = {
        "schema_version": SCHEMA_VERSION,
        "surface": surface,
        "total_curvature": float(fmt(total)),
        "rel_error": float(fmt(rel)),
        "pass": rel <= GB_TOL,
    }
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return EXIT_OK if rel <= GB_TOL else EXIT_VIOLATION


COMMANDS = {
    "sweep": cmd_sweep,
    "spectrum": cmd_spectrum,
    "profile": cmd_profile,
    "claims": cmd_claims,
    "gaussbonnet": cmd_gaussbonnet,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = resolve(args)
        return COMMANDS[args.command](settings)
    except (UsageError, OSError) as exc:
        print(f"dumbbell {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
