"""Low Laplace-Beltrami spectrum of a surface of revolution.

Eigenfunctions separate as ``f(t) exp(i m theta)`` and each angular mode
``m`` solves the Sturm-Liouville problem

    -(r f')' + (m^2 / r) f = lambda r f      on (0, T)

along the meridian.  The flux form is discretised by finite volumes with
``r`` sampled exactly at half nodes, which keeps the pencil symmetric and
makes the constant vector an exact null vector for ``m = 0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .profile import MeridianGrid

__all__ = [
    "ModeSpectrum",
    "SpectrumResult",
    "ZeroModeError",
    "assemble_mode",
    "mode_eigenvalues",
    "first_eigenvalue",
    "half_meridian_eigenvalue",
    "symmetry_crosscheck",
    "discrete_rayleigh_quotient",
]

ZERO_MODE_RTOL = 1e-8


class ZeroModeError(RuntimeError):
    """The m = 0 zero eigenvalue could not be separated from lambda_1."""


@dataclass(frozen=True)
class ModeSpectrum:
    m: int
    eigenvalues: np.ndarray
    n: int


@dataclass(frozen=True)
class SpectrumResult:
    lambda1: float
    mode_of_lambda1: int
    per_mode: list[ModeSpectrum] = field(default_factory=list)
    convergence_gap: float = math.nan


@dataclass(frozen=True)
class Pencil:
    """Tridiagonal stiffness (``diag``, ``off``) and diagonal ``mass``.

    ``nodes`` indexes the grid nodes carrying unknowns.
    """

    diag: np.ndarray
    off: np.ndarray
    mass: np.ndarray
    nodes: np.ndarray


def _pencil(radius, t_nodes, h, m, left_pole_free, right_end_free):
    """Finite-volume pencil on uniformly spaced nodes ``t_nodes``.

    The end nodes either carry an unknown with a half cell (``free``, flux
    through the outer face vanishes because ``r = 0`` there or by symmetry)
    or are pinned to zero.
    """
    t_half = 0.5 * (t_nodes[:-1] + t_nodes[1:])
    flux = radius(t_half) / h
    r = radius(t_nodes)
    lo = 0 if left_pole_free else 1
    hi = t_nodes.size if right_end_free else t_nodes.size - 1
    idx = np.arange(lo, hi)

    diag = np.zeros(t_nodes.size)
    diag[:-1] += flux
    diag[1:] += flux
    mass = r * h
    # pole cells are half cells [0, h/2]; midpoint value of r on them
    if left_pole_free:
        mass[0] = 0.5 * h * radius(np.array([t_nodes[0] + 0.25 * h]))[0]
    if right_end_free:
        end = radius(np.array([t_nodes[-1] - 0.25 * h]))[0]
        mass[-1] = 0.5 * h * end
    if m:
        with np.errstate(divide="ignore"):
            diag = diag + m * m * h / r
    return Pencil(diag[idx], -flux[lo : hi - 1], mass[idx], idx)


def assemble_mode(grid: MeridianGrid, m: int) -> Pencil:
    """Stiffness and mass for angular mode ``m`` on the full meridian.

    ``m = 0`` keeps the pole nodes as unknowns (no flux through the poles);
    ``m >= 1`` pins the eigenfunction to zero at both poles.
    """
    if m < 0:
        raise ValueError("mode index must be non-negative")
    if grid.n < 100:
        raise ValueError(f"grid too coarse: n = {grid.n} < 100")
    free = m == 0
    return _pencil(grid.radius, grid.t, grid.h, m, free, free)


def _smallest(p: Pencil, k: int) -> np.ndarray:
    w = 1.0 / np.sqrt(p.mass)
    d = p.diag * w * w
    e = p.off * w[:-1] * w[1:]
    k = min(k, d.size)
    return eigh_tridiagonal(d, e, eigvals_only=True, select="i", select_range=(0, k - 1))


def mode_eigenvalues(grid: MeridianGrid, m: int, k: int = 4) -> ModeSpectrum:
    """The ``k`` smallest eigenvalues of mode ``m`` (Sturm bisection)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    vals = _smallest(assemble_mode(grid, m), k)
    return ModeSpectrum(m=m, eigenvalues=np.asarray(vals), n=grid.n)


def _lambda1(per_mode):
    scale = max(float(np.max(np.abs(ms.eigenvalues))) for ms in per_mode)
    thresh = ZERO_MODE_RTOL * scale
    best, best_m = math.inf, -1
    for ms in per_mode:
        vals = ms.eigenvalues
        if ms.m == 0:
            if vals.size < 2:
                raise ValueError("need k >= 2 to see past the zero mode")
            if abs(vals[0]) > thresh or vals[1] <= thresh:
                raise ZeroModeError(
                    f"zero mode not isolated (lambda_0={vals[0]:.3e}, "
                    f"lambda_1={vals[1]:.3e}, threshold {thresh:.3e}); refine the grid"
                )
            cand = vals[1]
        else:
            cand = vals[0]
        if cand < best:
            best, best_m = float(cand), ms.m
    return best, best_m


def first_eigenvalue(grid: MeridianGrid, m_max: int = 2, k: int = 4) -> SpectrumResult:
    """First non-zero eigenvalue over modes ``0..m_max``.

    A recomputation on half as many nodes fills ``convergence_gap``.
    """
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    per_mode = [mode_eigenvalues(grid, m, k) for m in range(m_max + 1)]
    lam, m_star = _lambda1(per_mode)
    coarse = grid.resample(grid.n // 2)
    lam_coarse, _ = _lambda1([mode_eigenvalues(coarse, m, k) for m in range(m_max + 1)])
    gap = abs(lam - lam_coarse) / lam
    return SpectrumResult(lam, m_star, per_mode, gap)


def half_meridian_eigenvalue(grid: MeridianGrid, n_half: int | None = None) -> float:
    """First eigenvalue of the left half meridian, Dirichlet at the centre.

    On a mirror-symmetric surface the first non-zero eigenfunction is odd,
    so this reproduces lambda_1 from an independent grid (``n_half`` nodes
    on half the length, by default ``grid.n``).
    """
    n_half = grid.n if n_half is None else n_half
    mid = 0.5 * grid.T
    probe = np.linspace(0.0, mid, 64)
    left, right = grid.radius(probe), grid.radius(grid.T - probe)
    if not np.allclose(left, right, rtol=0, atol=1e-8 * max(1.0, float(np.max(left)))):
        raise ValueError("meridian grid is not mirror symmetric")
    t = np.linspace(0.0, mid, n_half + 2)
    p = _pencil(grid.radius, t, t[1] - t[0], 0, True, False)
    return float(_smallest(p, 1)[0])


def symmetry_crosscheck(grid: MeridianGrid, m_max: int = 2, k: int = 4) -> dict:
    """Compare lambda_1 of the full grid with the half-meridian value."""
    full = first_eigenvalue(grid, m_max, k).lambda1
    half = half_meridian_eigenvalue(grid)
    return {
        "lambda1_full": full,
        "lambda1_half": half,
        "rel_disagreement": abs(full - half) / full,
    }


def discrete_rayleigh_quotient(grid: MeridianGrid, values, m: int = 0,
                               remove_mean: bool = True) -> float:
    """Rayleigh quotient of nodal ``values`` in the discrete ``m`` pencil.

    ``values`` are given on all ``n + 2`` nodes.  For ``m = 0`` the discrete
    mean is removed first (unless ``remove_mean`` is false) so the quotient
    bounds lambda_1 from above.  The energy is summed in flux-difference
    form, so a constant vector has energy exactly zero.
    """
    p = assemble_mode(grid, m)
    f = np.asarray(values, dtype=float)[p.nodes]
    if m == 0 and remove_mean:
        f = f - np.dot(p.mass, f) / p.mass.sum()
    energy = np.dot(-p.off, np.diff(f) ** 2)
    if m:
        # pinned neighbours and the m^2 / r term sit on the diagonal
        potential = p.diag.copy()
        potential[:-1] += p.off
        potential[1:] += p.off
        energy += np.dot(potential, f * f)
    return float(energy / np.dot(p.mass * f, f))
