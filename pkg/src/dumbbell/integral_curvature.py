"""Integral curvature norms of dumbbell surfaces.

In two dimensions the lowest Ricci eigenvalue is the Gaussian curvature, so
the deficiency below level ``K`` is ``rho_K = max(K - kappa, 0)`` and the
normalised norm is

    kbar(p, K) = (1/area * int rho_K^p dS)^(1/p).

Also provides the curvature majorant ``U`` used to bound the neck
contribution independently of ``eps``, and the two integrals built from it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .geometry import _curvature, _density, surface_area
from .profile import DumbbellParams, ProfileCurve
from .quadrature import QuadratureError, adaptive_quad
from .smoothstep import log_step

__all__ = [
    "IntegralCurvatureResult",
    "NeckBounds",
    "rho_K",
    "kbar",
    "log_majorant_ratio",
    "majorant_ratio_naive",
    "neck_bound_integrals",
    "neck_negative_integral",
]

RTOL = 1e-10


@dataclass(frozen=True)
class IntegralCurvatureResult:
    p: float
    K: float
    area: float
    rho_integral: float
    kbar: float


def rho_K(kappa, K: float = 0.0):
    """Pointwise curvature deficiency ``max(K - kappa, 0)``."""
    if K < 0:
        raise ValueError("K must be non-negative")
    return np.maximum(K - np.asarray(kappa, dtype=float), 0.0)


def _sign_changes(f, a, b, samples=2001):
    """Roots of ``f`` on ``(a, b)`` found by sampling and Brent refinement."""
    xs = np.linspace(a, b, samples)
    vals = f(xs)
    roots = []
    for i in np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]:
        roots.append(brentq(lambda x: float(f(np.array([x]))[0]), xs[i], xs[i + 1], xtol=1e-15))
    return roots


def _neck_kappa(curve):
    def kappa(x):
        g, g1, g2 = curve.neck(x)
        return _curvature(g, g1, g2)

    return kappa


def kbar(curve, p: float = 1.5, K: float = 0.0, rtol: float = RTOL) -> IntegralCurvatureResult:
    """Area-normalised ``L^p`` norm of ``rho_K`` over the closed surface.

    Parameters
    ----------
    curve : ProfileCurve or RoundSphere
    p : float
        Exponent, ``p > 1``.
    K : float
        Curvature level, ``K >= 0``.
    """
    if not p > 1:
        raise ValueError(f"p must exceed 1, got {p}")
    if K < 0:
        raise ValueError(f"K must be non-negative, got {K}")
    half = 0.0
    for seg in curve.segments:
        if seg.kind == "cylinder":
            half += K**p * 2.0 * math.pi * curve.params.eps * (seg.b - seg.a)
        elif seg.kind == "cap":
            half += max(K - 1.0 / curve.R**2, 0.0) ** p * 2.0 * math.pi * curve.R**2
        else:
            kappa = _neck_kappa(curve)
            kinks = _sign_changes(lambda x: kappa(x) - K, seg.a, seg.b)

            def f(x):
                g, g1, g2 = curve.neck(x)
                return rho_K(_curvature(g, g1, g2), K) ** p * _density(g, g1)

            half += adaptive_quad(f, seg.a, seg.b, rtol=rtol, breaks=kinks)[0]
    area = surface_area(curve, rtol)
    total = 2.0 * half
    return IntegralCurvatureResult(p, K, area, total, (total / area) ** (1.0 / p))


def neck_negative_integral(curve: ProfileCurve, p: float = 1.5, rtol: float = RTOL) -> float:
    """``int (kappa^-)^p dS`` over a single neck."""
    seg = curve.segments[1]
    kinks = _sign_changes(_neck_kappa(curve), seg.a, seg.b)

    def f(x):
        g, g1, g2 = curve.neck(x)
        return rho_K(_curvature(g, g1, g2), 0.0) ** p * _density(g, g1)

    return adaptive_quad(f, seg.a, seg.b, rtol=rtol, breaks=kinks)[0]


def log_majorant_ratio(params: DumbbellParams, x):
    """``log(U(x)^3 / (c_0(x) s((x - x1)/R)))`` on ``(x1, x_M]``.

    ``U`` bounds ``g_eps''`` near the start of the neck for every
    ``eps <= R/2``; ``c_0`` is the cap circle of the ``eps = 0`` profile.
    Everything is assembled from logarithms, so the value stays finite
    where ``U`` and ``s`` both underflow.
    """
    R, x1 = params.R, params.x1
    y = np.asarray(x, dtype=float) - x1
    if np.any(y <= 0) or np.any(y > R / 4 * (1 + 1e-12)):
        raise ValueError("majorant is only defined on (x1, x1 + R/4]")
    c0 = np.sqrt(y * (2.0 * R - y))
    c0p = (R - y) / c0
    _, ls1, ls2 = log_step(np.minimum(2.0 * y / R, 0.5))
    with np.errstate(divide="ignore"):
        lp = np.log(4.0 / (math.sqrt(3.0) * R) * c0p) + ls1
        lq = np.log(4.0 / (3.0 * R * R) * c0) + np.where(2.0 * y / R < 0.5, ls2, -np.inf)
    log_U = np.logaddexp(lp, lq)
    ls_denom, _, _ = log_step(y / R)
    return 3.0 * log_U - np.log(c0) - ls_denom


def majorant_ratio_naive(params: DumbbellParams, x):
    """Direct evaluation of the same ratio; only safe away from ``x1``."""
    from .smoothstep import step

    R, x1 = params.R, params.x1
    y = np.asarray(x, dtype=float) - x1
    c0 = np.sqrt(R * R - (y - R) ** 2)
    c0p = (R - y) / c0
    _, s1, s2 = step(2.0 * y / R)
    U = 4.0 / (math.sqrt(3.0) * R) * c0p * s1 + 4.0 / (3.0 * R * R) * c0 * s2
    return U**3 / (c0 * step(y / R)[0])


@dataclass(frozen=True)
class NeckBounds:
    M1: float
    M2: float
    neck_integral: float
    neck_majorant: float
    kbar_bound: float

    @property
    def chain_holds(self) -> bool:
        """``neck_integral <= neck_majorant <= 2 pi (M1 + M2)``."""
        return self.neck_integral <= self.neck_majorant <= 2.0 * math.pi * (self.M1 + self.M2)


def neck_bound_integrals(params: DumbbellParams, xi: float | None = None,
                         rtol: float = RTOL) -> NeckBounds:
    """Integrals bounding the ``3/2``-norm of the negative curvature on a neck.

    ``M1`` integrates ``(U^3 / g_0)^(1/2)`` over ``[x1, xi]`` and is the same
    for every ``eps``; ``M2`` integrates ``(|g''|^3 / g)^(1/2)`` of the actual
    profile over ``[xi, x1 + R]``.  The default split is ``xi = x1 + R/8``.

    Raises ``QuadratureError`` if either integral fails to converge, which
    would contradict the boundedness of the majorant.
    """
    if not params.eps > 0:
        raise ValueError("need eps > 0")
    x1, R = params.x1, params.R
    xi = x1 + R / 8 if xi is None else xi
    if not x1 < xi <= params.x_M:
        raise ValueError("split point must lie in (x1, x1 + R/4]")

    def m1(x):
        out = np.zeros_like(x)
        inside = x > x1
        out[inside] = np.exp(0.5 * log_majorant_ratio(params, x[inside]))
        return out

    M1, _ = adaptive_quad(m1, x1, xi, rtol=rtol)
    if not math.isfinite(M1):
        raise QuadratureError("majorant integral diverged")

    curve = ProfileCurve(params)

    def m2_integrand(x):
        g, _, g2 = curve.eval(x)
        return np.sqrt(np.abs(g2) ** 3 / g)

    end = x1 + R
    g2_roots = _sign_changes(lambda x: curve.eval(x)[2], xi, end)
    M2, _ = adaptive_quad(m2_integrand, xi, end, rtol=rtol, breaks=[*g2_roots, params.x2])

    seg = curve.segments[1]
    roots = _sign_changes(lambda x: curve.neck(x)[2], seg.a, seg.b)
    neck_majorant, _ = adaptive_quad(
        lambda x: np.sqrt(np.abs(curve.neck(x)[2]) ** 3 / curve.neck(x)[0]),
        seg.a, seg.b, rtol=rtol, breaks=roots,
    )
    neck_majorant *= 2.0 * math.pi
    direct = neck_negative_integral(curve, 1.5, rtol)
    bound = ((M1 + M2) / (2.0 * R * R)) ** (2.0 / 3.0)
    return NeckBounds(M1, M2, direct, neck_majorant, bound)
