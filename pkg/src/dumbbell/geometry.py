"""Curvature, area and length of dumbbell surfaces of revolution.

Integrals over the surface are assembled piece by piece on the half profile
and doubled: the cylinder and the round cap have closed forms, only the
neck is integrated numerically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .profile import DumbbellParams, ProfileCurve
from .quadrature import adaptive_quad

__all__ = [
    "GeometrySummary",
    "gaussian_curvature",
    "area_element",
    "surface_area",
    "gauss_bonnet_total",
    "neck_length",
    "meridian_length",
    "diameter_bound",
    "area_bound",
    "bounds_summary",
]

RTOL = 1e-10


@dataclass(frozen=True)
class GeometrySummary:
    area: float
    meridian_length: float
    diam_bound: float
    area_bound: float
    gauss_bonnet: float


def _curvature(g, g1, g2):
    return -g2 / (g * (g1 * g1 + 1.0) ** 2)


def _density(g, g1):
    return 2.0 * math.pi * g * np.sqrt(1.0 + g1 * g1)


def gaussian_curvature(curve, x):
    """``kappa = -g'' / (g (1 + g'^2)^2)``; undefined at the poles."""
    g, g1, g2 = curve.eval(np.asarray(x, dtype=float))
    if np.any(g <= 0):
        raise ValueError("Gaussian curvature is not defined where the profile touches the axis")
    k = _curvature(g, g1, g2) + 0.0  # no negative zeros on flat pieces
    return float(k) if np.ndim(x) == 0 else k


def area_element(curve, x):
    """Area per unit ``x``: ``2 pi g sqrt(1 + g'^2)``."""
    g, g1, _ = curve.eval(np.asarray(x, dtype=float))
    dA = _density(g, g1)
    return float(dA) if np.ndim(x) == 0 else dA


def _neck_quad(curve, integrand, seg, rtol, breaks=()):
    def f(x):
        return integrand(*curve.neck(x))

    value, _ = adaptive_quad(f, seg.a, seg.b, rtol=rtol, breaks=breaks)
    return value


def surface_area(curve, rtol: float = RTOL) -> float:
    """Total area of the closed surface."""
    total = 0.0
    for seg in curve.segments:
        if seg.kind == "cylinder":
            total += 2.0 * math.pi * curve.params.eps * (seg.b - seg.a)
        elif seg.kind == "cap":
            total += 2.0 * math.pi * curve.R**2
        else:
            total += _neck_quad(curve, lambda g, g1, g2: _density(g, g1), seg, rtol)
    return 2.0 * total


def gauss_bonnet_total(curve, rtol: float = RTOL) -> float:
    """``int kappa dS`` over the closed surface (should be ``4 pi``)."""
    total = 0.0
    for seg in curve.segments:
        if seg.kind == "cap":
            total += 2.0 * math.pi
        elif seg.kind == "neck":
            total += _neck_quad(
                curve, lambda g, g1, g2: _curvature(g, g1, g2) * _density(g, g1), seg, rtol
            )
    return 2.0 * total


def neck_length(curve, rtol: float = RTOL) -> float:
    """Arc length of one neck piece of the profile."""
    seg = curve.segments[1]

    def f(x):
        return np.sqrt(1.0 + curve.neck(x)[1] ** 2)

    return adaptive_quad(f, seg.a, seg.b, rtol=rtol)[0]


def meridian_length(curve, rtol: float = RTOL) -> float:
    """Pole-to-pole length of the meridian."""
    if not hasattr(curve, "params"):
        return math.pi * curve.R
    p = curve.params
    return p.L + 2.0 * neck_length(curve, rtol) + math.pi * p.R


def diameter_bound(R: float, L: float) -> float:
    return (2.0 * math.pi + 8.0) * R + 2.0 * L


def area_bound(R: float, L: float) -> float:
    return 10.0 * math.pi * R * R + 2.0 * math.pi * L


def bounds_summary(params: DumbbellParams, curve: ProfileCurve | None = None) -> GeometrySummary:
    """Area, meridian length, total curvature and the closed-form bounds.

    The neck pieces are monotone, so their length and area must respect
    ``length <= (b - a) + |g(b) - g(a)|`` and
    ``area <= 2 pi max(g) (b - a) + pi |g(b)^2 - g(a)^2|``; a violation
    raises ``ArithmeticError``.
    """
    if params.eps > 1:
        raise ValueError("the closed-form bounds assume eps <= 1")
    curve = ProfileCurve(params) if curve is None else curve
    R, L, eps = params.R, params.L, params.eps
    width = params.neck_width
    ell = neck_length(curve)
    if ell > width + (R - eps):
        raise ArithmeticError(f"neck length {ell} exceeds the monotone-profile bound")
    neck_seg = curve.segments[1]
    neck_area = _neck_quad(curve, lambda g, g1, g2: _density(g, g1), neck_seg, RTOL)
    if neck_area > 2.0 * math.pi * R * width + math.pi * (R * R - eps * eps):
        raise ArithmeticError(f"neck area {neck_area} exceeds the monotone-profile bound")
    return GeometrySummary(
        area=surface_area(curve),
        meridian_length=L + 2.0 * ell + math.pi * R,
        diam_bound=diameter_bound(R, L),
        area_bound=area_bound(R, L),
        gauss_bonnet=gauss_bonnet_total(curve),
    )
