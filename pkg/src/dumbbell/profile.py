"""Dumbbell profile curves and their pole-to-pole meridian grids.

The half profile for ``x >= 0`` is a cylinder of radius ``eps`` on
``[0, x1)``, a mollified transition onto a circle of radius ``R`` on
``[x1, x2]`` and the exact circular cap on ``(x2, x2 + R]``.  The other half
is the mirror image.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .quadrature import gauss_legendre_panels
from .smoothstep import step

__all__ = [
    "DumbbellParams",
    "Segment",
    "ProfileCurve",
    "RoundSphere",
    "MeridianGrid",
    "semicircle_eval",
    "profile_eval",
    "build_meridian",
    "round_sphere_grid",
]


@dataclass(frozen=True)
class DumbbellParams:
    """Cap radius ``R``, cylinder length ``L`` and neck radius ``eps``.

    ``eps = 0`` is accepted so the limiting profile ``g_0`` can be evaluated
    on the neck; every surface-level computation requires ``eps > 0``.
    """

    R: float
    L: float
    eps: float

    def __post_init__(self):
        if not self.R > 0:
            raise ValueError(f"R must be positive, got {self.R}")
        if not self.L > 0:
            raise ValueError(f"L must be positive, got {self.L}")
        if not 0 <= self.eps < self.R / 2:
            raise ValueError(f"eps must lie in [0, R/2) = [0, {self.R / 2}), got {self.eps}")

    @property
    def x1(self) -> float:
        return self.L / 2

    @property
    def neck_width(self) -> float:
        return math.sqrt(self.R * self.R - self.eps * self.eps)

    @property
    def x2(self) -> float:
        return self.x1 + self.neck_width

    @property
    def x_pole(self) -> float:
        return self.x2 + self.R

    @property
    def x_M(self) -> float:
        # right end of the interval where the neck is provably convex
        return self.x1 + self.R / 4

    def with_eps(self, eps: float) -> "DumbbellParams":
        return DumbbellParams(self.R, self.L, eps)


@dataclass(frozen=True)
class Segment:
    kind: str  # "cylinder", "neck" or "cap"
    a: float
    b: float


def _check_domain(x, lo, hi, what):
    x = np.asarray(x, dtype=float)
    tol = 1e-12 * max(1.0, abs(hi))
    if np.any(~np.isfinite(x)) or np.any(x < lo - tol) or np.any(x > hi + tol):
        raise ValueError(f"{what}: abscissa outside [{lo}, {hi}]")
    return np.clip(x, lo, hi)


def _circle(R, centre, x):
    """Upper semicircle about ``(centre, 0)`` and two derivatives."""
    d = x - centre
    with np.errstate(divide="ignore", invalid="ignore"):
        c = np.sqrt(np.maximum(R * R - d * d, 0.0))
        c1 = -d / c
        c2 = -R * R / c**3
    return c, c1, c2


def semicircle_eval(params: DumbbellParams, x):
    """``c_eps(x) = sqrt(R^2 - (x - x2)^2)`` with first and second derivatives.

    Defined on ``[x1, x2 + R]``; at ``x1`` the circle passes through height
    ``eps``.
    """
    x = _check_domain(x, params.x1, params.x_pole, "semicircle_eval")
    return _circle(params.R, params.x2, x)


def _times(a, b):
    # a * b with 0 * inf treated as 0; b vanishes identically where the step is flat
    with np.errstate(invalid="ignore"):
        return np.where(b == 0.0, 0.0, a * b)


class ProfileCurve:
    """Evaluable half profile ``x -> (g, g', g'')`` of a dumbbell."""

    def __init__(self, params: DumbbellParams):
        self.params = params

    @property
    def segments(self) -> tuple[Segment, ...]:
        p = self.params
        return (
            Segment("cylinder", 0.0, p.x1),
            Segment("neck", p.x1, p.x2),
            Segment("cap", p.x2, p.x_pole),
        )

    @property
    def R(self) -> float:
        return self.params.R

    @property
    def domain(self) -> tuple[float, float]:
        return 0.0, self.params.x_pole

    def neck(self, x):
        """Values on the transition region, no domain checks."""
        p = self.params
        w = p.neck_width
        c, c1, c2 = _circle(p.R, p.x2, x)
        s, s1, s2 = step((x - p.x1) / w)
        lift = c - p.eps
        g = p.eps + lift * s
        g1 = _times(c1, s) + lift * s1 / w
        g2 = _times(c2, s) + _times(2.0 * c1, s1) / w + lift * s2 / (w * w)
        return g, g1, g2

    def eval(self, x):
        """Vectorised ``(g, g', g'')`` on ``[0, x2 + R]``."""
        p = self.params
        x = _check_domain(x, 0.0, p.x_pole, "profile_eval")
        g = np.full_like(x, p.eps)
        g1 = np.zeros_like(x)
        g2 = np.zeros_like(x)
        neck = (x >= p.x1) & (x <= p.x2)
        cap = x > p.x2
        if np.any(neck):
            g[neck], g1[neck], g2[neck] = self.neck(x[neck])
        if np.any(cap):
            g[cap], g1[cap], g2[cap] = _circle(p.R, p.x2, x[cap])
        return g, g1, g2

    def __call__(self, x):
        return self.eval(x)


class RoundSphere:
    """Round sphere of radius ``R`` exposed through the profile interface.

    Its half profile is a single cap on ``[0, R]``; used as an oracle surface
    by the geometry, curvature and spectrum routines.
    """

    def __init__(self, R: float = 1.0):
        if not R > 0:
            raise ValueError("R must be positive")
        self.R = float(R)

    @property
    def segments(self) -> tuple[Segment, ...]:
        return (Segment("cap", 0.0, self.R),)

    @property
    def domain(self) -> tuple[float, float]:
        return 0.0, self.R

    def eval(self, x):
        x = _check_domain(x, 0.0, self.R, "RoundSphere.eval")
        return _circle(self.R, 0.0, x)

    def __call__(self, x):
        return self.eval(x)


def profile_eval(curve, x):
    """``(g, g', g'')`` of ``curve`` at ``x``; scalars in, floats out."""
    g, g1, g2 = curve.eval(np.asarray(x, dtype=float))
    if np.ndim(x) == 0:
        return float(g), float(g1), float(g2)
    return g, g1, g2


@dataclass(frozen=True)
class MeridianGrid:
    """Uniform arc-length sampling of a pole-to-pole meridian.

    ``t`` holds ``n + 2`` nodes including both poles, ``r`` the distance to
    the rotation axis at each node.  ``radius`` evaluates ``r`` at arbitrary
    arc length and is what the discretisations use for half-node values.
    """

    n: int
    t: np.ndarray
    r: np.ndarray
    T: float
    radius: Callable[[np.ndarray], np.ndarray] = field(repr=False, compare=False)

    @property
    def h(self) -> float:
        return self.T / (self.n + 1)

    def resample(self, n: int) -> "MeridianGrid":
        """Same surface on ``n`` interior nodes."""
        return _make_grid(n, self.T, self.radius)


def _make_grid(n, T, radius):
    t = np.linspace(0.0, T, n + 2)
    r = radius(t)
    r[0] = r[-1] = 0.0
    return MeridianGrid(n=n, t=t, r=r, T=T, radius=radius)


class _NeckArcLength:
    """Arc length along the neck, ``x -> int_{x1}^{x} sqrt(1 + g'^2)``.

    A table of Gauss-Legendre panel integrals gives the cumulative length at
    panel edges; inside a panel the remainder is integrated afresh, so the
    map is accurate to quadrature precision everywhere.
    """

    def __init__(self, curve: ProfileCurve, panels: int = 4000):
        p = curve.params
        self.curve = curve
        self.edges = np.linspace(p.x1, p.x2, panels + 1)
        pieces = gauss_legendre_panels(self._speed, self.edges[:-1], self.edges[1:])
        self.cum = np.r_[0.0, np.cumsum(pieces)]
        self.length = float(self.cum[-1])

    def _speed(self, x):
        _, g1, _ = self.curve.neck(x)
        return np.sqrt(1.0 + g1 * g1)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        i = np.clip(np.searchsorted(self.edges, x, side="right") - 1, 0, self.edges.size - 2)
        return self.cum[i] + gauss_legendre_panels(self._speed, self.edges[i], x)

    def invert(self, s):
        """Abscissa at neck arc length ``s`` (vectorised bisection)."""
        s = np.asarray(s, dtype=float)
        i = np.clip(np.searchsorted(self.cum, s, side="right") - 1, 0, self.edges.size - 2)
        lo = self.edges[i].copy()
        hi = self.edges[i + 1].copy()
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            below = self(mid) < s
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        return 0.5 * (lo + hi)


def build_meridian(params: DumbbellParams, n: int = 4000) -> MeridianGrid:
    """Arc-length grid from the left pole to the right pole.

    Parameters
    ----------
    params : DumbbellParams
        Surface parameters, ``eps > 0``.
    n : int
        Number of interior nodes, at least 100.
    """
    if n < 100:
        raise ValueError(f"need at least 100 interior nodes, got {n}")
    if not params.eps > 0:
        raise ValueError("the meridian needs a positive neck radius")
    curve = ProfileCurve(params)
    neck = _NeckArcLength(curve)
    R, eps, x1 = params.R, params.eps, params.x1
    neck_end = x1 + neck.length
    half = neck_end + 0.5 * math.pi * R
    T = 2.0 * half

    def radius(t):
        t = np.asarray(t, dtype=float)
        # distance from the centre of the cylinder, measured along the meridian
        tau = np.clip(np.abs(t - 0.5 * T), 0.0, half)
        r = np.full_like(tau, eps)
        on_neck = (tau > x1) & (tau < neck_end)
        if np.any(on_neck):
            xs = neck.invert(tau[on_neck] - x1)
            r[on_neck] = curve.neck(xs)[0]
        on_cap = tau >= neck_end
        r[on_cap] = R * np.cos((tau[on_cap] - neck_end) / R)
        return r

    return _make_grid(n, T, radius)


def round_sphere_grid(R: float = 1.0, n: int = 4000) -> MeridianGrid:
    """Meridian grid of the round sphere, ``r(t) = R sin(t / R)``."""
    if n < 100:
        raise ValueError(f"need at least 100 interior nodes, got {n}")

    def radius(t):
        return R * np.sin(np.asarray(t, dtype=float) / R)

    return _make_grid(n, math.pi * R, radius)
