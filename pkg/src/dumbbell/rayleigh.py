"""Piecewise-linear test function across the handle and its Rayleigh quotient.

The function equals ``-c`` on the left cap and neck, ``+c`` on the right
ones, and rises linearly along the cylinder.  Its quotient bounds the first
non-zero eigenvalue by ``2 eps / (L R^2)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import _density
from .profile import DumbbellParams, MeridianGrid, ProfileCurve
from .quadrature import adaptive_quad
from .spectrum import discrete_rayleigh_quotient

__all__ = [
    "QuotientResult",
    "test_function",
    "test_quotient",
    "rayleigh_bound",
    "sweep_bound",
    "grid_test_function",
    "discrete_test_quotient",
]


@dataclass(frozen=True)
class QuotientResult:
    dirichlet: float
    mass: float
    mean: float

    @property
    def quotient(self) -> float:
        return self.dirichlet / self.mass


def test_function(params: DumbbellParams, x, c: float = 1.0):
    """Value at signed abscissa ``x``; linear in ``x`` on the cylinder."""
    return c * np.clip(np.asarray(x, dtype=float) / params.x1, -1.0, 1.0)


# keep pytest from collecting these as tests
test_function.__test__ = False


def test_quotient(curve: ProfileCurve, c: float = 1.0, rtol: float = 1e-12) -> QuotientResult:
    """Dirichlet energy, mass and mean of the test function on the surface.

    Energy and mass are even under the mirror, so they are integrated on the
    right half and doubled.  The mean integrates both halves separately.
    """
    if not c > 0:
        raise ValueError("amplitude must be positive")
    p = curve.params
    x1 = p.x1
    slope = c / x1
    half_dirichlet = half_mass = 0.0
    mean_right = mean_left = 0.0
    for seg in curve.segments:
        if seg.kind == "cylinder":

            def energy(x):
                g, g1, _ = curve.eval(x)
                # |grad f|^2 = f'(x)^2 / (1 + g'^2) on a surface of revolution
                return slope**2 / (1.0 + g1 * g1) * _density(g, g1)

            def mass(x):
                g, g1, _ = curve.eval(x)
                return test_function(p, x, c) ** 2 * _density(g, g1)

            def first(x, side=1.0):
                g, g1, _ = curve.eval(x)
                return test_function(p, side * x, c) * _density(g, g1)

            half_dirichlet += adaptive_quad(energy, seg.a, seg.b, rtol=rtol)[0]
            half_mass += adaptive_quad(mass, seg.a, seg.b, rtol=rtol)[0]
            mean_right += adaptive_quad(first, seg.a, seg.b, rtol=rtol)[0]
            mean_left += adaptive_quad(lambda x: first(x, -1.0), seg.a, seg.b, rtol=rtol)[0]
        elif seg.kind == "neck":
            area, _ = adaptive_quad(lambda x: _density(*curve.neck(x)[:2]), seg.a, seg.b, rtol=rtol)
        else:
            area = 2.0 * math.pi * p.R**2
        if seg.kind != "cylinder":
            half_mass += c * c * area
            mean_right += c * area
            mean_left -= c * area
    return QuotientResult(2.0 * half_dirichlet, 2.0 * half_mass, mean_right + mean_left)


test_quotient.__test__ = False


def rayleigh_bound(params: DumbbellParams) -> float:
    """Upper bound ``2 eps / (L R^2)`` on the first non-zero eigenvalue."""
    return 2.0 * params.eps / (params.L * params.R**2)


def sweep_bound(params_list) -> list[tuple[float, float]]:
    """``(eps, 2 eps / (L R^2))`` for each surface, ``eps`` strictly decreasing."""
    rows = []
    last = math.inf
    for params in params_list:
        if not 0 < params.eps < last:
            raise ValueError("eps values must be positive and strictly decreasing")
        last = params.eps
        rows.append((params.eps, rayleigh_bound(params)))
    return rows


def grid_test_function(params: DumbbellParams, grid: MeridianGrid, c: float = 1.0) -> np.ndarray:
    """Test function sampled on the meridian nodes.

    On the cylinder the arc length from the centre equals ``x``, so the
    nodal value only needs ``t - T/2``.
    """
    return test_function(params, grid.t - 0.5 * grid.T, c)


def discrete_test_quotient(params: DumbbellParams, grid: MeridianGrid, c: float = 1.0) -> float:
    """Discrete ``m = 0`` Rayleigh quotient of the sampled test function."""
    return discrete_rayleigh_quotient(grid, grid_test_function(params, grid, c), m=0)
