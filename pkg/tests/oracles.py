"""Reference computations that share no code with the package."""
import math

import mpmath as mp
import numpy as np
import sympy as sp
from scipy.integrate import trapezoid


def mp_step(x):
    x = mp.mpf(x)
    if x <= 0:
        return mp.mpf(0)
    if x >= 1:
        return mp.mpf(1)
    return 1 / (1 + mp.e ** (1 / x - 1 / (1 - x)))


def mp_profile(R, L, eps, dps=50):
    """High-precision ``g`` on the neck, built from the defining formula."""
    mp.mp.dps = dps
    R, L, eps = mp.mpf(R), mp.mpf(L), mp.mpf(eps)
    x1 = L / 2
    w = mp.sqrt(R**2 - eps**2)
    x2 = x1 + w

    def g(x):
        x = mp.mpf(x)
        c = mp.sqrt(R**2 - (x - x2) ** 2)
        return eps + (c - eps) * mp_step((x - x1) / w)

    return g


def mp_profile_derivs(R, L, eps, x):
    g = mp_profile(R, L, eps)
    return tuple(float(mp.diff(g, mp.mpf(x), k)) for k in range(3))


_X, _E, _R, _L = sp.symbols("x eps R L", positive=True)


def _neck_lambdas():
    x1 = _L / 2
    w = sp.sqrt(_R**2 - _E**2)
    c = sp.sqrt(_R**2 - (_X - x1 - w) ** 2)
    u = (_X - x1) / w
    g = _E + (c - _E) / (1 + sp.exp(1 / u - 1 / (1 - u)))
    return [sp.lambdify((_X, _E, _R, _L), sp.diff(g, _X, k), "numpy") for k in range(3)]


_G = None


def brute_force_kbar(R, L, eps, p=1.5, K=0.0, N=10**6):
    """``kbar`` by a composite trapezoid rule with ``N`` neck panels.

    Derivatives of the profile come from symbolic differentiation; near the
    start of the neck the raw expressions hit ``0 * inf`` where the exact
    values underflow to zero, and those samples are set to zero.
    """
    global _G
    if _G is None:
        _G = _neck_lambdas()
    a = L / 2
    b = a + math.sqrt(R * R - eps * eps)
    xs = np.linspace(a, b, N + 1)
    with np.errstate(all="ignore"):
        g, g1, g2 = (f(xs, eps, R, L) for f in _G)
    g = np.where(np.isfinite(g), g, eps)
    g1 = np.where(np.isfinite(g1), g1, 0.0)
    g2 = np.where(np.isfinite(g2), g2, 0.0)
    g[0], g1[0], g2[0] = eps, 0.0, 0.0
    g[-1], g1[-1], g2[-1] = R, 0.0, -1.0 / R
    kappa = -g2 / (g * (1 + g1**2) ** 2)
    dA = 2 * np.pi * g * np.sqrt(1 + g1**2)
    rho = np.maximum(K - kappa, 0.0) ** p * dA
    neck_rho = trapezoid(rho, xs)
    neck_area = trapezoid(dA, xs)
    cyl = 2 * np.pi * eps * a
    cap = 2 * np.pi * R * R
    area = 2 * (cyl + neck_area + cap)
    total = 2 * (K**p * cyl + neck_rho + max(K - 1 / R**2, 0.0) ** p * cap)
    return (total / area) ** (1 / p)
