"""Flat-tailed smooth step ``s(x)`` and its first two derivatives.

On ``0 < x < 1`` the step is ``s = 1 / (1 + exp(t))`` with
``t = 1/x - 1/(1-x)``.  Every derivative is assembled from the factor
``s (1 - s)`` so that nothing overflows near the endpoints, where ``t``
runs off to ``+-inf``.  Outside the open interval ``s`` is clamped to 0 or 1.

A log-space variant (:func:`log_step`) is provided for quantities such as
``s'(2x)^a s''(2x)^b / s(x)`` whose numerator and denominator both
underflow long before the ratio itself becomes small.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import expit, log_expit

__all__ = ["StepEval", "step_eval", "step", "log_step", "step_decay_ratio"]


@dataclass(frozen=True)
class StepEval:
    x: float
    s: float
    s1: float
    s2: float


def _interior(x):
    # t, r = -dt/dx, r' = dr/dx on 0 < x < 1
    xm = 1.0 - x
    t = 1.0 / x - 1.0 / xm
    r = 1.0 / (x * x) + 1.0 / (xm * xm)
    rp = -2.0 / (x * x * x) + 2.0 / (xm * xm * xm)
    return t, r, rp


def step(x):
    """Vectorised ``(s, s', s'')``.

    Parameters
    ----------
    x : float or array_like
        Abscissae. Any finite value is accepted.

    Returns
    -------
    s, s1, s2 : ndarray
        Step value and first/second derivatives, same shape as ``x``.
    """
    x = np.asarray(x, dtype=float)
    s = np.where(x >= 1.0, 1.0, 0.0)
    s1 = np.zeros_like(x)
    s2 = np.zeros_like(x)
    inside = (x > 0.0) & (x < 1.0)
    if np.any(inside):
        xi = x[inside]
        with np.errstate(over="ignore", under="ignore", divide="ignore"):
            t, r, rp = _interior(xi)
            # expit picks the overflow-safe branch on the sign of t
            si = expit(-t)
            sc = expit(t)  # 1 - s, computed without cancellation
            w = si * sc
            s[inside] = si
            # w underflows to 0 before r or r^2 overflow; keep 0 * inf out
            live = w > 0.0
            d1 = np.zeros_like(xi)
            d2 = np.zeros_like(xi)
            d1[live] = w[live] * r[live]
            d2[live] = w[live] * ((sc[live] - si[live]) * r[live] ** 2 + rp[live])
            s1[inside] = d1
            s2[inside] = d2
    return s, s1, s2


def step_eval(x: float) -> StepEval:
    """Scalar evaluation of the step and its first two derivatives."""
    s, s1, s2 = step(float(x))
    return StepEval(float(x), float(s), float(s1), float(s2))


def log_step(x):
    """Return ``(log s, log s', log s'')`` on ``0 < x < 1``.

    ``s''`` changes sign at ``x = 1/2`` so its logarithm is only defined on
    the left half; callers beyond it get ``nan`` for the last entry.
    """
    x = np.asarray(x, dtype=float)
    t, r, rp = _interior(x)
    ls = log_expit(-t)
    lsc = log_expit(t)
    s = np.exp(ls)
    sc = expit(t)
    with np.errstate(invalid="ignore", divide="ignore"):
        ls1 = ls + lsc + np.log(r)
        ls2 = ls + lsc + np.log((sc - s) * r * r + rp)
    return ls, ls1, ls2


def step_decay_ratio(x: float, a: float, b: float, log: bool = False) -> float:
    """``s'(2x)^a s''(2x)^b / s(x)``, assembled in log space.

    Requires ``a, b >= 0`` with ``a + b > 2`` and ``0 < x < 1/2``; otherwise
    the limit at ``x -> 0`` is not guaranteed and ``ValueError`` is raised.
    With ``log=True`` the natural logarithm of the ratio is returned, which
    stays finite for arguments where the ratio itself underflows.
    """
    if a < 0 or b < 0 or a + b <= 2:
        raise ValueError(f"need a, b >= 0 and a + b > 2, got a={a}, b={b}")
    if not 0.0 < x < 0.5:
        raise ValueError(f"x must lie in (0, 1/2), got {x}")
    if b > 0 and 2 * x >= 0.5:
        raise ValueError("s''(2x) is not positive for x >= 1/4")
    _, l1, l2 = log_step(2.0 * x)
    l0, _, _ = log_step(x)
    val = a * l1 - l0
    if b > 0:
        val = val + b * l2
    val = float(val)
    return val if log else float(np.exp(val))
