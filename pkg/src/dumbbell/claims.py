"""Sampled verification of the technical lemmas behind the construction.

Each check returns a :class:`ClaimReport` whose ``worst_margin`` is a signed
distance to violation: positive means the property held at every sample.
Grids are fixed and recorded in ``grid_spec`` so reports can be diffed
between runs.

Limits ``f(x) -> 0`` as ``x -> 0+`` are tested on dyadic sequences
``x = 2^-k`` in log space.  Some of these sequences first grow before the
exponential decay takes over, so a limit check passes when the sequence is
strictly decreasing from its maximum onwards and ends below where it
started; the margin is the smaller of those two gaps.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .integral_curvature import log_majorant_ratio
from .profile import DumbbellParams, ProfileCurve
from .smoothstep import log_step, step

__all__ = [
    "ClaimReport",
    "A_bound",
    "B_bound",
    "verify_claim1",
    "verify_claim2",
    "verify_claim3",
    "verify_claim4",
    "verify_all",
    "EPS_FRACTIONS",
]

# neck radii tested, as fractions of R (all below the admissible R/2)
EPS_FRACTIONS = (0.005, 0.025, 0.05, 0.1, 0.2, 0.3, 0.4, 0.49)
RATIO_EXPONENTS = ((2.5, 0.0), (1.5, 1.0), (0.5, 2.0), (0.0, 2.5))


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    grid_spec: dict = field(compare=False)
    passed: bool
    worst_margin: float

    def to_json(self) -> dict:
        d = asdict(self)
        return {
            "claim_id": d["claim_id"],
            "grid_spec": d["grid_spec"],
            "pass": d["passed"],
            "worst_margin": d["worst_margin"],
        }


def _report(claim_id, grid_spec, margin):
    margin = float(margin)
    return ClaimReport(claim_id, grid_spec, bool(margin > 0), margin)


def _limit_margin(logs):
    """Margin of a log-sequence that should fall to ``-inf``."""
    logs = np.asarray(logs, dtype=float)
    if not np.all(np.isfinite(logs)):
        return -math.inf
    peak = int(np.argmax(logs))
    tail = -np.diff(logs[peak:])
    if tail.size == 0:
        return -math.inf
    return min(float(tail.min()), float(logs[0] - logs[-1]))


def _log_derivative(n, x):
    return log_step(x)[n]


def verify_claim1(n_sym: int = 10_000, decay_k=(3, 12), ratio_k=(3, 14)) -> list[ClaimReport]:
    """Symmetry of the step, flatness at 0, and the mixed-derivative ratio."""
    x = np.linspace(0.0, 1.0, n_sym)
    err = float(np.max(np.abs(step(x)[0] + step(1.0 - x)[0] - 1.0)))
    sym = _report("C1_symmetry", {"x": f"linspace(0, 1, {n_sym})", "tol": 1e-14}, 1e-14 - err)

    ks = np.arange(decay_k[0], decay_k[1] + 1)
    xs = 2.0 ** (-ks.astype(float))
    drops = []
    for n in range(3):
        base = _log_derivative(n, xs)
        for m in range(5):
            drops.append(float(np.min(-np.diff(base - m * np.log(xs)))))
    decay = _report(
        "C1_decay",
        {"x": f"2^-k, k={decay_k[0]}..{decay_k[1]}", "n": [0, 1, 2], "m": [0, 1, 2, 3, 4]},
        min(drops),
    )

    ks = np.arange(ratio_k[0], ratio_k[1] + 1)
    xs = 2.0 ** (-ks.astype(float))
    ls0 = log_step(xs)[0]
    _, ls1, ls2 = log_step(2.0 * xs)
    margins = []
    for a, b in RATIO_EXPONENTS:
        logs = a * ls1 - ls0 + (b * ls2 if b else 0.0)
        margins.append(_limit_margin(logs))
    ratio = _report(
        "C1_ratio",
        {"x": f"2^-k, k={ratio_k[0]}..{ratio_k[1]}", "ab": [list(p) for p in RATIO_EXPONENTS]},
        min(margins),
    )
    return [sym, decay, ratio]


def A_bound(xs):
    """Lower bound for ``2 s'/s`` on ``(0, 1/2]``."""
    xs = np.asarray(xs, dtype=float)
    return (1.0 - 2.0 * xs + 2.0 * xs * xs) / (xs * xs * (xs - 1.0) ** 2)


def B_bound(xs):
    """Upper bound for the right-hand side of the convexity inequality."""
    xs = np.asarray(xs, dtype=float)
    return 1.0 / ((1.0 - xs) * (2.0 * xs - xs * xs))


def _g2_over_s(params: DumbbellParams, x):
    """``g_eps''(x) / s(x*)``: same sign as ``g''``, but free of underflow."""
    p = params
    w = p.neck_width
    u = (x - p.x1) / w
    d = x - p.x2
    c = np.sqrt(p.R * p.R - d * d)
    c1 = -d / c
    c2 = -p.R * p.R / c**3
    t = 1.0 / u - 1.0 / (1.0 - u)
    r = 1.0 / u**2 + 1.0 / (1.0 - u) ** 2
    rp = -2.0 / u**3 + 2.0 / (1.0 - u) ** 3
    s = 1.0 / (1.0 + np.exp(np.minimum(t, 700.0)))
    sc = 1.0 - s
    s1_s = sc * r
    s2_s = sc * ((sc - s) * r * r + rp)
    return c2 + 2.0 * c1 * s1_s / w + (c - p.eps) * s2_s / (w * w)


def verify_claim2(R: float = 2.0, L: float = 1.0, eps_fractions=EPS_FRACTIONS,
                  n_x: int = 1000, n_star: int = 10_000) -> list[ClaimReport]:
    """Convexity of the neck near its start, and the inequality ``A > B``."""
    margins = []
    for frac in eps_fractions:
        params = DumbbellParams(R, L, frac * R)
        x = params.x1 + (R / 4) * np.arange(1, n_x + 1) / (n_x + 1)
        margins.append(float(np.min(_g2_over_s(params, x))))
    pos = _report(
        "C2_positivity",
        {"R": R, "L": L, "eps/R": list(eps_fractions), "x": f"x1 + (R/4) j/{n_x + 1}, j=1..{n_x}"},
        min(margins),
    )

    xs = np.r_[np.arange(1, n_star + 1) / (2.0 * (n_star + 1)), 0.5]
    ab = _report(
        "C2_AB",
        {"x*": f"j/(2*{n_star + 1}), j=1..{n_star}, plus 1/2"},
        float(np.min(A_bound(xs) - B_bound(xs))),
    )
    return [pos, ab]


def _h(params: DumbbellParams, x):
    p = params
    d = x - p.x2
    c = np.sqrt(p.R * p.R - d * d)
    return p.eps + (c - p.eps) * step((x - p.x1) / p.R)[0]


def verify_claim3(R: float = 2.0, L: float = 1.0, eps_fractions=EPS_FRACTIONS,
                  n_x: int = 1000, fd_step: float = 1e-6) -> ClaimReport:
    """``g_eps >= g_0`` on the neck and monotonicity of the lower bound in ``eps``."""
    tol_g, tol_fd = 1e-12, 1e-8
    g0 = ProfileCurve(DumbbellParams(R, L, 0.0))
    margins = []
    for frac in eps_fractions:
        params = DumbbellParams(R, L, frac * R)
        curve = ProfileCurve(params)
        hi = params.with_eps(params.eps + fd_step).x2
        x = params.x1 + (hi - params.x1) * np.arange(1, n_x + 1) / (n_x + 1)
        gap = curve.neck(x)[0] - g0.neck(x)[0]
        margins.append(float(np.min(gap)) + tol_g)
        up = _h(params.with_eps(params.eps + fd_step), x)
        down = _h(params.with_eps(params.eps - fd_step), x)
        margins.append(float(np.min((up - down) / (2.0 * fd_step))) + tol_fd)
    return _report(
        "C3_domination",
        {
            "R": R, "L": L, "eps/R": list(eps_fractions),
            "x": f"x1 + (x2 - x1) j/{n_x + 1}, j=1..{n_x}",
            "fd_step": fd_step, "tol": [tol_g, tol_fd],
        },
        min(margins),
    )


def verify_claim4(R: float = 2.0, L: float = 1.0, ks=(3, 12), n_dense: int = 10_000) -> ClaimReport:
    """Boundedness of ``U^3 / g_0`` on ``[x1, x_M]`` and its vanishing at ``x1``."""
    params = DumbbellParams(R, L, 0.0)
    k = np.arange(ks[0], ks[1] + 1).astype(float)
    logs = log_majorant_ratio(params, params.x1 + R * 2.0**-k)
    margin = _limit_margin(logs)
    dense = params.x1 + (R / 4) * np.arange(1, n_dense + 1) / n_dense
    if not np.all(np.isfinite(np.exp(log_majorant_ratio(params, dense)))):
        margin = -math.inf
    return _report(
        "C4_boundedness",
        {"R": R, "L": L, "x": f"x1 + R 2^-k, k={ks[0]}..{ks[1]}",
         "dense": f"x1 + (R/4) j/{n_dense}, j=1..{n_dense}"},
        margin,
    )


def verify_all(R: float = 2.0, L: float = 1.0) -> list[ClaimReport]:
    """All seven reports for one ``(R, L)``."""
    return [
        *verify_claim1(),
        *verify_claim2(R, L),
        verify_claim3(R, L),
        verify_claim4(R, L),
    ]
