"""Dumbbell surfaces of revolution: construction, spectra and curvature norms.

A family of closed surfaces made of two round caps of radius ``R`` joined
by a thin cylinder of radius ``eps`` and length ``L``.  As ``eps -> 0`` the
first non-zero Laplace eigenvalue tends to zero while the area, the
diameter and the ``L^p`` norm of the negative curvature stay bounded.
"""
from .claims import ClaimReport, verify_all
from .geometry import (
    GeometrySummary, area_element, bounds_summary, gauss_bonnet_total, gaussian_curvature,
    surface_area,
)
from .integral_curvature import IntegralCurvatureResult, kbar, neck_bound_integrals, rho_K
from .profile import (
    DumbbellParams, MeridianGrid, ProfileCurve, RoundSphere, build_meridian, profile_eval,
    round_sphere_grid, semicircle_eval,
)
from .rayleigh import rayleigh_bound, sweep_bound, test_quotient
from .smoothstep import StepEval, step, step_decay_ratio, step_eval
from .spectrum import (
    ModeSpectrum, SpectrumResult, first_eigenvalue, mode_eigenvalues, symmetry_crosscheck,
)

__version__ = "0.1.0"
