import math

import numpy as np
import pytest

from dumbbell.profile import DumbbellParams, ProfileCurve, build_meridian
from dumbbell.rayleigh import (
    discrete_test_quotient, grid_test_function, rayleigh_bound, sweep_bound, test_function,
    test_quotient,
)
from dumbbell.spectrum import first_eigenvalue

P = DumbbellParams(2.0, 1.0, 0.1)


@pytest.fixture(scope="module")
def result():
    return test_quotient(ProfileCurve(P))


def test_dirichlet_energy(result):
    assert result.dirichlet == pytest.approx(0.8 * math.pi, rel=1e-10)


def test_mass_and_quotient(result):
    assert result.mass >= 4 * math.pi * P.R**2
    assert result.quotient <= 0.05
    assert result.quotient <= rayleigh_bound(P)


def test_mean_zero(result):
    area = result.mass  # c = 1, so the mass exceeds the area of the plateaus
    assert abs(result.mean) <= 1e-10 * area


def test_scale_invariance():
    q1 = test_quotient(ProfileCurve(P), c=1.0).quotient
    q7 = test_quotient(ProfileCurve(P), c=7.0).quotient
    assert abs(q1 - q7) <= 1e-12 * q1


def test_amplitude_must_be_positive():
    with pytest.raises(ValueError):
        test_quotient(ProfileCurve(P), c=0.0)


def test_function_shape():
    x = np.array([-5.0, -P.x1, 0.0, P.x1 / 2, P.x1, 3.0])
    assert test_function(P, x, 2.0).tolist() == [-2.0, -2.0, 0.0, 1.0, 2.0, 2.0]


def test_sweep_bound_values():
    rows = sweep_bound([P.with_eps(1 / k) for k in (5, 10, 20)])
    assert [b for _, b in rows] == pytest.approx([0.1, 0.05, 0.025])


def test_sweep_bound_requires_descending():
    with pytest.raises(ValueError):
        sweep_bound([P.with_eps(0.05), P.with_eps(0.1)])


@pytest.mark.parametrize("eps", [0.2, 0.1, 0.05])
def test_discrete_quotient_between_eigenvalue_and_bound(eps):
    p = P.with_eps(eps)
    grid = build_meridian(p, 4000)
    q = discrete_test_quotient(p, grid)
    assert first_eigenvalue(grid).lambda1 <= q + 1e-12
    assert q <= rayleigh_bound(p) * 1.02


def test_discrete_quotient_matches_continuous():
    grid = build_meridian(P, 4000)
    cont = test_quotient(ProfileCurve(P)).quotient
    assert discrete_test_quotient(P, grid) == pytest.approx(cont, rel=1e-3)


def test_grid_function_is_odd():
    grid = build_meridian(P, 1000)
    f = grid_test_function(P, grid)
    assert np.allclose(f, -f[::-1], atol=1e-9)
