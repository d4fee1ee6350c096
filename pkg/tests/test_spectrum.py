import math

import numpy as np
import pytest

from dumbbell.profile import DumbbellParams, build_meridian, round_sphere_grid
from dumbbell.rayleigh import discrete_test_quotient, rayleigh_bound
from dumbbell.spectrum import (
    assemble_mode, discrete_rayleigh_quotient, first_eigenvalue, half_meridian_eigenvalue,
    mode_eigenvalues, symmetry_crosscheck,
)

P = DumbbellParams(2.0, 1.0, 0.1)


@pytest.fixture(scope="module")
def sphere():
    return round_sphere_grid(1.0, 4000)


@pytest.fixture(scope="module")
def dumbbell():
    return build_meridian(P, 4000)


def test_sphere_axisymmetric_branch(sphere):
    vals = mode_eigenvalues(sphere, 0, 3).eigenvalues
    assert abs(vals[0]) <= 1e-8 * vals[-1]
    assert vals[1:] == pytest.approx([2.0, 6.0], rel=5e-3)


def test_sphere_first_mode_branch(sphere):
    assert mode_eigenvalues(sphere, 1, 2).eigenvalues == pytest.approx([2.0, 6.0], rel=5e-3)


def test_sphere_lambda1(sphere):
    res = first_eigenvalue(sphere)
    assert res.lambda1 == pytest.approx(2.0, rel=5e-3)
    assert res.mode_of_lambda1 in (0, 1)
    assert res.convergence_gap <= 0.01


def test_sphere_half_problem(sphere):
    assert half_meridian_eigenvalue(sphere) == pytest.approx(2.0, rel=5e-3)


def test_eigenvalues_ascending_and_nonnegative(dumbbell):
    for m in range(3):
        v = mode_eigenvalues(dumbbell, m, 4).eigenvalues
        # m >= 1 pairs up between the two caps, so only non-decreasing
        assert np.all(np.diff(v) >= 0)
        assert v[0] >= -1e-10


def test_dumbbell_below_test_function_bound(dumbbell):
    v = mode_eigenvalues(dumbbell, 0, 2).eigenvalues
    assert 0 < v[1] <= 2 * 0.1 / (1 * 4)
    res = first_eigenvalue(dumbbell)
    assert res.lambda1 <= rayleigh_bound(P)
    assert res.mode_of_lambda1 == 0


@pytest.mark.parametrize("eps", [0.2, 0.1, 0.05])
def test_axisymmetric_mode_lowest(eps):
    grid = build_meridian(P.with_eps(eps), 2000)
    m0 = mode_eigenvalues(grid, 0, 2).eigenvalues[1]
    m1 = mode_eigenvalues(grid, 1, 1).eigenvalues[0]
    assert m0 < m1


def test_decreases_with_neck_radius():
    lam = [first_eigenvalue(build_meridian(P.with_eps(e), 2000)).lambda1 for e in (0.1, 0.05)]
    assert lam[1] < lam[0]


def test_constant_has_zero_quotient(dumbbell):
    ones = np.ones(dumbbell.n + 2)
    assert discrete_rayleigh_quotient(dumbbell, 3.0 * ones, remove_mean=False) == 0.0
    assert discrete_rayleigh_quotient(dumbbell, ones + 1e-3 * dumbbell.t) > 0


def test_quotient_matches_matrix_form(dumbbell):
    rng = np.random.default_rng(2)
    f = rng.standard_normal(dumbbell.n + 2)
    for m in (0, 1, 2):
        p = assemble_mode(dumbbell, m)
        v = f[p.nodes]
        kv = p.diag * v
        kv[:-1] += p.off * v[1:]
        kv[1:] += p.off * v[:-1]
        direct = (v @ kv) / (p.mass * v @ v)
        got = discrete_rayleigh_quotient(dumbbell, f, m, remove_mean=False)
        assert got == pytest.approx(direct, rel=1e-10)


def test_min_max_against_test_function(dumbbell):
    lam = first_eigenvalue(dumbbell).lambda1
    assert lam <= discrete_test_quotient(P, dumbbell) + 1e-12


def test_min_max_against_random_functions(dumbbell):
    lam = mode_eigenvalues(dumbbell, 0, 2).eigenvalues[1]
    rng = np.random.default_rng(1)
    for _ in range(5):
        f = np.cumsum(rng.standard_normal(dumbbell.n + 2))
        assert lam <= discrete_rayleigh_quotient(dumbbell, f) + 1e-12


def test_second_order_convergence():
    lam = [first_eigenvalue(build_meridian(P, n)).lambda1 for n in (1000, 2000, 4000)]
    order = math.log2(abs(lam[1] - lam[0]) / abs(lam[2] - lam[1]))
    assert 1.6 <= order <= 2.4


def test_symmetry_crosscheck(dumbbell):
    rep = symmetry_crosscheck(dumbbell)
    assert rep["rel_disagreement"] <= 0.01


def test_crosscheck_disagreement_shrinks_quadratically():
    coarse = symmetry_crosscheck(build_meridian(P, 200))["rel_disagreement"]
    fine = symmetry_crosscheck(build_meridian(P, 800))["rel_disagreement"]
    # a factor 4 in n should cut an O(h^2) discrepancy by about 16
    assert 8 <= coarse / fine <= 32


def test_asymmetric_grid_rejected(dumbbell):
    from dataclasses import replace

    skew = replace(dumbbell, radius=lambda t: dumbbell.radius(t) * (1 + 0.1 * t / dumbbell.T))
    with pytest.raises(ValueError):
        half_meridian_eigenvalue(skew)


def test_input_validation(dumbbell):
    with pytest.raises(ValueError):
        mode_eigenvalues(dumbbell, -1)
    with pytest.raises(ValueError):
        mode_eigenvalues(dumbbell, 0, 0)
    with pytest.raises(ValueError):
        first_eigenvalue(dumbbell, m_max=0)
    with pytest.raises(ValueError):
        mode_eigenvalues(dumbbell.resample(50), 0)
