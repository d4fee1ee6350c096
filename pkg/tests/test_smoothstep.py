import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dumbbell.smoothstep import log_step, step, step_decay_ratio, step_eval


def fd(f, x, h=1e-6):
    return (f(x + h) - f(x - h)) / (2 * h)


def test_clamped_left():
    e = step_eval(-1.0)
    assert (e.s, e.s1, e.s2) == (0.0, 0.0, 0.0)


def test_clamped_right():
    e = step_eval(3.0)
    assert (e.s, e.s1, e.s2) == (1.0, 0.0, 0.0)


def test_midpoint():
    e = step_eval(0.5)
    assert e.s == 0.5
    # s(1-s) r = 1/4 * 8
    assert e.s1 == pytest.approx(2.0, rel=1e-14)
    assert fd(lambda x: step_eval(x).s, 0.5) == pytest.approx(e.s1, rel=1e-6)
    assert e.s2 == pytest.approx(0.0, abs=1e-12)


def test_underflow_near_zero():
    e = step_eval(1e-3)
    assert 0.0 <= e.s < 1e-300
    assert np.isfinite([e.s, e.s1, e.s2]).all()
    # exponent from a 50-digit evaluation
    assert log_step(1e-3)[0] == pytest.approx(-998.998998998999, rel=1e-13)


def test_endpoints_are_clamped_values():
    s, s1, s2 = step(np.array([0.0, 1.0]))
    assert s.tolist() == [0.0, 1.0]
    assert s1.tolist() == [0.0, 0.0] and s2.tolist() == [0.0, 0.0]


@pytest.mark.parametrize("x", [0.0, 1.0, 1e-308, -1e-308, 1 - 1e-16, 1e308, -1e308])
def test_no_nan_or_inf(x):
    assert np.isfinite(step(x)).all()


def test_random_finite_difference_consistency():
    rng = np.random.default_rng(0)
    xs = rng.uniform(0.05, 0.95, 100)
    s1 = step(xs)[1]
    s2 = step(xs)[2]
    assert np.max(np.abs(s1 - fd(lambda x: step(x)[0], xs))) <= 1e-6
    assert np.max(np.abs(s2 - fd(lambda x: step(x)[1], xs))) <= 1e-5


def test_symmetry_on_dense_grid():
    x = np.linspace(0.0, 1.0, 10_000)
    assert np.max(np.abs(step(x)[0] + step(1.0 - x)[0] - 1.0)) <= 1e-14


@given(st.floats(min_value=-5, max_value=5, allow_nan=False))
def test_bounded_and_monotone(x):
    s, s1, _ = step(x)
    assert 0.0 <= s <= 1.0
    assert s1 >= 0.0


@settings(max_examples=200)
@given(st.floats(min_value=0.0, max_value=1.0))
def test_symmetry_property(x):
    assert abs(step(x)[0] + step(1.0 - x)[0] - 1.0) <= 1e-14


@pytest.mark.parametrize("n", [0, 1, 2])
@pytest.mark.parametrize("m", [0, 1, 2, 3, 4])
def test_flat_tail_annihilates_powers(n, m):
    xs = 2.0 ** -np.arange(3, 13)
    logs = log_step(xs)[n] - m * np.log(xs)
    assert np.all(np.diff(logs) < 0)
    assert logs[-1] < -4000  # far below the smallest double


def test_log_step_matches_direct_values():
    xs = np.linspace(0.05, 0.45, 9)
    direct = np.log(np.stack(step(xs)))
    assert np.allclose(np.stack(log_step(xs)), direct, rtol=1e-12)


def test_decay_ratio_matches_naive_at_safe_point():
    val = step_decay_ratio(0.4, 3, 0)
    naive = step(0.8)[1] ** 3 / step(0.4)[0]
    assert val > 0
    assert val == pytest.approx(naive, rel=1e-10)
    # 50-digit reference
    assert val == pytest.approx(0.69994515506659791577, rel=1e-12)


def test_decay_ratio_decreases_along_powers_of_ten():
    vals = [step_decay_ratio(x, 2.5, 0, log=True) for x in (1e-1, 1e-2, 1e-3)]
    assert vals[0] > vals[1] > vals[2]
    assert math.exp(vals[2]) < 1e-90


@pytest.mark.parametrize("a,b", [(1, 1), (2, 0), (0.5, 0.5), (-1, 4)])
def test_decay_ratio_rejects_bad_exponents(a, b):
    with pytest.raises(ValueError):
        step_decay_ratio(0.1, a, b)


@pytest.mark.parametrize("x", [0.0, 0.5, -0.1, 0.7])
def test_decay_ratio_rejects_bad_abscissa(x):
    with pytest.raises(ValueError):
        step_decay_ratio(x, 3, 0)
