import itertools
import json
import math

import numpy as np
import pytest

from dumbbell.claims import (
    A_bound, B_bound, ClaimReport, verify_all, verify_claim1, verify_claim2, verify_claim3,
    verify_claim4,
)
from dumbbell.profile import DumbbellParams, ProfileCurve
from dumbbell.smoothstep import step_decay_ratio

IDS = [
    "C1_symmetry", "C1_decay", "C1_ratio", "C2_positivity", "C2_AB", "C3_domination",
    "C4_boundedness",
]


def test_comparison_functions_at_quarter():
    assert A_bound(0.25) == pytest.approx(160 / 9, rel=1e-14)
    assert B_bound(0.25) == pytest.approx(64 / 21, rel=1e-14)


def test_comparison_functions_at_half():
    assert A_bound(0.5) > B_bound(0.5)


def test_mixed_ratio_rejects_critical_budget():
    with pytest.raises(ValueError):
        step_decay_ratio(0.1, 1, 1)


def test_convexity_example():
    p = DumbbellParams(2.0, 1.0, 0.4)
    assert ProfileCurve(p).eval(np.array([p.x1 + 0.1]))[2][0] > 0


@pytest.mark.parametrize("R,L", list(itertools.product([1.0, 2.0, 4.0], [0.5, 1.0, 2.0])))
def test_all_claims_pass(R, L):
    reports = verify_all(R, L)
    assert [r.claim_id for r in reports] == IDS
    for r in reports:
        assert r.passed, (r.claim_id, r.worst_margin)
        assert r.passed == (r.worst_margin > 0)


def test_symmetry_margin():
    sym = verify_claim1()[0]
    assert sym.worst_margin >= 0


def test_domination_vanishes_in_the_limit():
    # the neck of a vanishingly thin dumbbell approaches the limit profile
    r = verify_claim3(2.0, 1.0, eps_fractions=(1e-6,))
    assert r.passed
    p = DumbbellParams(2.0, 1.0, 2e-6)
    x = np.linspace(p.x1, p.x2, 102)[1:-1]
    g0 = ProfileCurve(p.with_eps(0.0)).neck(x)[0]
    assert np.max(ProfileCurve(p).neck(x)[0] - g0) < 1e-5


def test_boundedness_sequence_reaches_zero():
    r = verify_claim4(2.0, 1.0)
    assert r.passed and math.isfinite(r.worst_margin)


def test_reports_are_deterministic():
    a = [r.to_json() for r in verify_all(2.0, 1.0)]
    b = [r.to_json() for r in verify_all(2.0, 1.0)]
    assert json.dumps(a) == json.dumps(b)


def test_json_shape():
    d = verify_claim2()[1].to_json()
    assert list(d) == ["claim_id", "grid_spec", "pass", "worst_margin"]
    json.dumps(d)


def test_failing_margin_marks_failure():
    assert not ClaimReport("C2_AB", {}, False, -1.0).passed
