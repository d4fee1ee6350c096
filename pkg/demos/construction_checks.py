"""
Sampled checks of the construction
==================================

The neck is built from a flat-tailed step.  Four properties make the
curvature estimates work: the step is antisymmetric about 1/2 and flat
at 0, the neck is convex where it leaves the cylinder, it never dips
below the eps = 0 profile, and the curvature majorant vanishes at the
junction.  Each is checked on a fixed grid and reported with a margin.
"""
import json

from dumbbell import verify_all

for R in (1.0, 2.0, 4.0):
    reports = verify_all(R, 1.0)
    ok = all(r.passed for r in reports)
    print(f"R={R}: {'all pass' if ok else 'FAILURES'}")
    for r in reports:
        print(f"  {r.claim_id:15s} margin {r.worst_margin:+.3e}")

# the JSON form the CLI emits
print(json.dumps(verify_all(2.0, 1.0)[4].to_json(), indent=2))
