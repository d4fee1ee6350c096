"""
Where the negative curvature lives
==================================

Curvature is zero on the cylinder and 1/R^2 on the caps; only the neck
bends the wrong way.  Its area-normalised 3/2-norm grows as the neck
thins but levels off, and the majorant built from the limit profile
bounds it for every eps.
"""
import numpy as np

from dumbbell import DumbbellParams, ProfileCurve, gaussian_curvature, kbar, neck_bound_integrals

p = DumbbellParams(2.0, 1.0, 0.1)
curve = ProfileCurve(p)

x = np.linspace(p.x1, p.x2, 9)
for xi, k in zip(x, gaussian_curvature(curve, x)):
    print(f"x={xi:6.3f}  kappa={k:+.4f}")

# the norm drifts upward as eps -> 0 but converges
print()
for eps in (0.2, 0.1, 0.05, 0.025, 1e-3, 1e-6):
    q = p.with_eps(eps)
    nb = neck_bound_integrals(q)
    bound = ((nb.M1 + nb.M2) / (2 * q.R**2)) ** (2 / 3)
    print(f"eps={eps:8.1e}  kbar(3/2,0)={kbar(ProfileCurve(q)).kbar:.4f}  majorant={bound:.3f}")

# raising the level K can only raise the deficiency
print()
for K in (0.0, 0.1, 0.25, 1.0):
    print(f"K={K:4.2f}  kbar(3/2,K)={kbar(curve, 1.5, K).kbar:.4f}")
