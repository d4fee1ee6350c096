"""
Spectrum of the round sphere
============================

The unit sphere is the one surface whose spectrum we know by heart:
eigenvalues l(l+1) with multiplicity 2l+1.  Each angular mode m picks
out the l >= m part of that list, so it is a good first check of the
meridian solver.
"""
import time

from dumbbell import first_eigenvalue, mode_eigenvalues, round_sphere_grid

grid = round_sphere_grid(1.0, 4000)

# the m = 0 branch starts with the constant function
for m in range(3):
    vals = mode_eigenvalues(grid, m, k=4).eigenvalues
    print(f"m={m}:", " ".join(f"{v:10.6f}" for v in vals))

# lambda_1 = 2 for the unit sphere, shared by m = 0 and m = 1
t0 = time.perf_counter()
res = first_eigenvalue(grid)
print(f"lambda_1 = {res.lambda1:.8f} (mode {res.mode_of_lambda1}), "
      f"n vs n/2 gap {res.convergence_gap:.1e}, {time.perf_counter() - t0:.2f} s")

# halving h cuts the error by about four
for n in (250, 500, 1000, 2000):
    lam = mode_eigenvalues(round_sphere_grid(1.0, n), 0, 2).eigenvalues[1]
    print(f"n={n:5d}  error {abs(lam - 2):.3e}")
