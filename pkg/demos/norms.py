"""Schatten norms and quasi-norms on a few small matrices.

Run:  python demos/norms.py
"""

import numpy as np

from schatten_lab import gram, psd_sqrt, schatten_norm, schatten_norm_psd, singular_values
from schatten_lab.gen import GenConfig, random_matrix

# A diagonal matrix: singular values are |3| and |-4|, so the p-norm is the
# l_p norm of (3, 4).
a = np.diag([3.0, -4.0])
for p in (0.5, 1, 2, 4, 10):
    print(f"||diag(3,-4)||_{p:<4} = {schatten_norm(a, p):.12g}")

# Below p = 1 the triangle inequality fails; the quasi-norm of a sum can
# exceed the sum of the quasi-norms.
e1, e2 = np.diag([1.0, 0.0]), np.diag([0.0, 1.0])
p = 0.5
print(f"\np = {p}: ||e1 + e2|| = {schatten_norm(e1 + e2, p):g}, "
      f"||e1|| + ||e2|| = {schatten_norm(e1, p) + schatten_norm(e2, p):g}")

# The norms decrease as p grows.
m = random_matrix(GenConfig(seed=2024, d=5))
print("\nsingular values of a random 5x5 matrix:", np.round(singular_values(m), 4))
for p in (0.25, 0.5, 1, 2, 3, 10):
    print(f"  p = {p:<5} norm = {schatten_norm(m, p):.6f}")

# || |A|^2 ||_{p/2} = ||A||_p^2 : the PSD path on the gram matrix.
for p in (1, 3):
    print(f"\np = {p}: ||A||_p^2 = {schatten_norm(m, p) ** 2:.12f}, "
          f"|| A*A ||_(p/2) = {schatten_norm_psd(gram(m), p / 2):.12f}")

# |A| = (A*A)^(1/2) has the same singular values as A.
absm = psd_sqrt(gram(m))
print("\nmax |sigma(|A|) - sigma(A)| =",
      f"{np.max(np.abs(singular_values(absm) - singular_values(m))):.2e}")
