"""
Eigenvector conditions versus the kinematic polynomials
=======================================================

The curvature and torsion conditions are polynomial in the velocity and
jacobian entries. For a frozen jacobian with real spectrum they coincide
with the eigenvector conditions: collinearity with the slow eigenvector in
2D, coplanarity with the slow eigenplane in 3D. This script spot-checks
the equivalences on random matrices and runs the packaged checks.
"""

import numpy as np

from slowman import slow_manifold as sm
from slowman import tls
from slowman.verify import random_real_jacobians, run_checks

rng = np.random.default_rng(0)
J = random_real_jacobians(rng, 3, 1)[0]
v = rng.standard_normal(3)
ed = tls.eigen_matrix(J)
print("eigenvalues (fast first):", np.round(ed.eigenvalues.real, 4))
print("triple product (J^2 v).(v ^ J v):", sm.triple_jerk(J, v))
print("cubic polynomial:               ", tls.polynomial_phi_3d(J, v))
print("product of linear forms:        ", tls.linear_factorization(J, v))
print("conjugate products:", tls.conjugate_products(J, v))

for r in run_checks(seed=7, trials=200):
    print(f"{r['check']:42s} max {r['max_residual']:.1e}  tol {r['tolerance']:.0e}  {'ok' if r['pass'] else 'FAIL'}")
