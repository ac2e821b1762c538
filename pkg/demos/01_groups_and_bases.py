"""
Orthonormal bases of the classical compact Lie algebras
=======================================================

Builds so(n), su(n), u(n), sp(n) as explicit matrix bases, checks
orthonormality under g(Z, W) = Re tr(Z conj(W)^t), and evaluates the
basis-independent square sums that drive every Laplacian computation
downstream.
"""

import numpy as np

from eigenlab import (algebra_residual, gram_matrix, group_basis, mat_exp,
                      membership_residual, square_sum)

np.set_printoptions(precision=4, suppress=True, linewidth=100)

# one basis per algebra; dim grows quadratically with n
for group, n in [("so", 3), ("su", 3), ("u", 2), ("sp", 2)]:
    B = group_basis(group, n)
    G = gram_matrix(B)
    worst = max(algebra_residual(group, Z) for Z in B)
    print(f"{group}({n}): dim={B.dim}, matrix size {B.matrix_size}, "
          f"|G - I| = {np.abs(G - np.eye(B.dim)).max():.2e}, "
          f"algebra residual {worst:.2e}")

# sum_k Z_k^2 is a multiple of the identity (a Casimir); the multiple is
# what the table eigenvalues are made of
print()
for group, n in [("so", 4), ("su", 4), ("u", 4), ("sp", 2)]:
    S = square_sum(group_basis(group, n))
    coeff = S[0, 0].real
    print(f"{group}({n}): sum Z^2 = {coeff:+.6f} I   "
          f"(off-identity residual {np.abs(S - coeff * np.eye(len(S))).max():.2e})")

# exponentiating a basis element lands on the group
print()
Z = group_basis("su", 3)[0]
p = mat_exp(1.3 * Z)
print("exp(1.3 Z) for the first su(3) basis element:")
print(p)
print(f"unitary + det-1 residual: {membership_residual('su', p):.2e}")
