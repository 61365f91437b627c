"""Infinitely many factorizations from plane rotations.

When two columns of a factorization have nested supports, rotating the
pair inside an admissible arc keeps every entry nonnegative without
changing the reconstructed matrix.  Nonsingular tree matrices and dense
rank-2 matrices both carry such families.
"""

import numpy as np

from cpfactor import (
    rank2_factorize,
    rotation_family_sample,
    tree_two_witnesses,
    verify_factorization,
)

A = np.array([[2.0, 1.0], [1.0, 2.0]])

if __name__ == "__main__":
    w0, w1, family = tree_two_witnesses(A)
    lo, hi = family.theta_range
    print("nonsingular tree witnesses (single-vertex spike at 0, then 1):")
    print(f"  witness 0 columns: {[np.round(c, 4).tolist() for c in w0.columns]}")
    print(f"  witness 1 columns: {[np.round(c, 4).tolist() for c in w1.columns]}")
    print(f"  admissible rotation arc: [{lo:.4f}, {hi:.4f}] rad")
    for theta in np.linspace(lo, hi, 5):
        f = rotation_family_sample(family, float(theta))
        print(f"  theta={theta:+.4f}: columns "
              f"{[np.round(c, 4).tolist() for c in f.columns]} "
              f"residual {verify_factorization(A, f):.1e}")

    print()
    print("rank-2 family (no zero entries, supports coincide):")
    fam2 = rank2_factorize(A)
    lo2, hi2 = fam2.theta_range
    print(f"  seed columns: {[np.round(c, 4).tolist() for c in fam2.base.columns]}")
    print(f"  arc: [{lo2:.4f}, {hi2:.4f}] rad, zero strictly inside")
