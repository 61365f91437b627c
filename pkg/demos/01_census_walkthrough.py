"""How many CP factorizations does a matrix have?

Walks the census over the bundled matrices: the diag-2 five-cycle (unique
factorization), the diag-3 five-cycle (exactly two), a singular path
matrix (unique, via the rank-2 shortcut) and a 2x2 with no zero entries
(infinitely many).
"""

import numpy as np

from cpfactor import classify_factorization_count, verify_factorization


def cycle5(diag):
    a = diag * np.eye(5)
    for i in range(5):
        a[i, (i + 1) % 5] = a[(i + 1) % 5, i] = 1.0
    return a


def show(name, a):
    census = classify_factorization_count(a)
    print(f"{name}:")
    print(f"  minimal factorizations: {census.minimal_count.value}")
    print(f"  total factorizations:   {census.total_count.value}")
    print(f"  cp-rank:                {census.cp_rank}")
    print(f"  decided by:             {census.basis_theorem}")
    for k, w in enumerate(census.witnesses):
        residual = verify_factorization(a, w)
        print(f"  witness {k}: {w.num_columns} columns, residual {residual:.2e}")
        for col in w.columns:
            print(f"    {np.round(col, 6)}")
    print()


if __name__ == "__main__":
    show("five-cycle, diagonal 2 (comparison matrix singular)", cycle5(2.0))
    show("five-cycle, diagonal 3 (comparison matrix nonsingular)", cycle5(3.0))
    show("singular path matrix", np.array([[1.0, 1, 0], [1, 2, 1], [0, 1, 1]]))
    show("dense 2x2, rank 2", np.array([[2.0, 1.0], [1.0, 2.0]]))
