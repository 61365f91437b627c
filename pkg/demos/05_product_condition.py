"""Uniqueness of a cyclic factorization from two products.

For a cyclic two-diagonal factor B (s_i on the diagonal, t_i below plus
the corner), det M(BB^T) = (prod s - prod t)^2.  So BB^T factors uniquely
exactly when the two products agree; otherwise there are two minimal
factorizations.
"""

import numpy as np

from cpfactor import cycle_factorize, cycle_product_condition


def cyclic_factor(s, t):
    n = len(s)
    b = np.zeros((n, n))
    for i in range(n):
        b[i, i] = s[i]
        b[(i + 1) % n, i] = t[i]
    return b


if __name__ == "__main__":
    cases = [
        ("all ones", [1, 1, 1, 1, 1], [1, 1, 1, 1, 1]),
        ("balanced products", [2, 1, 1, 1, 1], [1, 1, 1, 1, 2]),
        ("unbalanced", [1, 1, 1, 1], [1, 1, 1, 2]),
    ]
    for name, s, t in cases:
        b = cyclic_factor([float(x) for x in s], [float(x) for x in t])
        res = cycle_product_condition(b)
        count = len(cycle_factorize(b @ b.T))
        print(f"{name}: prod(s)={res.diag_product:g} prod(t)={res.cycle_product:g} "
              f"det M = {res.det_value:g}")
        print(f"  products equal: {res.products_equal} -> "
              f"{count} minimal factorization(s) found\n")
