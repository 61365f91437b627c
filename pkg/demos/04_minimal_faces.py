"""The minimal face of the CP cone containing a matrix.

With a unique factorization the face is polyhedral: its extreme rays are
exactly the squares of the factorization columns.  With several
factorizations only the membership predicate (is A - b b^T still CP?) is
available.
"""

import numpy as np

from cpfactor import FaceKind, face_membership, minimal_face


def cycle5(diag):
    a = diag * np.eye(5)
    for i in range(5):
        a[i, (i + 1) % 5] = a[(i + 1) % 5, i] = 1.0
    return a


if __name__ == "__main__":
    unique = cycle5(2.0)
    face = minimal_face(unique)
    print(f"diag-2 cycle: {face.kind.value}, {len(face.generators)} generators")
    for g in face.generators:
        print(f"  generator {np.round(g, 6)} member={face_membership(unique, g)}")
    probes = [
        np.array([1.0, 0, 0, 0, 0]),
        np.array([0.5, 0.5, 0, 0, 0]),
        np.array([0.4, 0.4, 0.4, 0, 0]),
    ]
    for b in probes:
        print(f"  probe {b}: member={face_membership(unique, b)}")

    two = cycle5(3.0)
    other = minimal_face(two)
    assert other.kind is FaceKind.IMPLICIT_MEMBERSHIP_ONLY
    print(f"diag-3 cycle: {other.kind.value} (several factorizations, "
          "infinitely many extreme rays)")
