from pathlib import Path

import numpy as np
import pytest

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def cycle_adjacency(n: int) -> np.ndarray:
    adj = np.zeros((n, n))
    for i in range(n):
        adj[i, (i + 1) % n] = adj[(i + 1) % n, i] = 1.0
    return adj


def cycle5_matrix(diag: float) -> np.ndarray:
    """diag on the diagonal, ones around the 5-cycle."""
    return diag * np.eye(5) + cycle_adjacency(5)


PATH3 = np.array([[1.0, 1.0, 0.0], [1.0, 2.0, 1.0], [0.0, 1.0, 1.0]])
EDGE2 = np.array([[2.0, 1.0], [1.0, 2.0]])


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES
