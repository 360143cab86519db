"""Canonical small solutions used throughout the tests and demos.

All derived data (q, d, rho) is recomputed from the lam tables by
``promote``; nothing here is hand-entered beyond the defining tables.
"""

from .core import solution_from_lambda

# n = 1, the one-point solution.
SOL_TRIV = solution_from_lambda([[0]])

# n = 2, lam_0 = lam_1 = (0 1): r(x, y) = (swap(y), y).
SOL_SWAP2 = solution_from_lambda([[1, 0], [1, 0]])

# n = 2, lam_x(y) = x + y mod 2: r(x, y) = (x + y, 0).
SOL_Z2 = solution_from_lambda([[0, 1], [1, 0]])

# n = 3, lam_x(y) = x - y mod 3.
SOL_Z3INV = solution_from_lambda([[0, 2, 1], [1, 0, 2], [2, 1, 0]])

# n = 3, lam_x = id: r(x, y) = (y, y).
SOL_PROJ3 = solution_from_lambda([[0, 1, 2], [0, 1, 2], [0, 1, 2]])

ALL_FIXTURES = {
    "SOL_TRIV": SOL_TRIV,
    "SOL_SWAP2": SOL_SWAP2,
    "SOL_Z2": SOL_Z2,
    "SOL_Z3INV": SOL_Z3INV,
    "SOL_PROJ3": SOL_PROJ3,
}
