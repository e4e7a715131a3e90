"""Ryser's inclusion-exclusion permanent."""

import numpy as np

from exactmix.utils.errors import BudgetExceededError, DomainError

MAX_PERMANENT_SIZE = 12


def permanent(matrix) -> float:
    """perm(A) = (-1)^n sum_{S subset of columns} (-1)^|S| prod_i sum_{j in S} a_ij.

    Column subsets are walked in Gray-code order so each step adds or removes
    one column from the running row sums.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.size == 0:
        return 1.0
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"permanent needs a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > MAX_PERMANENT_SIZE:
        raise BudgetExceededError(f"permanent of a {n}x{n} matrix refused (limit {MAX_PERMANENT_SIZE})")

    row_sums = np.zeros(n)
    total = 0.0
    previous = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        changed = gray ^ previous
        j = changed.bit_length() - 1
        if gray & changed:
            row_sums += a[:, j]
        else:
            row_sums -= a[:, j]
        previous = gray
        sign = -1.0 if gray.bit_count() % 2 else 1.0
        total += sign * float(np.prod(row_sums))
    return total if n % 2 == 0 else -total
