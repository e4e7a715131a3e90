"""Set partitions by restricted growth strings and the partition-sum formula for p~."""

from collections.abc import Iterator
from math import factorial

import numpy as np

from exactmix.algebra.masks import SubsetMask
from exactmix.config.defaults import DEFAULT_CONFIG
from exactmix.model.types import Model, ObservationSeq
from exactmix.utils.errors import BudgetExceededError


def bell_number(n: int) -> int:
    """Number of set partitions of an n-set (Bell triangle)."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def set_partitions(n: int) -> Iterator[list[SubsetMask]]:
    """Yield every partition of {0..n-1} as a list of block masks.

    Iterates restricted growth strings a with a[0] = 0 and
    a[i] <= 1 + max(a[:i]); block b collects the positions i with a[i] = b.
    """
    if n == 0:
        yield []
        return
    a = [0] * n
    ceiling = [0] * n  # ceiling[i] = max(a[:i]) + 1 bounds a[i]
    for i in range(1, n):
        ceiling[i] = 1
    while True:
        blocks = [0] * (max(a) + 1)
        for i, b in enumerate(a):
            blocks[b] |= 1 << i
        yield blocks
        i = n - 1
        while i > 0 and a[i] == ceiling[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(ceiling[i], a[i] + 1)
        for j in range(i + 1, n):
            a[j] = 0
            ceiling[j] = top


def partition_ptilde(model: Model, obs: ObservationSeq, budget: int | None = None) -> float:
    """sum over partitions pi of W of prod_{J in pi} <beta_J> (|J|-1)!.

    Raises:
        BudgetExceededError: Bell(n) exceeds the budget
    """
    budget = budget or DEFAULT_CONFIG["enumeration_budget"]
    n = obs.n
    if bell_number(n) > budget:
        raise BudgetExceededError(f"Bell({n}) partitions exceed the enumeration budget of {budget}")

    rows = obs.emission_rows(model)
    weighted: dict[SubsetMask, float] = {}

    def block_weight(J: SubsetMask) -> float:
        if J not in weighted:
            picked = [i for i in range(n) if J >> i & 1]
            moment = float(np.prod(rows[picked], axis=0) @ model.alpha)
            weighted[J] = moment * factorial(len(picked) - 1)
        return weighted[J]

    total = 0.0
    for blocks in set_partitions(n):
        term = 1.0
        for J in blocks:
            term *= block_weight(J)
        total += term
    return total
