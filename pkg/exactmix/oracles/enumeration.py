"""Brute-force p~ by summing over every assignment of causes to positions."""

import numpy as np

from exactmix.config.defaults import DEFAULT_CONFIG
from exactmix.model.types import Model, ObservationSeq
from exactmix.utils.errors import BudgetExceededError

_CHUNK = 1 << 16


def pochhammer_table(alpha: np.ndarray, k_max: int) -> np.ndarray:
    """table[z, k] = (alpha_z)_k for k = 0..k_max."""
    steps = alpha[:, None] + np.arange(k_max, dtype=np.float64)[None, :]
    return np.concatenate([np.ones((alpha.size, 1)), np.cumprod(steps, axis=1)], axis=1)


def brute_force_ptilde(model: Model, obs: ObservationSeq, budget: int | None = None) -> float:
    """sum over z in Z^n of prod_i beta(w_i|z_i) * prod_z (alpha_z)_{#z}.

    (alpha)_k is the k-th moment of Gamma(alpha, 1), so this is the
    Gamma-expectation of prod_i sum_z beta(w_i|z) theta_z expanded term by term.

    Raises:
        BudgetExceededError: m^n assignments exceed the budget
    """
    budget = budget or DEFAULT_CONFIG["enumeration_budget"]
    n, m = obs.n, model.m
    if m ** n > budget:
        raise BudgetExceededError(f"{m}^{n} cause assignments exceed the enumeration budget of {budget}")
    if n == 0:
        return 1.0

    rows = obs.emission_rows(model)
    moments = pochhammer_table(model.alpha, n)
    total = 0.0
    for start in range(0, m ** n, _CHUNK):
        index = np.arange(start, min(start + _CHUNK, m ** n))
        assignment = np.stack(np.unravel_index(index, (m,) * n))  # n x chunk
        weight = np.ones(index.size)
        for i in range(n):
            weight *= rows[i, assignment[i]]
        for z in range(m):
            weight *= moments[z, (assignment == z).sum(axis=0)]
        total += float(weight.sum())
    return total
