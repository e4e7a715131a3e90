"""Subset products per cause and the moment table <beta_J>."""

import numpy as np

from exactmix.algebra.masks import SubsetMask, check_capacity
from exactmix.config.defaults import DEFAULT_CONFIG
from exactmix.model.types import Model, MomentTable, ObservationSeq
from exactmix.utils.errors import DomainError
from exactmix.utils.logger import logger


def cause_block_products(model: Model, obs: ObservationSeq, causes, cap: int | None = None) -> np.ndarray:
    """Subset products for a block of causes.

    Args:
        causes: slice or index array selecting k causes

    Returns:
        2^n x k array, entry [J, j] = prod_{i in J} beta(w_i | causes[j])
    """
    check_capacity(obs.n, cap)
    rows = obs.emission_rows(model)[:, causes]
    k = rows.shape[1]
    out = np.empty((1 << obs.n, k))
    out[0] = 1.0
    # doubling: masks with top bit i are masks below 2^i times beta(w_i|z)
    for i in range(obs.n):
        half = 1 << i
        np.multiply(out[:half], rows[i], out=out[half:2 * half])
    return out


def cause_subset_products(model: Model, obs: ObservationSeq, z: int, cap: int | None = None) -> np.ndarray:
    """Table of 2^n products prod_{i in J} beta(w_i|z)."""
    if not 0 <= z < model.m:
        raise DomainError(f"cause index {z} outside 0..{model.m - 1}")
    return cause_block_products(model, obs, slice(z, z + 1), cap)[:, 0].copy()


def moments(model: Model, obs: ObservationSeq, cap: int | None = None, chunk: int | None = None) -> MomentTable:
    """Moment table <beta_J> for all J.

    Causes are added one at a time in ascending index, so the result is
    bit-identical for every chunk size.
    """
    check_capacity(obs.n, cap)
    chunk = chunk or DEFAULT_CONFIG["cause_chunk"]
    values = np.zeros(1 << obs.n)
    for start in range(0, model.m, chunk):
        stop = min(start + chunk, model.m)
        block = cause_block_products(model, obs, slice(start, stop), cap)
        for j, weight in enumerate(model.alpha[start:stop].tolist()):
            values += weight * block[:, j]
    logger.debug(f"moments: n={obs.n} m={model.m} chunk={chunk}")
    return MomentTable(obs.n, values)


def support(model: Model, obs: ObservationSeq, z: int, eps: float = 0.0) -> SubsetMask:
    """Mask of positions i with beta(w_i|z) > eps."""
    if eps < 0:
        raise DomainError(f"eps must be non-negative, got {eps}")
    if not 0 <= z < model.m:
        raise DomainError(f"cause index {z} outside 0..{model.m - 1}")
    column = obs.emission_rows(model)[:, z]
    mask = 0
    for i, value in enumerate(column.tolist()):
        if value > eps:
            mask |= 1 << i
    return mask


def supports(model: Model, obs: ObservationSeq, eps: float = 0.0) -> list[SubsetMask]:
    """support() for every cause, in cause order."""
    if eps < 0:
        raise DomainError(f"eps must be non-negative, got {eps}")
    active = obs.emission_rows(model) > eps
    masks = [0] * model.m
    for i in range(obs.n):
        bit = 1 << i
        for z in np.flatnonzero(active[i]).tolist():
            masks[z] |= bit
    return masks
