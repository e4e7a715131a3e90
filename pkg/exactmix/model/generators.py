"""
Seeded random instances for benchmarks and property checks.

Every generator takes a numpy Generator so callers control reproducibility.
Observation i always emits vocabulary item i, so beta rows line up with
positions.
"""

import numpy as np

from exactmix.model.types import Model, ObservationSeq
from exactmix.utils.errors import DomainError


def _identity_obs(n: int) -> ObservationSeq:
    return ObservationSeq(tuple(range(n)))


def random_instance(
    rng: np.random.Generator,
    n: int,
    m: int,
    alpha_high: float = 2.0,
) -> tuple[Model, ObservationSeq]:
    """Dense instance: alpha in (0, alpha_high], beta uniform on [0, 1)."""
    alpha = alpha_high * (1.0 - rng.random(m))
    beta = rng.random((max(n, 1), m))
    return Model(alpha, beta), _identity_obs(n)


def block_sparse_instance(
    rng: np.random.Generator,
    n: int,
    m: int,
    support_size: int = 4,
    alpha_high: float = 2.0,
) -> tuple[Model, ObservationSeq]:
    """Every cause emits only a random subset of at most support_size positions.

    The first n causes each cover their own position, so no observation is
    impossible.
    """
    if n and m < n:
        raise DomainError(f"block-sparse instances need m >= n, got m={m}, n={n}")
    alpha = alpha_high * (1.0 - rng.random(m))
    beta = np.zeros((max(n, 1), m))
    for z in range(m):
        if not n:
            break
        size = int(rng.integers(1, min(support_size, n) + 1))
        positions = rng.choice(n, size=size, replace=False)
        if z < n and z not in positions:
            positions[0] = z
        beta[positions, z] = 1.0 - rng.random(len(positions))
    return Model(alpha, beta), _identity_obs(n)


def chain_instance(
    rng: np.random.Generator,
    n: int,
    m: int,
    window: int = 3,
    alpha_high: float = 2.0,
) -> tuple[Model, ObservationSeq]:
    """Cause z covers the window of consecutive positions starting at z mod (n - window + 1).

    Min-fill finds a decomposition of width window - 1 on these instances.
    """
    if n < window:
        raise DomainError(f"chain instances need n >= window, got n={n}, window={window}")
    alpha = alpha_high * (1.0 - rng.random(m))
    beta = np.zeros((n, m))
    starts = np.arange(m) % (n - window + 1)
    for offset in range(window):
        beta[starts + offset, np.arange(m)] = 1.0 - rng.random(m)
    return Model(alpha, beta), _identity_obs(n)
