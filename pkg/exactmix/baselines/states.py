"""State records of the approximate methods."""

from dataclasses import dataclass, field

import numpy as np


@dataclass
class EMState:
    """Maximum-likelihood mixture weights.

    Attributes:
        theta: point on the simplex
        iterations: EM steps taken
        log_likelihood: log-likelihood trace, one entry per evaluated theta
    """
    theta: np.ndarray
    iterations: int = 0
    log_likelihood: list[float] = field(default_factory=list)


@dataclass
class VBState:
    """Mean-field surrogate q(theta|gamma) q(z|phi).

    Attributes:
        gamma: Dirichlet parameters gamma(z)
        phi: n x m responsibilities, rows summing to 1
        iterations: update sweeps taken
    """
    gamma: np.ndarray
    phi: np.ndarray
    iterations: int = 0

    @property
    def mean(self) -> np.ndarray:
        return self.gamma / self.gamma.sum()


@dataclass
class GibbsState:
    """Current sample of the chain.

    Attributes:
        z_assign: cause index per observation
        theta: current mixture on the simplex
        counts: occurrences of each cause in z_assign
        rng_seed: seed the chain was started from
        rng: the chain's generator (PCG64)
    """
    z_assign: np.ndarray
    theta: np.ndarray
    counts: np.ndarray
    rng_seed: int
    rng: np.random.Generator


@dataclass
class GibbsRun:
    """Post-burn-in summary of one chain."""
    theta_mean: np.ndarray
    stderr: np.ndarray
    state: GibbsState
    iterations: int
    burn_in: int
    batches: int
