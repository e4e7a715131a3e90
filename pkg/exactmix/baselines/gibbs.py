"""
Gibbs sampling of the posterior over mixture weights.

Alternates z_i ~ theta(.) beta(w_i|.) for every position and
theta ~ Dir(alpha + counts(z)), the Dirichlet draw being normalized
independent Gamma draws. The generator is numpy's PCG64 seeded with the
given seed, so a chain is reproducible across platforms.
"""

import numpy as np

from exactmix.baselines.em import observation_rows
from exactmix.baselines.states import GibbsRun, GibbsState
from exactmix.config.defaults import DEFAULT_CONFIG
from exactmix.model.types import Model, ObservationSeq
from exactmix.utils.errors import DomainError
from exactmix.utils.logger import logger

_UNIFORM_BLOCK = 4096


def _dirichlet(rng: np.random.Generator, shape: np.ndarray) -> np.ndarray:
    while True:
        draws = rng.standard_gamma(shape)
        total = draws.sum()
        if total > 0:
            return draws / total


def gibbs_sample(
    model: Model,
    obs: ObservationSeq,
    iterations: int | None = None,
    burn_in: int | None = None,
    seed: int | None = None,
    batches: int | None = None,
) -> GibbsRun:
    """Run one chain and summarize theta after burn-in.

    Args:
        iterations: total sweeps (default from config)
        burn_in: discarded sweeps (default 10% of iterations)
        seed: PCG64 seed
        batches: number of batches for the batch-means standard error

    Returns:
        GibbsRun with the post-burn-in mean of theta and its standard error
    """
    model.require_statistical("gibbs_sample")
    iterations = iterations or DEFAULT_CONFIG["gibbs_iterations"]
    if burn_in is None:
        burn_in = int(iterations * DEFAULT_CONFIG["burn_in_fraction"])
    seed = DEFAULT_CONFIG["seed"] if seed is None else seed
    batches = batches or DEFAULT_CONFIG["gibbs_batches"]
    if burn_in < 0 or iterations <= burn_in:
        raise DomainError(f"need iterations > burn_in >= 0, got {iterations} and {burn_in}")

    rows = observation_rows(model, obs)
    n, m = obs.n, model.m
    rng = np.random.default_rng(seed)
    theta = _dirichlet(rng, model.alpha)
    z = np.zeros(n, dtype=np.int64)
    counts = np.zeros(m, dtype=np.int64)

    kept = iterations - burn_in
    batches = min(batches, kept)
    batch_size = kept // batches
    batch_sums = np.zeros((batches, m))
    batch_counts = np.zeros(batches)

    uniforms = np.empty((0, n))
    for step in range(iterations):
        if n:
            row = step % _UNIFORM_BLOCK
            if row == 0:
                uniforms = rng.random((_UNIFORM_BLOCK, n))
            cumulative = np.cumsum(rows * theta, axis=1)
            threshold = uniforms[row] * cumulative[:, -1]
            z = np.minimum((cumulative <= threshold[:, None]).sum(axis=1), m - 1)
            counts = np.bincount(z, minlength=m)
        theta = _dirichlet(rng, model.alpha + counts)
        if step >= burn_in:
            b = min((step - burn_in) // batch_size, batches - 1)
            batch_sums[b] += theta
            batch_counts[b] += 1

    theta_mean = batch_sums.sum(axis=0) / kept
    if batches > 1:
        batch_means = batch_sums / batch_counts[:, None]
        stderr = batch_means.std(axis=0, ddof=1) / np.sqrt(batches)
    else:
        stderr = np.full(m, np.nan)

    logger.debug(f"gibbs: seed={seed} iterations={iterations} burn_in={burn_in} batches={batches}")
    state = GibbsState(z_assign=z, theta=theta, counts=counts, rng_seed=seed, rng=rng)
    return GibbsRun(
        theta_mean=theta_mean,
        stderr=stderr,
        state=state,
        iterations=iterations,
        burn_in=burn_in,
        batches=batches,
    )
