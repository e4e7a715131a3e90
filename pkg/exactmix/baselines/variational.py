"""Mean-field variational Bayes for the mixture weights."""

import numpy as np
from scipy.special import digamma

from exactmix.baselines.em import observation_rows
from exactmix.baselines.states import VBState
from exactmix.config.defaults import DEFAULT_CONFIG
from exactmix.model.types import Model, ObservationSeq
from exactmix.utils.logger import logger


def variational_bayes(
    model: Model,
    obs: ObservationSeq,
    max_iters: int | None = None,
    tol: float | None = None,
) -> tuple[VBState, np.ndarray]:
    """Coordinate ascent on q(theta|gamma) q(z|phi).

    Starts from gamma = alpha + n/m and alternates

        phi_i(z) ~ beta(w_i|z) exp(digamma(gamma_z) - digamma(sum gamma))
        gamma(z) = alpha(z) + sum_i phi_i(z)

    until the largest change in gamma drops below tol.

    Returns:
        the final state and its mean gamma / sum(gamma)
    """
    model.require_statistical("variational_bayes")
    max_iters = max_iters or DEFAULT_CONFIG["max_iters"]
    tol = DEFAULT_CONFIG["tol"] if tol is None else tol
    rows = observation_rows(model, obs)
    n, m = obs.n, model.m

    gamma = model.alpha + n / m
    phi = np.zeros((n, m))
    iterations = 0
    for iterations in range(1, max_iters + 1):
        weights = np.exp(digamma(gamma) - digamma(gamma.sum()))
        unnormalized = rows * weights
        phi = unnormalized / unnormalized.sum(axis=1, keepdims=True)
        updated = model.alpha + phi.sum(axis=0)
        change = float(np.max(np.abs(updated - gamma)))
        gamma = updated
        if change < tol:
            break

    logger.debug(f"variational_bayes: {iterations} sweeps")
    state = VBState(gamma=gamma, phi=phi, iterations=iterations)
    return state, state.mean
