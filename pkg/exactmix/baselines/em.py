"""Expectation maximization for the mixture weights with beta held fixed."""

import numpy as np

from exactmix.config.defaults import DEFAULT_CONFIG
from exactmix.baselines.states import EMState
from exactmix.model.types import Model, ObservationSeq
from exactmix.utils.errors import ConvergenceError, DegenerateEvidenceError
from exactmix.utils.logger import logger


def observation_rows(model: Model, obs: ObservationSeq) -> np.ndarray:
    """beta(w_i|.) per position, refusing tokens no cause can emit."""
    rows = obs.emission_rows(model)
    dead = np.flatnonzero(~np.any(rows > 0, axis=1))
    if dead.size:
        raise DegenerateEvidenceError(
            f"no cause can emit the token at position {int(dead[0])} (all beta are zero)"
        )
    return rows


def _log_likelihood(rows: np.ndarray, theta: np.ndarray) -> float:
    return float(np.sum(np.log(rows @ theta)))


def em_max_likelihood(
    model: Model,
    obs: ObservationSeq,
    max_iters: int | None = None,
    tol: float | None = None,
) -> EMState:
    """Maximize prod_i sum_z beta(w_i|z) theta(z) over the simplex from the uniform start.

    Raises:
        DegenerateEvidenceError: a token has an all-zero beta row
        ConvergenceError: the log-likelihood decreased
    """
    model.require_statistical("em_max_likelihood")
    max_iters = max_iters or DEFAULT_CONFIG["max_iters"]
    tol = DEFAULT_CONFIG["tol"] if tol is None else tol
    rows = observation_rows(model, obs)
    theta = np.full(model.m, 1.0 / model.m)
    state = EMState(theta=theta)
    if obs.n == 0:
        return state

    current = _log_likelihood(rows, theta)
    state.log_likelihood.append(current)
    for step in range(1, max_iters + 1):
        weighted = rows * theta
        responsibilities = weighted / weighted.sum(axis=1, keepdims=True)
        theta = responsibilities.mean(axis=0)
        updated = _log_likelihood(rows, theta)
        state.log_likelihood.append(updated)
        state.iterations = step
        if updated < current - 1e-12 * max(1.0, abs(current)):
            raise ConvergenceError(
                f"EM log-likelihood decreased from {current!r} to {updated!r} at step {step}"
            )
        change = updated - current
        current = updated
        if change < tol:
            break

    state.theta = theta
    logger.debug(f"em: {state.iterations} steps, log-likelihood {current:.12g}")
    return state
