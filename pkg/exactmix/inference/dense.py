"""
Exact evidence and posterior means over the full subset lattice.

The unnormalized evidence p~(I) of every subset I of the observation
positions is the coefficient of X^I in

    prod_{J nonempty} (1 + <beta_J> (|J|-1)! X^J)   mod (X_1^2, ..., X_n^2)

which takes O(3^n) once the moments are known, plus O(m 2^n) for the moments
themselves. Posterior means reuse the full table in a second pass over the
causes.
"""

import math
import time

import numpy as np
from scipy.special import gammaln

from exactmix.algebra.masks import check_capacity, full_mask
from exactmix.algebra.poly import TruncatedPoly, mul_affine_inplace
from exactmix.config.defaults import DEFAULT_CONFIG
from exactmix.inference.results import InferenceResult
from exactmix.model.moments import cause_block_products, moments
from exactmix.model.types import Model, ObservationSeq
from exactmix.utils.errors import DegenerateEvidenceError, DomainError
from exactmix.utils.logger import logger


def pochhammer(x: float, k: int) -> float:
    """Rising factorial x (x+1) ... (x+k-1); 1 for k = 0."""
    if k < 0:
        raise DomainError(f"Pochhammer order must be non-negative, got {k}")
    result = 1.0
    for j in range(k):
        result *= x + j
    return result


def log_pochhammer(x: float, k: int) -> float:
    """log (x)_k, through log-Gamma when x > 0."""
    if x > 0:
        return float(gammaln(x + k) - gammaln(x))
    value = pochhammer(x, k)
    return math.log(abs(value)) if value != 0 else -math.inf


def factorial_table(n: int) -> np.ndarray:
    """Float table of k! for k = 0..n."""
    return np.array([float(math.factorial(k)) for k in range(n + 1)])


def popcount_table(n: int) -> np.ndarray:
    counts = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        half = 1 << i
        counts[half:2 * half] = counts[:half] + 1
    return counts


def ptilde_all(model: Model, obs: ObservationSeq, cap: int | None = None, chunk: int | None = None) -> TruncatedPoly:
    """p~(I) for every I, as one polynomial in the observation variables.

    Accepts algebraic (signed alpha) models.
    """
    n = obs.n
    check_capacity(n, cap)
    started = time.perf_counter()

    moment_values = moments(model, obs, cap, chunk).values
    gamma_of_size = np.concatenate([[0.0], factorial_table(max(n - 1, 0))])  # index |J| -> (|J|-1)!
    sizes = popcount_table(n)
    factor_coeff = moment_values * gamma_of_size[sizes]

    coeff = np.zeros(1 << n)
    coeff[0] = 1.0
    for J in np.flatnonzero(factor_coeff).tolist():
        if J:
            mul_affine_inplace(coeff, n, J, float(factor_coeff[J]))

    logger.debug(f"ptilde_all: n={n} m={model.m} in {time.perf_counter() - started:.3f}s")
    return TruncatedPoly(n, coeff)


def probability(model: Model, obs: ObservationSeq, cap: int | None = None, chunk: int | None = None) -> float:
    """p(w_1..w_n | alpha, beta) = p~(W) / (|alpha|)_n."""
    model.require_statistical("probability")
    alpha_total = model.alpha_total
    if alpha_total <= 0:
        raise DomainError(f"|alpha| must be positive, got {alpha_total}")
    table = ptilde_all(model, obs, cap, chunk)
    return float(table.coeff[full_mask(obs.n)]) / pochhammer(alpha_total, obs.n)


def posterior_mean(model: Model, obs: ObservationSeq, cap: int | None = None, chunk: int | None = None) -> InferenceResult:
    """Exact E[theta_z | w] for every cause z.

    E[theta_z|w] = alpha(z)/(n+|alpha|) * sum_J beta_J(z) |J|! p~(W\\J) / p~(W)

    Raises:
        DegenerateEvidenceError: the observations are impossible (p~(W) = 0)
    """
    model.require_statistical("posterior_mean")
    n = obs.n
    chunk = chunk or DEFAULT_CONFIG["cause_chunk"]
    started = time.perf_counter()

    table = ptilde_all(model, obs, cap, chunk).coeff
    evidence = float(table[full_mask(n)])
    if not evidence > 0:
        raise DegenerateEvidenceError(
            f"p~(W) = {evidence}: the observations are impossible under this model"
        )

    # W \ J is the bitwise complement, i.e. the reversed table
    weights = factorial_table(n)[popcount_table(n)] * table[::-1] / evidence

    alpha_total = model.alpha_total
    theta = np.empty(model.m)
    for start in range(0, model.m, chunk):
        stop = min(start + chunk, model.m)
        block = cause_block_products(model, obs, slice(start, stop), cap)
        theta[start:stop] = model.alpha[start:stop] / (n + alpha_total) * (weights @ block)

    norm = pochhammer(alpha_total, n)
    elapsed = time.perf_counter() - started
    logger.debug(f"posterior_mean: n={n} m={model.m} in {elapsed:.3f}s")
    return InferenceResult(
        method="exact",
        theta_mean=theta,
        ptilde_full=evidence,
        probability=evidence / norm,
        log_probability=math.log(evidence) - log_pochhammer(alpha_total, n),
        diagnostics={
            "n": n,
            "m": model.m,
            "cause_chunk": chunk,
            "theta_sum": float(theta.sum()),
            "seconds": elapsed,
        },
    )
