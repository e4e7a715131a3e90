"""Model rewrites used by experiments and consistency checks."""

from collections.abc import Sequence

import numpy as np

from exactmix.model.types import Model, ObservationSeq
from exactmix.utils.errors import DomainError


def scaled_alpha(model: Model, factor: float) -> Model:
    if factor <= 0 and not model.algebraic:
        raise DomainError(f"alpha scale must be positive, got {factor}")
    return Model(model.alpha * factor, model.beta, model.algebraic)


def subdivide_cause(model: Model, z: int, weights: Sequence[float] = (0.5, 0.5)) -> Model:
    """Split cause z into len(weights) subcauses sharing its beta column.

    Subcause j gets alpha(z) * weights[j]; the subcauses take z's place in
    cause order, so the causes after z shift right by len(weights) - 1.
    """
    if not 0 <= z < model.m:
        raise DomainError(f"cause index {z} outside 0..{model.m - 1}")
    weights = np.asarray(weights, dtype=np.float64)
    if weights.size < 1 or np.any(weights <= 0) or not np.isclose(weights.sum(), 1.0):
        raise DomainError(f"subdivision weights must be positive and sum to 1, got {weights.tolist()}")
    alpha = np.concatenate([model.alpha[:z], model.alpha[z] * weights, model.alpha[z + 1:]])
    beta = np.concatenate(
        [model.beta[:, :z], np.repeat(model.beta[:, z:z + 1], weights.size, axis=1), model.beta[:, z + 1:]],
        axis=1,
    )
    return Model(alpha, beta, model.algebraic)


def with_virtual_observation(model: Model, obs: ObservationSeq, z: int) -> tuple[Model, ObservationSeq]:
    """Append a vocabulary item emitted only by cause z (with weight 1) and observe it once."""
    if not 0 <= z < model.m:
        raise DomainError(f"cause index {z} outside 0..{model.m - 1}")
    row = np.zeros((1, model.m))
    row[0, z] = 1.0
    extended = Model(model.alpha, np.vstack([model.beta, row]), model.algebraic)
    return extended, ObservationSeq(obs.tokens + (model.vocab_size,))
