"""
Problem-instance types.

A Model holds the prior weights alpha(z) and the emission table
beta[v][z] = beta(w_v|z); an ObservationSeq is the evidence w_1..w_n as
vocabulary indices. Repeated tokens are fine: every position gets its own
formal variable downstream.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from exactmix.algebra.masks import SubsetMask
from exactmix.utils.errors import DomainError, ObservationError


def _frozen(values, ndim: int, name: str) -> np.ndarray:
    try:
        array = np.array(values, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise DomainError(f"{name} is not numeric: {e}") from e
    if array.ndim != ndim:
        raise DomainError(f"{name} must be {ndim}-dimensional, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise DomainError(f"{name} contains non-finite entries")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Model:
    """Dirichlet prior weights and emission probabilities.

    Attributes:
        alpha: m prior weights, one per cause
        beta: |V| x m table, beta[v, z] = beta(w_v|z); columns need not sum to 1
        algebraic: accept arbitrary real alpha (only meaningful for the
            generating-function coefficients, e.g. the permanent identity)
    """
    alpha: np.ndarray
    beta: np.ndarray
    algebraic: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alpha", _frozen(self.alpha, 1, "alpha"))
        object.__setattr__(self, "beta", _frozen(self.beta, 2, "beta"))
        m = self.alpha.shape[0]
        if m < 1:
            raise DomainError("a model needs at least one cause")
        if self.beta.shape[0] < 1 or self.beta.shape[1] != m:
            raise DomainError(
                f"beta has shape {self.beta.shape}, expected (|V| >= 1, {m})"
            )
        if not self.algebraic:
            if np.any(self.alpha <= 0):
                raise DomainError("alpha must be positive (set algebraic=True for signed weights)")
            if np.any(self.beta < 0):
                raise DomainError("beta must be non-negative")

    @property
    def m(self) -> int:
        return int(self.alpha.shape[0])

    @property
    def vocab_size(self) -> int:
        return int(self.beta.shape[0])

    @property
    def alpha_total(self) -> float:
        """|alpha| = sum of all prior weights."""
        return _ascending_sum(self.alpha)

    def require_statistical(self, operation: str) -> None:
        if self.algebraic:
            raise DomainError(f"{operation} needs a statistical model (positive alpha)")


def _ascending_sum(values: np.ndarray) -> float:
    # ascending-index accumulation keeps results independent of numpy's pairwise summation
    total = 0.0
    for v in values.tolist():
        total += v
    return total


@dataclass(frozen=True)
class ObservationSeq:
    """Evidence as a sequence of vocabulary indices (repeats allowed)."""
    tokens: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        tokens = tuple(int(t) for t in self.tokens)
        if any(t < 0 for t in tokens):
            raise ObservationError(f"negative vocabulary index in {list(tokens)}")
        object.__setattr__(self, "tokens", tokens)

    @property
    def n(self) -> int:
        return len(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def check(self, model: Model) -> None:
        """Raise ObservationError unless every token indexes the model's vocabulary."""
        for i, t in enumerate(self.tokens):
            if t >= model.vocab_size:
                raise ObservationError(
                    f"token {t} at position {i} is outside the vocabulary of size {model.vocab_size}"
                )

    def emission_rows(self, model: Model) -> np.ndarray:
        """n x m array whose row i is beta(w_i|.)."""
        self.check(model)
        return model.beta[list(self.tokens)] if self.tokens else np.zeros((0, model.m))

    def permuted(self, order: Sequence[int]) -> "ObservationSeq":
        return ObservationSeq(tuple(self.tokens[i] for i in order))


@dataclass(frozen=True, eq=False)
class MomentTable:
    """values[J] = <beta_J> = sum_z alpha(z) prod_{i in J} beta(w_i|z)."""
    n: int
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (1 << self.n,):
            raise DomainError(f"moment table of shape {self.values.shape} does not match n={self.n}")
        self.values.setflags(write=False)

    def __getitem__(self, J: SubsetMask) -> float:
        return float(self.values[J])
