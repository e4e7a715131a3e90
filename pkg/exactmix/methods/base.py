"""
Abstract base class for inference methods.

Every method the command line can dispatch to (exact, sparse, ml, vb, gibbs)
implements this interface and reports through the same InferenceResult.
"""

from abc import ABC, abstractmethod
from typing import Any

from exactmix.inference.results import InferenceResult
from exactmix.model.types import Model, ObservationSeq


class InferenceMethod(ABC):
    """
    Abstract base class for inference methods.

    Subclasses receive the merged configuration (defaults, config file and
    command-line overrides) at construction time.
    """

    name: str = ""

    def __init__(self, config: dict[str, Any]):
        self.config = config

    @abstractmethod
    def run(self, model: Model, obs: ObservationSeq) -> InferenceResult:
        """
        Run the method on one instance.

        Args:
            model: prior weights and emission table
            obs: observation sequence

        Returns:
            InferenceResult; theta_mean is always set, evidence fields only
            by the exact methods

        Raises:
            MethodDomainError: the computation is undefined or refused
        """
        pass

    @property
    def is_exact(self) -> bool:
        """Whether the result is exact (before any eps screening)."""
        return False
