"""
Method factory for creating inference method instances.

Maps the names accepted by ``infer --method`` to InferenceMethod classes.
"""

from typing import Any

from exactmix.utils.errors import UnsupportedMethodError

from .approximate import GibbsMethod, MaximumLikelihoodMethod, VariationalBayesMethod
from .base import InferenceMethod
from .exact import ExactMethod, SparseMethod


class MethodFactory:
    """Factory class for creating inference method instances."""

    METHODS: dict[str, type[InferenceMethod]] = {
        "exact": ExactMethod,
        "sparse": SparseMethod,
        "ml": MaximumLikelihoodMethod,
        "vb": VariationalBayesMethod,
        "gibbs": GibbsMethod,
    }

    @staticmethod
    def create_method(method_name: str, config: dict[str, Any] | None = None) -> InferenceMethod:
        """
        Create and return an inference method instance.

        Args:
            method_name: one of MethodFactory.available_methods()
            config: merged configuration for the run

        Returns:
            An instance of InferenceMethod

        Raises:
            UnsupportedMethodError: If the method name is unknown
        """
        method_class = MethodFactory.METHODS.get(method_name)
        if method_class is None:
            raise UnsupportedMethodError(
                f"Method '{method_name}' is not supported. "
                f"Available methods: {', '.join(MethodFactory.available_methods())}"
            )
        return method_class(config or {})

    @staticmethod
    def available_methods() -> list[str]:
        return list(MethodFactory.METHODS)
