"""Inference method abstraction layer."""

from .base import InferenceMethod
from .exact import ExactMethod, SparseMethod
from .approximate import GibbsMethod, MaximumLikelihoodMethod, VariationalBayesMethod
from .factory import MethodFactory

__all__ = [
    'InferenceMethod', 'ExactMethod', 'SparseMethod', 'GibbsMethod',
    'MaximumLikelihoodMethod', 'VariationalBayesMethod', 'MethodFactory',
]
