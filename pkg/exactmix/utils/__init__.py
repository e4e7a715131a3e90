"""Utility functions and helpers."""

from .errors import (
    ExactMixError,
    InputError,
    ModelFormatError,
    ObservationError,
    ConfigurationError,
    UnsupportedMethodError,
    MethodDomainError,
    CapacityError,
    DomainError,
    DegenerateEvidenceError,
    BudgetExceededError,
    DecompositionMismatchError,
    ConvergenceError
)

__all__ = [
    'ExactMixError',
    'InputError',
    'ModelFormatError',
    'ObservationError',
    'ConfigurationError',
    'UnsupportedMethodError',
    'MethodDomainError',
    'CapacityError',
    'DomainError',
    'DegenerateEvidenceError',
    'BudgetExceededError',
    'DecompositionMismatchError',
    'ConvergenceError'
]
