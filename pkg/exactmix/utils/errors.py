"""
Custom exception classes for exactmix.

Two families matter to the command line: InputError (the input could not be
understood, exit code 2) and MethodDomainError (the input is well formed but
the requested computation is undefined or refused, exit code 3).
"""


class ExactMixError(Exception):
    """Base exception for all exactmix errors."""
    pass


class InputError(ExactMixError):
    """Raised when user input is malformed."""
    pass


class ModelFormatError(InputError):
    """Raised when a model file is missing fields or has inconsistent dimensions."""
    pass


class ObservationError(InputError):
    """Raised when an observation list cannot be parsed or indexes outside the vocabulary."""
    pass


class ConfigurationError(InputError):
    """Raised when configuration is invalid or cannot be loaded."""
    pass


class UnsupportedMethodError(InputError):
    """Raised when an unknown inference method or oracle kind is requested."""
    pass


class MethodDomainError(ExactMixError):
    """Raised when a computation is undefined or refused for a valid input."""
    pass


class CapacityError(MethodDomainError):
    """Raised when the number of observation positions exceeds the mask cap."""
    pass


class DomainError(MethodDomainError):
    """Raised when an operation's precondition is violated."""
    pass


class DegenerateEvidenceError(MethodDomainError):
    """Raised when the observations have probability zero under the model."""
    pass


class BudgetExceededError(MethodDomainError):
    """Raised when a brute-force enumeration would exceed its budget."""
    pass


class DecompositionMismatchError(MethodDomainError):
    """Raised when a contributing subset fits no bag of a tree decomposition."""
    pass


class ConvergenceError(MethodDomainError):
    """Raised when an iterative method violates its monotonicity guarantee."""
    pass
