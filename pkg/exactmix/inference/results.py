"""Result container shared by exact and approximate methods."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np


@dataclass
class InferenceResult:
    """Outcome of one inference run.

    Attributes:
        method: label of the method that produced the result
        theta_mean: E[theta_z | w] per cause (None for probability-only runs)
        ptilde_full: unnormalized evidence p~(W)
        probability: p(w_1..w_n | alpha, beta)
        log_probability: log of probability
        diagnostics: free-form notes (sizes, widths, iteration counts, ...)
    """
    method: str
    theta_mean: np.ndarray | None = None
    ptilde_full: float | None = None
    probability: float | None = None
    log_probability: float | None = None
    diagnostics: dict[str, Any] = field(default_factory=dict)
