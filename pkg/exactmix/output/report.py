"""
Run reports and their JSON/TSV renderings.

JSON floats use Python's shortest round-trip repr, so re-reading a report and
rendering it again yields the same bytes. Non-finite values become null inside
nested values; a non-finite top-level field is left out. TSV rounds to 4
decimals for quick comparison against printed tables.
"""

import json
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from exactmix.inference.results import InferenceResult
from exactmix.utils.errors import InputError


def _plain(value: Any) -> Any:
    """Convert numpy scalars/arrays and tuples to JSON-ready Python values."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


@dataclass
class RunReport:
    """
    Everything one command invocation emits.

    Attributes:
        command: infer, oracle, graph or bench
        method: inference method or oracle kind (None for graph/bench)
        inputs: echo of the model path, tokens, n, m and overrides
        probability: p(w) when the method computes it
        log_probability: log p(w)
        ptilde: unnormalized evidence p~(W)
        theta_mean: posterior (or point) estimate per cause
        causes: labels matching theta_mean
        diagnostics: iterations, width, eps, seed, wall time, ...
        rows: tabular results (bench)
    """
    command: str
    method: str | None = None
    inputs: dict[str, Any] = field(default_factory=dict)
    probability: float | None = None
    log_probability: float | None = None
    ptilde: float | None = None
    theta_mean: list[float] | None = None
    causes: list[str] | None = None
    diagnostics: dict[str, Any] = field(default_factory=dict)
    rows: list[dict[str, Any]] | None = None

    ORDER = (
        "command", "method", "inputs", "probability", "log_probability",
        "ptilde", "theta_mean", "causes", "diagnostics", "rows",
    )

    @classmethod
    def from_result(
        cls,
        command: str,
        result: InferenceResult,
        inputs: dict[str, Any],
        causes: list[str] | None = None,
    ) -> "RunReport":
        return cls(
            command=command,
            method=result.method,
            inputs=inputs,
            probability=result.probability,
            log_probability=result.log_probability,
            ptilde=result.ptilde_full,
            theta_mean=None if result.theta_mean is None else list(result.theta_mean),
            causes=causes if result.theta_mean is not None else None,
            diagnostics=dict(result.diagnostics),
        )

    def to_dict(self) -> dict[str, Any]:
        """Fields in a fixed order, absent ones omitted."""
        payload = {}
        for key in self.ORDER:
            value = _plain(getattr(self, key))
            if value is None or (key in ("inputs", "diagnostics") and not value):
                continue
            payload[key] = value
        return payload

    @classmethod
    def from_dict(cls, payload: dict[str, Any]) -> "RunReport":
        unknown = set(payload) - set(cls.ORDER)
        if unknown or "command" not in payload:
            raise InputError(f"not a run report (unknown keys {sorted(unknown)})")
        return cls(**payload)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise InputError(f"invalid report JSON: {e}") from e

    def to_tsv(self) -> str:
        lines = []
        for key in ("command", "method", "probability", "log_probability", "ptilde"):
            value = getattr(self, key)
            if value is not None:
                lines.append(f"{key}\t{_cell(value)}")
        if self.theta_mean is not None:
            labels = self.causes or [f"z{z}" for z in range(len(self.theta_mean))]
            lines.append("cause\ttheta_mean")
            lines.extend(f"{label}\t{_cell(value)}" for label, value in zip(labels, self.theta_mean))
        if self.rows:
            header = list(self.rows[0])
            lines.append("\t".join(header))
            lines.extend("\t".join(_cell(row.get(key)) for key in header) for row in self.rows)
        return "\n".join(lines) + "\n"

    def render(self, output_format: str) -> str:
        if output_format == "tsv":
            return self.to_tsv()
        return self.to_json()


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.4f}"
    return str(value)
