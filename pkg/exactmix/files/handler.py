"""
Model file handler.

Reads the JSON model document

    {"alpha": [...], "beta": [[row per vocabulary item]], "vocab": [...], "causes": [...]}

validating size, extension and dimensions before anything numeric runs.
Bare names that do not exist on disk are looked up among the bundled models
in exactmix/data.
"""

import json
import math
import os
from pathlib import Path
from typing import Any

from exactmix.files.models import ModelFile
from exactmix.utils.errors import ModelFormatError

BUNDLED_DATA_DIR = Path(__file__).resolve().parent.parent / "data"


class ModelFileHandler:
    """Loads and validates model documents."""

    SUPPORTED_EXTENSIONS = ('.json',)

    def __init__(self, max_size_mb: float = 10):
        """
        Args:
            max_size_mb: Maximum allowed file size in megabytes
        """
        self.max_size_mb = max_size_mb
        self.max_size_bytes = int(max_size_mb * 1024 * 1024)

    def resolve_path(self, file_path: str) -> Path:
        """Expand ~ and fall back to the bundled data directory for bare names.

        Raises:
            ModelFormatError: If neither location holds the file
        """
        path = Path(os.path.expanduser(file_path))
        if path.is_file():
            return path
        bundled = BUNDLED_DATA_DIR / path.name
        if path.parent == Path('.') and bundled.is_file():
            return bundled
        raise ModelFormatError(f"Model file not found: {file_path}")

    def validate_file(self, path: Path) -> None:
        """
        Raises:
            ModelFormatError: wrong extension or file too large
        """
        if path.suffix.lower() not in self.SUPPORTED_EXTENSIONS:
            raise ModelFormatError(
                f"Unsupported model file type: {path.suffix or '(none)'}. "
                f"Supported types: {', '.join(self.SUPPORTED_EXTENSIONS)}"
            )
        file_size = path.stat().st_size
        if file_size > self.max_size_bytes:
            size_mb = file_size / (1024 * 1024)
            raise ModelFormatError(
                f"Model file size ({size_mb:.2f}MB) exceeds maximum allowed "
                f"size of {self.max_size_mb}MB"
            )

    def read_model(self, file_path: str) -> ModelFile:
        """
        Main entry point: locate, validate and parse a model document.

        Raises:
            ModelFormatError: If the file is missing, unreadable or inconsistent
        """
        path = self.resolve_path(file_path)
        self.validate_file(path)
        try:
            with open(path, 'r', encoding='utf-8') as f:
                document = json.load(f)
        except json.JSONDecodeError as e:
            raise ModelFormatError(f"Invalid JSON in {path}: {e}") from e
        except OSError as e:
            raise ModelFormatError(f"Error reading {path}: {e}") from e
        return parse_model_document(document, str(path))


def _numbers(values: Any, what: str) -> list[float]:
    if not isinstance(values, list):
        raise ModelFormatError(f"'{what}' must be a list of numbers")
    out = []
    for value in values:
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
            raise ModelFormatError(f"'{what}' holds a non-numeric or non-finite entry: {value!r}")
        out.append(float(value))
    return out


def _labels(document: dict, key: str, expected: int) -> list[str]:
    labels = document.get(key)
    if labels is None:
        return []
    if not isinstance(labels, list) or not all(isinstance(label, str) for label in labels):
        raise ModelFormatError(f"'{key}' must be a list of strings")
    if len(labels) != expected:
        raise ModelFormatError(f"'{key}' has {len(labels)} labels, expected {expected}")
    return labels


def parse_model_document(document: Any, file_path: str = "") -> ModelFile:
    """Check dimensions and types of an already-decoded model document.

    Signs are left to Model, which rejects negative weights unless the model
    is built in algebraic mode.
    """
    if not isinstance(document, dict):
        raise ModelFormatError("model document must be a JSON object")
    for key in ("alpha", "beta"):
        if key not in document:
            raise ModelFormatError(f"model document is missing '{key}'")

    alpha = _numbers(document["alpha"], "alpha")
    if not alpha:
        raise ModelFormatError("'alpha' must name at least one cause")
    rows = document["beta"]
    if not isinstance(rows, list) or not rows:
        raise ModelFormatError("'beta' must be a non-empty list of rows")
    beta = []
    for v, row in enumerate(rows):
        values = _numbers(row, f"beta[{v}]")
        if len(values) != len(alpha):
            raise ModelFormatError(
                f"beta[{v}] has {len(values)} entries, expected one per cause ({len(alpha)})"
            )
        beta.append(values)

    return ModelFile(
        alpha=alpha,
        beta=beta,
        vocab=_labels(document, "vocab", len(beta)),
        causes=_labels(document, "causes", len(alpha)),
        file_path=file_path,
    )
