"""Configuration loader for exactmix."""

import json
import os
import sys
from pathlib import Path
from typing import Any, Callable

from .defaults import DEFAULT_CONFIG, HARD_MASK_CAP

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
OUTPUT_FORMATS = ["json", "tsv"]


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


# key -> (accepts value, what a valid value looks like)
RULES: dict[str, tuple[Callable[[Any], bool], str]] = {
    "mask_cap": (lambda v: _is_int(v) and 0 <= v <= HARD_MASK_CAP, f"an integer in [0, {HARD_MASK_CAP}]"),
    "eps": (lambda v: _is_number(v) and v >= 0, "a non-negative number"),
    "tol": (lambda v: _is_number(v) and v >= 0, "a non-negative number"),
    "burn_in_fraction": (lambda v: _is_number(v) and 0 <= v < 1, "a number in [0, 1)"),
    "burn_in": (lambda v: _is_int(v) and v >= 0, "a non-negative integer"),
    "max_iters": (lambda v: _is_int(v) and v > 0, "a positive integer"),
    "gibbs_iterations": (lambda v: _is_int(v) and v > 0, "a positive integer"),
    "gibbs_batches": (lambda v: _is_int(v) and v > 0, "a positive integer"),
    "enumeration_budget": (lambda v: _is_int(v) and v > 0, "a positive integer"),
    "cause_chunk": (lambda v: _is_int(v) and v > 0, "a positive integer"),
    "seed": (lambda v: _is_int(v) and v >= 0, "a non-negative integer"),
    "max_file_size_mb": (lambda v: _is_number(v) and v > 0, "a positive number"),
    "show_progress_animation": (lambda v: isinstance(v, bool), "a boolean"),
    "dump_decomposition": (lambda v: isinstance(v, bool), "a boolean"),
    "log_level": (lambda v: v in LOG_LEVELS, f"one of {LOG_LEVELS}"),
    "output_format": (lambda v: v in OUTPUT_FORMATS, f"one of {OUTPUT_FORMATS}"),
}


class ConfigLoader:
    """Loads and validates configuration from the user's config file."""

    def __init__(self, config_path: str | None = None):
        """Initialize ConfigLoader with config file path.

        Args:
            config_path: Path to configuration file (supports tilde expansion).
                Falls back to $EXACTMIX_CONFIG, then ~/.exactmix_config.json.
        """
        config_path = config_path or os.getenv("EXACTMIX_CONFIG", "~/.exactmix_config.json")
        self.config_path = Path(config_path).expanduser()

    def load_config(self) -> dict[str, Any]:
        """Load configuration from file and merge with defaults.

        A missing file means defaults; an unreadable or invalid one prints a
        warning to stderr and also means defaults.
        """
        config = DEFAULT_CONFIG.copy()
        if self.config_path.exists():
            try:
                user_config = json.loads(self.config_path.read_text(encoding="utf-8"))
            except json.JSONDecodeError as e:
                _warn(f"Error: Invalid JSON in {self.config_path}: {e}. Using default configuration.")
            except OSError as e:
                _warn(f"Error loading configuration: {e}. Using default configuration.")
            else:
                if self.validate_config(user_config):
                    config = self.merge_with_defaults(user_config)
                else:
                    _warn(f"Warning: Invalid configuration in {self.config_path}. Using defaults.")

        level = os.getenv("EXACTMIX_LOG_LEVEL", "").upper()
        if level in LOG_LEVELS:
            config["log_level"] = level
        return config

    def validate_config(self, config: dict[str, Any]) -> bool:
        """Check every known key against its rule; unknown keys pass through.

        Returns:
            True if configuration is valid, False otherwise
        """
        if not isinstance(config, dict):
            return False

        for key, value in config.items():
            rule = RULES.get(key)
            if rule and not rule[0](value):
                _warn(f"Warning: Invalid {key} value '{value}'. Must be {rule[1]}.")
                return False
        return True

    def merge_with_defaults(self, user_config: dict[str, Any]) -> dict[str, Any]:
        merged_config = DEFAULT_CONFIG.copy()
        merged_config.update(user_config)
        return merged_config


def _warn(message: str) -> None:
    print(message, file=sys.stderr)
