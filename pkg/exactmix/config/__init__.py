"""Configuration management module."""

from .defaults import DEFAULT_CONFIG, HARD_MASK_CAP
from .loader import ConfigLoader

__all__ = ["DEFAULT_CONFIG", "HARD_MASK_CAP", "ConfigLoader"]
