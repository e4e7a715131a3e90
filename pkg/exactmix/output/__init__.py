"""Output formatting and reporting module."""

from exactmix.output.formatter import OutputFormatter
from exactmix.output.report import RunReport
from exactmix.output.spinner import ProgressSpinner

__all__ = ['OutputFormatter', 'RunReport', 'ProgressSpinner']
