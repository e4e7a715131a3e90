"""Command-line interface module."""

from exactmix.cli.models import ParsedArguments
from exactmix.cli.parser import ArgumentParser

__all__ = ['ParsedArguments', 'ArgumentParser']
