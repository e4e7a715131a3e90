"""Data models for CLI argument parsing."""

from dataclasses import dataclass, field
from typing import Any


@dataclass
class ParsedArguments:
    """Represents parsed command-line arguments.

    Attributes:
        command: subcommand name (infer, oracle, graph, bench)
        model_path: model document path or bundled model name
        obs: comma-separated observation indices ("" means none)
        obs_file: file with one observation index per line
        method: inference method for infer
        kind: oracle kind for oracle
        config_path: explicit configuration file
        overrides: configuration values given on the command line
        alpha_scale: factor applied to every prior weight
        sizes, causes, methods: bench grid
    """
    command: str
    model_path: str | None = None
    obs: str | None = None
    obs_file: str | None = None
    method: str | None = None
    kind: str | None = None
    config_path: str | None = None
    overrides: dict[str, Any] = field(default_factory=dict)
    alpha_scale: float | None = None
    sizes: list[int] = field(default_factory=list)
    causes: list[int] = field(default_factory=list)
    methods: list[str] = field(default_factory=list)
