#!/usr/bin/env python3
"""
Main entry point for the exactmix command-line tool.

Loads configuration, parses arguments, dispatches to a subcommand and maps
failures to exit codes: 2 for malformed input, 3 when the requested
computation is undefined or refused, 130 on interrupt, 1 for anything else.
"""

import sys

from dotenv import load_dotenv

# Load EXACTMIX_* overrides from a .env file
load_dotenv()

from exactmix.cli.commands import COMMANDS
from exactmix.cli.parser import ArgumentParser
from exactmix.config.loader import ConfigLoader
from exactmix.output.formatter import OutputFormatter
from exactmix.utils.errors import ConfigurationError, InputError, MethodDomainError
from exactmix.utils.logger import logger, set_log_level

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_INTERRUPTED = 130


def load_configuration(config_path: str | None, overrides: dict) -> dict:
    """Defaults, then the config file, then command-line overrides.

    Raises:
        ConfigurationError: an explicit config file is missing or an override is invalid
    """
    loader = ConfigLoader(config_path)
    if config_path and not loader.config_path.exists():
        raise ConfigurationError(f"Configuration file not found: {config_path}")
    config = loader.load_config()
    if not loader.validate_config(overrides):
        raise ConfigurationError(f"Invalid command-line value among {overrides}")
    config.update(overrides)
    return config


def run(argv: list[str]) -> int:
    """
    Execute one command.

    Args:
        argv: Command-line arguments (excluding program name)

    Returns:
        Exit code
    """
    formatter = OutputFormatter()

    try:
        parsed = ArgumentParser().parse(argv)
    except SystemExit as e:
        # argparse already printed usage; --help and --version exit 0
        return e.code if isinstance(e.code, int) else EXIT_INPUT

    try:
        config = load_configuration(parsed.config_path, parsed.overrides)
        set_log_level(config.get('log_level', 'INFO'))
        logger.info(f"Running command '{parsed.command}' with {argv}")

        report = COMMANDS[parsed.command](parsed, config, formatter)
        formatter.emit(report.render(config.get('output_format', 'json')))
        return EXIT_OK

    except InputError as e:
        logger.error(f"Input error: {e}")
        formatter.display_error(e)
        return EXIT_INPUT

    except MethodDomainError as e:
        logger.error(f"Method refused: {e}")
        formatter.display_error(e)
        return EXIT_DOMAIN

    except KeyboardInterrupt:
        print("\n\nOperation cancelled by user.", file=sys.stderr)
        return EXIT_INTERRUPTED

    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        formatter.display_error(Exception(f"Unexpected error: {e}"))
        return EXIT_FAILURE


def main() -> int:
    """Console-script entry point."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
