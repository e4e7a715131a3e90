"""Terminal output using Rich and Colorama.

Reports go to stdout untouched; errors and warnings go to
stderr so the report stays machine-readable.
"""

import sys

from colorama import Fore, Style, just_fix_windows_console
from rich.console import Console
from rich.panel import Panel


class OutputFormatter:
    """Writes reports to stdout and diagnostics to stderr."""

    def __init__(self):
        self.console = Console(
            stderr=True,
            soft_wrap=True,
            legacy_windows=False,
        )
        just_fix_windows_console()

    def emit(self, text: str) -> None:
        """Write a rendered report to stdout."""
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        sys.stdout.flush()

    def display_error(self, error: Exception) -> None:
        panel = Panel(
            f"[bold red]{type(error).__name__}:[/bold red]\n{error}",
            title="[bold red]Error[/bold red]",
            border_style="red",
            padding=(1, 2),
        )
        self.console.print(panel)

    def display_warning(self, message: str) -> None:
        print(f"{Fore.YELLOW}⚠ Warning: {message}{Style.RESET_ALL}", file=sys.stderr)

    def warn_if_approximate(self, eps: float) -> None:
        if eps > 0:
            self.display_warning(
                f"eps={eps} drops emissions at or below the threshold; results are approximate."
            )
