"""Progress spinner shown on stderr while a long computation runs."""

from rich.console import Console
from rich.live import Live
from rich.spinner import Spinner


class ProgressSpinner:
    """Context manager for a spinner; a no-op when disabled or not on a terminal."""

    def __init__(self, message: str = "Computing...", enabled: bool = True):
        self.message = message
        self.console = Console(stderr=True)
        self.enabled = enabled and self.console.is_terminal
        self.live = None

    def __enter__(self):
        if self.enabled:
            self.live = Live(
                Spinner("dots", text=self.message),
                console=self.console,
                refresh_per_second=10,
                transient=True,
            )
            self.live.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.live:
            self.live.stop()
        return False
