import os
import sys
from typing import Optional


class Logger:
    """Simple logging utility for specmatch runs.

    Provides basic logging functionality with support for file output
    and different log levels (system, debug, warning, error). Without a
    log file, messages go to stderr so that reports on stdout stay clean.
    """

    def __init__(
        self,
        log_file: Optional[str] = None,
        verbose: bool = False,
        enabled: bool = True,
    ) -> None:
        """Initialize the logger with output configuration.

        Args:
            log_file: Path to the log file. If provided, creates the directory
                     structure if it doesn't exist and truncates the file.
            verbose: Whether debug messages are written.
            enabled: Whether any message is written at all.
        """
        self.log_file: Optional[str] = None
        """Path to the log file."""
        self.verbose = verbose
        """Whether debug messages are written."""
        self.enabled = enabled
        """Whether the logger writes anything."""

        self.configure(log_file=log_file, verbose=verbose)

    def configure(
        self, log_file: Optional[str] = None, verbose: Optional[bool] = None
    ) -> None:
        """Reconfigure the output target and verbosity.

        Args:
            log_file: Path to the log file, or None to log to stderr.
            verbose: Whether debug messages are written. None keeps the
                     current setting.
        """
        if verbose is not None:
            self.verbose = verbose
        self.log_file = log_file

        if self.log_file:
            directory = os.path.dirname(self.log_file)
            if directory and not os.path.exists(directory):
                os.makedirs(directory)
            with open(self.log_file, "w", encoding="utf-8") as f:
                f.write("[Specmatch Logger Initialized]\n")

    def _write(self, message: str) -> None:
        """Write a log message to the log file or stderr.

        Args:
            message: The message to log.
        """
        if not self.enabled:
            return
        if self.log_file:
            with open(self.log_file, "a", encoding="utf-8") as f:
                f.write(f"{message}\n")
        else:
            print(message, file=sys.stderr)

    def system(self, message: str) -> None:
        """Log a system message.

        Args:
            message: The message to log with a "[Log]" prefix.
        """
        self._write(f"[Log] {message}")

    def debug(self, message: str) -> None:
        """Log a debug message. Only written in verbose mode.

        Args:
            message: The message to log with a "[Debug]" prefix.
        """
        if self.verbose:
            self._write(f"[Debug] {message}")

    def warning(self, message: str) -> None:
        """Log a warning message.

        Args:
            message: The warning message to log with a "[Warning]" prefix.
        """
        self._write(f"[Warning] {message}")

    def error(self, message: str | Exception) -> None:
        """Log an error message.

        Args:
            message: The error message or exception to log with a "[Error]" prefix.
        """
        self._write(f"[Error] {message}")


log = Logger()
