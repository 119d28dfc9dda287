from .app import build_parser, main
from .config import CliConfig, Exhaustive, MonteCarlo

__all__ = ["CliConfig", "Exhaustive", "MonteCarlo", "build_parser", "main"]
