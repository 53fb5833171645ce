"""Command-line front end."""

from .commands import COMMANDS, CommandResult
from .main import main
from .measurements import MeasurementSeries, load_measurements
from .run_config import RunConfig, parse_config

__all__ = [
    "CommandResult",
    "COMMANDS",
    "load_measurements",
    "main",
    "MeasurementSeries",
    "parse_config",
    "RunConfig",
]
