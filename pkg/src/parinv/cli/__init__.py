"""
Command-line package for parinv

This package contains the argument parser factory, subcommand handlers,
input loading and output rendering.
"""

from .app import RunConfig, build_run_config, create_parser
from .commands import HANDLERS, CommandResult
from .main import main

__all__ = [
    "RunConfig",
    "build_run_config",
    "create_parser",
    "HANDLERS",
    "CommandResult",
    "main"
]
