"""Command-line surface: mine, decide, react and replay."""

from .commands import DecideQuery, cmd_decide, cmd_mine, cmd_react, cmd_replay
from .config import ReplayConfig
from .exceptions import ConfigurationError
from .main import build_parser, main

__all__ = [
    "ConfigurationError",
    "DecideQuery",
    "ReplayConfig",
    "build_parser",
    "cmd_decide",
    "cmd_mine",
    "cmd_react",
    "cmd_replay",
    "main",
]
