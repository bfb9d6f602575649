"""Custom exceptions for the environment model and its file formats."""

from __future__ import annotations


class EnvironmentModelError(ValueError):
    """Base class for graph and event-log failures."""


class GraphFormatError(EnvironmentModelError):
    """Raised when a graph document is not valid JSON or breaks the schema."""


class GraphValidationError(EnvironmentModelError):
    """Raised when a graph violates a structural invariant."""


class TimestampFormatError(EnvironmentModelError):
    """Raised when a timestamp literal is malformed or not a calendar date."""


class EventLogError(EnvironmentModelError):
    """Raised when an event log line cannot be read."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnknownNodeError(EventLogError):
    """Raised when an event names a node missing from the graph."""
