"""Smart-environment graph, events and their file formats."""

from .exceptions import (
    EnvironmentModelError,
    EventLogError,
    GraphFormatError,
    GraphValidationError,
    TimestampFormatError,
    UnknownNodeError,
)
from .loaders import dump_events, dump_graph, load_events, load_graph
from .models import AttributedGraph, Behavior, Event, Timestamp, ValidationReport, validate

__all__ = [
    "AttributedGraph",
    "Behavior",
    "EnvironmentModelError",
    "Event",
    "EventLogError",
    "GraphFormatError",
    "GraphValidationError",
    "Timestamp",
    "TimestampFormatError",
    "UnknownNodeError",
    "ValidationReport",
    "dump_events",
    "dump_graph",
    "load_events",
    "load_graph",
    "validate",
]
