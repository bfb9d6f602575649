"""Data models for the smart environment: graph, timestamps, events and behaviors."""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any

from src.logic.formula import is_identifier

from .exceptions import GraphValidationError, TimestampFormatError

_TIMESTAMP_PATTERN = re.compile(r"t(\d{4})\.(\d{2})\.(\d{2})\.(\d{2})\.(\d{2})\.(\d{2})")


@dataclass(frozen=True, slots=True, order=True)
class Timestamp:
    """Second-resolution point in time, ordered field by field."""

    year: int
    month: int
    day: int
    hour: int
    minute: int
    second: int

    def __post_init__(self) -> None:
        try:
            self.to_datetime()
        except ValueError as exc:
            raise TimestampFormatError(f"Not a calendar time: {exc}") from exc

    @classmethod
    def parse(cls, text: str) -> Timestamp:
        """Parse a literal such as ``t2015.02.12.09.30.15``."""
        match = _TIMESTAMP_PATTERN.fullmatch(text.strip())
        if match is None:
            raise TimestampFormatError(
                f"Invalid timestamp {text!r}, expected tYYYY.MM.DD.HH.MM.SS"
            )
        return cls(*(int(group) for group in match.groups()))

    @classmethod
    def from_datetime(cls, value: datetime) -> Timestamp:
        return cls(value.year, value.month, value.day, value.hour, value.minute, value.second)

    def to_datetime(self) -> datetime:
        return datetime(self.year, self.month, self.day, self.hour, self.minute, self.second)

    def __str__(self) -> str:
        return (
            f"t{self.year:04d}.{self.month:02d}.{self.day:02d}."
            f"{self.hour:02d}.{self.minute:02d}.{self.second:02d}"
        )


@dataclass(frozen=True, slots=True)
class Event:
    """An object observed at a node at a given time."""

    object_id: str
    node: str
    time: Timestamp

    def __str__(self) -> str:
        return f"<{self.object_id},{self.node},{self.time}>"


@dataclass(frozen=True, slots=True)
class Behavior:
    """Events in arrival order; repeated nodes and equal timestamps are allowed."""

    events: tuple[Event, ...] = ()

    @classmethod
    def of(cls, events: Iterable[Event]) -> Behavior:
        return cls(tuple(events))

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self) -> Iterator[Event]:
        return iter(self.events)

    def objects(self) -> tuple[str, ...]:
        """Object ids in order of first appearance."""
        return tuple(dict.fromkeys(event.object_id for event in self.events))


@dataclass(frozen=True, slots=True)
class AttributedGraph:
    """Vertices with optional display names and sensor sets, plus directed edges."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...] = ()
    names: Mapping[str, str] = field(default_factory=dict)
    sensors: Mapping[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for vertex in self.vertices:
            if not is_identifier(vertex):
                raise GraphValidationError(f"Node id {vertex!r} is not a valid atom name")
            if vertex in seen:
                raise GraphValidationError(f"Duplicate node id {vertex!r}")
            seen.add(vertex)
        for source, target in self.edges:
            for endpoint in (source, target):
                if endpoint not in seen:
                    raise GraphValidationError(
                        f"Edge ({source}, {target}) references unknown node {endpoint!r}"
                    )
        for attribute, mapping in (("name", self.names), ("sensors", self.sensors)):
            for vertex in mapping:
                if vertex not in seen:
                    raise GraphValidationError(f"{attribute} given for unknown node {vertex!r}")

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def __contains__(self, node: object) -> bool:
        return node in self.vertex_set

    def __len__(self) -> int:
        return len(self.vertices)

    def to_document(self) -> dict[str, Any]:
        """JSON-ready document in the graph file format."""
        nodes: list[dict[str, Any]] = []
        for vertex in self.vertices:
            node: dict[str, Any] = {"id": vertex}
            if vertex in self.names:
                node["name"] = self.names[vertex]
            if vertex in self.sensors:
                node["sensors"] = sorted(self.sensors[vertex])
            nodes.append(node)
        document: dict[str, Any] = {"nodes": nodes}
        if self.edges:
            document["edges"] = [[source, target] for source, target in self.edges]
        return document


@dataclass(frozen=True, slots=True)
class ValidationReport:
    """Events whose node is missing from the graph."""

    violations: tuple[Event, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        listed = ", ".join(str(event) for event in self.violations)
        return f"{len(self.violations)} event(s) at unknown nodes: {listed}"


def validate(behavior: Behavior, graph: AttributedGraph) -> ValidationReport:
    """Report every event whose node is not a vertex of the graph."""
    vertices = graph.vertex_set
    return ValidationReport(tuple(event for event in behavior if event.node not in vertices))
