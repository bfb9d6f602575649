"""Readers for the graph (JSON) and event log (CSV) file formats."""

from __future__ import annotations

import csv
import io
import json
import logging
from collections.abc import Mapping
from typing import Any

from .exceptions import (
    EventLogError,
    GraphFormatError,
    TimestampFormatError,
    UnknownNodeError,
)
from .models import AttributedGraph, Behavior, Event, Timestamp

logger = logging.getLogger(__name__)

_GRAPH_KEYS = frozenset({"nodes", "edges"})
_NODE_KEYS = frozenset({"id", "name", "sensors"})


def load_graph(document: str) -> AttributedGraph:
    """Parse a graph document.

    Args:
        document: JSON text, e.g. ``{"nodes": [{"id": "s03"}], "edges": []}``

    Returns:
        The validated graph, vertices in document order

    Raises:
        GraphFormatError: If the text is not JSON or breaks the schema
        GraphValidationError: On duplicate ids or dangling edge endpoints
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"Invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return graph_from_mapping(data)


def graph_from_mapping(data: Any) -> AttributedGraph:
    if not isinstance(data, Mapping):
        raise GraphFormatError("Graph document must be a JSON object")
    _reject_unknown(data, _GRAPH_KEYS, "graph")
    if "nodes" not in data:
        raise GraphFormatError("Graph document requires a 'nodes' list")
    nodes = data["nodes"]
    if not isinstance(nodes, list):
        raise GraphFormatError("'nodes' must be a list")

    vertices: list[str] = []
    names: dict[str, str] = {}
    sensors: dict[str, frozenset[str]] = {}
    for position, node in enumerate(nodes):
        if not isinstance(node, Mapping):
            raise GraphFormatError(f"Node #{position} must be an object")
        _reject_unknown(node, _NODE_KEYS, f"node #{position}")
        node_id = node.get("id")
        if not isinstance(node_id, str):
            raise GraphFormatError(f"Node #{position} requires a string 'id'")
        vertices.append(node_id)
        if "name" in node:
            if not isinstance(node["name"], str):
                raise GraphFormatError(f"Node {node_id!r}: 'name' must be a string")
            names[node_id] = node["name"]
        if "sensors" in node:
            labels = node["sensors"]
            if not isinstance(labels, list) or not all(isinstance(label, str) for label in labels):
                raise GraphFormatError(f"Node {node_id!r}: 'sensors' must be a list of strings")
            sensors[node_id] = frozenset(labels)

    edges: list[tuple[str, str]] = []
    for position, edge in enumerate(data.get("edges", [])):
        if (
            not isinstance(edge, list)
            or len(edge) != 2
            or not all(isinstance(endpoint, str) for endpoint in edge)
        ):
            raise GraphFormatError(f"Edge #{position} must be a pair of node ids")
        edges.append((edge[0], edge[1]))

    return AttributedGraph(
        vertices=tuple(vertices),
        edges=tuple(edges),
        names=names,
        sensors=sensors,
    )


def dump_graph(graph: AttributedGraph) -> str:
    return json.dumps(graph.to_document(), indent=2) + "\n"


def load_events(document: str, graph: AttributedGraph) -> Behavior:
    """Parse an event log into a behavior, keeping file order.

    Each non-comment line reads ``object,node,timestamp``. Blank lines and lines starting
    with ``#`` are skipped.

    Raises:
        EventLogError: On a line without exactly three fields
        TimestampFormatError: On a malformed timestamp (message carries the line)
        UnknownNodeError: On a node missing from the graph
    """
    events: list[Event] = []
    vertices = graph.vertex_set
    reader = csv.reader(io.StringIO(document))
    for row in reader:
        line = reader.line_num
        if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
            continue
        if len(row) != 3:
            raise EventLogError(f"expected 3 fields, found {len(row)}", line)
        object_id, node, stamp = (field.strip() for field in row)
        if not object_id:
            raise EventLogError("object id is empty", line)
        try:
            time = Timestamp.parse(stamp)
        except TimestampFormatError as exc:
            raise TimestampFormatError(f"line {line}: {exc}") from exc
        if node not in vertices:
            raise UnknownNodeError(f"node {node!r} is not in the graph", line)
        events.append(Event(object_id, node, time))
    logger.debug("Loaded %d events", len(events))
    return Behavior(tuple(events))


def dump_events(behavior: Behavior) -> str:
    return "".join(f"{event.object_id},{event.node},{event.time}\n" for event in behavior)


def _reject_unknown(data: Mapping[str, Any], allowed: frozenset[str], where: str) -> None:
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise GraphFormatError(f"Unknown field(s) in {where}: {', '.join(unknown)}")
