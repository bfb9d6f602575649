"""Shared fixtures: the four-node environment and the o5 event log."""

from __future__ import annotations

from pathlib import Path

import pytest

from src.environment.loaders import load_events, load_graph
from src.environment.models import AttributedGraph, Behavior

GRAPH_DOCUMENT = """{
  "nodes": [
    {"id": "e2", "name": "entrance", "sensors": ["door"]},
    {"id": "s03", "name": "corridor", "sensors": ["motion"]},
    {"id": "s07", "name": "office", "sensors": ["motion"]},
    {"id": "s08", "name": "kitchen", "sensors": ["motion"]}
  ],
  "edges": [["e2", "s03"], ["s03", "s08"], ["s08", "s07"]]
}
"""

O5_EVENTS = """o5,s03,t2015.02.12.09.30.15
o5,s08,t2015.02.12.09.32.40
o5,s08,t2015.02.12.09.33.30
o5,s08,t2015.02.12.09.34.20
o5,s07,t2015.02.12.09.35.20
o5,s07,t2015.02.12.11.37.15
"""

MINED_O5 = ["G !e2", "G (s03 -> F s08)", "G (s08 -> F s07)"]

REPAIR_SPEC = """{
  "formulas": [
    {"object": "o", "formula": "(v11 -> F p115) | (v11 -> F p116)"},
    {"object": "o", "formula": "v11"}
  ]
}
"""


@pytest.fixture
def graph() -> AttributedGraph:
    """The four-node environment e2, s03, s07, s08."""
    return load_graph(GRAPH_DOCUMENT)


@pytest.fixture
def o5_behavior(graph: AttributedGraph) -> Behavior:
    """Six events of object o5 over three runs: s03, s08 x3, s07 x2."""
    return load_events(O5_EVENTS, graph)


@pytest.fixture
def example_files(tmp_path: Path) -> dict[str, Path]:
    """Graph, event log and repair specification written to a temporary directory."""
    paths = {
        "graph": tmp_path / "graph.json",
        "events": tmp_path / "events.csv",
        "spec": tmp_path / "spec.json",
    }
    paths["graph"].write_text(GRAPH_DOCUMENT, encoding="utf-8")
    paths["events"].write_text(O5_EVENTS, encoding="utf-8")
    paths["spec"].write_text(REPAIR_SPEC, encoding="utf-8")
    return paths
