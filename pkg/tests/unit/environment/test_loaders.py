"""Unit tests for environment.loaders module."""

from __future__ import annotations

import pytest

from src.environment.exceptions import (
    EventLogError,
    GraphFormatError,
    GraphValidationError,
    TimestampFormatError,
    UnknownNodeError,
)
from src.environment.loaders import dump_events, dump_graph, load_events, load_graph
from tests.conftest import O5_EVENTS


class TestLoadGraph:
    """Tests for graph documents."""

    def test_loads_nodes_in_order(self, graph):
        assert graph.vertices == ("e2", "s03", "s07", "s08")
        assert graph.names["s07"] == "office"
        assert graph.sensors["e2"] == frozenset({"door"})
        assert ("s08", "s07") in graph.edges

    def test_dump_reloads(self, graph):
        assert load_graph(dump_graph(graph)) == graph

    def test_edges_are_optional(self):
        assert load_graph('{"nodes": [{"id": "a"}]}').edges == ()

    @pytest.mark.parametrize(
        "document",
        [
            "{not json",
            "[]",
            "{}",
            '{"nodes": {}}',
            '{"nodes": [{"name": "x"}]}',
            '{"nodes": [{"id": "a", "colour": "red"}]}',
            '{"nodes": [{"id": "a", "sensors": "motion"}]}',
            '{"nodes": [{"id": "a"}], "edges": [["a"]]}',
            '{"nodes": [], "rooms": []}',
        ],
    )
    def test_format_errors(self, document):
        with pytest.raises(GraphFormatError):
            load_graph(document)

    def test_validation_errors(self):
        with pytest.raises(GraphValidationError):
            load_graph('{"nodes": [{"id": "a"}], "edges": [["a", "b"]]}')


class TestLoadEvents:
    """Tests for event logs."""

    def test_o5_log(self, o5_behavior):
        assert len(o5_behavior) == 6
        assert [event.node for event in o5_behavior] == ["s03", "s08", "s08", "s08", "s07", "s07"]
        assert str(o5_behavior.events[-1].time) == "t2015.02.12.11.37.15"

    def test_skips_blank_and_comment_lines(self, graph):
        behavior = load_events("# object,node,time\n\no5,s03,t2015.02.12.09.30.15\n", graph)
        assert len(behavior) == 1

    def test_keeps_file_order(self, graph):
        text = "o1,s07,t2015.02.12.10.00.00\no1,s03,t2015.02.12.09.00.00\n"
        assert [event.node for event in load_events(text, graph)] == ["s07", "s03"]

    def test_empty_log(self, graph):
        assert len(load_events("", graph)) == 0

    def test_wrong_field_count(self, graph):
        with pytest.raises(EventLogError) as exc_info:
            load_events("o5,s03,t2015.02.12.09.30.15\no5,s03\n", graph)
        assert exc_info.value.line == 2

    def test_bad_timestamp_names_the_line(self, graph):
        with pytest.raises(TimestampFormatError, match="line 1"):
            load_events("o5,s03,yesterday\n", graph)

    def test_unknown_node(self, graph):
        with pytest.raises(UnknownNodeError) as exc_info:
            load_events("o5,s03,t2015.02.12.09.30.15\no5,s99,t2015.02.12.09.31.15\n", graph)
        assert exc_info.value.line == 2
        assert "s99" in str(exc_info.value)

    def test_dump_events(self, o5_behavior):
        assert dump_events(o5_behavior) == O5_EVENTS
