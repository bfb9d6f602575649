"""Unit tests for specification.pipeline module."""

from __future__ import annotations

import logging

import pytest

from src.environment.models import Behavior, Event
from src.logic.parser import parse
from src.specification.exceptions import BehaviorValidationError, EmptyBehaviorError
from src.specification.miner import MiningMode, mine
from src.specification.models import AttributedFormula, Specification, merge
from src.specification.pipeline import ReplayEngine, ReplayResult, TriggerPolicy
from tests.conftest import MINED_O5


def texts(spec: Specification) -> list[str]:
    return [str(item.formula) for item in spec]


class TestLearningReplay:
    """Re-mining at window boundaries with an initially empty specification."""

    def test_single_window_equals_batch_mining(self, graph, o5_behavior):
        result = ReplayEngine(graph, window=6).run(o5_behavior, show_progress=False)

        assert isinstance(result, ReplayResult)
        assert result.specification == merge(mine(o5_behavior, graph))
        assert result.batches == 1
        assert result.events_processed == 6
        assert result.reactions == 0

    def test_two_windows_end_with_the_batch_result(self, graph, o5_behavior):
        result = ReplayEngine(graph, window=3).run(o5_behavior, show_progress=False)

        assert texts(result.specification) == MINED_O5
        assert result.batches == 2

    def test_partial_last_window_is_mined(self, graph, o5_behavior):
        result = ReplayEngine(graph, window=4).run(o5_behavior, show_progress=False)

        assert texts(result.specification) == MINED_O5
        assert result.batches == 2

    def test_literal_mode(self, graph, o5_behavior):
        engine = ReplayEngine(graph, mode=MiningMode.LITERAL, window=50)
        result = engine.run(o5_behavior, show_progress=False)

        assert texts(result.specification) == [*MINED_O5, "F s07"]

    def test_events_replayed_in_time_order(self, graph, o5_behavior):
        shuffled = Behavior(tuple(reversed(o5_behavior.events)))
        result = ReplayEngine(graph, window=2).run(shuffled, show_progress=False)

        assert texts(result.specification) == MINED_O5

    def test_initial_formulas_are_kept(self, graph, o5_behavior):
        initial = Specification.of([AttributedFormula(parse("G !s08 | F e2"), "o9")])
        result = ReplayEngine(graph, initial=initial, window=3).run(o5_behavior, show_progress=False)

        assert texts(result.specification) == ["G !s08 | F e2", *MINED_O5]


class TestModelBasedReplay:
    """Every event triggers a reaction."""

    def test_every_event_reacts(self, graph, o5_behavior):
        initial = Specification.of([AttributedFormula(parse("G (s08 -> F s07)"), "o5")])
        seen = []
        engine = ReplayEngine(
            graph,
            initial=initial,
            window=6,
            trigger_policy=TriggerPolicy.EVERY_EVENT,
            on_proposal=seen.append,
        )

        result = engine.run(o5_behavior, show_progress=False)

        assert result.reactions == 6
        assert result.skipped == 0
        assert [proposal.event for proposal in seen] == list(o5_behavior.events)
        assert seen[0].actions == ()
        assert seen[1].actions == ("s07",)
        assert set(texts(result.specification)) == {
            "G (s08 -> F s07)",
            "s03",
            "s08",
            "s07",
            "G !e2",
            "G (s03 -> F s08)",
        }

    def test_contradictory_specification_skips_reactions(self, graph, o5_behavior, caplog):
        initial = Specification.of(
            [
                AttributedFormula(parse("G !s03"), "o5"),
                AttributedFormula(parse("F s03"), "o5"),
            ]
        )
        engine = ReplayEngine(graph, initial=initial, trigger_policy=TriggerPolicy.EVERY_EVENT)

        with caplog.at_level(logging.WARNING, logger="src.specification.pipeline"):
            result = engine.run(o5_behavior, show_progress=False)

        assert result.skipped == 6
        assert result.reactions == 0
        assert len(result.errors) == 6
        assert "Skipping reaction" in caplog.text


class TestReplayErrors:
    """Rejected inputs."""

    def test_empty_behavior(self, graph):
        with pytest.raises(EmptyBehaviorError):
            ReplayEngine(graph).run(Behavior(), show_progress=False)

    def test_unknown_node(self, graph, o5_behavior):
        stray = Event("o5", "s99", o5_behavior.events[0].time)
        with pytest.raises(BehaviorValidationError):
            ReplayEngine(graph).run(Behavior((*o5_behavior.events, stray)), show_progress=False)

    def test_window_must_be_positive(self, graph):
        with pytest.raises(ValueError):
            ReplayEngine(graph, window=0)
