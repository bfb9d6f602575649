"""Mining per-object specifications from a behavior.

For every object the miner emits absence formulas for the nodes it never visited,
a response formula for each pair of consecutive distinct nodes in its time-sorted trace,
and an existence formula for single-node traces. In literal mode the existence formula is
also emitted for the last node of a trace whose final run repeats that node.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

from src.environment.models import AttributedGraph, Behavior, Event, validate
from src.logic.formula import Atom
from src.logic.patterns import PatternKind, make_pattern

from .exceptions import BehaviorValidationError, EmptyBehaviorError
from .models import AttributedFormula, Origin, Specification

logger = logging.getLogger(__name__)


class MiningMode(str, Enum):
    """LITERAL also emits ``F n`` for the node an object settled at; PAPER_EXAMPLE leaves it out."""

    LITERAL = "literal"
    PAPER_EXAMPLE = "paper"


DEFAULT_MINING_MODE = MiningMode.PAPER_EXAMPLE


@dataclass(frozen=True, slots=True)
class Run:
    """Maximal block of consecutive events at one node."""

    node: str
    length: int


@dataclass(slots=True)
class MiningStats:
    """Per-object event counts and adjacent comparisons made by the trace scan."""

    events: dict[str, int] = field(default_factory=dict)
    comparisons: dict[str, int] = field(default_factory=dict)

    @property
    def total_events(self) -> int:
        return sum(self.events.values())

    @property
    def total_comparisons(self) -> int:
        return sum(self.comparisons.values())


def partition(behavior: Behavior) -> dict[str, list[Event]]:
    """Group events by object, keeping arrival order inside each group.

    Raises:
        EmptyBehaviorError: If the behavior has no events
    """
    if not behavior.events:
        raise EmptyBehaviorError("Cannot mine an empty behavior")
    groups: dict[str, list[Event]] = {}
    for event in behavior:
        groups.setdefault(event.object_id, []).append(event)
    return groups


def compress_runs(events: Sequence[Event]) -> tuple[list[Run], int]:
    """Collapse consecutive events at the same node.

    Returns:
        The runs in order and the number of adjacent comparisons made (n - 1 for n events)
    """
    runs: list[Run] = []
    comparisons = 0
    if not events:
        return runs, comparisons
    current, length = events[0].node, 1
    for previous, event in zip(events, events[1:], strict=False):
        comparisons += 1
        if event.node == previous.node:
            length += 1
            continue
        runs.append(Run(current, length))
        current, length = event.node, 1
    runs.append(Run(current, length))
    return runs, comparisons


def mine_object(
    object_id: str,
    events: Sequence[Event],
    graph: AttributedGraph,
    mode: MiningMode = DEFAULT_MINING_MODE,
) -> tuple[Specification, int]:
    """Mine one object's specification.

    Args:
        object_id: The object the events belong to
        events: The object's events in any order
        graph: Environment whose vertices bound the absence formulas
        mode: Existence-formula policy

    Returns:
        The specification and the number of adjacent comparisons performed
    """
    visited = {event.node for event in events}
    entries: list[AttributedFormula] = [
        AttributedFormula(
            make_pattern(PatternKind.ABSENCE, [Atom(vertex)]), object_id, Origin.SAF
        )
        for vertex in graph.vertices
        if vertex not in visited
    ]

    ordered = sorted(events, key=lambda event: event.time)
    runs, comparisons = compress_runs(ordered)
    for current, following in zip(runs, runs[1:], strict=False):
        formula = make_pattern(PatternKind.RESPONSE, [Atom(current.node), Atom(following.node)])
        entries.append(AttributedFormula(formula, object_id, Origin.LIV2))

    if runs and _emits_existence(runs, mode):
        existence = make_pattern(PatternKind.EXISTENCE, [Atom(runs[-1].node)])
        entries.append(AttributedFormula(existence, object_id, Origin.LIV1))

    return Specification.collapsing(entries), comparisons


def _emits_existence(runs: Sequence[Run], mode: MiningMode) -> bool:
    if len(runs) == 1:
        return True
    return mode is MiningMode.LITERAL and runs[-1].length >= 2


def mine_with_stats(
    behavior: Behavior,
    graph: AttributedGraph,
    mode: MiningMode = DEFAULT_MINING_MODE,
) -> tuple[dict[str, Specification], MiningStats]:
    """Mine every object of a behavior and report the work done.

    Raises:
        EmptyBehaviorError: If the behavior has no events
        BehaviorValidationError: If an event names a node outside the graph
    """
    groups = partition(behavior)
    report = validate(behavior, graph)
    if not report.ok:
        raise BehaviorValidationError(report)

    specs: dict[str, Specification] = {}
    stats = MiningStats()
    for object_id, events in groups.items():
        specs[object_id], stats.comparisons[object_id] = mine_object(
            object_id, events, graph, mode
        )
        stats.events[object_id] = len(events)
    logger.debug(
        "Mined %d object(s) from %d events with %d comparisons (%s mode)",
        len(specs),
        stats.total_events,
        stats.total_comparisons,
        mode.value,
    )
    return specs, stats


def mine(
    behavior: Behavior,
    graph: AttributedGraph,
    mode: MiningMode = DEFAULT_MINING_MODE,
) -> dict[str, Specification]:
    """Mine per-object specifications; see ``mine_with_stats``."""
    specs, _ = mine_with_stats(behavior, graph, mode)
    return specs
