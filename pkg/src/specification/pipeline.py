"""Replay of an event stream through mining and reactions."""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum

from tqdm import tqdm  # type: ignore[import-untyped]

from src.environment.models import AttributedGraph, Behavior, Event, validate
from src.logic.exceptions import LogicError
from src.logic.formula import Atom, Formula

from .exceptions import BehaviorValidationError, EmptyBehaviorError, ReactionError
from .miner import DEFAULT_MINING_MODE, MiningMode, mine
from .models import AttributedFormula, Specification, merge
from .reactor import Reactor

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = 50


class TriggerPolicy(str, Enum):
    """Whether every arriving event triggers a reaction or only explicit requests do."""

    EVERY_EVENT = "every-event"
    ON_DEMAND = "on-demand"


@dataclass(frozen=True, slots=True)
class Proposal:
    """Actions proposed after an event's node became true for its object."""

    event: Event
    actions: tuple[str, ...]


@dataclass
class ReplayResult:
    """Outcome of a replay."""

    specification: Specification
    events_processed: int
    batches: int
    proposals: list[Proposal] = field(default_factory=list)
    skipped: int = 0
    errors: list[str] = field(default_factory=list)

    @property
    def reactions(self) -> int:
        return len(self.proposals)


class ReplayEngine:
    """Streams events in time order, re-mining at window boundaries.

    Every ``window`` events (and once more at the end) the events seen so far are mined
    again and the mined formulas replace those of the previous mining round. Formulas from
    the initial specification and from reactions are kept across rounds.
    """

    def __init__(
        self,
        graph: AttributedGraph,
        initial: Specification | None = None,
        mode: MiningMode = DEFAULT_MINING_MODE,
        window: int = DEFAULT_WINDOW,
        trigger_policy: TriggerPolicy = TriggerPolicy.ON_DEMAND,
        reactor: Reactor | None = None,
        on_proposal: Callable[[Proposal], None] | None = None,
    ) -> None:
        """Initialize the ReplayEngine.

        Args:
            graph: Environment the events refer to
            initial: Specification prepared in advance (empty when learning from scratch)
            mode: Mining mode used at every window boundary
            window: Number of events between two mining rounds
            trigger_policy: Whether each event triggers a reaction
            reactor: Reactor used for event triggers
            on_proposal: Callback receiving each proposal as soon as it is computed
        """
        if window < 1:
            raise ValueError("window must be at least 1")
        self._graph = graph
        self._initial = initial or Specification()
        self._mode = mode
        self._window = window
        self._trigger_policy = trigger_policy
        self._reactor = reactor or Reactor()
        self._on_proposal = on_proposal

    def run(self, behavior: Behavior, show_progress: bool = True) -> ReplayResult:
        """Replay a behavior.

        Args:
            behavior: Events in any order; they are replayed sorted by time
            show_progress: Whether to show a progress bar

        Returns:
            ReplayResult with the final specification and the proposals made

        Raises:
            EmptyBehaviorError: If the behavior has no events
            BehaviorValidationError: If an event names a node outside the graph
        """
        if not behavior.events:
            raise EmptyBehaviorError("Cannot replay an empty behavior")
        report = validate(behavior, self._graph)
        if not report.ok:
            raise BehaviorValidationError(report)

        ordered = sorted(behavior.events, key=lambda event: event.time)
        result = ReplayResult(specification=self._initial, events_processed=0, batches=0)
        mined_keys: set[tuple[Formula, str]] = set()
        seen: list[Event] = []

        pbar = tqdm(total=len(ordered), desc="Replaying events", disable=not show_progress)
        try:
            for event in ordered:
                seen.append(event)
                result.events_processed += 1
                if self._trigger_policy is TriggerPolicy.EVERY_EVENT:
                    self._react_to(event, result)
                if len(seen) % self._window == 0:
                    mined_keys = self._remine(seen, result, mined_keys)
                pbar.update(1)
            if len(seen) % self._window != 0:
                self._remine(seen, result, mined_keys)
        finally:
            pbar.close()

        logger.info(
            "Replayed %d events in %d batch(es); %d reaction(s), %d skipped",
            result.events_processed,
            result.batches,
            result.reactions,
            result.skipped,
        )
        return result

    def _remine(
        self,
        seen: list[Event],
        result: ReplayResult,
        previous_keys: set[tuple[Formula, str]],
    ) -> set[tuple[Formula, str]]:
        mined = merge(mine(Behavior(tuple(seen)), self._graph, self._mode))
        kept = [entry for entry in result.specification if entry.key not in previous_keys]
        kept_keys = {entry.key for entry in kept}
        fresh: list[AttributedFormula] = [entry for entry in mined if entry.key not in kept_keys]
        result.specification = Specification.collapsing([*kept, *fresh])
        result.batches += 1
        logger.debug("Mining round %d over %d events", result.batches, len(seen))
        return {entry.key for entry in fresh}

    def _react_to(self, event: Event, result: ReplayResult) -> None:
        trigger = Atom(event.node)
        try:
            reaction = self._reactor.react(result.specification, trigger, event.object_id)
        except (ReactionError, LogicError) as exc:
            result.skipped += 1
            result.errors.append(f"{event}: {exc}")
            logger.warning("Skipping reaction to %s: %s", event, exc)
            return
        result.specification = reaction.updated_spec
        proposal = Proposal(event=event, actions=reaction.actions)
        result.proposals.append(proposal)
        if self._on_proposal is not None:
            self._on_proposal(proposal)
