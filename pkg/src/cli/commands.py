"""Subcommand implementations; each returns a process exit code.

Exit codes: 0 success or "yes", 1 "no" for ``decide`` and I/O or parse failures for
``mine`` and ``replay``, 2 any other error.
"""

from __future__ import annotations

import json
import logging
from enum import Enum
from pathlib import Path

from src.environment.exceptions import EnvironmentModelError, GraphValidationError, UnknownNodeError
from src.environment.loaders import load_events, load_graph
from src.environment.models import AttributedGraph, Behavior
from src.logic.exceptions import LogicError
from src.logic.formula import Not, push_negation
from src.logic.parser import parse
from src.logic.tableau import Tableau
from src.specification.exceptions import ReactionError, SpecificationError
from src.specification.miner import MiningMode, mine_with_stats
from src.specification.models import Specification, merge
from src.specification.pipeline import Proposal, ReplayEngine
from src.specification.reactor import Reactor
from src.specification.store import dump_specification, read_specification, write_specification

from .config import ReplayConfig
from .console import print_error, print_info, print_success

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT_ERROR = 1
EXIT_ERROR = 2


class DecideQuery(str, Enum):
    SAT = "sat"
    UNSAT = "unsat"
    VALID = "valid"


def cmd_mine(graph_path: Path, events_path: Path, mode: MiningMode, out_path: Path | None) -> int:
    """Mine the merged specification of an event log; print it when no output path is given."""
    try:
        graph, behavior = _load_inputs(graph_path, events_path)
    except _InputFailure as failure:
        return failure.code

    try:
        specs, stats = mine_with_stats(behavior, graph, mode)
    except SpecificationError as exc:
        print_error(f"Mining failed: {exc}")
        return EXIT_ERROR

    sigma = merge(sorted(specs.items()))
    if not _emit_specification(sigma, out_path):
        return EXIT_INPUT_ERROR
    print_success(
        f"Mined {len(sigma)} formula(s) for {len(specs)} object(s) from {stats.total_events} event(s)"
    )
    return EXIT_OK


def cmd_decide(text: str, query: DecideQuery, show_tree: bool = False) -> int:
    """Answer a satisfiability question about one formula; prints yes or no."""
    tableau = Tableau()
    try:
        formula = parse(text)
        subject = push_negation(Not(formula)) if query is DecideQuery.VALID else formula
        if query is DecideQuery.SAT:
            answer = tableau.is_satisfiable(subject)
        else:
            answer = tableau.is_unsatisfiable(subject)
        tree = tableau.build_tree(subject) if show_tree else None
    except LogicError as exc:
        print_error(str(exc))
        return EXIT_ERROR

    print("yes" if answer else "no")
    if tree is not None:
        print(tree.dump())
    return EXIT_OK if answer else EXIT_NO


def cmd_react(
    spec_path: Path,
    object_id: str,
    trigger_text: str,
    out_path: Path | None = None,
    show_tree: bool = False,
    as_json: bool = False,
) -> int:
    """React to a trigger: print the actions one per line and write the updated specification."""
    try:
        sigma = read_specification(spec_path)
        trigger = parse(trigger_text)
        result = Reactor().react(sigma, trigger, object_id)
    except OSError as exc:
        print_error(f"Cannot read {spec_path}: {exc}")
        return EXIT_ERROR
    except (LogicError, SpecificationError, ReactionError) as exc:
        print_error(str(exc))
        return EXIT_ERROR

    if as_json:
        print(json.dumps(result.to_json(include_tree=show_tree), indent=2))
    else:
        for action in result.actions:
            print(action)
        if show_tree:
            print(result.tree.dump())

    if out_path is not None:
        try:
            write_specification(result.updated_spec, out_path)
        except OSError as exc:
            print_error(f"Cannot write {out_path}: {exc}")
            return EXIT_ERROR
        print_info(f"Updated specification written to {out_path}")
    return EXIT_OK


def cmd_replay(config: ReplayConfig) -> int:
    """Stream an event log through mining and, with every-event triggers, reactions."""
    try:
        graph, behavior = _load_inputs(config.graph_path, config.events_path)
    except _InputFailure as failure:
        return failure.code

    initial = Specification()
    if config.spec_path is not None:
        try:
            initial = read_specification(config.spec_path)
        except OSError as exc:
            print_error(f"Cannot read {config.spec_path}: {exc}")
            return EXIT_INPUT_ERROR
        except SpecificationError as exc:
            print_error(str(exc))
            return EXIT_INPUT_ERROR

    engine = ReplayEngine(
        graph,
        initial=initial,
        mode=config.mode,
        window=config.window,
        trigger_policy=config.trigger_policy,
        on_proposal=_print_proposal,
    )
    try:
        result = engine.run(behavior, show_progress=config.show_progress)
    except (SpecificationError, LogicError) as exc:
        print_error(f"Replay failed: {exc}")
        return EXIT_ERROR

    if not _emit_specification(result.specification, config.out_path):
        return EXIT_INPUT_ERROR
    print_success(
        f"Replayed {result.events_processed} event(s) in {result.batches} batch(es), "
        f"{result.reactions} reaction(s), {result.skipped} skipped"
    )
    return EXIT_OK


class _InputFailure(Exception):
    def __init__(self, code: int) -> None:
        super().__init__(code)
        self.code = code


def _load_inputs(graph_path: Path, events_path: Path) -> tuple[AttributedGraph, Behavior]:
    try:
        graph_text = graph_path.read_text(encoding="utf-8")
        events_text = events_path.read_text(encoding="utf-8")
    except OSError as exc:
        print_error(f"Cannot read input: {exc}")
        raise _InputFailure(EXIT_INPUT_ERROR) from exc
    try:
        graph = load_graph(graph_text)
        behavior = load_events(events_text, graph)
    except (GraphValidationError, UnknownNodeError) as exc:
        print_error(str(exc))
        raise _InputFailure(EXIT_ERROR) from exc
    except EnvironmentModelError as exc:
        print_error(str(exc))
        raise _InputFailure(EXIT_INPUT_ERROR) from exc
    logger.debug("Loaded %d vertices and %d events", len(graph), len(behavior))
    return graph, behavior


def _emit_specification(sigma: Specification, out_path: Path | None) -> bool:
    if out_path is None:
        print(dump_specification(sigma), end="")
        return True
    try:
        write_specification(sigma, out_path)
    except OSError as exc:
        print_error(f"Cannot write {out_path}: {exc}")
        return False
    print_info(f"Specification written to {out_path}")
    return True


def _print_proposal(proposal: Proposal) -> None:
    event = proposal.event
    actions = " ".join(proposal.actions) if proposal.actions else "-"
    print(f"{event.object_id} {event.node} {event.time}: {actions}", flush=True)
