"""Reacting to triggers: reasoning over a trigger and an object's specification.

A reaction builds the truth tree of the trigger conjoined with the object's formulas,
reads the open branches for the literals they make true, repairs the specification so it
stays consistent with the trigger, and proposes the nodes the open branches lead to.
"""

from __future__ import annotations

import dataclasses
import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Any

from src.logic.formula import And, Formula, Not, atoms, conjoin, disjoin, disjuncts, push_negation
from src.logic.fragment import require_fragment
from src.logic.tableau import Branch, Literal, Tableau, TruthTree

from .exceptions import ReactionError
from .models import AttributedFormula, Origin, Specification

logger = logging.getLogger(__name__)


class Entailment(str, Enum):
    ENTAILED = "entailed"
    NOT_ENTAILED = "not_entailed"


@dataclass(frozen=True, slots=True)
class ReactionResult:
    """Everything a reaction produced.

    ``open_literals`` holds one literal set per selected open branch and
    ``closed_literals`` the union over the selected closed branches. ``rewritten`` pairs
    each pruned disjunction with its replacement.
    """

    trigger: AttributedFormula
    tree: TruthTree
    open_literals: tuple[frozenset[Literal], ...]
    closed_literals: frozenset[Literal]
    removed: tuple[AttributedFormula, ...]
    rewritten: tuple[tuple[AttributedFormula, AttributedFormula], ...]
    updated_spec: Specification
    actions: tuple[str, ...]

    def to_json(self, include_tree: bool = False) -> dict[str, Any]:
        data: dict[str, Any] = {
            "object": self.trigger.object_id,
            "trigger": str(self.trigger.formula),
            "removed": [str(entry.formula) for entry in self.removed],
            "rewritten": [
                {"before": str(before.formula), "after": str(after.formula)}
                for before, after in self.rewritten
            ],
            "actions": list(self.actions),
            "open_literals": [sorted(str(literal) for literal in group) for group in self.open_literals],
            "closed_literals": sorted(str(literal) for literal in self.closed_literals),
        }
        if include_tree:
            data["tree"] = self.tree.dump()
        return data


@dataclass(slots=True)
class _Repair:
    kept: list[AttributedFormula]
    removed: list[AttributedFormula]
    rewritten: list[tuple[AttributedFormula, AttributedFormula]]


class Reactor:
    """Runs reactions and the specification checks on top of a tableau."""

    def __init__(self, tableau: Tableau | None = None) -> None:
        self._tableau = tableau or Tableau()

    def react(self, sigma: Specification, f: Formula, object_id: str) -> ReactionResult:
        """React to trigger f for one object.

        Args:
            sigma: Current specification (all objects)
            f: Trigger formula, a satisfied atom or an imposed constraint
            object_id: Object the trigger refers to

        Returns:
            The reaction tree, selected literals, repairs, updated specification and actions

        Raises:
            FragmentError: If f is outside the fragment
            ReactionError: If f is unsatisfiable or the object's formulas already contradict
            TableauBudgetExceeded: If a tree outgrows the node budget
        """
        require_fragment(f)
        scope = sigma.for_object(object_id)
        context = scope.conjunction()
        if context is not None and self._tableau.is_unsatisfiable(context):
            raise ReactionError(f"Specification of {object_id!r} is already contradictory")
        if self._tableau.is_unsatisfiable(f):
            raise ReactionError(f"Trigger {f} is unsatisfiable")

        tree = self._tableau.build_tree(f if context is None else And(f, context))
        trigger_atoms = atoms(f)
        selected = [branch for branch in tree.branches if _mentions(branch, trigger_atoms)]
        open_branches = [branch for branch in selected if branch.is_open]
        closed_literals: frozenset[Literal] = frozenset().union(
            *(branch.literals() for branch in selected if not branch.is_open)
        )

        trigger = scope.find(f, object_id) or AttributedFormula(f, object_id, Origin.EXTERNAL)
        repair = self._repair(f, [entry for entry in scope if entry != trigger])
        updated = _apply_repair(sigma, object_id, repair, trigger)
        actions = _rank_actions(open_branches, trigger_atoms)
        logger.info(
            "Reaction of %s to %s: %d removed, %d rewritten, actions %s",
            object_id,
            f,
            len(repair.removed),
            len(repair.rewritten),
            list(actions),
        )
        return ReactionResult(
            trigger=trigger,
            tree=tree,
            open_literals=tuple(branch.literals() for branch in open_branches),
            closed_literals=closed_literals,
            removed=tuple(repair.removed),
            rewritten=tuple(repair.rewritten),
            updated_spec=updated,
            actions=actions,
        )

    def check_entailment(self, sigma: Specification, object_id: str, f: Formula) -> Entailment:
        """Decide whether the object's formulas entail f by refuting their conjunction with not-f."""
        negated = push_negation(Not(f))
        context = sigma.conjunction(object_id)
        query = negated if context is None else And(context, negated)
        if self._tableau.is_unsatisfiable(query):
            return Entailment.ENTAILED
        return Entailment.NOT_ENTAILED

    def check_consistency(self, sigma: Specification, object_id: str) -> bool:
        context = sigma.conjunction(object_id)
        return context is None or self._tableau.is_satisfiable(context)

    def _repair(self, f: Formula, entries: list[AttributedFormula]) -> _Repair:
        """Make the object's formulas consistent with f.

        Formulas contradicting f on their own go first. Disjunctions then lose the
        disjuncts that contradict f together with the remaining formulas. A final pass keeps
        formulas while they stay consistent with f and the formulas kept so far, visiting
        external formulas before mined ones and newer entries before older ones.
        """
        repair = _Repair(kept=[], removed=[], rewritten=[])
        survivors: list[AttributedFormula] = []
        for entry in entries:
            if self._tableau.is_unsatisfiable(And(f, entry.formula)):
                logger.debug("Removing %s: contradicts %s", entry, f)
                repair.removed.append(entry)
            else:
                survivors.append(entry)

        for position, entry in enumerate(survivors):
            parts = disjuncts(entry.formula)
            if len(parts) < 2:
                continue
            others = conjoin(other.formula for index, other in enumerate(survivors) if index != position)
            base = f if others is None else And(f, others)
            kept_parts = [part for part in parts if not self._tableau.is_unsatisfiable(And(base, part))]
            if not kept_parts or len(kept_parts) == len(parts):
                continue
            pruned = disjoin(kept_parts)
            assert pruned is not None
            replacement = dataclasses.replace(entry, formula=pruned)
            logger.debug("Rewriting %s to %s", entry, replacement)
            repair.rewritten.append((entry, replacement))
            survivors[position] = replacement

        # Imposed formulas outrank mined ones; within each group the newest wins.
        for entry in sorted(reversed(survivors), key=lambda item: item.origin is not Origin.EXTERNAL):
            candidate = conjoin([f, *(kept.formula for kept in repair.kept), entry.formula])
            assert candidate is not None
            if self._tableau.is_satisfiable(candidate):
                repair.kept.append(entry)
            else:
                logger.debug("Removing %s: inconsistent with %s and the kept formulas", entry, f)
                repair.removed.append(entry)
        return repair


def _mentions(branch: Branch, names: frozenset[str]) -> bool:
    return any(literal.atom in names for literal in branch.literals())


def _rank_actions(branches: Sequence[Branch], excluded: frozenset[str]) -> tuple[str, ...]:
    """Nodes asserted at witness worlds, most supported first, ties by name."""
    support: Counter[str] = Counter()
    for branch in branches:
        support.update(
            {
                literal.atom
                for literal in branch.literals()
                if literal.positive and not literal.label.is_now and literal.atom not in excluded
            }
        )
    return tuple(sorted(support, key=lambda atom: (-support[atom], atom)))


def _apply_repair(
    sigma: Specification,
    object_id: str,
    repair: _Repair,
    trigger: AttributedFormula,
) -> Specification:
    replacements = {before: after for before, after in repair.rewritten}
    dropped = set(repair.removed)
    entries: list[AttributedFormula] = []
    for entry in sigma:
        if entry.object_id == object_id:
            if entry in dropped or entry == trigger:
                continue
            entry = replacements.get(entry, entry)
            if entry in dropped:
                continue
        entries.append(entry)
    return Specification.collapsing([*entries, trigger])


_DEFAULT_REACTOR = Reactor()


def react(sigma: Specification, f: Formula, object_id: str) -> ReactionResult:
    return _DEFAULT_REACTOR.react(sigma, f, object_id)


def check_entailment(sigma: Specification, object_id: str, f: Formula) -> Entailment:
    return _DEFAULT_REACTOR.check_entailment(sigma, object_id, f)


def check_consistency(sigma: Specification, object_id: str) -> bool:
    return _DEFAULT_REACTOR.check_consistency(sigma, object_id)
