"""Labeled semantic tableaux for the supported fragment.

Trees are ground: ``G φ`` is instantiated at the present world and at every witness
world on the branch, and instantiated again whenever a witness appears. Each branch keeps
its worlds in temporal order so an open branch reads off directly as a model.

Expansion order on a branch is fixed so trees are reproducible: non-branching entries
first (conjunctions, literals, registering ``G``), then eventualities, then the ``G``
instantiation sweep, then the first branching entry. Branches are explored depth first,
left child first, sharing one witness counter.

A disjunction or implication instantiated from ``G`` is only split once it is false in the
model read off the branch so far. Until then it waits, and a branch that finishes with
every waiting instance still true is open.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from typing import TypeVar

from .exceptions import TableauBudgetExceeded
from .formula import (
    Always,
    And,
    Atom,
    Eventually,
    Formula,
    Implies,
    Not,
    Or,
    conjuncts,
    is_literal,
    push_negation,
    subformulas,
)
from .fragment import require_fragment
from .patterns import is_response

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 100_000

_T = TypeVar("_T")


def witness_letters(index: int) -> str:
    """Letters for witness ``index``: 1 -> a, 26 -> z, 27 -> aa."""
    if index < 1:
        raise ValueError("Witness indices start at 1")
    letters = ""
    while index > 0:
        index, remainder = divmod(index - 1, 26)
        letters = chr(ord("a") + remainder) + letters
    return letters


@dataclass(frozen=True, slots=True, order=True)
class WorldLabel:
    """Either the present world (witness 0) or a witness created for an eventuality."""

    witness: int = 0

    def __post_init__(self) -> None:
        if self.witness < 0:
            raise ValueError("Witness ids are non-negative")

    @property
    def is_now(self) -> bool:
        return self.witness == 0

    def __str__(self) -> str:
        return "" if self.is_now else f"1.[{witness_letters(self.witness)}]"


NOW = WorldLabel()


@dataclass(frozen=True, slots=True)
class LabeledFormula:
    """A tree entry: a formula asserted at a world.

    ``from_always`` marks entries descending from a ``G`` instantiation.
    """

    label: WorldLabel
    formula: Formula
    from_always: bool = False

    @property
    def is_literal(self) -> bool:
        return is_literal(self.formula)

    def __str__(self) -> str:
        if self.label.is_now:
            return str(self.formula)
        return f"{self.label}: {self.formula}"


@dataclass(frozen=True, slots=True, order=True)
class Literal:
    """Signed atom at a world."""

    atom: str
    positive: bool
    label: WorldLabel = NOW

    @classmethod
    def from_entry(cls, entry: LabeledFormula) -> Literal:
        formula = entry.formula
        if isinstance(formula, Atom):
            return cls(formula.name, True, entry.label)
        if isinstance(formula, Not) and isinstance(formula.operand, Atom):
            return cls(formula.operand.name, False, entry.label)
        raise ValueError(f"Not a literal entry: {entry}")

    def __str__(self) -> str:
        sign = "" if self.positive else "!"
        world = "Now" if self.label.is_now else str(self.label)
        return f"{sign}{self.atom}@{world}"


class BranchStatus(str, Enum):
    OPEN = "open"
    CLOSED = "closed"


@dataclass(frozen=True, slots=True)
class Branch:
    """Root-to-leaf path of a finished tree."""

    entries: tuple[LabeledFormula, ...]
    status: BranchStatus
    closing_pair: tuple[int, int] | None
    worlds: tuple[WorldLabel, ...]

    @property
    def is_open(self) -> bool:
        return self.status is BranchStatus.OPEN

    def literals(self) -> frozenset[Literal]:
        return frozenset(Literal.from_entry(entry) for entry in self.entries if entry.is_literal)

    def trace(self) -> list[frozenset[str]]:
        """States of the model read off this branch, one per world in temporal order.

        An atom holds at a world iff it is asserted there; the last state repeats forever.
        """
        true_atoms: dict[WorldLabel, set[str]] = {world: set() for world in self.worlds}
        for literal in self.literals():
            if literal.positive:
                true_atoms[literal.label].add(literal.atom)
        return [frozenset(true_atoms[world]) for world in self.worlds]


@dataclass(frozen=True, slots=True)
class TreeNode:
    entry: LabeledFormula
    children: tuple[TreeNode, ...] = ()
    branch: int | None = None


@dataclass(frozen=True, slots=True)
class TruthTree:
    """A finished tree; ``branches`` are listed left to right.

    ``root`` is the input pushed into negation normal form, the formula the tree expands.
    """

    root: Formula
    branches: tuple[Branch, ...]
    witness_count: int
    node_count: int
    layout: TreeNode

    @property
    def open_branches(self) -> tuple[Branch, ...]:
        return tuple(branch for branch in self.branches if branch.is_open)

    @property
    def is_open(self) -> bool:
        return any(branch.is_open for branch in self.branches)

    @property
    def is_closed(self) -> bool:
        return not self.is_open

    def dump(self) -> str:
        """Indented text rendering, one entry per line, leaves marked OPEN or CLOSED(i,j)."""
        lines: list[str] = []
        self._dump_node(self.layout, 0, lines)
        return "\n".join(lines)

    def _dump_node(self, node: TreeNode, depth: int, lines: list[str]) -> None:
        indent = "  " * depth
        while True:
            lines.append(f"{indent}{node.entry}")
            if len(node.children) != 1:
                break
            node = node.children[0]
        if node.branch is not None:
            branch = self.branches[node.branch]
            if branch.closing_pair is None:
                lines.append(f"{indent}OPEN")
            else:
                first, second = branch.closing_pair
                lines.append(f"{indent}CLOSED({first},{second})")
        for child in node.children:
            self._dump_node(child, depth + 1, lines)


def open_literal_sets(tree: TruthTree) -> list[frozenset[Literal]]:
    """Literal sets of the open branches, left to right."""
    return [branch.literals() for branch in tree.open_branches]


class Tableau:
    """Builds truth trees and answers the satisfiability questions."""

    def __init__(self, node_budget: int = DEFAULT_NODE_BUDGET) -> None:
        if node_budget < 1:
            raise ValueError("node_budget must be positive")
        self._node_budget = node_budget

    @property
    def node_budget(self) -> int:
        return self._node_budget

    def build_tree(self, f: Formula) -> TruthTree:
        """Build the finished tree for f.

        Raises:
            FragmentError: If f is outside the fragment
            TableauBudgetExceeded: If the tree outgrows the node budget
        """
        require_fragment(f)
        return _Expansion(f, self._node_budget).finish_tree()

    def first_open_branch(self, f: Formula) -> Branch | None:
        """Expand depth first and stop at the first open branch."""
        require_fragment(f)
        return _Expansion(f, self._node_budget).find_open_branch()

    def is_satisfiable(self, f: Formula) -> bool:
        return self.first_open_branch(f) is not None

    def is_unsatisfiable(self, f: Formula) -> bool:
        return self.first_open_branch(f) is None

    def is_valid(self, f: Formula) -> bool:
        """True iff the tree of the pushed negation of f closes."""
        return self.is_unsatisfiable(push_negation(Not(f)))


_DEFAULT_TABLEAU = Tableau()


def build_tree(f: Formula) -> TruthTree:
    return _DEFAULT_TABLEAU.build_tree(f)


def is_satisfiable(f: Formula) -> bool:
    return _DEFAULT_TABLEAU.is_satisfiable(f)


def is_unsatisfiable(f: Formula) -> bool:
    return _DEFAULT_TABLEAU.is_unsatisfiable(f)


def is_valid(f: Formula) -> bool:
    return _DEFAULT_TABLEAU.is_valid(f)


class _Node:
    __slots__ = ("entry", "children", "branch")

    def __init__(self, entry: LabeledFormula) -> None:
        self.entry = entry
        self.children: list[_Node] = []
        self.branch: int | None = None

    def freeze(self) -> TreeNode:
        return TreeNode(
            entry=self.entry,
            children=tuple(child.freeze() for child in self.children),
            branch=self.branch,
        )


class _BranchState:
    """Mutable bookkeeping of one branch under construction."""

    __slots__ = (
        "tip",
        "entries",
        "processed",
        "worlds",
        "always",
        "instantiated",
        "asserted",
        "literals",
        "fresh_used",
        "closing",
    )

    def __init__(self, tip: _Node) -> None:
        self.tip = tip
        self.entries: list[LabeledFormula] = []
        self.processed: list[bool] = []
        self.worlds: list[WorldLabel] = [NOW]
        self.always: list[int] = []
        self.instantiated: set[tuple[int, WorldLabel]] = set()
        self.asserted: dict[tuple[WorldLabel, Formula], int] = {}
        self.literals: dict[tuple[WorldLabel, str, bool], int] = {}
        self.fresh_used = 0
        self.closing: tuple[int, int] | None = None

    def copy(self) -> _BranchState:
        clone = _BranchState(self.tip)
        clone.entries = list(self.entries)
        clone.processed = list(self.processed)
        clone.worlds = list(self.worlds)
        clone.always = list(self.always)
        clone.instantiated = set(self.instantiated)
        clone.asserted = dict(self.asserted)
        clone.literals = dict(self.literals)
        clone.fresh_used = self.fresh_used
        clone.closing = self.closing
        return clone


@dataclass(frozen=True, slots=True)
class _Choice:
    """One alternative for an eventuality: a fresh world at ``slot`` or an existing world."""

    world: WorldLabel
    slot: int | None = None


class _Expansion:
    """A single tree construction."""

    def __init__(self, f: Formula, node_budget: int) -> None:
        self._root = push_negation(f)
        self._node_budget = node_budget
        self._node_count = 0
        self._witness_count = 0
        # Fresh worlds for eventualities under G are bounded by the number of responses.
        self._response_budget = sum(1 for node in subformulas(self._root) if is_response(node))
        self._branches: list[Branch] = []
        self._layout = _Node(LabeledFormula(NOW, self._root))

    def finish_tree(self) -> TruthTree:
        self._run(stop_at_open=False)
        logger.debug(
            "Built tree for %s: %d branches, %d nodes, %d witnesses",
            self._root,
            len(self._branches),
            self._node_count,
            self._witness_count,
        )
        return TruthTree(
            root=self._root,
            branches=tuple(self._branches),
            witness_count=self._witness_count,
            node_count=self._node_count,
            layout=self._layout.freeze(),
        )

    def find_open_branch(self) -> Branch | None:
        return self._run(stop_at_open=True)

    def _run(self, stop_at_open: bool) -> Branch | None:
        initial = _BranchState(self._layout)
        self._register(initial, self._layout.entry)
        stack = [initial]
        while stack:
            state = stack.pop()
            children = self._expand(state)
            if children is None:
                branch = self._close_out(state)
                if stop_at_open and branch.is_open:
                    return branch
            else:
                stack.extend(reversed(children))
        return None

    def _close_out(self, state: _BranchState) -> Branch:
        branch = Branch(
            entries=tuple(state.entries),
            status=BranchStatus.OPEN if state.closing is None else BranchStatus.CLOSED,
            closing_pair=state.closing,
            worlds=tuple(state.worlds),
        )
        state.tip.branch = len(self._branches)
        self._branches.append(branch)
        return branch

    def _expand(self, state: _BranchState) -> list[_BranchState] | None:
        """Expand until the branch closes, finishes, or splits into children."""
        while state.closing is None:
            index = _next_unprocessed(state, _is_non_branching)
            if index is not None:
                self._apply_non_branching(state, index)
                continue
            index = _next_unprocessed(state, _is_eventuality)
            if index is not None:
                children = self._apply_eventuality(state, index)
                if children is not None:
                    return children
                continue
            if self._instantiate_always(state):
                continue
            index = _next_split(state)
            if index is None:
                return None
            return self._apply_branching(state, index)
        return None

    def _add(self, state: _BranchState, entry: LabeledFormula) -> None:
        if (entry.label, entry.formula) in state.asserted:
            return
        self._node_count += 1
        if self._node_count > self._node_budget:
            raise TableauBudgetExceeded(
                f"Tree construction exceeded the budget of {self._node_budget} nodes"
            )
        node = _Node(entry)
        state.tip.children.append(node)
        state.tip = node
        self._register(state, entry)

    def _register(self, state: _BranchState, entry: LabeledFormula) -> None:
        index = len(state.entries)
        state.entries.append(entry)
        state.processed.append(False)
        state.asserted[(entry.label, entry.formula)] = index
        if not entry.is_literal:
            return
        state.processed[index] = True
        literal = Literal.from_entry(entry)
        key = (literal.label, literal.atom, literal.positive)
        state.literals.setdefault(key, index)
        opposite = state.literals.get((literal.label, literal.atom, not literal.positive))
        if opposite is not None and state.closing is None:
            state.closing = (opposite, index)

    def _apply_non_branching(self, state: _BranchState, index: int) -> None:
        entry = state.entries[index]
        state.processed[index] = True
        formula = entry.formula
        if isinstance(formula, Always):
            state.always.append(index)
            return
        for part in conjuncts(formula):
            self._add(state, LabeledFormula(entry.label, part, entry.from_always))

    def _instantiate_always(self, state: _BranchState) -> bool:
        added = False
        for world in list(state.worlds):
            for always_index in state.always:
                origin = state.entries[always_index]
                if state.worlds.index(world) < state.worlds.index(origin.label):
                    continue
                key = (always_index, world)
                if key in state.instantiated:
                    continue
                state.instantiated.add(key)
                body = origin.formula
                assert isinstance(body, Always)
                self._add(state, LabeledFormula(world, body.operand, from_always=True))
                added = True
                if state.closing is not None:
                    return True
        return added

    def _apply_eventuality(self, state: _BranchState, index: int) -> list[_BranchState] | None:
        entry = state.entries[index]
        state.processed[index] = True
        formula = entry.formula
        assert isinstance(formula, Eventually)
        goal = formula.operand
        position = state.worlds.index(entry.label)
        later_worlds = state.worlds[position:]
        if any((world, goal) in state.asserted for world in later_worlds):
            return None

        choices: list[_Choice] = []
        if entry.from_always:
            choices = [
                _Choice(world)
                for world in later_worlds
                if not _contradicts(state, goal, world)
            ]
        if not entry.from_always or state.fresh_used < self._response_budget:
            self._witness_count += 1
            fresh = WorldLabel(self._witness_count)
            choices.extend(
                _Choice(fresh, slot) for slot in range(position + 1, len(state.worlds) + 1)
            )
        if not choices:
            choices = [_Choice(entry.label)]

        def apply(target: _BranchState, choice: _Choice) -> None:
            if choice.slot is not None:
                target.worlds.insert(choice.slot, choice.world)
                if entry.from_always:
                    target.fresh_used += 1
            self._add(target, LabeledFormula(choice.world, goal, entry.from_always))

        return self._split(state, choices, apply)

    def _apply_branching(self, state: _BranchState, index: int) -> list[_BranchState]:
        entry = state.entries[index]
        state.processed[index] = True
        formula = entry.formula
        if isinstance(formula, Or):
            alternatives = [formula.left, formula.right]
        else:
            assert isinstance(formula, Implies)
            alternatives = [push_negation(Not(formula.left)), formula.right]

        if entry.from_always:
            if any((entry.label, option) in state.asserted for option in alternatives):
                return [state]
            kept = [option for option in alternatives if not _contradicts(state, option, entry.label)]
            alternatives = kept or alternatives[:1]

        def apply(target: _BranchState, option: Formula) -> None:
            self._add(target, LabeledFormula(entry.label, option, entry.from_always))

        children = self._split(state, alternatives, apply)
        return children if children is not None else [state]

    def _split(
        self,
        state: _BranchState,
        options: list[_T],
        apply: Callable[[_BranchState, _T], None],
    ) -> list[_BranchState] | None:
        """Apply a single option in place, or fork one child per option."""
        if len(options) == 1:
            apply(state, options[0])
            return None
        children: list[_BranchState] = []
        for option in options:
            child = state.copy()
            apply(child, option)
            children.append(child)
        return children


def _next_unprocessed(state: _BranchState, predicate: Callable[[Formula], bool]) -> int | None:
    for index, entry in enumerate(state.entries):
        if not state.processed[index] and predicate(entry.formula):
            return index
    return None


def _next_split(state: _BranchState) -> int | None:
    """First branching entry that must be split; instances of ``G`` already true wait."""
    for index, entry in enumerate(state.entries):
        if state.processed[index] or not _is_branching(entry.formula):
            continue
        if entry.from_always and _holds(state, entry.formula, entry.label):
            continue
        return index
    return None


def _holds(state: _BranchState, f: Formula, world: WorldLabel) -> bool:
    """Truth of f at world in the trace read off the branch: unasserted atoms are false."""
    if isinstance(f, Atom):
        return (world, f.name, True) in state.literals
    if isinstance(f, Not):
        return not _holds(state, f.operand, world)
    if isinstance(f, And):
        return _holds(state, f.left, world) and _holds(state, f.right, world)
    if isinstance(f, Or):
        return _holds(state, f.left, world) or _holds(state, f.right, world)
    if isinstance(f, Implies):
        return not _holds(state, f.left, world) or _holds(state, f.right, world)
    position = state.worlds.index(world)
    later_worlds = state.worlds[position:]
    if isinstance(f, Eventually):
        return any(_holds(state, f.operand, later) for later in later_worlds)
    assert isinstance(f, Always)
    return all(_holds(state, f.operand, later) for later in later_worlds)


def _is_non_branching(f: Formula) -> bool:
    return isinstance(f, And | Always)


def _is_eventuality(f: Formula) -> bool:
    return isinstance(f, Eventually)


def _is_branching(f: Formula) -> bool:
    return isinstance(f, Or | Implies)


def _contradicts(state: _BranchState, f: Formula, world: WorldLabel) -> bool:
    """True when f is a literal whose complement is already asserted at world."""
    if isinstance(f, Atom):
        return (world, f.name, False) in state.literals
    if isinstance(f, Not) and isinstance(f.operand, Atom):
        return (world, f.operand.name, True) in state.literals
    return False
