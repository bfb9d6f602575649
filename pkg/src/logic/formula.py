"""Abstract syntax for the temporal formulas handled by the reasoner.

Formulas are immutable trees of frozen dataclasses. Besides the node types the module
holds the canonical printer and the structural helpers used across the package:
atom collection, negation pushing and conjunction folding.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .exceptions import AtomNameError

IDENTIFIER_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
RESERVED_WORDS = frozenset({"G", "F"})

# Binding strength used by the printer, loosest first.
_IMPLIES_LEVEL = 1
_OR_LEVEL = 2
_AND_LEVEL = 3
_UNARY_LEVEL = 4
_ATOM_LEVEL = 5


class Formula:
    """Common base of all formula nodes."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    def __post_init__(self) -> None:
        if not is_identifier(self.name):
            raise AtomNameError(f"Invalid atom name: {self.name!r}")


@dataclass(frozen=True, slots=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Always(Formula):
    operand: Formula


@dataclass(frozen=True, slots=True)
class Eventually(Formula):
    operand: Formula


def is_identifier(text: str) -> bool:
    """Return True when text is a legal atom name."""
    return IDENTIFIER_PATTERN.fullmatch(text) is not None and text not in RESERVED_WORDS


def is_literal(f: Formula) -> bool:
    return isinstance(f, Atom) or (isinstance(f, Not) and isinstance(f.operand, Atom))


def children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, Atom):
        return ()
    if isinstance(f, Not | Always | Eventually):
        return (f.operand,)
    if isinstance(f, And | Or | Implies):
        return (f.left, f.right)
    raise TypeError(f"Unsupported formula node: {f!r}")


def subformulas(f: Formula) -> Iterator[Formula]:
    """Yield f and all of its subformulas in pre-order."""
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def atoms(f: Formula) -> frozenset[str]:
    """Return the names of all atoms occurring in f."""
    return frozenset(node.name for node in subformulas(f) if isinstance(node, Atom))


def is_temporal_free(f: Formula) -> bool:
    return not any(isinstance(node, Always | Eventually) for node in subformulas(f))


def count_eventualities(f: Formula, *, positive: bool = True) -> int:
    """Number of eventualities f produces once negations are pushed inward.

    Counts F in positive positions and G in negative ones (negations and implication
    antecedents flip the polarity).
    """
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Not):
        return count_eventualities(f.operand, positive=not positive)
    if isinstance(f, Implies):
        return count_eventualities(f.left, positive=not positive) + count_eventualities(
            f.right, positive=positive
        )
    if isinstance(f, And | Or):
        return count_eventualities(f.left, positive=positive) + count_eventualities(
            f.right, positive=positive
        )
    if isinstance(f, Always | Eventually):
        own = 1 if isinstance(f, Eventually) == positive else 0
        return own + count_eventualities(f.operand, positive=positive)
    raise TypeError(f"Unsupported formula node: {f!r}")


def conjuncts(f: Formula) -> list[Formula]:
    """Flatten nested conjunctions, left to right."""
    if isinstance(f, And):
        return conjuncts(f.left) + conjuncts(f.right)
    return [f]


def disjuncts(f: Formula) -> list[Formula]:
    """Flatten nested disjunctions, left to right."""
    if isinstance(f, Or):
        return disjuncts(f.left) + disjuncts(f.right)
    return [f]


def conjoin(formulas: Iterable[Formula]) -> Formula | None:
    """Left-fold formulas into a conjunction; None stands for the empty conjunction."""
    result: Formula | None = None
    for item in formulas:
        result = item if result is None else And(result, item)
    return result


def disjoin(formulas: Iterable[Formula]) -> Formula | None:
    result: Formula | None = None
    for item in formulas:
        result = item if result is None else Or(result, item)
    return result


def push_negation(f: Formula) -> Formula:
    """Move negations inward until they sit directly on atoms.

    Implications in positive position are kept, their sides are normalized. A negated
    implication becomes a conjunction, negated temporal operators are dualized.
    """
    if isinstance(f, Atom):
        return f
    if isinstance(f, And):
        return And(push_negation(f.left), push_negation(f.right))
    if isinstance(f, Or):
        return Or(push_negation(f.left), push_negation(f.right))
    if isinstance(f, Implies):
        return Implies(push_negation(f.left), push_negation(f.right))
    if isinstance(f, Always):
        return Always(push_negation(f.operand))
    if isinstance(f, Eventually):
        return Eventually(push_negation(f.operand))
    if isinstance(f, Not):
        return _negate(f.operand)
    raise TypeError(f"Unsupported formula node: {f!r}")


def _negate(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return Not(f)
    if isinstance(f, Not):
        return push_negation(f.operand)
    if isinstance(f, And):
        return Or(_negate(f.left), _negate(f.right))
    if isinstance(f, Or):
        return And(_negate(f.left), _negate(f.right))
    if isinstance(f, Implies):
        return And(push_negation(f.left), _negate(f.right))
    if isinstance(f, Always):
        return Eventually(_negate(f.operand))
    if isinstance(f, Eventually):
        return Always(_negate(f.operand))
    raise TypeError(f"Unsupported formula node: {f!r}")


def render(f: Formula) -> str:
    """Print f in the concrete syntax with the fewest parentheses that reparse exactly."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        return "!" + _render_operand(f.operand, _UNARY_LEVEL)
    if isinstance(f, Always):
        return "G " + _render_operand(f.operand, _UNARY_LEVEL)
    if isinstance(f, Eventually):
        return "F " + _render_operand(f.operand, _UNARY_LEVEL)
    if isinstance(f, And):
        left = _render_operand(f.left, _AND_LEVEL)
        right = _render_operand(f.right, _AND_LEVEL + 1)
        return f"{left} & {right}"
    if isinstance(f, Or):
        left = _render_operand(f.left, _OR_LEVEL)
        right = _render_operand(f.right, _OR_LEVEL + 1)
        return f"{left} | {right}"
    if isinstance(f, Implies):
        # Right-associative: only a left-nested implication needs parentheses.
        left = _render_operand(f.left, _IMPLIES_LEVEL + 1)
        right = _render_operand(f.right, _IMPLIES_LEVEL)
        return f"{left} -> {right}"
    raise TypeError(f"Unsupported formula node: {f!r}")


def _render_operand(f: Formula, minimum_level: int) -> str:
    text = render(f)
    return text if _level(f) >= minimum_level else f"({text})"


def _level(f: Formula) -> int:
    if isinstance(f, Atom):
        return _ATOM_LEVEL
    if isinstance(f, Not | Always | Eventually):
        return _UNARY_LEVEL
    if isinstance(f, And):
        return _AND_LEVEL
    if isinstance(f, Or):
        return _OR_LEVEL
    return _IMPLIES_LEVEL
