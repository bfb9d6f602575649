"""Property pattern constructors: absence, existence, invariance and response."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from .exceptions import PatternError
from .formula import Always, Eventually, Formula, Implies, Not, is_temporal_free


class PatternKind(str, Enum):
    ABSENCE = "absence"
    EXISTENCE = "existence"
    INVARIANCE = "invariance"
    RESPONSE = "response"

    @property
    def arity(self) -> int:
        return 2 if self is PatternKind.RESPONSE else 1


@dataclass(frozen=True, slots=True)
class Pattern:
    """A pattern instance with its temporal-free arguments."""

    kind: PatternKind
    args: tuple[Formula, ...]

    def __post_init__(self) -> None:
        if len(self.args) != self.kind.arity:
            raise PatternError(
                f"{self.kind.value} pattern takes {self.kind.arity} argument(s), "
                f"got {len(self.args)}"
            )
        for arg in self.args:
            if not is_temporal_free(arg):
                raise PatternError(f"Pattern argument must be temporal-free: {arg}")

    def to_formula(self) -> Formula:
        if self.kind is PatternKind.ABSENCE:
            return Always(Not(self.args[0]))
        if self.kind is PatternKind.INVARIANCE:
            return Always(self.args[0])
        if self.kind is PatternKind.EXISTENCE:
            return Eventually(self.args[0])
        trigger, response = self.args
        return Always(Implies(trigger, Eventually(response)))


def make_pattern(kind: PatternKind | str, args: Sequence[Formula]) -> Formula:
    """Build the formula for a pattern.

    Raises:
        PatternError: On an arity mismatch or a temporal argument
    """
    try:
        pattern_kind = PatternKind(kind)
    except ValueError as exc:
        raise PatternError(f"Unknown pattern kind: {kind!r}") from exc
    return Pattern(pattern_kind, tuple(args)).to_formula()


def classify(f: Formula) -> Pattern | None:
    """Recognize the pattern a formula instantiates, if any.

    Absence takes precedence over invariance for ``G !p``.
    """
    if isinstance(f, Eventually) and is_temporal_free(f.operand):
        return Pattern(PatternKind.EXISTENCE, (f.operand,))
    if not isinstance(f, Always):
        return None
    body = f.operand
    if isinstance(body, Not) and is_temporal_free(body.operand):
        return Pattern(PatternKind.ABSENCE, (body.operand,))
    if is_temporal_free(body):
        return Pattern(PatternKind.INVARIANCE, (body,))
    if (
        isinstance(body, Implies)
        and isinstance(body.right, Eventually)
        and is_temporal_free(body.left)
        and is_temporal_free(body.right.operand)
    ):
        return Pattern(PatternKind.RESPONSE, (body.left, body.right.operand))
    return None


def is_response(f: Formula) -> bool:
    pattern = classify(f)
    return pattern is not None and pattern.kind is PatternKind.RESPONSE
