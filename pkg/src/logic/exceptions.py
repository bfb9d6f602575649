"""Custom exceptions for the logic subsystem."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .fragment import FragmentViolation


class LogicError(Exception):
    """Base class for formula and tableau failures."""


@dataclass(slots=True, eq=False)
class FormulaSyntaxError(LogicError, ValueError):
    """Raised when formula text does not follow the grammar."""

    message: str
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.message} (line {self.line}, column {self.column})"


class PatternError(LogicError, ValueError):
    """Raised when a pattern receives the wrong arity or a temporal argument."""


class FragmentError(LogicError, ValueError):
    """Raised when a formula falls outside the supported fragment."""

    def __init__(self, violation: FragmentViolation) -> None:
        super().__init__(str(violation))
        self.violation = violation


class TableauBudgetExceeded(LogicError, RuntimeError):
    """Raised when tree construction exceeds its node budget."""


class OracleLimitError(LogicError, RuntimeError):
    """Raised when brute-force enumeration would exceed its state-space cap."""


class AtomNameError(LogicError, ValueError):
    """Raised when an atom name does not follow the identifier grammar."""
