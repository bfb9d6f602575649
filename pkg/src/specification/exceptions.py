"""Custom exceptions for specifications, mining and reactions."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from src.environment.models import ValidationReport


class SpecificationError(ValueError):
    """Base class for specification failures."""


class DuplicateFormulaError(SpecificationError):
    """Raised when a formula is attributed twice to the same object."""


class AttributionClashError(SpecificationError):
    """Raised when two specifications being merged claim the same object."""


class SpecificationFormatError(SpecificationError):
    """Raised when a specification document cannot be read."""


class EmptyBehaviorError(SpecificationError):
    """Raised when mining is asked to work on a behavior without events."""


class BehaviorValidationError(SpecificationError):
    """Raised when a behavior mentions nodes outside the graph."""

    def __init__(self, report: ValidationReport) -> None:
        super().__init__(str(report))
        self.report = report


class ReactionError(RuntimeError):
    """Raised when a reaction's preconditions do not hold."""
