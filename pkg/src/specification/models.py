"""Specifications: formulas attributed to the objects they describe."""

from __future__ import annotations

import dataclasses
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum

from src.logic.formula import Formula, conjoin
from src.logic.patterns import PatternKind, classify

from .exceptions import AttributionClashError, DuplicateFormulaError


class Origin(str, Enum):
    """How a formula entered the specification."""

    SAF = "saf"
    LIV1 = "liv1"
    LIV2 = "liv2"
    EXTERNAL = "external"


_ORIGIN_PATTERNS = {
    Origin.SAF: PatternKind.ABSENCE,
    Origin.LIV1: PatternKind.EXISTENCE,
    Origin.LIV2: PatternKind.RESPONSE,
}


@dataclass(frozen=True, slots=True)
class AttributedFormula:
    """A formula tagged with its object and origin.

    ``occurrences`` counts how often mining produced the entry; reasoning ignores it.
    """

    formula: Formula
    object_id: str
    origin: Origin = Origin.EXTERNAL
    occurrences: int = 1

    def __post_init__(self) -> None:
        if self.occurrences < 1:
            raise ValueError("occurrences must be positive")
        expected = _ORIGIN_PATTERNS.get(self.origin)
        if expected is None:
            return
        pattern = classify(self.formula)
        if pattern is None or pattern.kind is not expected:
            raise ValueError(f"{self.origin.value} formula must be a {expected.value} pattern")

    @property
    def key(self) -> tuple[Formula, str]:
        return (self.formula, self.object_id)

    def __str__(self) -> str:
        return f"{self.object_id}: {self.formula}"


@dataclass(frozen=True, slots=True)
class Specification:
    """Ordered, duplicate-free collection of attributed formulas."""

    entries: tuple[AttributedFormula, ...] = ()

    def __post_init__(self) -> None:
        seen: set[tuple[Formula, str]] = set()
        for entry in self.entries:
            if entry.key in seen:
                raise DuplicateFormulaError(
                    f"Formula {entry.formula} is already attributed to {entry.object_id}"
                )
            seen.add(entry.key)

    @classmethod
    def of(cls, entries: Iterable[AttributedFormula]) -> Specification:
        return cls(tuple(entries))

    @classmethod
    def collapsing(cls, entries: Iterable[AttributedFormula]) -> Specification:
        """Build a specification, folding repeated entries into their occurrence count."""
        merged: dict[tuple[Formula, str], AttributedFormula] = {}
        for entry in entries:
            existing = merged.get(entry.key)
            if existing is None:
                merged[entry.key] = entry
            else:
                merged[entry.key] = dataclasses.replace(
                    existing, occurrences=existing.occurrences + entry.occurrences
                )
        return cls(tuple(merged.values()))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[AttributedFormula]:
        return iter(self.entries)

    def __contains__(self, item: object) -> bool:
        return item in self.entries

    def objects(self) -> tuple[str, ...]:
        """Object ids in order of first appearance."""
        return tuple(dict.fromkeys(entry.object_id for entry in self.entries))

    def formulas(self) -> tuple[Formula, ...]:
        return tuple(entry.formula for entry in self.entries)

    def for_object(self, object_id: str) -> Specification:
        """Restriction to one object's entries."""
        return Specification(tuple(entry for entry in self.entries if entry.object_id == object_id))

    def conjunction(self, object_id: str | None = None) -> Formula | None:
        """Left-fold conjunction of the formulas, optionally restricted to one object.

        Returns None for an empty restriction (the empty conjunction is true).
        """
        scope = self if object_id is None else self.for_object(object_id)
        return conjoin(scope.formulas())

    def find(self, formula: Formula, object_id: str) -> AttributedFormula | None:
        for entry in self.entries:
            if entry.key == (formula, object_id):
                return entry
        return None

    def add(self, entry: AttributedFormula) -> Specification:
        return Specification((*self.entries, entry))

    def remove(self, entry: AttributedFormula) -> Specification:
        return Specification(tuple(item for item in self.entries if item != entry))

    def replace(self, old: AttributedFormula, new: AttributedFormula) -> Specification:
        """Swap one entry in place; when ``new`` is already present ``old`` is dropped."""
        if any(item.key == new.key for item in self.entries if item != old):
            return self.remove(old)
        return Specification(tuple(new if item == old else item for item in self.entries))

    def with_object(self, object_id: str) -> Specification:
        """Re-attribute every entry to object_id, collapsing duplicates."""
        return Specification.collapsing(
            dataclasses.replace(entry, object_id=object_id) for entry in self.entries
        )


def merge(specs: Sequence[tuple[str, Specification]] | Mapping[str, Specification]) -> Specification:
    """Union per-object specifications, attributing every formula to its object.

    Identical formulas of different objects stay distinct entries.

    Raises:
        AttributionClashError: If an object id appears twice
    """
    pairs = list(specs.items()) if isinstance(specs, Mapping) else list(specs)
    seen: set[str] = set()
    entries: list[AttributedFormula] = []
    for object_id, spec in pairs:
        if object_id in seen:
            raise AttributionClashError(f"Object {object_id!r} appears in more than one specification")
        seen.add(object_id)
        entries.extend(spec.with_object(object_id))
    return Specification(tuple(entries))


def split(sigma: Specification) -> dict[str, Specification]:
    """Separate a specification into per-object specifications."""
    return {object_id: sigma.for_object(object_id) for object_id in sigma.objects()}
