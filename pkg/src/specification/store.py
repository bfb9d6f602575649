"""JSON persistence for specifications."""

from __future__ import annotations

import json
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from src.logic.exceptions import FormulaSyntaxError
from src.logic.parser import parse

from .exceptions import SpecificationFormatError
from .models import AttributedFormula, Origin, Specification

_DOCUMENT_KEYS = frozenset({"formulas"})
_ENTRY_KEYS = frozenset({"object", "formula", "origin", "occurrences"})


def load_specification(document: str) -> Specification:
    """Parse a specification document.

    Args:
        document: JSON text, e.g. ``{"formulas": [{"object": "o5", "formula": "G !e2"}]}``

    Returns:
        The specification, entries in document order

    Raises:
        SpecificationFormatError: On invalid JSON, schema violations or formula syntax errors
        DuplicateFormulaError: If a formula is attributed twice to one object
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SpecificationFormatError(f"Invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, Mapping):
        raise SpecificationFormatError("Specification document must be a JSON object")
    _reject_unknown(data, _DOCUMENT_KEYS, "specification")
    items = data.get("formulas", [])
    if not isinstance(items, list):
        raise SpecificationFormatError("'formulas' must be a list")
    return Specification(tuple(_entry_from_mapping(item, position) for position, item in enumerate(items)))


def read_specification(path: Path) -> Specification:
    return load_specification(path.read_text(encoding="utf-8"))


def dump_specification(spec: Specification) -> str:
    """Render a specification as stable, indented JSON."""
    return json.dumps({"formulas": [_entry_to_mapping(entry) for entry in spec]}, indent=2) + "\n"


def write_specification(spec: Specification, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_specification(spec), encoding="utf-8")


def _entry_to_mapping(entry: AttributedFormula) -> dict[str, Any]:
    data: dict[str, Any] = {
        "object": entry.object_id,
        "formula": str(entry.formula),
        "origin": entry.origin.value,
    }
    if entry.occurrences > 1:
        data["occurrences"] = entry.occurrences
    return data


def _entry_from_mapping(item: Any, position: int) -> AttributedFormula:
    where = f"formula #{position}"
    if not isinstance(item, Mapping):
        raise SpecificationFormatError(f"{where} must be an object")
    _reject_unknown(item, _ENTRY_KEYS, where)
    object_id = item.get("object")
    text = item.get("formula")
    if not isinstance(object_id, str) or not object_id:
        raise SpecificationFormatError(f"{where} requires a non-empty 'object'")
    if not isinstance(text, str):
        raise SpecificationFormatError(f"{where} requires a 'formula' string")
    try:
        formula = parse(text)
    except FormulaSyntaxError as exc:
        raise SpecificationFormatError(f"{where}: {exc}") from exc
    try:
        origin = Origin(item.get("origin", Origin.EXTERNAL.value))
    except ValueError as exc:
        raise SpecificationFormatError(f"{where}: unknown origin {item.get('origin')!r}") from exc
    occurrences = item.get("occurrences", 1)
    if not isinstance(occurrences, int) or isinstance(occurrences, bool):
        raise SpecificationFormatError(f"{where}: 'occurrences' must be an integer")
    try:
        return AttributedFormula(formula, object_id, origin, occurrences)
    except ValueError as exc:
        raise SpecificationFormatError(f"{where}: {exc}") from exc


def _reject_unknown(data: Mapping[str, Any], allowed: frozenset[str], where: str) -> None:
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise SpecificationFormatError(f"Unknown field(s) in {where}: {', '.join(unknown)}")
