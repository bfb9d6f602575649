"""Membership test for the supported formula fragment.

The fragment is the boolean closure of temporal-free formulas, ``G φ``, ``F φ`` and the
response shape ``G (φ -> F ψ)``, with φ and ψ temporal-free. Negation may only wrap
temporal-free formulas. Implication antecedents are negative positions: ``G φ`` and
``F φ`` may appear there (their negations stay in the fragment), responses may not.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import FragmentError
from .formula import (
    Always,
    And,
    Eventually,
    Formula,
    Implies,
    Not,
    Or,
    is_temporal_free,
    subformulas,
)
from .patterns import is_response


@dataclass(frozen=True, slots=True)
class FragmentViolation:
    """Offending subformula and the rule it breaks."""

    subformula: Formula
    reason: str

    def __str__(self) -> str:
        return f"{self.reason}: {self.subformula}"


def fragment_check(f: Formula) -> FragmentViolation | None:
    """Return None when f lies in the fragment, otherwise the first violation found."""
    return _check(f, positive=True)


def require_fragment(f: Formula) -> Formula:
    """Return f unchanged or raise FragmentError."""
    violation = fragment_check(f)
    if violation is not None:
        raise FragmentError(violation)
    return f


def _check(f: Formula, *, positive: bool) -> FragmentViolation | None:
    if is_temporal_free(f):
        return None
    if isinstance(f, Not):
        return FragmentViolation(f, "negation of a temporal formula")
    if isinstance(f, And | Or):
        return _check(f.left, positive=positive) or _check(f.right, positive=positive)
    if isinstance(f, Implies):
        return _check(f.left, positive=not positive) or _check(f.right, positive=positive)
    if isinstance(f, Always | Eventually):
        if is_temporal_free(f.operand):
            return None
        if isinstance(f, Always) and is_response(f):
            if positive:
                return None
            return FragmentViolation(f, "response pattern in a negative position")
        return FragmentViolation(_innermost_temporal(f.operand), "nested temporal operator")
    raise TypeError(f"Unsupported formula node: {f!r}")  # pragma: no cover


def _innermost_temporal(f: Formula) -> Formula:
    for node in subformulas(f):
        if isinstance(node, Always | Eventually) and is_temporal_free(node.operand):
            return node
    return f  # pragma: no cover - a non-temporal-free formula holds a temporal leaf
