"""Brute-force satisfiability over stutter traces.

A trace is a finite list of states whose last state repeats forever. Temporal operators
are reflexive: ``G φ`` holds at i when φ holds at every j >= i, ``F φ`` when φ holds at
some j >= i. Used to cross-check the tableau, never by the reasoning pipeline itself.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Sequence

from .exceptions import OracleLimitError
from .formula import (
    Always,
    And,
    Atom,
    Eventually,
    Formula,
    Implies,
    Not,
    Or,
    atoms,
    count_eventualities,
)
from .fragment import require_fragment

logger = logging.getLogger(__name__)

DEFAULT_STATE_CAP = 1 << 21

Trace = Sequence[frozenset[str]]


def evaluate(f: Formula, trace: Trace, position: int = 0) -> bool:
    """Truth of f at ``position`` of a stutter trace.

    Raises:
        ValueError: If the trace is empty or the position lies outside it
    """
    if not trace:
        raise ValueError("Trace must contain at least one state")
    if not 0 <= position < len(trace):
        raise ValueError(f"Position {position} outside trace of length {len(trace)}")
    index = _bit_index(f)
    masks = tuple(
        sum(1 << bit for name, bit in index.items() if name in state) for state in trace
    )
    return _compile(f, index)(masks)[position]


def default_prefix_length(f: Formula) -> int:
    """Longest prefix the oracle enumerates by default: one position per eventuality, plus one.

    A negated ``G`` counts as the eventuality it turns into.
    """
    return count_eventualities(f) + 1


def oracle_sat(
    f: Formula,
    max_prefix: int | None = None,
    state_cap: int = DEFAULT_STATE_CAP,
) -> bool:
    """Search every stutter trace of length 1..max_prefix for a model of f.

    Args:
        f: Fragment formula
        max_prefix: Longest trace to try (defaults to ``default_prefix_length(f)``)
        state_cap: Upper bound on the number of traces of the longest length

    Returns:
        True iff some enumerated trace satisfies f at position 0

    Raises:
        FragmentError: If f is outside the fragment
        OracleLimitError: If the enumeration would exceed ``state_cap``
    """
    require_fragment(f)
    limit = default_prefix_length(f) if max_prefix is None else max_prefix
    if limit < 1:
        raise ValueError("max_prefix must be at least 1")
    index = _bit_index(f)
    states = range(1 << len(index))
    if len(states) ** limit > state_cap:
        raise OracleLimitError(
            f"{len(states)} states over {limit} positions exceed the cap of {state_cap} traces"
        )
    check = _compile(f, index)
    for length in range(1, limit + 1):
        for trace in itertools.product(states, repeat=length):
            if check(trace)[0]:
                logger.debug("Oracle found a model of length %d for %s", length, f)
                return True
    return False


_Evaluator = Callable[[Sequence[int]], list[bool]]


def _bit_index(f: Formula) -> dict[str, int]:
    return {name: bit for bit, name in enumerate(sorted(atoms(f)))}


def _compile(f: Formula, index: dict[str, int]) -> _Evaluator:
    """Turn f into a function from a trace of bitmask states to its truth at every position."""
    if isinstance(f, Atom):
        mask = 1 << index[f.name]
        return lambda trace: [bool(state & mask) for state in trace]
    if isinstance(f, Not):
        inner = _compile(f.operand, index)
        return lambda trace: [not value for value in inner(trace)]
    if isinstance(f, And | Or | Implies):
        left = _compile(f.left, index)
        right = _compile(f.right, index)
        if isinstance(f, And):
            return lambda trace: [a and b for a, b in zip(left(trace), right(trace), strict=True)]
        if isinstance(f, Or):
            return lambda trace: [a or b for a, b in zip(left(trace), right(trace), strict=True)]
        return lambda trace: [(not a) or b for a, b in zip(left(trace), right(trace), strict=True)]
    if isinstance(f, Always):
        body = _compile(f.operand, index)
        return lambda trace: _suffix_scan(body(trace), all_positions=True)
    if isinstance(f, Eventually):
        body = _compile(f.operand, index)
        return lambda trace: _suffix_scan(body(trace), all_positions=False)
    raise TypeError(f"Unsupported formula node: {f!r}")


def _suffix_scan(values: list[bool], *, all_positions: bool) -> list[bool]:
    result = [False] * len(values)
    accumulated = all_positions
    for position in range(len(values) - 1, -1, -1):
        if all_positions:
            accumulated = accumulated and values[position]
        else:
            accumulated = accumulated or values[position]
        result[position] = accumulated
    return result
