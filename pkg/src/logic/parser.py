"""Parser for the textual formula syntax.

Grammar, tightest binding first: ``!``, ``G`` and ``F`` prefixes, then ``&``, ``|`` and
right-associative ``->``. ``G`` and ``F`` are reserved words.
"""

from __future__ import annotations

from collections.abc import Callable

from pyparsing import (
    Keyword,
    Literal,
    MatchFirst,
    OpAssoc,
    ParseBaseException,
    ParserElement,
    ParseResults,
    Regex,
    infix_notation,
)

from .exceptions import FormulaSyntaxError
from .formula import RESERVED_WORDS, Always, And, Atom, Eventually, Formula, Implies, Not, Or

ParserElement.enable_packrat()

_IDENT_CHARS = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_"

_UNARY: dict[str, Callable[[Formula], Formula]] = {
    "!": Not,
    "G": Always,
    "F": Eventually,
}


def _atom_action(tokens: ParseResults) -> Formula:
    return Atom(tokens[0])


def _unary_action(tokens: ParseResults) -> Formula:
    items = list(tokens[0])
    result: Formula = items[-1]
    for operator in reversed(items[:-1]):
        result = _UNARY[operator](result)
    return result


def _left_fold(constructor: Callable[[Formula, Formula], Formula]) -> Callable[[ParseResults], Formula]:
    def action(tokens: ParseResults) -> Formula:
        operands = list(tokens[0])[0::2]
        result: Formula = operands[0]
        for operand in operands[1:]:
            result = constructor(result, operand)
        return result

    return action


def _implies_action(tokens: ParseResults) -> Formula:
    operands = list(tokens[0])[0::2]
    result: Formula = operands[-1]
    for operand in reversed(operands[:-1]):
        result = Implies(operand, result)
    return result


def _build_grammar() -> ParserElement:
    reserved = MatchFirst(
        [Keyword(word, ident_chars=_IDENT_CHARS) for word in sorted(RESERVED_WORDS)]
    )
    identifier = ~reserved + Regex(r"[A-Za-z_][A-Za-z0-9_]*")
    identifier.set_parse_action(_atom_action)
    identifier.set_name("atom")

    prefix = Literal("!") | reserved
    return infix_notation(
        identifier,
        [
            (prefix, 1, OpAssoc.RIGHT, _unary_action),
            (Literal("&"), 2, OpAssoc.LEFT, _left_fold(And)),
            (Literal("|"), 2, OpAssoc.LEFT, _left_fold(Or)),
            (Literal("->"), 2, OpAssoc.RIGHT, _implies_action),
        ],
    )


_GRAMMAR = _build_grammar()


def parse(text: str) -> Formula:
    """Parse formula text into its syntax tree.

    Args:
        text: Formula in the concrete syntax, e.g. ``"G (s03 -> F s08)"``

    Returns:
        The formula tree

    Raises:
        FormulaSyntaxError: If the text is empty or does not follow the grammar
    """
    if not text.strip():
        raise FormulaSyntaxError("Formula text is empty", 1, 1)
    try:
        result = _GRAMMAR.parse_string(text, parse_all=True)
    except ParseBaseException as exc:
        raise FormulaSyntaxError(_describe(exc), exc.lineno, exc.col) from exc
    formula = result[0]
    if not isinstance(formula, Formula):  # pragma: no cover - grammar always builds nodes
        raise FormulaSyntaxError("Unexpected parse result", 1, 1)
    return formula


def _describe(exc: ParseBaseException) -> str:
    found = exc.line[exc.col - 1 : exc.col] if exc.col <= len(exc.line) else ""
    if found:
        return f"Unexpected token {found!r}: {exc.msg}"
    return f"Unexpected end of formula: {exc.msg}"
