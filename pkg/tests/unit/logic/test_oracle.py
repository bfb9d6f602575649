"""Unit tests for logic.oracle module, including agreement with the tableau."""

from __future__ import annotations

import random

import pytest

from src.logic.exceptions import FragmentError, OracleLimitError
from src.logic.formula import Not, push_negation
from src.logic.fragment import fragment_check
from src.logic.oracle import default_prefix_length, evaluate, oracle_sat
from src.logic.parser import parse
from src.logic.tableau import is_satisfiable, is_unsatisfiable, is_valid
from tests.generators import random_fragment_formula


def states(*groups: str) -> list[frozenset[str]]:
    return [frozenset(group.split()) for group in groups]


class TestEvaluate:
    """Truth over stutter traces."""

    def test_atoms_at_positions(self):
        trace = states("p", "q")
        assert evaluate(parse("p"), trace)
        assert evaluate(parse("q"), trace, position=1)
        assert not evaluate(parse("q"), trace)

    def test_always_and_eventually_are_reflexive(self):
        trace = states("p", "p q")
        assert evaluate(parse("G p"), trace)
        assert evaluate(parse("F q"), trace)
        assert evaluate(parse("F q"), trace, position=1)
        assert not evaluate(parse("G q"), trace)

    def test_response(self):
        assert evaluate(parse("G (s03 -> F s08)"), states("s03", "s08", ""))
        assert not evaluate(parse("G (s03 -> F s08)"), states("s08", "s03"))

    def test_last_state_repeats(self):
        assert evaluate(parse("G (p -> F p)"), states("", "p"))
        assert evaluate(parse("F G p"), states("", "p"))
        assert not evaluate(parse("F G p"), states("p", ""))

    def test_rejects_bad_positions(self):
        with pytest.raises(ValueError):
            evaluate(parse("p"), [])
        with pytest.raises(ValueError):
            evaluate(parse("p"), states("p"), position=1)


class TestOracleSat:
    """Brute-force satisfiability."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("v10 & (v10 -> F p110)", True),
            ("G !p115 & F p115", False),
            ("F p & F !p", True),
            ("G (p -> F q) & p & G !q", False),
            ("G !e2 & G (s03 -> F s08) & G (s08 -> F s07)", True),
        ],
    )
    def test_known_answers(self, text, expected):
        assert oracle_sat(parse(text)) is expected

    def test_default_prefix_length(self):
        assert default_prefix_length(parse("p")) == 1
        assert default_prefix_length(parse("F p & F q")) == 3
        assert default_prefix_length(parse("G p -> q")) == 2

    def test_short_prefix_can_miss_models(self):
        assert not oracle_sat(parse("F p & F !p"), max_prefix=1)

    def test_state_cap(self):
        with pytest.raises(OracleLimitError):
            oracle_sat(parse("F a & F b & F c & F d"), state_cap=1000)

    def test_rejects_invalid_prefix(self):
        with pytest.raises(ValueError):
            oracle_sat(parse("p"), max_prefix=0)

    def test_rejects_formulas_outside_fragment(self):
        with pytest.raises(FragmentError):
            oracle_sat(parse("G F G p"))


@pytest.fixture(scope="module")
def random_corpus():
    rng = random.Random(1990)
    corpus = []
    for _ in range(1000):
        atoms = tuple(rng.sample(("p", "q", "r"), rng.randint(1, 3)))
        corpus.append(random_fragment_formula(rng, atoms=atoms, max_temporal=4))
    return corpus


@pytest.mark.slow
def test_tableau_agrees_with_oracle(random_corpus):
    disagreements = [
        str(formula)
        for formula in random_corpus
        if is_satisfiable(formula) is not oracle_sat(formula)
    ]
    assert disagreements == []


@pytest.mark.slow
def test_satisfiability_duality(random_corpus):
    checked = 0
    for formula in random_corpus:
        assert is_satisfiable(formula) is not is_unsatisfiable(formula)
        negated = push_negation(Not(formula))
        if fragment_check(negated) is not None:
            continue
        checked += 1
        assert is_valid(formula) is is_unsatisfiable(negated)
        assert is_valid(formula) is not oracle_sat(negated)
    assert checked > 0
