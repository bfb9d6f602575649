"""Unit tests for specification.models module."""

from __future__ import annotations

import pytest

from src.logic.formula import And
from src.logic.parser import parse
from src.specification.exceptions import AttributionClashError, DuplicateFormulaError
from src.specification.models import AttributedFormula, Origin, Specification, merge, split


def entry(text: str, object_id: str = "o5", origin: Origin = Origin.EXTERNAL) -> AttributedFormula:
    return AttributedFormula(parse(text), object_id, origin)


class TestAttributedFormula:
    """Tests for origin checking."""

    def test_origin_must_match_pattern(self):
        assert entry("G !e2", origin=Origin.SAF).origin is Origin.SAF
        with pytest.raises(ValueError, match="absence"):
            entry("F e2", origin=Origin.SAF)
        with pytest.raises(ValueError, match="response"):
            entry("G !e2", origin=Origin.LIV2)

    def test_external_accepts_anything(self):
        assert entry("(v11 -> F p115) | (v11 -> F p116)").origin is Origin.EXTERNAL

    def test_occurrences_positive(self):
        with pytest.raises(ValueError):
            AttributedFormula(parse("p"), "o", occurrences=0)

    def test_str(self):
        assert str(entry("G !e2")) == "o5: G !e2"


class TestSpecification:
    """Tests for the specification container."""

    def test_rejects_duplicates(self):
        with pytest.raises(DuplicateFormulaError):
            Specification.of([entry("G !e2"), entry("G !e2")])

    def test_same_formula_for_two_objects(self):
        spec = Specification.of([entry("G !e2", "o1"), entry("G !e2", "o2")])
        assert len(spec) == 2
        assert spec.objects() == ("o1", "o2")

    def test_collapsing_counts_occurrences(self):
        spec = Specification.collapsing([entry("v11"), entry("p"), entry("v11")])
        assert [str(item.formula) for item in spec] == ["v11", "p"]
        assert spec.entries[0].occurrences == 2

    def test_for_object_and_conjunction(self):
        spec = Specification.of([entry("a", "o1"), entry("b", "o2"), entry("c", "o1")])
        assert spec.for_object("o1").formulas() == (parse("a"), parse("c"))
        assert spec.conjunction("o1") == And(parse("a"), parse("c"))
        assert spec.conjunction("o9") is None
        assert Specification().conjunction() is None

    def test_find(self):
        spec = Specification.of([entry("v11")])
        assert spec.find(parse("v11"), "o5") == entry("v11")
        assert spec.find(parse("v11"), "o6") is None

    def test_add_remove_replace(self):
        spec = Specification.of([entry("a"), entry("b")])
        assert entry("c") in spec.add(entry("c"))
        assert spec.remove(entry("a")).formulas() == (parse("b"),)
        assert spec.replace(entry("a"), entry("c")).formulas() == (parse("c"), parse("b"))
        assert spec.replace(entry("a"), entry("b")).formulas() == (parse("b"),)
        with pytest.raises(DuplicateFormulaError):
            spec.add(entry("a"))

    def test_with_object(self):
        spec = Specification.of([entry("a", "x"), entry("a", "y")]).with_object("o")
        assert len(spec) == 1
        assert spec.entries[0].object_id == "o"
        assert spec.entries[0].occurrences == 2


class TestMergeAndSplit:
    """Tests for merging per-object specifications."""

    def test_merge_attributes_each_object(self):
        specs = {
            "o1": Specification.of([entry("G !e2", "o1")]),
            "o2": Specification.of([entry("G !e2", "o2"), entry("F s07", "o2")]),
        }
        sigma = merge(specs)
        assert len(sigma) == 3
        assert split(sigma) == specs

    def test_merge_reattributes(self):
        sigma = merge([("o7", Specification.of([entry("p", "elsewhere")]))])
        assert sigma.entries[0].object_id == "o7"

    def test_merge_rejects_clashes(self):
        with pytest.raises(AttributionClashError):
            merge([("o1", Specification()), ("o1", Specification())])
