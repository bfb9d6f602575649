"""Temporal formulas, the fragment check and the tableau decision procedures."""

from .exceptions import (
    AtomNameError,
    FormulaSyntaxError,
    FragmentError,
    LogicError,
    OracleLimitError,
    PatternError,
    TableauBudgetExceeded,
)
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
    conjoin,
    push_negation,
    render,
)
from .fragment import FragmentViolation, fragment_check, require_fragment
from .oracle import evaluate, oracle_sat
from .parser import parse
from .patterns import Pattern, PatternKind, classify, make_pattern
from .tableau import (
    NOW,
    Branch,
    BranchStatus,
    LabeledFormula,
    Literal,
    Tableau,
    TruthTree,
    WorldLabel,
    build_tree,
    is_satisfiable,
    is_unsatisfiable,
    is_valid,
    open_literal_sets,
)

__all__ = [
    "Always",
    "And",
    "Atom",
    "AtomNameError",
    "Branch",
    "BranchStatus",
    "Eventually",
    "Formula",
    "FormulaSyntaxError",
    "FragmentError",
    "FragmentViolation",
    "Implies",
    "LabeledFormula",
    "Literal",
    "LogicError",
    "NOW",
    "Not",
    "OracleLimitError",
    "Or",
    "Pattern",
    "PatternError",
    "PatternKind",
    "Tableau",
    "TableauBudgetExceeded",
    "TruthTree",
    "WorldLabel",
    "atoms",
    "build_tree",
    "classify",
    "conjoin",
    "evaluate",
    "fragment_check",
    "is_satisfiable",
    "is_unsatisfiable",
    "is_valid",
    "make_pattern",
    "open_literal_sets",
    "oracle_sat",
    "parse",
    "push_negation",
    "render",
    "require_fragment",
]
