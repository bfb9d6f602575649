"""Specifications: mining, persistence, reactions and event replay."""

from .exceptions import (
    AttributionClashError,
    BehaviorValidationError,
    DuplicateFormulaError,
    EmptyBehaviorError,
    ReactionError,
    SpecificationError,
    SpecificationFormatError,
)
from .miner import DEFAULT_MINING_MODE, MiningMode, MiningStats, mine, mine_object, mine_with_stats
from .models import AttributedFormula, Origin, Specification, merge, split
from .pipeline import DEFAULT_WINDOW, Proposal, ReplayEngine, ReplayResult, TriggerPolicy
from .reactor import (
    Entailment,
    ReactionResult,
    Reactor,
    check_consistency,
    check_entailment,
    react,
)
from .store import dump_specification, load_specification, read_specification, write_specification

__all__ = [
    "DEFAULT_MINING_MODE",
    "DEFAULT_WINDOW",
    "AttributedFormula",
    "AttributionClashError",
    "BehaviorValidationError",
    "DuplicateFormulaError",
    "EmptyBehaviorError",
    "Entailment",
    "MiningMode",
    "MiningStats",
    "Origin",
    "Proposal",
    "ReactionError",
    "ReactionResult",
    "Reactor",
    "ReplayEngine",
    "ReplayResult",
    "Specification",
    "SpecificationError",
    "SpecificationFormatError",
    "TriggerPolicy",
    "check_consistency",
    "check_entailment",
    "dump_specification",
    "load_specification",
    "merge",
    "mine",
    "mine_object",
    "mine_with_stats",
    "react",
    "read_specification",
    "split",
    "write_specification",
]
