"""Universal partial words over finite alphabets."""

from .constructions import ConstructionRequest, construct
from .feasibility import DiamondTemplate, Verdict, VerdictKind, propagate_constraints
from .search import SearchResult, SearchSpec, brute_force_oracle, exhaustive_search
from .words import (
    DIAMOND,
    PartialWord,
    canonicalize,
    coverage,
    is_universal,
    parse_partial_word,
    truncated_complement,
    verify,
    window_expansion,
)

__version__ = "0.1.0"

__all__ = [
    "DIAMOND",
    "ConstructionRequest",
    "DiamondTemplate",
    "PartialWord",
    "SearchResult",
    "SearchSpec",
    "Verdict",
    "VerdictKind",
    "brute_force_oracle",
    "canonicalize",
    "construct",
    "coverage",
    "exhaustive_search",
    "is_universal",
    "parse_partial_word",
    "propagate_constraints",
    "truncated_complement",
    "verify",
    "window_expansion",
]
