"""Subsequence matching and analysis in fixed-length windows of words.

A pattern occurs in a word *within range p* when it is a subsequence of some
length-``p`` factor.  The package decides and analyses that relation — for
straight-line and circular hosts, one-shot and streaming, single patterns and
batches — and materializes the hardness reductions connecting it to
orthogonal vectors, satisfiability and partial-word compatibility.
"""

from .absent import (
    PmasReport,
    PmasState,
    is_p_absent,
    is_pmas,
    is_psas,
    pmas_report,
)
from .analysis import (
    DEFAULT_CANDIDATE_BUDGET,
    DEFAULT_SET_BUDGET,
    SubseqSet,
    enumerate_subseq_pk,
    kp_non_equivalent,
    kp_non_universal,
    universality_index,
)
from .circular import (
    CircularIndex,
    MinimalRepresentation,
    best_iterated_circular_match,
    build_circular_index,
    circular_match,
    iterated_circular_match,
    minimal_representation,
)
from .errors import BudgetExceededError, MissingSymbolError
from .matching import (
    MatcherState,
    match_many,
    matcher_init,
    matcher_step,
    p_subsequence_match,
)
from .reductions import (
    KIND_KPNONUNIV_TO_KPNONEQUIV,
    KIND_MATCH_TO_PMAS,
    KIND_MATCH_TO_PMAS_STREAM,
    KIND_OV_TO_MATCH,
    KIND_PW_TO_KPNONUNIV,
    KIND_PW_TO_PSAS,
    KIND_SAT3_TO_PW,
    OvInstance,
    ReductionInstance,
    kp_non_univ_to_kp_non_equiv,
    match_to_pmas,
    match_to_pmas_stream,
    ov_to_match,
    partial_words_to_kp_non_univ,
    psas_instance_from_partial_words,
    sat3_to_partial_words,
)
from .words import (
    MatchReport,
    PartialWord,
    SymbolTable,
    WindowQuery,
    Word,
    classic_subsequence,
    window_at,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CircularIndex",
    "DEFAULT_CANDIDATE_BUDGET",
    "DEFAULT_SET_BUDGET",
    "KIND_KPNONUNIV_TO_KPNONEQUIV",
    "KIND_MATCH_TO_PMAS",
    "KIND_MATCH_TO_PMAS_STREAM",
    "KIND_OV_TO_MATCH",
    "KIND_PW_TO_KPNONUNIV",
    "KIND_PW_TO_PSAS",
    "KIND_SAT3_TO_PW",
    "MatchReport",
    "MatcherState",
    "MinimalRepresentation",
    "MissingSymbolError",
    "OvInstance",
    "PartialWord",
    "PmasReport",
    "PmasState",
    "ReductionInstance",
    "SubseqSet",
    "SymbolTable",
    "WindowQuery",
    "Word",
    "best_iterated_circular_match",
    "build_circular_index",
    "circular_match",
    "classic_subsequence",
    "enumerate_subseq_pk",
    "is_p_absent",
    "is_pmas",
    "is_psas",
    "iterated_circular_match",
    "kp_non_equivalent",
    "kp_non_univ_to_kp_non_equiv",
    "kp_non_universal",
    "match_many",
    "match_to_pmas",
    "match_to_pmas_stream",
    "matcher_init",
    "matcher_step",
    "minimal_representation",
    "ov_to_match",
    "p_subsequence_match",
    "partial_words_to_kp_non_univ",
    "pmas_report",
    "psas_instance_from_partial_words",
    "sat3_to_partial_words",
    "universality_index",
    "window_at",
    "__version__",
]
