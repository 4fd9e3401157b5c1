"""Finite-model engine for rule-driven (co)induction and basic topologies.

Rule sets over a finite carrier induce one-step derivability and
confutability operators; their least and greatest fixed points are the
inductive and coinductive predicates, and the V-extended variants generate
basic covers and positivity relations.  Everything is computed twice over:
fast Kleene iteration on one side, an exhaustive impredicative-style
oracle on the other, with proof objects and inter-encodings in between.
"""

from .encodings import (
    DualityReport,
    complement_dual,
    conf_as_der,
    container_of_ruleset,
    enlarge,
    restrict,
    ruleset_of_container,
    translate_cover_proof,
    untranslate_cover_proof,
)
from .errors import (
    BasicTopoError,
    BoundExceededError,
    CarrierMismatchError,
    DocumentError,
    NonMonotoneOperatorError,
    NotPositiveError,
    ProofError,
    UnderivableError,
    UnknownElementError,
    UnknownRuleError,
)
from .fixpoint import (
    FixpointTrace,
    coind_predicate,
    coind_with_trace,
    cover,
    cover_with_trace,
    gfp,
    ind_predicate,
    ind_with_trace,
    lfp,
    oracle_gfp,
    oracle_lfp,
    positivity,
    positivity_with_trace,
    verify_closed,
    verify_consistent,
)
from .fixtures import FIXTURES, R0, R1, R2, R3, R3_BAR
from .laws import (
    GeneratedAxiomsReport,
    LawCheck,
    LawReport,
    check_compatibility,
    check_cover_laws,
    check_generated_axioms,
    check_positivity_laws,
)
from .operators import (
    conf,
    conf_container,
    conf_v,
    der,
    der_container,
    der_v,
    is_closed,
    is_closed_v,
    is_consistent,
    is_consistent_v,
)
from .proofs import (
    CoinductionWitness,
    CoverProof,
    DerivationTree,
    DWTree,
    ReflexivityProof,
    WContainer,
    WTree,
    build_coind_witness,
    check_derivation,
    corf,
    cotr,
    derivation_failure,
    des,
    dw_recursor,
    dw_sup,
    eval_cover_recursor,
    eval_ind_recursor,
    extract_derivation,
    verify_coind_witness,
    witness_failure,
    wtree_recursor,
    wtree_sup,
)
from .ruleset import (
    Carrier,
    IndexedContainer,
    Predicate,
    Rule,
    RuleSet,
    premises,
    validate_container,
    validate_ruleset,
)

__version__ = "0.1.0"

__all__ = [
    "BasicTopoError",
    "BoundExceededError",
    "Carrier",
    "CarrierMismatchError",
    "CoinductionWitness",
    "CoverProof",
    "DWTree",
    "DerivationTree",
    "DocumentError",
    "DualityReport",
    "FIXTURES",
    "FixpointTrace",
    "GeneratedAxiomsReport",
    "IndexedContainer",
    "LawCheck",
    "LawReport",
    "NonMonotoneOperatorError",
    "NotPositiveError",
    "Predicate",
    "ProofError",
    "R0",
    "R1",
    "R2",
    "R3",
    "R3_BAR",
    "ReflexivityProof",
    "Rule",
    "RuleSet",
    "UnderivableError",
    "UnknownElementError",
    "UnknownRuleError",
    "WContainer",
    "WTree",
    "build_coind_witness",
    "check_compatibility",
    "check_cover_laws",
    "check_derivation",
    "check_generated_axioms",
    "check_positivity_laws",
    "coind_predicate",
    "coind_with_trace",
    "complement_dual",
    "conf",
    "conf_as_der",
    "conf_container",
    "conf_v",
    "container_of_ruleset",
    "corf",
    "cotr",
    "cover",
    "cover_with_trace",
    "der",
    "der_container",
    "der_v",
    "derivation_failure",
    "des",
    "dw_recursor",
    "dw_sup",
    "enlarge",
    "eval_cover_recursor",
    "eval_ind_recursor",
    "extract_derivation",
    "gfp",
    "ind_predicate",
    "ind_with_trace",
    "is_closed",
    "is_closed_v",
    "is_consistent",
    "is_consistent_v",
    "lfp",
    "oracle_gfp",
    "oracle_lfp",
    "positivity",
    "positivity_with_trace",
    "premises",
    "restrict",
    "ruleset_of_container",
    "translate_cover_proof",
    "untranslate_cover_proof",
    "validate_container",
    "validate_ruleset",
    "verify_closed",
    "verify_coind_witness",
    "verify_consistent",
    "witness_failure",
    "wtree_recursor",
    "wtree_sup",
]
