"""Relations on fuzzy parametrized soft sets and a decision method built on them."""
from .decision import DecisionConfig, FuzzyRanking, decide, fuzzify
from .errors import (
    EmptySupportError,
    FPSoftError,
    MismatchError,
    NotEquivalenceError,
    ValidationError,
)
from .norms import NormKind, dual_of, s_norm, t_norm
from .relations import (
    DROP_EMPTY,
    KEEP_EMPTY,
    FPSoftRelation,
    PairPolicy,
    at_least,
    cartesian_product,
    compose,
    domain,
    equivalence_class,
    equivalence_classes,
    inverse,
    is_equivalence,
    is_reflexive,
    is_serial,
    is_symmetric,
    is_transitive,
    make_relation,
    power,
    restrict,
)
from .sets import (
    FPSoftElement,
    FPSoftSet,
    FuzzySet,
    ParameterSpace,
    Universe,
    elements,
    fp_subset,
    make_fp_soft_set,
)

__version__ = "0.1.0"
