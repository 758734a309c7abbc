"""Finite semigroups with apartness relations."""

from .errors import (
    CarrierMismatch,
    IndexOutOfRange,
    InvalidSetoid,
    InvariantViolation,
    NonAssociative,
    NotExtensional,
    NotHomomorphism,
    NotStronglyExtensional,
    PreconditionError,
    SgapError,
    ValidationError,
)
from .relations import (
    FiniteRelation,
    FiniteSetoid,
    FiniteSubset,
    RelationReport,
    apartness_complement,
    classify_apartness,
    classify_relation,
    compose,
    equivalence_closure,
    filled_product,
    format_relation,
    make_relation,
    parse_relation,
    pointwise_ops,
    product_apartness,
    product_setoid,
    subset_checks,
    transitive_closure,
)
from .kernels import (
    KernelResult,
    coequivalence_kernel,
    cotransitive_kernel,
    cotransitive_kernel_oracle,
    filled_power,
    fine_apartness,
    hamming2_relation,
)
from .semigroup import (
    Morphism,
    SemigroupWithApartness,
    adjoin_identity,
    build_semigroup,
    classify_compatibility,
    co_congruence_kernel,
    co_ideal_check,
    coarse_quotient,
    collapse,
    compatible_closure,
    congruence_closure,
    eta,
    idempotents_and_C,
    index_period,
    is_group,
    is_regular,
    morphism_checks,
    quotient,
    rees_factor,
    regularity,
)
from .free import Word, extend_morphism, word_apart, word_concat, word_eq
from .green import (
    GreenData,
    co_green_quasiorders,
    co_green_relations,
    co_subsemigroup_check,
    green_relations,
    h_class_group_test,
    idempotent_separating,
    periodic_dj_check,
    regular_class_inverse,
)
from .sgapfile import SgapDocument, emit_sgap, parse_sgap
from .families import generate_family

__version__ = "0.1.0"
