"""Exact rank computations for finite semigroups given by Cayley tables.

The workbench constructs standard families (Brandt semigroups, groups,
monogenic semigroups, transformation monoids, the order-preserving
singular maps), searches for smallest proper prime subsets by exact
branch and bound over factorizations, and computes the five subset ranks
r1..r5 together with closed-form cross-checks.
"""

from .core import (
    ElementId,
    FiniteSemigroup,
    GuardError,
    NotAssociativeError,
    SubsetMask,
    closure,
    complement_mask,
    elements_of,
    idempotents,
    indecomposable_elements,
    is_generating,
    is_independent,
    is_prime_subset,
    is_subsemigroup,
    make_semigroup,
    mask_key,
    mask_of,
    multiply,
    validate_associativity,
)
from .families import (
    BrandtCodec,
    FiniteGroup,
    Transformation,
    TransformationCodec,
    brandt,
    compose,
    cyclic_group,
    full_transformation,
    group_from_table,
    image_and_kernel,
    left_zero,
    monogenic,
    order_preserving_singular,
    right_zero,
    standard_corpus,
    symmetric_group,
    witness_prime_brandt,
    witness_prime_on,
    zeta,
)
from .prime_search import (
    FactorizationIndex,
    NoProperPrimeSubsetError,
    SearchResult,
    build_factorization_index,
    enumerate_prime_subsets_upto,
    largest_proper_subsemigroup,
    smallest_proper_prime_subset,
)
from .ranks import (
    LargeRankResult,
    RankReport,
    closed_form,
    compute_rank_report,
    intermediate_rank,
    large_rank,
    large_rank_direct,
    large_rank_via_indecomposable,
    lower_rank,
    rank_chain_check,
    small_rank,
    upper_rank,
)

__version__ = "0.1.0"
