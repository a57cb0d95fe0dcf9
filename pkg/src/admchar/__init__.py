"""Admissible-configuration characters for the type-A affine algebra.

Enumeration of admissible exponent configurations, truncated q-series
characters, the character recurrence system with its exact-sequence
realization, and a memoized coefficient solver cross-checked against the
enumeration oracle.
"""

__version__ = "0.1.0"

from .configs import (
    Composition,
    Configuration,
    compositions,
    degree,
    enumerate_admissible,
    enumerate_all_configurations,
    enumerate_by_grade,
    is_admissible,
    satisfies_difference,
    satisfies_initial,
    weight,
    weight_vectors,
)
from .errors import (
    AdmissibilityError,
    InvalidIndexSetError,
    RankMismatchError,
    ResourceLimitError,
)
from .exactness import (
    build_differential,
    build_graded_basis,
    exactness_report_csv,
    simple_current_image,
    verify_complex,
    verify_exactness,
)
from .indexsets import (
    active_count,
    active_indices,
    all_index_sets,
    apply_index_set,
    cyclic_shift,
    in_region,
    in_region_via_composition,
    in_sharp_region,
    in_sharp_region_by_exclusion,
    index_family,
    index_family_jsonable,
    insertion_sign,
    run_lemma_suite,
)
from .qseries import (
    Character,
    QPolynomial,
    canonical_json,
    first_mismatch,
    geometric_factor,
    shift_substitute,
)
from .recurrence import (
    CoefficientSolver,
    OracleStore,
    block_cancellation_count,
    block_composition,
    block_satisfies_initial,
    compute_character,
    enumerate_first_blocks,
    recurrence_lhs,
    recurrence_rhs,
    solve_character,
    solve_coefficient,
    verify_equality_identity,
    verify_recurrence,
)
