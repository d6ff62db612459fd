"""Hermitian self-orthogonal MDS codes, hull dialing, and EAQEC parameters.

The package builds Hermitian self-orthogonal (generalized) Reed-Solomon
codes over GF(q^2), rescales coordinates to set the Hermitian hull
dimension of an equivalent code to any target in [0, k], and derives and
verifies the entanglement-assisted quantum code parameters that follow.
"""

from .errors import (
    BadDimensionError,
    BadFamilyParamsError,
    BadFieldError,
    BadGaloisIndexError,
    BadPermutationError,
    BadTargetError,
    CapExceededError,
    DimensionTooLargeError,
    DuplicateEvalPointsError,
    HulldialError,
    HullMismatchError,
    LengthTooShortError,
    NoSuchElementError,
    NotADivisorError,
    NotPrimeError,
    NotSelfOrthogonalError,
    OddExtensionError,
    RankDeficientError,
    ShapeMismatchError,
    SmallFieldError,
    SpecMismatchError,
    TooLargeToEnumerateError,
    VerificationFailedError,
    ZeroMultiplierError,
)
from .field import Field, make_field, make_quadratic_field
from .matrix import (
    FieldMatrix,
    conj_transpose,
    intersect_row_spaces,
    matmul,
    null_space,
    rank,
    rref,
    same_row_space,
    standard_form,
)
from .code import (
    HullReport,
    LinearCode,
    dual_min_distance,
    euclidean_dual,
    galois_dual,
    hermitian_dual,
    hull,
    is_galois_self_orthogonal,
    is_hermitian_self_orthogonal,
    is_mds,
    min_distance,
    permute,
    scale,
    shorten,
)
from .dial import (
    DialResult,
    arrange_p1_nonsingular,
    dial_galois_hull,
    dial_hull,
    dual_block_generator,
    reduce_hull,
    seeded_lambda_source,
    verify_standard_form_gram,
)
from .grs import (
    GrsSpec,
    MultiplierProblem,
    MultiplierSearch,
    construct_family,
    full_field_rs,
    grs_generator,
    norm_substituted_polys,
    solve_multipliers,
    subgroup_eval_set,
    subgroup_union_eval_set,
    trace_nonzero_eval_set,
)
from .eaqec import (
    EaqecParams,
    QeccParams,
    Table1Limits,
    Verdict,
    claim,
    eaqec_from_code,
    eaqec_from_dial,
    eaqec_sweep,
    enumerate_table1,
    qecc_from_self_orthogonal,
    verify_claim,
)

__version__ = "0.1.0"
