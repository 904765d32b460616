"""Exact-arithmetic toolkit for Leonard pairs and split decompositions.

Everything runs over the rationals or GF(p) with structural equality;
no floating point is involved anywhere.  See the README for the module
map and the `leonard-kit` command line interface.
"""

from .errors import (
    BadOrdering,
    DescriptorMismatch,
    DimMismatch,
    DocumentError,
    IndexOutOfRange,
    InvariantViolation,
    LeonardKitError,
    ModulusTooLarge,
    NotIrreducibleTridiagonal,
    NotLeonard,
    NotMultiplicityFree,
    PatternViolation,
    SamplingExhausted,
    Singular,
    SplitDoesNotExist,
)
from .fields import GF, QQ, Field, FieldElement, PrimeField, Rationals
from .matrices import (
    Polynomial,
    SquareMatrix,
    Vector,
    char_poly,
    colinear,
    eval_poly_at_matrix,
    inverse,
    is_invertible,
    kernel_basis,
    mat_mul,
    rank_of_vectors,
    represented_in,
    roots_in_field,
    span_equal,
    span_intersection,
)
from .spectral import (
    SpectralData,
    canonical_order,
    eigenspace,
    is_multiplicity_free,
    spectral_data,
)
from .splitdecomp import (
    Decomposition,
    PatternClass,
    SplitCertificate,
    ZeroPattern,
    build_split,
    classify_pattern,
    exists_split,
    graded_polynomials,
    iso_to_module_check,
    split_uniqueness_witness,
    subspace_identities,
    zero_pattern,
)
from .leonard import (
    Antiautomorphism,
    ConditionFlags,
    FailureWitness,
    LeonardParameterReport,
    LeonardVerdict,
    ParameterArray,
    antiauto_solution_space,
    antiautomorphism_in_eigenbasis,
    char1_check,
    char2_check,
    check_parameter_array,
    construct_pair,
    find_leonard_orderings,
    g_conjugation,
    leonard_verdict,
    parameter_array_of_pair,
    three_gives_four,
)
from .sampling import sample_parameter_array, sample_parameter_arrays

__version__ = "0.1.0"
