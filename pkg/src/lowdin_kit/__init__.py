"""Orthogonalization of non-orthogonal quantum bases, Lowdin weights,
and delocalization measures."""

from .errors import (
    ConvergenceFailure,
    DegenerateStep,
    DegenerateTrace,
    DimensionMismatch,
    GenerationFailure,
    InvalidParameters,
    LinearlyDependent,
    LowdinKitError,
    NotHermitian,
    NotNormalized,
    NotPositiveDefinite,
    UnsupportedDimension,
    ZeroState,
)
from .gram import GramMatrix, OverlapSpec, gram_from_overlaps, gram_from_vectors, random_gram
from .linalg import (
    HermitianEigenDecomposition,
    condition_number,
    frobenius_norm,
    hermitian_eig,
    matrix_function,
)
from .measures import (
    MeasureReport,
    inverse_participation_ratio,
    measure_report,
    participation_ratio,
    shannon_entropy,
)
from .ortho import (
    BasisSet,
    OrthoMethod,
    OrthoResult,
    distortion,
    gram_schmidt,
    induce_nonorthogonal,
    lowdin_canonical,
    lowdin_symmetric,
    maximally_coherent_image,
)
from .states import (
    DensityOperator,
    LowdinTransformedState,
    PureState,
    WeightDistribution,
    chirgwin_coulson_weights,
    closed_form_2d_weights,
    golden_state_3d,
    lowdin_coeffs,
    lowdin_density,
    normalize_pure,
    offdiagonal_decomposition,
    weights_density,
    weights_pure,
)

__version__ = "0.1.0"

__all__ = [
    "BasisSet",
    "ConvergenceFailure",
    "DegenerateStep",
    "DegenerateTrace",
    "DensityOperator",
    "DimensionMismatch",
    "GenerationFailure",
    "GramMatrix",
    "HermitianEigenDecomposition",
    "InvalidParameters",
    "LinearlyDependent",
    "LowdinKitError",
    "LowdinTransformedState",
    "MeasureReport",
    "NotHermitian",
    "NotNormalized",
    "NotPositiveDefinite",
    "OrthoMethod",
    "OrthoResult",
    "OverlapSpec",
    "PureState",
    "UnsupportedDimension",
    "WeightDistribution",
    "ZeroState",
    "chirgwin_coulson_weights",
    "closed_form_2d_weights",
    "condition_number",
    "distortion",
    "frobenius_norm",
    "golden_state_3d",
    "gram_from_overlaps",
    "gram_from_vectors",
    "gram_schmidt",
    "hermitian_eig",
    "induce_nonorthogonal",
    "inverse_participation_ratio",
    "lowdin_canonical",
    "lowdin_coeffs",
    "lowdin_density",
    "lowdin_symmetric",
    "matrix_function",
    "maximally_coherent_image",
    "measure_report",
    "normalize_pure",
    "offdiagonal_decomposition",
    "participation_ratio",
    "random_gram",
    "shannon_entropy",
    "weights_density",
    "weights_pure",
]
