"""Exact-arithmetic toolkit for toric Groebner degenerations of hypersurfaces.

Everything is computed over the rationals: sparse homogeneous polynomials
and their initial forms under weight vectors, prime-binomial classification,
weight-cone feasibility with strict inequalities, and the rank certificates
that decide when a general degree-d hypersurface in projective n-space
degenerates to a toric variety after a linear change of coordinates
(exactly when d <= 2n - 1).
"""

from .binomials import (
    BinomialPattern,
    PrimeVerdict,
    classify,
    classify_poly,
    enumerate_patterns,
    pattern_from_poly,
)
from .cones import (
    FeasibilityResult,
    LinearSystem,
    compatible_cone,
    difference_functional,
    implies,
    satisfies,
    solve,
    stratum_system,
    verify_certificate,
)
from .errors import (
    CertificateError,
    DegreeError,
    DimensionMismatchError,
    DomainError,
    GenericityError,
    NormalizationError,
    PolySyntaxError,
    SingularMatrixError,
    SupportMismatchError,
    VariableIndexError,
    ZeroPolynomialError,
)
from .family import (
    ExclusionSet,
    FamilyPoint,
    Generator,
    RedundancyReport,
    differential_generators,
    differential_rank,
    excluded_exponents,
    key_matrix,
    redundancy_check,
    sample_family,
    structural_rank_bound,
)
from .linalg import (
    MonomialBasis,
    QMatrix,
    RankReport,
    basis,
    from_vector,
    rank,
    span_contains,
    to_vector,
)
from .poly import (
    Exponent,
    HomogPoly,
    WeightVector,
    apply_linear_change,
    format_poly,
    initial_form,
    iter_exponents,
    multiply,
    parse_poly,
    partial_derivative,
    weight_of,
    weight_vector,
)
from .theorem import (
    NonexistenceReport,
    StrataSurvey,
    SweepRow,
    WitnessBundle,
    dominance_certificate,
    existence_witness,
    nonexistence_certificate,
    strata_reduction_check,
    strata_survey,
    sweep_row_matches,
    threshold_sweep,
    witness_weight,
)

__version__ = "0.1.0"
