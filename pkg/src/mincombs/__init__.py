"""Exact minimal combinations of weights of projective hypersurfaces."""

__version__ = "0.1.0"

from .exact import (  # noqa: F401
    RadicalScalar,
    RationalMatrix,
    SingularMatrixError,
    rank,
    rat_solve,
    sqrt_rational,
)
from .mincomb import (  # noqa: F401
    Certificate,
    MinimalCombination,
    NotInHullError,
    OracleFailedError,
    PointSet,
    affinely_independent,
    barycentric,
    min_square,
    minimal_combinations,
    nearest_point_oracle,
    tau_candidate,
    tau_full,
)
from .moment import (  # noqa: F401
    CriticalCandidate,
    MomentMatrix,
    RadicalPolynomial,
    build_f_beta,
    calpha_reconstruct,
    critical_value,
    embed_check,
    is_diagonal,
    moment_matrix,
    partial_derivative,
    poly_inner,
    zbeta_support,
)
from .report import AnalysisReport, BetaRecord, TooLargeError, analyze, render  # noqa: F401
from .weights import (  # noqa: F401
    WeightTable,
    in_weyl_chamber,
    monomial_norm_sq,
    monomial_string,
    multi_indices,
    weight_of,
)
