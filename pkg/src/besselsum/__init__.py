"""besselsum: sums of modified Bessel functions with power-law arguments.

Evaluates S(nu, p, a) = sum_{n>=1} (a n^p/2)^(-nu) K_nu(a n^p) by direct
summation and by its small-a expansion (residue part plus zeta-coefficient
series plus exponentially small remainders), and measures the predicted
remainder ladder numerically.
"""
from ._backend import BACKEND, get_kernels
from .errors import (
    BesselSumError,
    BranchWarning,
    DomainError,
    InsufficientDataError,
    OracleError,
    OutOfRegimeError,
    PoleError,
    ScaledResultError,
    ToleranceError,
    UnsupportedDepthError,
)
from .expansion import (
    AlgebraicSeries,
    HBranch,
    HBranchKind,
    Scales,
    TruncationPlan,
    algebraic_series,
    algebraic_term,
    default_plan,
    derived_scales,
    h_part,
    ifc_coefficient,
    optimal_truncation,
    sin_ratio_prefactor,
    x_scale,
)
from .harness import (
    EvalBreakdown,
    ScanRow,
    compare_run,
    render_json,
    render_rows_csv,
    row_from_breakdown,
    scan_grid,
    slope_fit,
)
from .remainder import (
    RemainderPrediction,
    exponent_ladder,
    remainder_leading,
    remainder_theorem2,
)
from .scaled import ScaledReal
from .sums import OracleResult, SumParams, bessel_term, direct_sum, euler_jacobi_closed_form
from .terminant import (
    SmoothingPoint,
    TerminantMethod,
    TerminantQuery,
    c_theta,
    fourier_roots,
    h_factor,
    smoothing_point,
    terminant_gen,
    terminant_oracle,
    terminant_std,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AlgebraicSeries",
    "BesselSumError",
    "BranchWarning",
    "DomainError",
    "EvalBreakdown",
    "HBranch",
    "HBranchKind",
    "InsufficientDataError",
    "OracleError",
    "OracleResult",
    "OutOfRegimeError",
    "PoleError",
    "RemainderPrediction",
    "ScaledReal",
    "ScaledResultError",
    "Scales",
    "ScanRow",
    "SmoothingPoint",
    "SumParams",
    "TerminantMethod",
    "TerminantQuery",
    "ToleranceError",
    "TruncationPlan",
    "UnsupportedDepthError",
    "algebraic_series",
    "algebraic_term",
    "bessel_term",
    "c_theta",
    "compare_run",
    "default_plan",
    "derived_scales",
    "direct_sum",
    "euler_jacobi_closed_form",
    "exponent_ladder",
    "fourier_roots",
    "get_kernels",
    "h_factor",
    "h_part",
    "ifc_coefficient",
    "optimal_truncation",
    "remainder_leading",
    "remainder_theorem2",
    "render_json",
    "render_rows_csv",
    "row_from_breakdown",
    "scan_grid",
    "sin_ratio_prefactor",
    "slope_fit",
    "smoothing_point",
    "terminant_gen",
    "terminant_oracle",
    "terminant_std",
    "x_scale",
]
