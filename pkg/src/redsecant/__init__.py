"""Secant varieties of varieties of reducible hypersurfaces.

Closed-form dimension predictions, Hilbert series manipulation, and an
exact finite-field Terracini oracle for sigma_l of X_{n-1,lambda}.
"""

from .combinatorics import (
    ExpectedDim,
    Partition,
    PartitionLike,
    ProblemInstance,
    SegreReport,
    as_partition,
    binom,
    dim_variety,
    enumerate_partitions,
    expected_dim,
    partition_compare,
    segre_report,
)
from .predictor import (
    FAMILIES,
    PredictionReport,
    Remark510Result,
    SecantLineN3Result,
    a_coeff,
    alternating_binomial_sum,
    linear_factor_predict,
    long_formula_dim,
    n3_secant_line,
    predict,
    reducible_forms_predict,
    remark510_check,
    syz_dim,
    threshold_l0,
)
from .series import (
    SeriesNumerator,
    TruncatedSeries,
    artinian_bound,
    expand_rational,
    plus_truncate,
    predicted_hilbert,
    reducible_numerator,
    series_pow,
)
from .oracle import (
    FroebergCheck,
    OracleRun,
    PrimeFieldConfig,
    ResourceGuardExceeded,
    WlpCheckResult,
    froeberg_oracle_r2,
    oracle_run,
    wlp_consequence_check,
)
from .workbench import (
    SWEEP_FAMILIES,
    SweepConfig,
    SweepRow,
    remark_region_scan,
    render_csv,
    render_json,
    sweep,
    verify_case,
)

__version__ = "0.1.0"

__all__ = [
    "ExpectedDim",
    "FAMILIES",
    "FroebergCheck",
    "OracleRun",
    "Partition",
    "PartitionLike",
    "PredictionReport",
    "PrimeFieldConfig",
    "ProblemInstance",
    "Remark510Result",
    "ResourceGuardExceeded",
    "SWEEP_FAMILIES",
    "SecantLineN3Result",
    "SegreReport",
    "SeriesNumerator",
    "SweepConfig",
    "SweepRow",
    "TruncatedSeries",
    "WlpCheckResult",
    "a_coeff",
    "alternating_binomial_sum",
    "artinian_bound",
    "as_partition",
    "binom",
    "dim_variety",
    "enumerate_partitions",
    "expand_rational",
    "expected_dim",
    "froeberg_oracle_r2",
    "linear_factor_predict",
    "long_formula_dim",
    "n3_secant_line",
    "oracle_run",
    "partition_compare",
    "plus_truncate",
    "predict",
    "predicted_hilbert",
    "reducible_forms_predict",
    "reducible_numerator",
    "remark510_check",
    "remark_region_scan",
    "render_csv",
    "render_json",
    "segre_report",
    "series_pow",
    "sweep",
    "syz_dim",
    "threshold_l0",
    "verify_case",
    "wlp_consequence_check",
    "__version__",
]
