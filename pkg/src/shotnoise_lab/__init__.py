"""Monte Carlo laboratory for renewal shot noise limit behavior.

The package simulates shot noise driven by a renewal point process,
classifies the (inter-arrival law, response function) pair into its
asymptotic regime, applies the regime's exact normalization, and checks
the normalized marginals against the limit law with closed-form oracles
wherever they exist.
"""

from .config import ConfigError, ExperimentConfig, VerdictThresholds
from .limits import (
    StableSpec,
    fractional_integral_at,
    fractional_integral_path,
    inverse_integral_marginals,
    sample_inverse_marginal,
    sample_inverse_subordinator_path,
    sample_inverse_subordinator_paths,
    sample_stable_path,
    sample_stable_unit,
    sample_subordinator_path,
    stable_integral_marginals,
)
from .oracle import (
    gaussian_cov,
    gaussian_moments,
    hurst_exponent,
    integral_log_cf,
    p3_scale,
    phi_alpha,
    stable_log_cf,
    z_moment,
    z_moment_from_phi,
)
from .renewal import (
    Deterministic,
    Exponential,
    GammaLaw,
    LimitCaseSpec,
    Pareto,
    ParetoLog,
    RenewalPath,
    build_case_spec,
    sample_renewal_path,
    solve_scale_c,
)
from .response import (
    BoundedLimitResponse,
    Constant,
    ExpTail,
    LogPower,
    PowerResponse,
    PowerTail,
    SmoothedResponse,
    StepCdfResponse,
    TwoSidedResponse,
    centering_integral,
    smooth_response,
    smoothing_gap_integral,
)
from .shotnoise import ProcessPath, evaluate_shot_noise, normalized_process
from .stats import (
    ConvergenceReport,
    SampleSummary,
    SweepRow,
    convergence_sweep,
    ecf_test,
    ks_distance_to_cdf,
    ks_two_sample,
    summarize,
)
from .streams import substream

__version__ = "0.1.0"

__all__ = [
    "BoundedLimitResponse",
    "ConfigError",
    "Constant",
    "ConvergenceReport",
    "Deterministic",
    "ExpTail",
    "ExperimentConfig",
    "Exponential",
    "GammaLaw",
    "LimitCaseSpec",
    "LogPower",
    "Pareto",
    "ParetoLog",
    "PowerResponse",
    "PowerTail",
    "ProcessPath",
    "RenewalPath",
    "SampleSummary",
    "SmoothedResponse",
    "StableSpec",
    "StepCdfResponse",
    "SweepRow",
    "TwoSidedResponse",
    "VerdictThresholds",
    "build_case_spec",
    "centering_integral",
    "convergence_sweep",
    "ecf_test",
    "evaluate_shot_noise",
    "fractional_integral_at",
    "fractional_integral_path",
    "gaussian_cov",
    "gaussian_moments",
    "hurst_exponent",
    "integral_log_cf",
    "inverse_integral_marginals",
    "ks_distance_to_cdf",
    "ks_two_sample",
    "normalized_process",
    "p3_scale",
    "phi_alpha",
    "sample_inverse_marginal",
    "sample_inverse_subordinator_path",
    "sample_inverse_subordinator_paths",
    "sample_renewal_path",
    "sample_stable_path",
    "sample_stable_unit",
    "sample_subordinator_path",
    "smooth_response",
    "smoothing_gap_integral",
    "solve_scale_c",
    "stable_integral_marginals",
    "stable_log_cf",
    "substream",
    "summarize",
    "z_moment",
    "z_moment_from_phi",
]
