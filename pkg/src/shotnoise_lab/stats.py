"""Statistical comparisons and the convergence sweep.

The sweep is the heart of the laboratory: for each horizon t in a
ladder it simulates many independent renewal shot noise replicates,
applies the exact normalization of the classified limit regime, and
compares the normalized marginals against the regime's limit law by
whichever instruments are sound there:

* Gaussian regimes (a1, a2): one-sample Kolmogorov-Smirnov distance
  against the explicit normal law, plus a characteristic-function check.
* Stable regime (a3): empirical characteristic function against the
  closed-form log CF (moments diverge, KS against a sampled limit is
  reported but not gated).
* Inverse-subordinator regime (a4): first and second moments against
  closed forms, plus distributional stability across consecutive t.
* Conjectural regime (a5): everything reported, nothing gated.

Replicates are indexed streams of a counter-based generator, so results
are identical for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.special import kolmogorov
from scipy.stats import norm as _norm

from .limits import (
    inverse_integral_marginals,
    sample_inverse_marginal,
    stable_integral_marginals,
)
from .oracle import integral_log_cf, p3_scale, z_moment
from .renewal import build_case_spec, sample_renewal_path
from .response import TwoSidedResponse
from .shotnoise import _values_at
from .streams import substream

__all__ = [
    "SampleSummary",
    "summarize",
    "ks_two_sample",
    "ks_distance_to_cdf",
    "ecf_test",
    "SweepRow",
    "ConvergenceReport",
    "convergence_sweep",
]

_ECF_GRID = (0.5, 1.0, 2.0)
_STABLE_GRID = 1025
_INVERSE_GRID = 129
_CF_TABLE = 4097


@dataclass
class SampleSummary:
    n: int
    mean: float
    variance: float
    skew_proxy: float
    se_mean: float
    sorted_values: np.ndarray


def summarize(sample) -> SampleSummary:
    """Location/spread summary plus the sorted sample for ECDF work."""
    x = np.sort(np.asarray(sample, dtype=float))
    n = len(x)
    if n < 2:
        raise ValueError("summarize needs at least 2 observations")
    mean = float(np.mean(x))
    var = float(np.var(x, ddof=1))
    sd = math.sqrt(var)
    skew = (mean - float(np.median(x))) / sd if sd > 0.0 else 0.0
    return SampleSummary(n=n, mean=mean, variance=var, skew_proxy=skew,
                         se_mean=sd / math.sqrt(n), sorted_values=x)


def ks_two_sample(x, y) -> tuple[float, float]:
    """Two-sample KS distance and its asymptotic p-value."""
    x = np.sort(np.asarray(x, dtype=float))
    y = np.sort(np.asarray(y, dtype=float))
    n, m = len(x), len(y)
    grid = np.concatenate([x, y])
    fx = np.searchsorted(x, grid, side="right") / n
    fy = np.searchsorted(y, grid, side="right") / m
    d = float(np.max(np.abs(fx - fy)))
    p = float(kolmogorov(math.sqrt(n * m / (n + m)) * d))
    return d, p


def ks_distance_to_cdf(sample, cdf) -> float:
    """One-sample KS distance sup_x |F_n(x) - F(x)| against a callable CDF."""
    x = np.sort(np.asarray(sample, dtype=float))
    n = len(x)
    f = np.asarray(cdf(x), dtype=float)
    upper = np.max(np.arange(1, n + 1) / n - f)
    lower = np.max(f - np.arange(0, n) / n)
    return float(max(upper, lower))


def ecf_test(sample, log_cf, z_grid=_ECF_GRID) -> float:
    """Worst characteristic-function deviation in Monte Carlo s.e. units.

    For each z the real and imaginary parts of the empirical CF are
    compared with exp(log_cf(z)); each deviation is divided by its own
    standard error and the maximum over parts and grid points returned.
    """
    x = np.asarray(sample, dtype=float)
    n = len(x)
    worst = 0.0
    for z in z_grid:
        target = np.exp(complex(log_cf(z)))
        cos_part = np.cos(z * x)
        sin_part = np.sin(z * x)
        for emp, ref in ((cos_part, target.real), (sin_part, target.imag)):
            dev = abs(float(np.mean(emp)) - ref)
            se = float(np.std(emp, ddof=1)) / math.sqrt(n)
            if dev <= 1e-12:
                # CF values are O(1); anything this small is rounding, and
                # for degenerate samples se is rounding noise too
                continue
            worst = max(worst, dev / se if se > 0.0 else math.inf)
    return worst


@dataclass
class SweepRow:
    """One (t, u) cell of a convergence sweep."""

    t: float
    u: float
    n: int
    ks: float
    ks_p: float
    ecf_se: float
    moment_z1: float
    moment_z2: float
    passed: bool
    informational: bool


@dataclass
class ConvergenceReport:
    case: str
    rows: list = field(default_factory=list)
    config: dict = field(default_factory=dict)

    @property
    def overall_pass(self) -> bool:
        return all(r.passed for r in self.rows if not r.informational)


def _replicate_marginals(law, h, t, u_points, seed, t_index, start, size):
    """Raw shot noise marginals X(u t) for replicates start..start+size-1."""
    u_arr = np.asarray(u_points, dtype=float)
    horizon = t * float(u_arr.max())
    if isinstance(h, TwoSidedResponse):
        horizon += h.tail_cutoff
    out = np.empty((size, len(u_arr)))
    for r in range(size):
        rng = substream(seed, 1, t_index, start + r)
        path = sample_renewal_path(law, horizon, rng)
        out[r] = _values_at(path, h, u_arr * t)
    return start, out


def _collect_marginals(law, h, t, u_points, seed, t_index, n, threads):
    if threads <= 1:
        return _replicate_marginals(law, h, t, u_points, seed, t_index, 0, n)[1]
    block = max(1, math.ceil(n / (4 * threads)))
    jobs = [(law, h, t, u_points, seed, t_index, s, min(block, n - s))
            for s in range(0, n, block)]
    out = np.empty((n, len(u_points)))
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for start, vals in pool.map(_replicate_marginals_star, jobs):
            out[start:start + len(vals)] = vals
    return out


def _replicate_marginals_star(args):
    return _replicate_marginals(*args)


def _power_kernel_log_cf(alpha, beta, u):
    f = np.linspace(0.0, u, _CF_TABLE) ** beta
    return lambda z: integral_log_cf(f, 0.0, u, alpha, z)


def convergence_sweep(config) -> ConvergenceReport:
    """Run the full ladder described by an ExperimentConfig."""
    law = config.law()
    h = config.response()
    spec = build_case_spec(law, h)
    if config.case is not None and config.case != spec.case:
        raise ValueError(f"config names case {config.case!r} but the law/response "
                         f"pair is classified as {spec.case!r}")
    v = config.verdicts
    n = config.replicates
    u_points = list(config.u_points)
    report = ConvergenceReport(case=spec.case, config=config.resolved())
    prev: dict[float, np.ndarray] = {}
    for ti, t in enumerate(config.t_ladder):
        raw = _collect_marginals(law, h, t, u_points, config.seed, ti, n,
                                 config.threads)
        scale = spec.scale_fn(t)
        centers = np.array([spec.center_fn(t, u) for u in u_points])
        normalized = (raw - centers) / scale
        limit_rng = substream(config.seed, 2, ti, 0)
        for ui, u in enumerate(u_points):
            sample = normalized[:, ui]
            row = _score_cell(spec, sample, t, u, limit_rng, prev.get(u), ti, v)
            report.rows.append(row)
            if spec.case == "a4":
                prev[u] = sample
    return report


def _score_cell(spec, sample, t, u, limit_rng, prev_sample, t_index, v) -> SweepRow:
    case = spec.case
    alpha = spec.alpha_limit
    beta = spec.beta
    n = len(sample)
    nan = float("nan")
    if case in ("a1", "a2"):
        sd = p3_scale(2.0, beta, u)
        ks = ks_distance_to_cdf(sample, _norm(scale=sd).cdf)
        ks_p = float(kolmogorov(math.sqrt(n) * ks))
        ecf = ecf_test(sample, lambda z: -0.5 * (sd * z) ** 2)
        s = summarize(sample)
        z1 = s.mean / s.se_mean
        sq = sample**2
        z2 = (float(np.mean(sq)) - sd**2) / (float(np.std(sq, ddof=1)) / math.sqrt(n))
        passed = ks <= v.ks_max
        return SweepRow(t, u, n, ks, ks_p, ecf, z1, z2, passed, spec.informational)
    if case == "a3":
        ecf = ecf_test(sample, _power_kernel_log_cf(alpha, beta, u))
        ref = stable_integral_marginals(alpha, beta, u, _STABLE_GRID, n, limit_rng)
        ks, ks_p = ks_two_sample(sample, ref)
        passed = ecf <= v.ecf_max_se
        return SweepRow(t, u, n, ks, ks_p, ecf, nan, nan, passed, spec.informational)
    if case == "a4":
        m1 = z_moment(alpha, beta, u, 1)
        m2 = z_moment(alpha, beta, u, 2)
        s = summarize(sample)
        z1 = (s.mean - m1) / s.se_mean
        sq = sample**2
        z2 = (float(np.mean(sq)) - m2) / (float(np.std(sq, ddof=1)) / math.sqrt(n))
        if prev_sample is None:
            if beta == 0.0:
                ref = sample_inverse_marginal(alpha, u, limit_rng, size=n)
            else:
                ref = inverse_integral_marginals(alpha, beta, u, _INVERSE_GRID,
                                                 n, limit_rng)
            ks, ks_p = ks_two_sample(sample, ref)
            passed = abs(z1) <= v.moment_max_se and abs(z2) <= v.moment_max_se
        else:
            ks, ks_p = ks_two_sample(sample, prev_sample)
            passed = (abs(z1) <= v.moment_max_se and abs(z2) <= v.moment_max_se
                      and ks_p >= v.ks_p_min)
        return SweepRow(t, u, n, ks, ks_p, nan, z1, z2, passed, spec.informational)
    # a5: conjectural normalization, everything reported, nothing gated.
    ecf = ecf_test(sample, _power_kernel_log_cf(1.0, beta, u))
    ref = stable_integral_marginals(1.0, beta, u, _STABLE_GRID, n, limit_rng)
    ks, ks_p = ks_two_sample(sample, ref)
    return SweepRow(t, u, n, ks, ks_p, ecf, nan, nan, True, True)
