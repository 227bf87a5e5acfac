"""Test statistics and the convergence sweep driver."""

import dataclasses
import math

import numpy as np
import pytest
from scipy import stats

from shotnoise_lab.config import ExperimentConfig
from shotnoise_lab.stats import (
    convergence_sweep,
    ecf_test,
    ks_distance_to_cdf,
    ks_two_sample,
    summarize,
)
from shotnoise_lab.streams import substream


def _config(**overrides):
    base = dict(
        t_ladder=(200.0, 400.0),
        u_points=(0.5, 1.0),
        replicates=64,
        seed=424242,
        law_table={"family": "exponential", "rate": 1.0},
        response_table={"kind": "power", "beta": 0.0},
    )
    base.update(overrides)
    return ExperimentConfig(**base)


class TestKsTwoSample:
    def test_identical_samples(self):
        x = np.arange(50.0)
        d, p = ks_two_sample(x, x)
        assert d == 0.0
        assert p == 1.0

    def test_disjoint_samples(self):
        d, p = ks_two_sample(np.arange(200.0), np.arange(200.0) + 1000.0)
        assert d == 1.0
        assert p < 1e-20

    def test_null_calibration(self):
        rng = substream(7, 9, 0)
        rejections = 0
        reps = 200
        for _ in range(reps):
            x = rng.standard_normal(200)
            y = rng.standard_normal(200)
            _, p = ks_two_sample(x, y)
            rejections += p < 0.05
        assert 0.02 * reps <= rejections <= 0.09 * reps

    def test_agrees_with_scipy(self):
        rng = substream(7, 9, 1)
        x = rng.standard_normal(300)
        y = rng.standard_normal(450) * 1.3
        d, _ = ks_two_sample(x, y)
        assert d == pytest.approx(stats.ks_2samp(x, y).statistic, abs=1e-12)


class TestKsToCdf:
    def test_quasi_uniform_sample(self):
        n = 1000
        x = (np.arange(n) + 0.5) / n
        d = ks_distance_to_cdf(x, lambda v: v)
        assert d == pytest.approx(0.5 / n)

    def test_shifted_sample_detected(self):
        rng = substream(7, 9, 2)
        x = rng.standard_normal(2000) + 0.5
        assert ks_distance_to_cdf(x, stats.norm.cdf) > 0.15


class TestEcf:
    def test_point_mass_exact(self):
        x = np.ones(100)
        assert ecf_test(x, lambda z: 1j * z) == 0.0

    def test_own_law_small(self):
        rng = substream(7, 9, 3)
        x = rng.standard_normal(50_000)
        assert ecf_test(x, lambda z: -0.5 * z * z) < 4.0

    def test_wrong_scale_large(self):
        rng = substream(7, 9, 4)
        x = rng.standard_normal(50_000)
        assert ecf_test(x, lambda z: -2.0 * z * z) > 10.0


class TestSummarize:
    def test_se_scales_with_n(self):
        rng = substream(7, 9, 5)
        x = rng.standard_normal(4000)
        a = summarize(x[:1000])
        b = summarize(x)
        assert 0.4 <= b.se_mean / a.se_mean <= 0.6

    def test_skew_proxy_sign(self):
        rng = substream(7, 9, 6)
        x = rng.standard_exponential(20_000)
        assert summarize(x).skew_proxy > 0.05
        assert summarize(-x).skew_proxy < -0.05

    def test_needs_two_points(self):
        with pytest.raises(ValueError):
            summarize(np.array([1.0]))


class TestConvergenceSweep:
    def test_a1_shape_and_fields(self):
        report = convergence_sweep(_config())
        assert report.case == "a1"
        assert len(report.rows) == 4
        for row in report.rows:
            assert row.n == 64
            assert 0.0 <= row.ks <= 1.0
            assert not row.informational
        assert {(r.t, r.u) for r in report.rows} == {
            (200.0, 0.5), (200.0, 1.0), (400.0, 0.5), (400.0, 1.0)}

    def test_threads_do_not_change_results(self):
        r1 = convergence_sweep(_config(threads=1))
        r2 = convergence_sweep(_config(threads=2))
        for a, b in zip(r1.rows, r2.rows):
            assert dataclasses.astuple(a) == dataclasses.astuple(b)
        assert r1.config == r2.config

    def test_reproducible_across_calls(self):
        r1 = convergence_sweep(_config())
        r2 = convergence_sweep(_config())
        for a, b in zip(r1.rows, r2.rows):
            assert dataclasses.astuple(a) == dataclasses.astuple(b)

    def test_a4_consecutive_t_wiring(self):
        cfg = _config(
            t_ladder=(500.0, 1000.0),
            u_points=(1.0,),
            replicates=256,
            law_table={"family": "pareto", "alpha": 0.5, "xm": 1.0},
            response_table={"kind": "power", "beta": 1.0},
        )
        report = convergence_sweep(cfg)
        assert report.case == "a4"
        first, second = report.rows
        assert math.isnan(first.ecf_se)
        assert second.ks_p >= 0.0
        assert abs(first.moment_z1) < 10.0

    def test_case_mismatch_rejected(self):
        with pytest.raises(ValueError):
            convergence_sweep(_config(case="a3"))

    def test_case_match_accepted(self):
        report = convergence_sweep(_config(case="a1", t_ladder=(200.0,),
                                           u_points=(1.0,), replicates=32))
        assert report.case == "a1"

    def test_a5_rows_informational(self):
        cfg = _config(
            t_ladder=(500.0,),
            u_points=(1.0,),
            replicates=64,
            law_table={"family": "pareto", "alpha": 1.0, "xm": 1.0},
            response_table={"kind": "power", "beta": 1.0},
        )
        report = convergence_sweep(cfg)
        assert report.case == "a5"
        assert all(r.informational and r.passed for r in report.rows)
        assert report.overall_pass
