"""Stable samplers, inverse subordinator, fractional integral machinery."""

import math

import numpy as np
import pytest
from scipy import stats
from scipy.special import gamma as gamma_fn

from shotnoise_lab.limits import (
    StableSpec,
    default_s_step,
    fractional_integral_at,
    fractional_integral_path,
    inverse_integral_marginals,
    marginal_weights,
    sample_inverse_marginal,
    sample_inverse_subordinator_path,
    sample_inverse_subordinator_paths,
    sample_stable_path,
    sample_stable_unit,
    sample_subordinator_path,
    stable_integral_marginals,
)
from shotnoise_lab.oracle import stable_log_cf, z_moment
from shotnoise_lab.shotnoise import ProcessPath
from shotnoise_lab.stats import ecf_test, ks_two_sample
from shotnoise_lab.streams import substream


class TestStableSpec:
    def test_role_and_range_validation(self):
        with pytest.raises(ValueError):
            StableSpec(1.5, "positive_subordinator")
        with pytest.raises(ValueError):
            StableSpec(0.5, "spectrally_negative")
        with pytest.raises(ValueError):
            StableSpec(1.5, "two_sided")

    def test_scale_sigma_values(self):
        # (Gamma(-0.5) cos(3 pi/4))^{2/3} = (sqrt(2 pi))^{2/3}
        spec = StableSpec(1.5)
        assert spec.scale_sigma == pytest.approx(math.sqrt(2 * math.pi) ** (2.0 / 3.0),
                                                 rel=1e-12)
        assert StableSpec(2.0).scale_sigma == 1.0
        assert StableSpec(1.0).scale_sigma == math.pi / 2.0
        # Kanter scale at alpha = 1/2 is Gamma(1/2)^2 = pi
        assert StableSpec(0.5, "positive_subordinator").scale_sigma == pytest.approx(
            math.pi, rel=1e-12)


class TestStableUnit:
    @pytest.mark.parametrize("alpha", [1.0, 1.2, 1.5, 1.8])
    def test_cf_matches_oracle(self, alpha):
        rng = substream(101, 3, int(alpha * 10))
        x = sample_stable_unit(StableSpec(alpha), rng, size=300_000)
        dev = ecf_test(x, lambda z: stable_log_cf(alpha, z))
        assert dev < 5.0

    def test_alpha_two_is_standard_normal(self):
        rng = substream(101, 3, 20)
        x = sample_stable_unit(StableSpec(2.0), rng, size=100_000)
        d = stats.kstest(x, "norm").statistic
        assert d < 1.63 / math.sqrt(x.size)

    def test_negative_tail_power_decay(self):
        # P(W < -q) ~ const q^{-alpha}: the rescaled tail is flat in q.
        alpha = 1.5
        rng = substream(101, 3, 15, 1)
        x = sample_stable_unit(StableSpec(alpha), rng, size=200_000)
        scaled = [q**alpha * float(np.mean(x < -q)) for q in (5.0, 10.0, 20.0)]
        for val in scaled:
            assert 0.7 * scaled[0] <= val <= 1.4 * scaled[0]

    def test_positive_side_lighter_than_negative(self):
        rng = substream(101, 3, 15, 2)
        x = sample_stable_unit(StableSpec(1.5), rng, size=200_000)
        assert float(np.mean(x > 10.0)) < 0.1 * float(np.mean(x < -10.0))


class TestKanter:
    def test_laplace_transform_half(self):
        # E exp(-D(1)) = exp(-Gamma(1 - alpha))
        rng = substream(101, 3, 50)
        d = sample_stable_unit(StableSpec(0.5, "positive_subordinator"), rng,
                               size=400_000)
        vals = np.exp(-d)
        want = math.exp(-math.sqrt(math.pi))
        se = float(np.std(vals)) / math.sqrt(vals.size)
        assert abs(float(np.mean(vals)) - want) < 4 * se

    def test_laplace_transform_07(self):
        rng = substream(101, 3, 70)
        d = sample_stable_unit(StableSpec(0.7, "positive_subordinator"), rng,
                               size=400_000)
        vals = np.exp(-d)
        want = math.exp(-gamma_fn(0.3))
        se = float(np.std(vals)) / math.sqrt(vals.size)
        assert abs(float(np.mean(vals)) - want) < 4 * se

    def test_half_matches_levy(self):
        # alpha = 1/2 subordinator draw is Levy with scale (pi/2)... the
        # unit Kanter value 1/(2 G^2) scaled by sigma = pi.
        rng = substream(101, 3, 51)
        d = sample_stable_unit(StableSpec(0.5, "positive_subordinator"), rng,
                               size=100_000)
        dist = stats.levy(scale=math.pi / 2.0)
        dks = stats.kstest(d, dist.cdf).statistic
        assert dks < 1.63 / math.sqrt(d.size)


class TestPaths:
    def test_stable_path_endpoint_self_similarity(self):
        rng = substream(101, 4, 0)
        alpha = 1.5
        a = np.array([sample_stable_path(alpha, 1.0, 9, rng).values[-1]
                      for _ in range(4000)])
        b = np.array([sample_stable_path(alpha, 2.0, 9, rng).values[-1]
                      for _ in range(4000)])
        _, p = ks_two_sample(a * 2.0 ** (1.0 / alpha), b)
        assert p > 0.01

    def test_subordinator_path_monotone(self):
        rng = substream(101, 4, 1)
        path = sample_subordinator_path(0.6, 1.0, 65, rng)
        assert path.values[0] == 0.0
        assert np.all(np.diff(path.values) > 0.0)

    def test_default_s_step_scaling_is_exact(self):
        alpha = 0.7
        r = default_s_step(alpha, 2.0, 33) / default_s_step(alpha, 1.0, 33)
        assert r == pytest.approx(2.0 ** alpha, rel=1e-14)


class TestInverseSubordinator:
    def test_marginal_mean_exact_sampler(self):
        alpha = 0.5
        rng = substream(101, 4, 2)
        v = sample_inverse_marginal(alpha, 1.0, rng, size=200_000)
        want = 1.0 / (gamma_fn(1.0 - alpha) * gamma_fn(1.0 + alpha))
        assert want == pytest.approx(2.0 / math.pi, rel=1e-12)
        se = float(np.std(v)) / math.sqrt(v.size)
        assert abs(float(np.mean(v)) - want) < 4 * se

    def test_path_marginal_mean(self):
        alpha = 0.5
        rng = substream(101, 4, 3)
        vals = sample_inverse_subordinator_paths(alpha, 1.0, 54, 30_000, rng)
        got = float(np.mean(vals[:, -1]))
        assert abs(got - 2.0 / math.pi) < 0.01

    def test_path_nondecreasing_from_zero(self):
        rng = substream(101, 4, 4)
        path = sample_inverse_subordinator_path(0.7, 3.0, 33, rng)
        assert path.values[0] == 0.0
        assert np.all(np.diff(path.values) >= 0.0)

    def test_discrete_self_similarity(self):
        # s_step scales like u_max^alpha, so the discretized law is exactly
        # self-similar: V(2)/2^alpha =d V(1) even at coarse resolution.
        alpha = 0.6
        rng = substream(101, 4, 5)
        a = sample_inverse_subordinator_paths(alpha, 1.0, 17, 4000, rng)[:, -1]
        b = sample_inverse_subordinator_paths(alpha, 2.0, 17, 4000, rng)[:, -1]
        _, p = ks_two_sample(a * 2.0 ** alpha, b)
        assert p > 0.01

    def test_path_endpoint_matches_exact_marginal(self):
        alpha = 0.5
        rng = substream(101, 4, 6)
        path_end = sample_inverse_subordinator_paths(alpha, 1.0, 129, 8000, rng)[:, -1]
        exact = sample_inverse_marginal(alpha, 1.0, rng, size=8000)
        d, _ = ks_two_sample(path_end, exact)
        assert d < 0.035

    def test_alpha_validation(self):
        rng = substream(101, 4, 7)
        with pytest.raises(ValueError):
            sample_inverse_subordinator_paths(1.2, 1.0, 17, 4, rng)


class TestFractionalIntegral:
    def test_beta_zero_is_identity(self):
        rng = substream(101, 5, 0)
        path = sample_stable_path(1.5, 1.0, 65, rng)
        out = fractional_integral_path(path, 0.0)
        assert np.array_equal(out.values, path.values)

    def test_constant_path_telescopes(self):
        # w == c on (0, u]: int (u-y)^beta dw has a single atom c at y=0+,
        # but our paths start at w(0)=0 with the jump in the first cell.
        n = 257
        u = 2.0
        vals = np.full(n, 3.0)
        vals[0] = 0.0
        path = ProcessPath(u_max=u, n_points=n, values=vals)
        beta = 1.3
        out = fractional_integral_path(path, beta)
        grid = path.grid
        step = u / (n - 1)
        for j in (64, 128, 256):
            want = 3.0 * (grid[j] - step) ** beta
            assert out.values[j] == pytest.approx(want, rel=1e-12)

    def test_linear_path_matches_quadrature(self):
        # w(y) = y gives int_0^u (u-y)^beta dy = u^{beta+1}/(beta+1).
        n = 4097
        u = 1.0
        grid = np.linspace(0.0, u, n)
        path = ProcessPath(u_max=u, n_points=n, values=grid.copy())
        beta = 1.0
        out = fractional_integral_path(path, beta)
        assert out.values[-1] == pytest.approx(u ** 2 / 2.0, rel=1e-3)

    def test_three_routes_agree(self):
        rng = substream(101, 5, 1)
        n = 129
        u = 2.0
        path = sample_stable_path(1.5, u, n, rng)
        beta = 0.8
        a = fractional_integral_path(path, beta).values[-1]
        b = fractional_integral_at(path, beta, u)
        c = float(np.dot(marginal_weights(u, n, beta), np.diff(path.values)))
        assert a == pytest.approx(b, rel=1e-12)
        assert b == pytest.approx(c, rel=1e-12)

    def test_midpoint_node_and_off_grid_rejection(self):
        rng = substream(101, 5, 2)
        path = sample_stable_path(1.5, 1.0, 33, rng)
        mid = fractional_integral_at(path, 1.0, 0.5)
        half = fractional_integral_path(path, 1.0).values[16]
        assert mid == pytest.approx(half, rel=1e-12)
        with pytest.raises(ValueError):
            fractional_integral_at(path, 1.0, 0.51)

    def test_marginal_weights_shapes(self):
        w = marginal_weights(1.0, 129, 0.0)
        assert w.shape == (128,) and np.all(w == 1.0)
        w2 = marginal_weights(2.0, 5, 1.0)
        assert w2 == pytest.approx([1.5, 1.0, 0.5, 0.0])
        with pytest.raises(ValueError):
            marginal_weights(1.0, 9, -0.5)


class TestStableIntegralMarginals:
    def test_gaussian_variance(self):
        # alpha = 2, beta = 1, u = 1: Var = int_0^1 (1-y)^2 dy = 1/3 with a
        # discretization bias below half a percent at this grid.
        rng = substream(101, 5, 3)
        n_grid = 129
        draws = stable_integral_marginals(2.0, 1.0, 1.0, n_grid, 4000, rng)
        c = marginal_weights(1.0, n_grid, 1.0)
        step = 1.0 / (n_grid - 1)
        exact_disc = float(np.sum(c**2) * step)
        assert abs(exact_disc - 1.0 / 3.0) < 0.005
        var = float(np.var(draws, ddof=1))
        se = exact_disc * math.sqrt(2.0 / (draws.size - 1))
        assert abs(var - exact_disc) < 4 * se

    def test_stable_case_matches_scaled_unit_draws(self):
        # each draw is exactly stable with scale^alpha = sum c_k^alpha step
        alpha, beta, u = 1.5, 1.0, 1.0
        rng = substream(101, 5, 4)
        n_grid = 513
        draws = stable_integral_marginals(alpha, beta, u, n_grid, 20_000, rng)
        c = marginal_weights(u, n_grid, beta)
        step = u / (n_grid - 1)
        scale = float(np.sum(c**alpha) * step) ** (1.0 / alpha)
        ref = scale * sample_stable_unit(StableSpec(alpha), rng, size=20_000)
        _, p = ks_two_sample(draws, ref)
        assert p > 0.001

    def test_grid_refinement_converges_in_law(self):
        # quantiles at grid 513 and 1025 should differ by less than the
        # sampling error of 20k draws.
        alpha, beta, u = 1.5, 1.0, 1.0
        rng = substream(101, 5, 5)
        coarse = stable_integral_marginals(alpha, beta, u, 513, 20_000, rng)
        fine = stable_integral_marginals(alpha, beta, u, 1025, 20_000, rng)
        q = np.linspace(0.05, 0.95, 19)
        dq = np.quantile(coarse, q) - np.quantile(fine, q)
        assert float(np.max(np.abs(dq))) < 0.06


class TestInverseIntegralMarginals:
    def test_mean_matches_moment_oracle(self):
        alpha, beta, u = 0.5, 1.0, 1.0
        rng = substream(101, 5, 6)
        draws = inverse_integral_marginals(alpha, beta, u, 257, 10_000, rng)
        want = z_moment(alpha, beta, u, 1)
        assert want == pytest.approx(4.0 / (3.0 * math.pi), rel=1e-12)
        se = float(np.std(draws)) / math.sqrt(draws.size)
        # right-endpoint weights bias the mean by about step/2 here
        assert abs(float(np.mean(draws)) - want) < 4 * se + 0.002

    def test_second_moment(self):
        alpha, beta, u = 0.5, 1.0, 1.0
        rng = substream(101, 5, 7)
        draws = inverse_integral_marginals(alpha, beta, u, 257, 10_000, rng)
        want = z_moment(alpha, beta, u, 2)
        got = float(np.mean(draws**2))
        se = float(np.std(draws**2)) / math.sqrt(draws.size)
        assert abs(got - want) < 4 * se + 0.004


class TestGaussianCovarianceViaSharedIncrements:
    def test_covariance_of_nested_integrals(self):
        # Y(u) = int_0^u (u-y) dB(y); Cov(Y(1), Y(3)) = 4/3 from the oracle
        # table; build both from one increment array so the coupling is the
        # true process coupling.
        rng = substream(101, 5, 8)
        n_inc = 384
        step = 3.0 / n_inc
        inc = math.sqrt(step) * rng.standard_normal((20_000, n_inc))
        w3 = marginal_weights(3.0, n_inc + 1, 1.0)
        w1 = marginal_weights(1.0, 128 + 1, 1.0)
        y3 = inc @ w3
        y1 = inc[:, :128] @ w1
        cov = float(np.cov(y1, y3)[0, 1])
        assert abs(cov - 4.0 / 3.0) < 0.07
        var1 = float(np.var(y1, ddof=1))
        assert abs(var1 - 1.0 / 3.0) < 0.02
