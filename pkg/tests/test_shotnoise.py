"""Shot noise evaluation against hand-computed paths."""

import math

import numpy as np
import pytest

from shotnoise_lab.renewal import (
    Exponential,
    RenewalPath,
    build_case_spec,
    sample_renewal_path,
)
from shotnoise_lab.response import (
    ExpTail,
    PowerResponse,
    TwoSidedResponse,
)
from shotnoise_lab.shotnoise import (
    ProcessPath,
    evaluate_shot_noise,
    normalized_process,
)
from shotnoise_lab.streams import substream


def test_unit_response_counts_epochs():
    # h == 1 on [0, inf) makes X(t) exactly the renewal count N(t).
    law = Exponential(rate=1.0)
    path = sample_renewal_path(law, horizon=200.0, rng=substream(5, 1, 0, 0))
    h = PowerResponse(beta=0.0)
    x = evaluate_shot_noise(path, h, t_max=200.0, n_points=101)
    for j, t in enumerate(x.grid):
        assert x.values[j] == path.count_at(t)


def test_linear_response_hand_sum():
    path = RenewalPath(horizon=2.0, jumps=np.array([0.0, 1.0, 2.3]))
    h = PowerResponse(beta=1.0)
    x = evaluate_shot_noise(path, h, t_max=2.0, n_points=5)
    # X(2) = h(2) + h(1) = 3; the epoch at 2.3 has not arrived yet
    assert x.values[-1] == pytest.approx(3.0)
    # X(0.5) = h(0.5) = 0.5; X(1) = h(1) + h(0) = 1
    assert x.value_at(0.5) == pytest.approx(0.5)
    assert x.value_at(1.0) == pytest.approx(1.0)


def test_two_sided_response_sees_future_epochs():
    path = RenewalPath(horizon=2.0, jumps=np.array([0.0, 1.0, 2.3, 50.0]))
    h = TwoSidedResponse(base=PowerResponse(beta=1.0), left=ExpTail(rate=1.0, amp=1.0))
    x = evaluate_shot_noise(path, h, t_max=2.0, n_points=3)
    # epochs at 0 and 1 contribute 2 + 1; the epoch at 2.3 contributes
    # its left tail exp(-0.3); the one at 50 is beyond the tail cutoff
    assert x.values[-1] == pytest.approx(3.0 + math.exp(-0.3), rel=1e-12)


def test_two_sided_requires_padded_horizon():
    path = RenewalPath(horizon=2.0, jumps=np.array([0.0, 1.0, 2.3]))
    h = TwoSidedResponse(base=PowerResponse(beta=1.0), left=ExpTail(rate=1.0, amp=1.0))
    with pytest.raises(ValueError):
        evaluate_shot_noise(path, h, t_max=2.0, n_points=3)


def test_t_max_beyond_horizon_rejected():
    path = RenewalPath(horizon=2.0, jumps=np.array([0.0, 1.0, 2.3]))
    with pytest.raises(ValueError):
        evaluate_shot_noise(path, PowerResponse(beta=1.0), t_max=3.0, n_points=3)


def test_normalized_process_finite_sample_identity():
    # with h == 1 and the exponential law the normalization collapses to
    # (N(ut) - ut) / sqrt(t); check against the path counts directly.
    law = Exponential(rate=1.0)
    h = PowerResponse(beta=0.0)
    spec = build_case_spec(law, h)
    t = 400.0
    path = sample_renewal_path(law, horizon=2.0 * t, rng=substream(5, 1, 0, 1))
    z = normalized_process(path, h, spec, t, u_max=2.0, n_points=9)
    for j, u in enumerate(z.grid):
        want = (path.count_at(u * t) - u * t) / math.sqrt(t)
        assert z.values[j] == pytest.approx(want, rel=1e-12, abs=1e-12)


def test_normalized_process_horizon_guard():
    law = Exponential(rate=1.0)
    h = PowerResponse(beta=0.0)
    spec = build_case_spec(law, h)
    path = sample_renewal_path(law, horizon=100.0, rng=substream(5, 1, 0, 2))
    with pytest.raises(ValueError):
        normalized_process(path, h, spec, t=80.0, u_max=2.0, n_points=5)


class TestProcessPath:
    def test_grid_and_interpolation(self):
        p = ProcessPath(u_max=2.0, n_points=5, values=np.array([0.0, 1.0, 4.0, 9.0, 16.0]))
        assert list(p.grid) == [0.0, 0.5, 1.0, 1.5, 2.0]
        assert p.value_at(0.75) == pytest.approx(2.5)
        assert p.value_at(2.0) == 16.0

    def test_validation(self):
        with pytest.raises(ValueError):
            ProcessPath(u_max=1.0, n_points=1, values=np.array([0.0]))
        with pytest.raises(ValueError):
            ProcessPath(u_max=1.0, n_points=3, values=np.array([0.0, 1.0]))
