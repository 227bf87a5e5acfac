"""Shot noise evaluation on a renewal path.

X(t) = sum_{k >= 0} h(t - S_k) 1{S_k <= t}; for a two-sided response
the indicator is dropped and epochs slightly ahead of t also contribute
through the left tail, truncated at the response's tail cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .renewal import LimitCaseSpec, RenewalPath
from .response import ResponseFunction, TwoSidedResponse

__all__ = ["ProcessPath", "evaluate_shot_noise", "normalized_process"]


@dataclass
class ProcessPath:
    """A function of 'time' sampled on the uniform grid of [0, u_max].

    ``values[j]`` is the value at ``u_max * j / (n_points - 1)``; the
    grid always contains both endpoints.
    """

    u_max: float
    n_points: int
    values: np.ndarray

    def __post_init__(self):
        if self.n_points < 2:
            raise ValueError("ProcessPath needs at least 2 grid points")
        if len(self.values) != self.n_points:
            raise ValueError("values length disagrees with n_points")

    @property
    def grid(self) -> np.ndarray:
        return np.linspace(0.0, self.u_max, self.n_points)

    def value_at(self, u: float) -> float:
        """Linear interpolation between grid points."""
        return float(np.interp(u, self.grid, self.values))


def _values_at(path: RenewalPath, h: ResponseFunction, times: np.ndarray) -> np.ndarray:
    """X at each query time; vectorized over epochs for every time."""
    jumps = path.jumps
    out = np.empty(len(times))
    if isinstance(h, TwoSidedResponse):
        cutoff = h.tail_cutoff
        if times.max() + cutoff > path.horizon and path.jumps[-1] <= times.max() + cutoff:
            raise ValueError(
                "two-sided response needs the renewal horizon to exceed "
                "t_max plus the left-tail cutoff")
        for i, t in enumerate(times):
            hi = np.searchsorted(jumps, t + cutoff, side="right")
            out[i] = float(np.sum(h.eval(t - jumps[:hi])))
        return out
    for i, t in enumerate(times):
        hi = np.searchsorted(jumps, t, side="right")
        out[i] = float(np.sum(h.eval(t - jumps[:hi])))
    return out


def evaluate_shot_noise(path: RenewalPath, h: ResponseFunction,
                        t_max: float, n_points: int) -> ProcessPath:
    """Evaluate X on the uniform n_points grid of [0, t_max]."""
    if t_max > path.horizon:
        raise ValueError("t_max beyond the sampled horizon")
    times = np.linspace(0.0, t_max, n_points)
    return ProcessPath(u_max=float(t_max), n_points=n_points,
                       values=_values_at(path, h, times))


def normalized_process(path: RenewalPath, h: ResponseFunction,
                       case_spec: LimitCaseSpec, t: float,
                       u_max: float, n_points: int) -> ProcessPath:
    """(X(u t) - b(t, u)) / a(t) on the uniform u-grid of [0, u_max]."""
    if u_max * t > path.horizon:
        raise ValueError("u_max * t beyond the sampled horizon")
    us = np.linspace(0.0, u_max, n_points)
    raw = _values_at(path, h, us * t)
    scale = case_spec.scale_fn(t)
    centers = np.array([case_spec.center_fn(t, u) for u in us])
    return ProcessPath(u_max=float(u_max), n_points=n_points,
                       values=(raw - centers) / scale)
