"""Samplers for the limit processes and their integral functionals.

Three building blocks:

* totally skewed stable marginals (Chambers-Mallows-Stuck transform,
  Kanter's representation for the positive case),
* paths of the stable subordinator and its inverse (first passage on a
  fine grid with linear interpolation),
* Riemann-Stieltjes fractional integrals int_0^u (u - y)^beta dw(y)
  of a sampled path, plus batch marginal shortcuts that exploit the
  summation-by-parts form.

Marginal scale conventions match the characteristic-function oracles in
``oracle``: the spectrally negative family has log CF
-|z|^alpha Gamma(1-alpha) (cos(pi alpha/2) + i sin(pi alpha/2) sgn z)
for alpha in (1, 2), the standard Gaussian at alpha = 2, and
-|z| (pi/2 - i ln|z| sgn z) at alpha = 1; the subordinator has Laplace
transform exp(-Gamma(1-alpha) s^alpha).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gamma as gamma_fn

from .shotnoise import ProcessPath

__all__ = [
    "StableSpec",
    "sample_stable_unit",
    "sample_stable_path",
    "sample_subordinator_path",
    "sample_inverse_subordinator_path",
    "sample_inverse_subordinator_paths",
    "sample_inverse_marginal",
    "default_s_step",
    "fractional_integral_path",
    "fractional_integral_at",
    "marginal_weights",
    "stable_integral_marginals",
    "inverse_integral_marginals",
]

_ROLES = ("spectrally_negative", "positive_subordinator")


@dataclass(frozen=True)
class StableSpec:
    """Index and role of a one-sided stable marginal."""

    alpha: float
    role: str = "spectrally_negative"

    def __post_init__(self):
        if self.role not in _ROLES:
            raise ValueError(f"role must be one of {_ROLES}")
        if self.role == "spectrally_negative":
            if not (1.0 <= self.alpha <= 2.0):
                raise ValueError("spectrally negative role needs alpha in [1, 2]")
        elif not (0.0 < self.alpha < 1.0):
            raise ValueError("subordinator role needs alpha in (0, 1)")

    @property
    def scale_sigma(self) -> float:
        """Scale sigma mapping a unit CMS/Kanter draw onto our convention."""
        a = self.alpha
        if self.role == "positive_subordinator":
            return gamma_fn(1.0 - a) ** (1.0 / a)
        if a == 2.0:
            return 1.0
        if a == 1.0:
            return math.pi / 2.0
        # Gamma(1 - a) and cos(pi a / 2) are both negative on (1, 2).
        return (gamma_fn(1.0 - a) * math.cos(math.pi * a / 2.0)) ** (1.0 / a)


def sample_stable_unit(spec: StableSpec, rng: np.random.Generator, size=None):
    """Draws whose characteristic (or Laplace) exponent matches ``oracle``.

    alpha = 2 returns standard normals directly; alpha = 1 uses the
    log-corrected Chambers-Mallows-Stuck branch; the subordinator role
    uses Kanter's representation.
    """
    a = spec.alpha
    if spec.role == "positive_subordinator":
        theta = rng.uniform(0.0, math.pi, size=size)
        w = rng.standard_exponential(size=size)
        ratio = (np.sin((1.0 - a) * theta)
                 * np.sin(a * theta) ** (a / (1.0 - a))
                 / np.sin(theta) ** (1.0 / (1.0 - a)))
        return spec.scale_sigma * (ratio / w) ** ((1.0 - a) / a)
    if a == 2.0:
        return rng.standard_normal(size=size)
    v = rng.uniform(-math.pi / 2.0, math.pi / 2.0, size=size)
    w = rng.standard_exponential(size=size)
    if a == 1.0:
        half_pi = math.pi / 2.0
        bracket = (half_pi - v) * np.tan(v) + np.log(half_pi * w * np.cos(v) / (half_pi - v))
        x = (2.0 / math.pi) * bracket
        return half_pi * x - math.log(half_pi)
    skew = -1.0
    t = skew * math.tan(math.pi * a / 2.0)
    b = math.atan(t) / a
    d = (1.0 + t * t) ** (1.0 / (2.0 * a))
    x = (d * np.sin(a * (v + b)) / np.cos(v) ** (1.0 / a)
         * (np.cos(v - a * (v + b)) / w) ** ((1.0 - a) / a))
    return spec.scale_sigma * x


def sample_stable_path(alpha: float, u_max: float, n_points: int,
                       rng: np.random.Generator) -> ProcessPath:
    """Spectrally negative stable path from 0, on a uniform grid."""
    spec = StableSpec(alpha, "spectrally_negative")
    step = u_max / (n_points - 1)
    inc = step ** (1.0 / alpha) * sample_stable_unit(spec, rng, size=n_points - 1)
    values = np.concatenate([[0.0], np.cumsum(inc)])
    return ProcessPath(u_max=float(u_max), n_points=n_points, values=values)


def sample_subordinator_path(alpha: float, s_max: float, n_points: int,
                             rng: np.random.Generator) -> ProcessPath:
    """Nondecreasing stable subordinator path from 0."""
    spec = StableSpec(alpha, "positive_subordinator")
    step = s_max / (n_points - 1)
    inc = step ** (1.0 / alpha) * sample_stable_unit(spec, rng, size=n_points - 1)
    values = np.concatenate([[0.0], np.cumsum(inc)])
    return ProcessPath(u_max=float(s_max), n_points=n_points, values=values)


def default_s_step(alpha: float, u_max: float, n_points: int) -> float:
    """Subordinator time step used by the inverse-path samplers.

    The span is eight times the mean first-passage level for u_max, cut
    into 64 * n_points cells.  Because the span scales like u_max^alpha
    the discretized inverse path is exactly self-similar in law across
    u_max, at any resolution.
    """
    mean_v = u_max ** alpha / (gamma_fn(1.0 - alpha) * gamma_fn(1.0 + alpha))
    return 8.0 * mean_v / (64.0 * n_points)


def _first_passage(d_row: np.ndarray, s_step: float, u_grid: np.ndarray) -> np.ndarray:
    """Linearly interpolated first-passage times of one subordinator row.

    d_row[0] must be 0; the row must exceed u_grid[-1].
    """
    idx = np.searchsorted(d_row, u_grid, side="right")
    lo = d_row[idx - 1]
    hi = d_row[idx]
    frac = np.where(hi > lo, (u_grid - lo) / np.where(hi > lo, hi - lo, 1.0), 0.0)
    return s_step * (idx - 1 + frac)


def _subordinator_rows(alpha: float, n_rows: int, n_cells: int, s_step: float,
                       rng: np.random.Generator) -> np.ndarray:
    spec = StableSpec(alpha, "positive_subordinator")
    inc = s_step ** (1.0 / alpha) * sample_stable_unit(spec, rng, size=(n_rows, n_cells))
    rows = np.empty((n_rows, n_cells + 1))
    rows[:, 0] = 0.0
    np.cumsum(inc, axis=1, out=rows[:, 1:])
    return rows


def sample_inverse_subordinator_path(alpha: float, u_max: float, n_points: int,
                                     rng: np.random.Generator, s_step: float | None = None,
                                     extend_limit: int = 4) -> ProcessPath:
    """One path of the inverse subordinator on the uniform grid of [0, u_max]."""
    values = sample_inverse_subordinator_paths(alpha, u_max, n_points, 1, rng,
                                               s_step=s_step, extend_limit=extend_limit)
    return ProcessPath(u_max=float(u_max), n_points=n_points, values=values[0])


def sample_inverse_subordinator_paths(alpha: float, u_max: float, n_points: int,
                                      n_paths: int, rng: np.random.Generator,
                                      s_step: float | None = None,
                                      chunk_rows: int = 2048,
                                      extend_limit: int = 4) -> np.ndarray:
    """Batch of inverse-subordinator paths, shape (n_paths, n_points).

    Each row is the first-passage functional of an independent
    subordinator discretized with step ``s_step`` (see
    ``default_s_step``).  Rows whose subordinator has not yet crossed
    u_max are extended block by block, at most ``extend_limit`` times.
    """
    if not (0.0 < alpha < 1.0):
        raise ValueError("inverse subordinator needs alpha in (0, 1)")
    if s_step is None:
        s_step = default_s_step(alpha, u_max, n_points)
    n_cells = 64 * n_points
    u_grid = np.linspace(0.0, u_max, n_points)
    out = np.empty((n_paths, n_points))
    for start in range(0, n_paths, chunk_rows):
        stop = min(start + chunk_rows, n_paths)
        rows = _subordinator_rows(alpha, stop - start, n_cells, s_step, rng)
        for r in range(rows.shape[0]):
            row = rows[r]
            grew = 0
            while row[-1] <= u_max:
                if grew >= extend_limit:
                    raise RuntimeError("subordinator failed to cross u_max; "
                                       "increase s_step span or extend_limit")
                extra = _subordinator_rows(alpha, 1, n_cells, s_step, rng)[0]
                row = np.concatenate([row, row[-1] + extra[1:]])
                grew += 1
            out[start + r] = _first_passage(row, s_step, u_grid)
    return out


def sample_inverse_marginal(alpha: float, u: float, rng: np.random.Generator,
                            size=None):
    """Exact draws of the inverse subordinator at a single level u."""
    spec = StableSpec(alpha, "positive_subordinator")
    d1 = sample_stable_unit(spec, rng, size=size)
    return (u / d1) ** alpha


def fractional_integral_path(path: ProcessPath, beta: float) -> ProcessPath:
    """int_0^{u_j} (u_j - y)^beta dw(y) at every grid node u_j.

    Left-endpoint Riemann-Stieltjes sums against the nonincreasing kernel;
    beta = 0 makes the kernel measure a unit atom at u_j, so the integral
    is w itself and is returned exactly.
    """
    if beta < 0.0:
        raise ValueError("fractional integral needs beta >= 0")
    w = np.asarray(path.values, dtype=float)
    if beta == 0.0:
        return ProcessPath(path.u_max, path.n_points, w.copy())
    grid = path.grid
    out = np.zeros(path.n_points)
    for j in range(1, path.n_points):
        g = (grid[j] - grid[: j + 1]) ** beta
        out[j] = float(np.dot(w[:j], g[:j] - g[1:]))
    return ProcessPath(path.u_max, path.n_points, out)


def marginal_weights(u: float, n_grid: int, beta: float) -> np.ndarray:
    """Coefficients c_k with int_0^u (u - y)^beta dw = sum_k c_k dw_k.

    dw_k is the increment of w over the k-th cell of the uniform n_grid
    grid of [0, u]; identical (by summation by parts, provided w(0) = 0)
    to the path-level sums of ``fractional_integral_path`` at u.
    """
    if beta < 0.0:
        raise ValueError("fractional integral needs beta >= 0")
    y = np.linspace(0.0, u, n_grid)
    if beta == 0.0:
        return np.ones(n_grid - 1)
    return (u - y[1:]) ** beta


def fractional_integral_at(path: ProcessPath, beta: float, u: float) -> float:
    """The fractional integral at one grid node, via the increment form.

    Requires w(0) = 0 and u to lie on the path grid (up to rounding).
    Agrees with ``fractional_integral_path`` evaluated at the same node.
    """
    grid = path.grid
    j = int(round(u / path.u_max * (path.n_points - 1)))
    if not (0 <= j < path.n_points) or abs(grid[j] - u) > 1e-9 * max(1.0, path.u_max):
        raise ValueError(f"u={u} is not a node of the path grid")
    if j == 0:
        return float(path.values[0])
    if beta == 0.0:
        return float(path.values[j])
    dw = np.diff(path.values[: j + 1])
    c = (grid[j] - grid[1 : j + 1]) ** beta
    return float(np.dot(c, dw))


def stable_integral_marginals(alpha: float, beta: float, u: float, n_grid: int,
                              n_paths: int, rng: np.random.Generator,
                              chunk_rows: int = 8192) -> np.ndarray:
    """Draws of int_0^u (u - y)^beta dW(y) for the spectrally negative W.

    Uses independent stable increments on the n_grid grid of [0, u] and
    the summation-by-parts coefficients, so each draw is itself exactly
    stable, with scale ( sum_k c_k^alpha * step )^(1/alpha) in units of
    the reference marginal.
    """
    spec = StableSpec(alpha, "spectrally_negative")
    step = u / (n_grid - 1)
    c = marginal_weights(u, n_grid, beta)
    out = np.empty(n_paths)
    root = step ** (1.0 / alpha)
    for start in range(0, n_paths, chunk_rows):
        stop = min(start + chunk_rows, n_paths)
        inc = root * sample_stable_unit(spec, rng, size=(stop - start, n_grid - 1))
        out[start:stop] = inc @ c
    return out


def inverse_integral_marginals(alpha: float, beta: float, u: float, n_grid: int,
                               n_paths: int, rng: np.random.Generator,
                               s_step: float | None = None,
                               chunk_rows: int = 2048) -> np.ndarray:
    """Draws of int_0^u (u - y)^beta dV(y) for the inverse subordinator V."""
    c = marginal_weights(u, n_grid, beta)
    out = np.empty(n_paths)
    for start in range(0, n_paths, chunk_rows):
        stop = min(start + chunk_rows, n_paths)
        rows = sample_inverse_subordinator_paths(alpha, u, n_grid, stop - start, rng,
                                                 s_step=s_step, chunk_rows=chunk_rows)
        out[start:stop] = np.diff(rows, axis=1) @ c
    return out
