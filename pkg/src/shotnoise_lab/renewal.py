"""Renewal machinery: inter-arrival laws, paths, and limit-case data.

A renewal path starts at S_0 = 0 and records every epoch up to a
horizon plus the first overshooting epoch, so N(t) = #{k : S_k <= t} is
exact for any t inside the horizon (N(0) = 1, N(t) = 0 for t < 0).

``build_case_spec`` classifies a law/response pair into one of five
asymptotic regimes and carries the exact affine normalization
(centering and scale) under which the shot noise converges:

* a1: finite positive variance; Gaussian limit.
* a2: infinite variance with slowly varying truncated second moment
  (tail index exactly 2); Gaussian limit.
* a3: regularly varying tail with index in (1, 2); spectrally negative
  stable limit.
* a4: tail index in (0, 1); nondecreasing inverse-subordinator limit,
  no centering.
* a5: tail index exactly 1; conjectural stable(1) limit, reported as
  informational only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import gammaincc

from .response import ResponseFunction, centering_integral

__all__ = [
    "Exponential",
    "Deterministic",
    "GammaLaw",
    "Pareto",
    "ParetoLog",
    "RenewalPath",
    "sample_renewal_path",
    "solve_scale_c",
    "LimitCaseSpec",
    "build_case_spec",
]


class InterArrivalLaw:
    """Common surface for positive inter-arrival distributions."""

    family: str = ""

    #: tail index of a regularly varying tail, math.inf for laws whose
    #: tails decay faster than any power.
    @property
    def tail_index(self) -> float:
        return math.inf

    @property
    def mu(self) -> float:
        raise NotImplementedError

    @property
    def sigma2(self) -> float:
        raise NotImplementedError

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        raise NotImplementedError

    def tail(self, x):
        """P{xi > x}, vectorized."""
        raise NotImplementedError

    def tail_sv(self, x):
        """Slowly varying tail factor ell(x) = P{xi > x} * x^tail_index."""
        if not math.isfinite(self.tail_index):
            raise ValueError(f"{self.family} tail is not regularly varying")
        x = np.asarray(x, dtype=float)
        return self.tail(x) * x ** self.tail_index

    def integrated_tail(self, t: float) -> float:
        """m(t) = int_0^t P{xi > y} dy."""
        val, _ = quad(lambda y: float(np.asarray(self.tail(y))), 0.0, t,
                      epsabs=1e-12, epsrel=1e-10, limit=400)
        return float(val)


@dataclass(frozen=True)
class Exponential(InterArrivalLaw):
    rate: float = 1.0
    family: str = "exponential"

    def __post_init__(self):
        if self.rate <= 0.0:
            raise ValueError("Exponential requires rate > 0")

    @property
    def mu(self) -> float:
        return 1.0 / self.rate

    @property
    def sigma2(self) -> float:
        return 1.0 / self.rate**2

    def sample(self, rng, n):
        return rng.exponential(scale=1.0 / self.rate, size=n)

    def tail(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x > 0.0, np.exp(-self.rate * np.maximum(x, 0.0)), 1.0)

    def integrated_tail(self, t: float) -> float:
        return -math.expm1(-self.rate * t) / self.rate


@dataclass(frozen=True)
class Deterministic(InterArrivalLaw):
    a: float = 1.0
    family: str = "deterministic"

    def __post_init__(self):
        if self.a <= 0.0:
            raise ValueError("Deterministic requires a > 0")

    @property
    def mu(self) -> float:
        return self.a

    @property
    def sigma2(self) -> float:
        return 0.0

    def sample(self, rng, n):
        return np.full(n, self.a, dtype=float)

    def tail(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x < self.a, 1.0, 0.0)

    def integrated_tail(self, t: float) -> float:
        return min(t, self.a)


@dataclass(frozen=True)
class GammaLaw(InterArrivalLaw):
    shape: float = 2.0
    rate: float = 1.0
    family: str = "gamma"

    def __post_init__(self):
        if self.shape <= 0.0 or self.rate <= 0.0:
            raise ValueError("GammaLaw requires shape > 0 and rate > 0")

    @property
    def mu(self) -> float:
        return self.shape / self.rate

    @property
    def sigma2(self) -> float:
        return self.shape / self.rate**2

    def sample(self, rng, n):
        return rng.gamma(self.shape, scale=1.0 / self.rate, size=n)

    def tail(self, x):
        x = np.asarray(x, dtype=float)
        return gammaincc(self.shape, self.rate * np.maximum(x, 0.0))


@dataclass(frozen=True)
class Pareto(InterArrivalLaw):
    """P{xi > x} = (x / xm)^(-alpha) for x >= xm."""

    alpha: float = 1.5
    xm: float = 1.0
    family: str = "pareto"

    def __post_init__(self):
        if self.alpha <= 0.0 or self.xm <= 0.0:
            raise ValueError("Pareto requires alpha > 0 and xm > 0")

    @property
    def tail_index(self) -> float:
        return self.alpha

    @property
    def mu(self) -> float:
        if self.alpha <= 1.0:
            return math.inf
        return self.alpha * self.xm / (self.alpha - 1.0)

    @property
    def sigma2(self) -> float:
        if self.alpha <= 2.0:
            return math.inf
        a = self.alpha
        return self.xm**2 * a / ((a - 1.0) ** 2 * (a - 2.0))

    def sample(self, rng, n):
        # Inverse transform on the exact tail; 1 - U lies in (0, 1].
        u = 1.0 - rng.random(n)
        return self.xm * u ** (-1.0 / self.alpha)

    def tail(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x > self.xm, (np.maximum(x, self.xm) / self.xm) ** (-self.alpha), 1.0)

    def truncated_second_moment(self, x: float) -> float:
        """E[xi^2 1{xi <= x}], closed form (slowly varying when alpha == 2)."""
        if x <= self.xm:
            return 0.0
        a, xm = self.alpha, self.xm
        if a == 2.0:
            return 2.0 * xm**2 * math.log(x / xm)
        return a * xm**2 / (2.0 - a) * ((x / xm) ** (2.0 - a) - 1.0)

    def integrated_tail(self, t: float) -> float:
        if t <= self.xm:
            return float(t)
        a, xm = self.alpha, self.xm
        if a == 1.0:
            return xm + xm * math.log(t / xm)
        return xm + xm / (a - 1.0) * (1.0 - (t / xm) ** (1.0 - a))


@dataclass(frozen=True)
class ParetoLog(InterArrivalLaw):
    """P{xi > x} = (x / xm)^(-alpha) (1 + ln(x / xm))^p for x >= xm.

    The tail is a valid (nonincreasing) survival function iff p <= alpha.
    Sampling uses exact inverse transform: with u = ln(x / xm) >= 0 the
    tail equation -alpha u + p log(1 + u) = log(1 - U) is strictly
    decreasing in u and is solved by vectorized bisection.
    """

    alpha: float = 1.5
    xm: float = 1.0
    p: float = 0.5
    family: str = "pareto_log"

    def __post_init__(self):
        if self.alpha <= 0.0 or self.xm <= 0.0:
            raise ValueError("ParetoLog requires alpha > 0 and xm > 0")
        if self.p > self.alpha:
            raise ValueError("ParetoLog requires p <= alpha (tail monotonicity)")

    @property
    def tail_index(self) -> float:
        return self.alpha

    @property
    def mu(self) -> float:
        if self.alpha <= 1.0:
            return math.inf
        return self.xm * (1.0 + self._exp_moment(1.0))

    @property
    def sigma2(self) -> float:
        if self.alpha <= 2.0:
            return math.inf
        second = self.xm**2 * (1.0 + 2.0 * self._exp_moment(2.0))
        return second - self.mu**2

    def _exp_moment(self, r: float) -> float:
        # int_0^inf e^{(r - alpha) u} (1 + u)^p du, finite for r < alpha.
        val, _ = quad(lambda v: math.exp((r - self.alpha) * v) * (1.0 + v) ** self.p,
                      0.0, math.inf, epsabs=1e-12, epsrel=1e-10, limit=400)
        return float(val)

    def sample(self, rng, n):
        target = np.log(1.0 - rng.random(n))  # log of the tail level, <= 0
        lo = np.zeros(n)
        hi = np.maximum(1.0, -2.0 * target / self.alpha)
        for _ in range(64):
            short = -self.alpha * hi + self.p * np.log1p(hi) > target
            if not np.any(short):
                break
            hi = np.where(short, 2.0 * hi, hi)
        for _ in range(100):
            mid = 0.5 * (lo + hi)
            above = -self.alpha * mid + self.p * np.log1p(mid) >= target
            lo = np.where(above, mid, lo)
            hi = np.where(above, hi, mid)
        return self.xm * np.exp(0.5 * (lo + hi))

    def tail(self, x):
        x = np.asarray(x, dtype=float)
        u = np.log(np.maximum(x, self.xm) / self.xm)
        val = np.exp(-self.alpha * u) * (1.0 + u) ** self.p
        return np.where(x > self.xm, val, 1.0)

    def truncated_second_moment(self, x: float) -> float:
        """E[xi^2 1{xi <= x}] for alpha == 2, closed form."""
        if self.alpha != 2.0:
            raise ValueError("closed-form truncated second moment needs alpha == 2")
        if x <= self.xm:
            return 0.0
        big_u = math.log(x / self.xm)
        p = self.p
        if p == -1.0:
            val = 2.0 * math.log1p(big_u) + 1.0 - 1.0 / (1.0 + big_u)
        else:
            val = (2.0 * ((1.0 + big_u) ** (p + 1.0) - 1.0) / (p + 1.0)
                   - ((1.0 + big_u) ** p - 1.0))
        return self.xm**2 * val

    def integrated_tail(self, t: float) -> float:
        if t <= self.xm:
            return float(t)
        big_u = math.log(t / self.xm)
        if self.alpha == 1.0:
            if self.p == -1.0:
                return self.xm * (1.0 + math.log1p(big_u))
            return self.xm * (1.0 + ((1.0 + big_u) ** (self.p + 1.0) - 1.0) / (self.p + 1.0))
        val, _ = quad(lambda v: math.exp((1.0 - self.alpha) * v) * (1.0 + v) ** self.p,
                      0.0, big_u, epsabs=1e-12, epsrel=1e-10, limit=400)
        return self.xm * (1.0 + float(val))


@dataclass
class RenewalPath:
    """Epochs S_0 = 0 < S_1 < ... up to the horizon plus one overshoot."""

    horizon: float
    jumps: np.ndarray

    def __post_init__(self) -> None:
        if self.jumps.size < 1 or self.jumps[0] != 0.0:
            raise ValueError("renewal path must start at S_0 = 0")
        if np.any(np.diff(self.jumps) < 0.0):
            raise ValueError("renewal epochs must be nondecreasing")
        if self.jumps[-1] <= self.horizon:
            raise ValueError("last epoch must pass the horizon so counts "
                             "on [0, horizon] are exact")

    def count_at(self, t: float) -> int:
        """N(t) = #{k : S_k <= t}; exact for t <= horizon."""
        if t > self.horizon:
            raise ValueError(f"query at t={t} beyond horizon {self.horizon}")
        if t < 0.0:
            return 0
        return int(np.searchsorted(self.jumps, t, side="right"))


def sample_renewal_path(law: InterArrivalLaw, horizon: float,
                        rng: np.random.Generator) -> RenewalPath:
    """Sample epochs until the horizon is passed, in geometric blocks."""
    if horizon < 0.0:
        raise ValueError("sample_renewal_path requires horizon >= 0")
    if math.isfinite(law.mu):
        block = max(16, int(1.05 * horizon / law.mu) + 16)
    else:
        block = 64
    pieces = []
    last = 0.0
    while last <= horizon:
        seg = np.cumsum(law.sample(rng, block)) + last
        pieces.append(seg)
        last = float(seg[-1])
        block = min(2 * block, 4_000_000)
    jumps = np.concatenate([np.zeros(1)] + pieces)
    keep = int(np.searchsorted(jumps, horizon, side="right"))
    return RenewalPath(horizon=float(horizon), jumps=jumps[: keep + 1])


def solve_scale_c(law: InterArrivalLaw, t: float, *,
                  second_moment: bool = False) -> float:
    """Solve the scale equation t * ell(c) / c^kappa = 1 for c.

    For the heavy-tail regimes ell is the slowly varying tail factor and
    kappa the tail index; with ``second_moment=True`` (tail index 2,
    infinite variance) ell is the truncated second moment and kappa = 2.
    Monotone bisection; the residual |t ell(c) / c^kappa - 1| of the
    returned root is below 1e-9.
    """
    if t <= 0.0:
        raise ValueError("solve_scale_c requires t > 0")
    if second_moment:
        if getattr(law, "alpha", None) != 2.0:
            raise ValueError("second-moment scale requires tail index exactly 2")
        kappa = 2.0
        ell = law.truncated_second_moment
        floor = 2.0 * law.xm  # keep the bracket in the monotone region
    else:
        kappa = law.tail_index
        if not math.isfinite(kappa):
            raise ValueError(f"{law.family} has no regularly varying tail")
        ell = lambda x: float(np.asarray(law.tail_sv(x)))
        floor = 0.0

    def g(c: float) -> float:
        return t * ell(c) / c**kappa

    c0 = t ** (1.0 / kappa)
    for _ in range(3):
        val = ell(c0)
        if val <= 0.0:
            break
        c0 = (t * val) ** (1.0 / kappa)
    p = abs(getattr(law, "p", 0.0))
    lo = max(c0 / 64.0, floor, 1e-300)
    hi = max(64.0 * c0 * (1.0 + math.log1p(t)) ** (p / kappa), 2.0 * lo)
    for _ in range(200):
        if g(lo) >= 1.0:
            break
        lo = max(lo / 8.0, floor, 1e-300)
        if lo == floor:
            break
    for _ in range(200):
        if g(hi) <= 1.0:
            break
        hi *= 8.0
    if not (g(lo) >= 1.0 >= g(hi)):
        raise RuntimeError(f"scale bracket failed for {law.family} at t={t}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g(mid) >= 1.0:
            lo = mid
        else:
            hi = mid
    c = 0.5 * (lo + hi)
    if abs(g(c) - 1.0) > 1e-9:
        raise RuntimeError(f"scale residual {abs(g(c) - 1.0):.3e} above 1e-9 at t={t}")
    return float(c)


@dataclass(frozen=True)
class LimitCaseSpec:
    """Regime tag plus the exact normalization for the limit statement."""

    case: str
    law: InterArrivalLaw
    response: ResponseFunction
    alpha_limit: float
    beta: float
    informational: bool = False

    def _h_at(self, t: float) -> float:
        return float(np.asarray(self.response.eval(np.array([t])))[0])

    def _a5_c(self, t: float) -> tuple[float, float]:
        m_t = self.law.integrated_tail(t)
        return solve_scale_c(self.law, t / m_t), m_t

    def scale_fn(self, t: float) -> float:
        """The denominator a(t); positive for t beyond the law's origin."""
        h_t = self._h_at(t)
        law = self.law
        if self.case == "a1":
            return h_t * math.sqrt(law.sigma2 * t / law.mu**3)
        if self.case == "a2":
            return h_t * law.mu ** (-1.5) * solve_scale_c(law, t, second_moment=True)
        if self.case == "a3":
            a = law.tail_index
            return h_t * law.mu ** (-1.0 - 1.0 / a) * solve_scale_c(law, t)
        if self.case == "a4":
            return h_t / float(np.asarray(law.tail(t)))
        c, m_t = self._a5_c(t)
        return h_t * c / m_t

    def center_fn(self, t: float, u: float) -> float:
        """The centering b(t, u) subtracted from X(u t)."""
        if self.case == "a4":
            return 0.0
        integral = centering_integral(self.response, u * t)
        if self.case == "a5":
            c, _ = self._a5_c(t)
            return integral / self.law.integrated_tail(c)
        return integral / self.law.mu


def build_case_spec(law: InterArrivalLaw, h: ResponseFunction) -> LimitCaseSpec:
    """Classify (law, response) into its limit regime.

    Raises for the degenerate Deterministic law (zero variance makes the
    Gaussian normalization collapse) and for tail index 2 without a
    closed-form truncated second moment.
    """
    sigma2 = law.sigma2
    if sigma2 == 0.0:
        raise ValueError("degenerate inter-arrival variance: no nondegenerate limit case")
    if math.isfinite(sigma2):
        return LimitCaseSpec("a1", law, h, alpha_limit=2.0, beta=h.beta)
    alpha = law.tail_index
    if alpha == 2.0:
        if not hasattr(law, "truncated_second_moment"):
            raise ValueError("tail index 2 needs a closed-form truncated second moment")
        return LimitCaseSpec("a2", law, h, alpha_limit=2.0, beta=h.beta)
    if 1.0 < alpha < 2.0:
        return LimitCaseSpec("a3", law, h, alpha_limit=alpha, beta=h.beta)
    if alpha == 1.0:
        return LimitCaseSpec("a5", law, h, alpha_limit=1.0, beta=h.beta,
                             informational=True)
    if 0.0 < alpha < 1.0:
        return LimitCaseSpec("a4", law, h, alpha_limit=alpha, beta=h.beta)
    raise ValueError(f"no supported limit regime for {law.family}")
