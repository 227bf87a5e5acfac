"""Closed-form references for the limit processes.

The limits verified by this package are fractionally integrated Levy
processes

    Y(u) = int_{[0,u]} (u - y)^beta dW(y),

where W is either a Brownian motion, a spectrally negative stable
process with index alpha in (1, 2), or (after replacing W by an inverse
subordinator V) a nondecreasing process with index alpha in (0, 1).
This module collects every closed form the simulations are checked
against: log characteristic functions, moment formulas, marginal scale
identities, and Gaussian covariances.  Everything here is deterministic
and cheap; the samplers in :mod:`shotnoise_lab.limits` are validated
against these values, never the other way around.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad, simpson
from scipy.special import gammaln

__all__ = [
    "stable_log_cf",
    "integral_log_cf",
    "z_moment",
    "z_moment_from_phi",
    "phi_alpha",
    "p3_scale",
    "gaussian_moments",
    "gaussian_cov",
    "hurst_exponent",
]

_CASES = ("a1", "a2", "a3", "a4", "a5")


def stable_log_cf(alpha: float, z: float) -> complex:
    """Log characteristic function of the unit-time stable marginal.

    For ``alpha`` in (1, 2) the marginal of the limit's driving process
    at time 1 has

        log E exp(i z W(1))
            = -|z|^alpha * Gamma(1 - alpha)
              * (cos(pi alpha / 2) + i sin(pi alpha / 2) sgn z),

    which is spectrally negative: Gamma(1 - alpha) cos(pi alpha / 2) is
    positive on (1, 2), so the real part is negative and the process has
    no positive jumps.  For ``alpha == 1`` the marginal is the Cauchy-like
    law with

        log E exp(i z W(1)) = -|z| (pi/2 - i log|z| sgn z).

    Parameters
    ----------
    alpha : float
        Stability index, in (1, 2) or exactly 1.
    z : float
        Argument of the characteristic function.

    Returns
    -------
    complex
        ``log E exp(i z W(1))``; 0 for ``z == 0``.
    """
    if not (alpha == 1.0 or 1.0 < alpha < 2.0):
        raise ValueError("stable_log_cf requires alpha in (1, 2) or alpha == 1")
    if z == 0.0:
        return complex(0.0)
    az = abs(z)
    sgn = 1.0 if z > 0 else -1.0
    if alpha == 1.0:
        return -az * (math.pi / 2.0 - 1j * math.log(az) * sgn)
    g = math.gamma(1.0 - alpha)
    half = math.pi * alpha / 2.0
    return -(az ** alpha) * g * (math.cos(half) + 1j * math.sin(half) * sgn)


def _unit_log_cf(alpha: float, z: np.ndarray) -> np.ndarray:
    """Vectorized log CF of the unit draw, with alpha == 2 meaning N(0, 1)."""
    z = np.asarray(z, dtype=float)
    if alpha == 2.0:
        return -0.5 * z * z + 0j
    az = np.abs(z)
    sgn = np.sign(z)
    if alpha == 1.0:
        with np.errstate(divide="ignore"):
            lg = np.where(az > 0, np.log(np.where(az > 0, az, 1.0)), 0.0)
        return np.where(az > 0, -az * (math.pi / 2.0 - 1j * lg * sgn), 0.0 + 0j)
    g = math.gamma(1.0 - alpha)
    half = math.pi * alpha / 2.0
    return -(az ** alpha) * g * (math.cos(half) + 1j * math.sin(half) * sgn)


def integral_log_cf(f_values, a: float, b: float, alpha: float, z: float) -> complex:
    """Log CF of ``int_(a,b] f(b - y) dW(y)`` for tabulated ``f``.

    Because W has independent increments,

        log E exp(i z int_(a,b] f(b - y) dW(y))
            = int_(a,b] log E exp(i z f(b - y) W(1)) dy,

    and this function evaluates the right-hand side by trapezoid
    quadrature on the uniform grid carrying ``f_values``.  ``alpha == 2``
    uses the Gaussian convention ``log E exp(i x W(1)) = -x^2 / 2``, so
    the real part reduces to ``-(z^2 / 2) * int f^2``.

    Parameters
    ----------
    f_values : array_like
        Values of ``f`` on the uniform grid over ``[a, b]`` (at least 2).
    a, b : float
        Endpoints, ``a < b``.
    alpha : float
        1, in (1, 2), or 2.
    z : float
        CF argument.
    """
    f = np.asarray(f_values, dtype=float)
    if f.ndim != 1 or f.size < 2:
        raise ValueError("f_values must be a 1d table with at least 2 points")
    if not b > a:
        raise ValueError("integral_log_cf requires b > a")
    if not (alpha == 2.0 or alpha == 1.0 or 1.0 < alpha < 2.0):
        raise ValueError("integral_log_cf requires alpha in (1, 2], or alpha == 1")
    # f(b - y) for y on the same grid is the reversed table.
    integrand = _unit_log_cf(alpha, z * f[::-1])
    dy = (b - a) / (f.size - 1)
    return complex(np.trapezoid(integrand, dx=dy))


def z_moment(alpha: float, beta: float, u: float, k: int) -> float:
    """k-th moment of the inverse-subordinator integral marginal.

    For the nondecreasing limit ``Z(u) = int_[0,u] (u - y)^beta dV(y)``
    with V the inverse of the subordinator whose Laplace exponent is
    ``Gamma(1 - alpha) s^alpha``,

        E Z(u)^k = u^{k (alpha + beta)} * k! / Gamma(1 - alpha)^k
                   * prod_{j=1}^{k} Gamma(beta + 1 + (j-1)(alpha + beta))
                                    / Gamma(j (alpha + beta) + 1).

    For ``beta == 0`` the product telescopes and Z(u) = V(u) has

        E V(u)^k = k! u^{k alpha} / (Gamma(1 - alpha)^k Gamma(k alpha + 1)),

    which this function returns on that branch.  Evaluation is done in
    log space for stability at large k.
    """
    _check_z_args(alpha, beta, u, k)
    if k == 0:
        return 1.0
    if beta == 0.0:
        log_m = (gammaln(k + 1.0) - k * gammaln(1.0 - alpha)
                 - gammaln(k * alpha + 1.0))
        return float(np.exp(log_m) * u ** (k * alpha))
    s = alpha + beta
    j = np.arange(1, k + 1, dtype=float)
    log_m = (gammaln(k + 1.0) - k * gammaln(1.0 - alpha)
             + np.sum(gammaln(beta + 1.0 + (j - 1.0) * s) - gammaln(j * s + 1.0)))
    return float(np.exp(log_m) * u ** (k * s))


def phi_alpha(alpha: float, x: float) -> float:
    """The moment-recursion factor Phi_alpha(x).

    ``Phi_alpha(x) = Gamma(1 - alpha) Gamma(alpha x + 1)
                     / Gamma(alpha (x - 1) + 1) - 1``
    for alpha in (0, 1) and ``x > 1 - 1/alpha`` (both Gamma arguments
    positive).  ``Phi_alpha(0) = 0`` and Phi is increasing in x.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError("phi_alpha requires alpha in (0, 1)")
    if alpha * x + 1.0 <= 0.0 or alpha * (x - 1.0) + 1.0 <= 0.0:
        raise ValueError("phi_alpha argument out of the positive-Gamma domain")
    log_v = (gammaln(1.0 - alpha) + gammaln(alpha * x + 1.0)
             - gammaln(alpha * (x - 1.0) + 1.0))
    return float(np.exp(log_v) - 1.0)


def z_moment_from_phi(alpha: float, beta: float, u: float, k: int) -> float:
    """Same moment as :func:`z_moment`, via the Phi_alpha product form.

    With ``c = (alpha + beta) / alpha``,

        E Z(1)^k = k! / prod_{j=1}^{k} (Phi_alpha(c j) + 1),

    scaled by ``u^{k (alpha + beta)}``.  Kept as an independent route so
    the two expressions can be checked against each other.
    """
    _check_z_args(alpha, beta, u, k)
    if k == 0:
        return 1.0
    c = (alpha + beta) / alpha
    prod = 1.0
    for j in range(1, k + 1):
        prod *= phi_alpha(alpha, c * j) + 1.0
    return float(math.factorial(k) / prod * u ** (k * (alpha + beta)))


def p3_scale(alpha: float, beta: float, u: float) -> float:
    """Marginal scale identity for the stable integral.

    ``Y(u) = int_[0,u] (u - y)^beta dW(y)`` has the same one-dimensional
    law as ``(u^{alpha beta + 1} / (alpha beta + 1))^{1/alpha} W(1)``,
    where alpha is the index of W (alpha = 2 for Brownian motion, in
    which case the square of this value is the variance of Y(u)).
    """
    if not 0.0 < alpha <= 2.0:
        raise ValueError("p3_scale requires alpha in (0, 2]")
    if beta < 0.0:
        raise ValueError("p3_scale requires beta >= 0")
    if u <= 0.0:
        raise ValueError("p3_scale requires u > 0")
    return float((u ** (alpha * beta + 1.0) / (alpha * beta + 1.0)) ** (1.0 / alpha))


def gaussian_moments(f_values, a: float, b: float) -> tuple[float, float]:
    """Second and fourth moments of a Wiener integral of tabulated ``f``.

    For ``I = int_a^b f dW`` with W Brownian, ``E I^2 = int f^2`` and
    ``E I^4 = 3 (int f^2)^2``.  The integral is evaluated by Simpson's
    rule on the tabulated grid, and the fourth moment is exactly three
    times the squared second moment by construction.
    """
    f = np.asarray(f_values, dtype=float)
    if f.ndim != 1 or f.size < 3:
        raise ValueError("f_values must be a 1d table with at least 3 points")
    if not b > a:
        raise ValueError("gaussian_moments requires b > a")
    dy = (b - a) / (f.size - 1)
    m2 = float(simpson(f * f, dx=dy))
    return m2, 3.0 * m2 * m2


def gaussian_cov(beta: float, u: float, v: float) -> float:
    """Covariance of the Gaussian limit at two times.

    ``Cov(Y(v), Y(u)) = int_0^v (u - y)^beta (v - y)^beta dy`` for
    ``u >= v > 0`` (independent Brownian increments).  ``beta == 0``
    reduces to ``min(u, v)``.  Adaptive quadrature, absolute and
    relative tolerance 1e-12.
    """
    if beta < 0.0:
        raise ValueError("gaussian_cov requires beta >= 0")
    if not u >= v > 0.0:
        raise ValueError("gaussian_cov requires u >= v > 0")
    if beta == 0.0:
        return float(v)
    val, _ = quad(lambda y: (u - y) ** beta * (v - y) ** beta, 0.0, v,
                  epsabs=1e-12, epsrel=1e-12, limit=200)
    return float(val)


def hurst_exponent(case: str, alpha: float, beta: float) -> float:
    """Self-similarity index of the limit for a given regime.

    The Gaussian and stable regimes (a1, a2, a3, a5) scale with Hurst
    index ``beta + 1/alpha`` where alpha is the limit's stability index
    (2 for a1/a2, 1 for a5); the inverse-subordinator regime (a4) scales
    with ``beta + alpha``.
    """
    if case not in _CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {_CASES}")
    if beta < 0.0:
        raise ValueError("hurst_exponent requires beta >= 0")
    if case == "a4":
        if not 0.0 < alpha < 1.0:
            raise ValueError("case a4 requires alpha in (0, 1)")
        return float(beta + alpha)
    if case in ("a1", "a2"):
        alpha = 2.0
    elif case == "a5":
        alpha = 1.0
    elif not 1.0 < alpha < 2.0:
        raise ValueError("case a3 requires alpha in (1, 2)")
    return float(beta + 1.0 / alpha)


def _check_z_args(alpha: float, beta: float, u: float, k: int) -> None:
    if not 0.0 < alpha < 1.0:
        raise ValueError("z moments require alpha in (0, 1)")
    if beta < 0.0:
        raise ValueError("z moments require beta >= 0")
    if u <= 0.0:
        raise ValueError("z moments require u > 0")
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError("z moments require integer k >= 0")
