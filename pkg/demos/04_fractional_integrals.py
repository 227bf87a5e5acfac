"""Fractional integrals of stable paths and their marginal laws.

The Gaussian-case limit of the normalized shot noise is, up to the
model's constants, the Riemann-Stieltjes integral

    Y_beta(u) = int_0^u (u - y)^beta dB(y),

and the heavy-tail case replaces B by a spectrally negative stable
process.  Because increments are independent and exactly stable, the
discretized integral is itself exactly stable with a computable scale,
which gives sharp checks:

  * variance of the Gaussian case vs int_0^u (u-y)^{2 beta} dy,
  * the alpha-stable case vs oracle-scaled unit draws,
  * exact self-similarity Y(2u) = 2^{beta + 1/alpha} Y(u) in law.

Run from the repository root:  python3 demos/04_fractional_integrals.py
"""

import math
import os

import numpy as np

from shotnoise_lab.limits import (
    StableSpec,
    sample_stable_path,
    fractional_integral_path,
    sample_stable_unit,
    stable_integral_marginals,
)
from shotnoise_lab.oracle import p3_scale
from shotnoise_lab.stats import ks_two_sample
from shotnoise_lab.streams import substream
from shotnoise_lab.svgplot import line_plot, save_svg

OUT = os.path.join(os.path.dirname(__file__), "output")


def main():
    os.makedirs(OUT, exist_ok=True)

    # Gaussian case: Var Y_1(1) = 1/3
    rng = substream(31, 0)
    draws = stable_integral_marginals(2.0, 1.0, 1.0, 1025, 50_000, rng)
    print(f"Gaussian beta=1: var = {np.var(draws):.5f} vs 1/3 = {1/3:.5f}")

    # stable case: Y_{1.5,1}(1) equals a scaled unit stable draw in law
    alpha, beta = 1.5, 1.0
    rng = substream(31, 1)
    y = stable_integral_marginals(alpha, beta, 1.0, 513, 50_000, rng)
    ref = p3_scale(alpha, beta, 1.0) * sample_stable_unit(StableSpec(alpha), rng,
                                                          size=50_000)
    d, p = ks_two_sample(y, ref)
    print(f"stable alpha=1.5 beta=1: KS vs oracle-scaled unit draws "
          f"d = {d:.4f}, p = {p:.3f}")

    # self-similarity across u
    hurst = beta + 1.0 / alpha
    y2 = stable_integral_marginals(alpha, beta, 2.0, 513, 50_000, substream(31, 2))
    d, p = ks_two_sample(y2 / 2.0**hurst, y)
    print(f"self-similarity Y(2)/2^{hurst:.3f} vs Y(1): d = {d:.4f}, p = {p:.3f}")

    # a few sample paths of the integral, computed path-wise
    grid_series = []
    for i in range(3):
        w = sample_stable_path(alpha, 1.0, 257, substream(31, 3, i))
        yi = fractional_integral_path(w, beta)
        grid_series.append((f"path {i}", w.grid, yi.values))
    save_svg(line_plot(grid_series, title="fractional integrals of stable paths"),
             os.path.join(OUT, "fractional_paths.svg"))
    print(f"wrote {OUT}/fractional_paths.svg")


if __name__ == "__main__":
    main()
