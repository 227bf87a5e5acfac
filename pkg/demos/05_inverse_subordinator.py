"""The inverse stable subordinator and its fractional integrals.

When inter-arrival times have tail index alpha in (0, 1) the normalized
shot noise converges, without centering, to

    Z_{alpha,beta}(u) = int_0^u (u - y)^beta dV_alpha(y),

where V_alpha is the inverse of an alpha-stable subordinator.  Paths of
V are sampled by first-passage of a finely discretized subordinator;
the marginal V_alpha(u) also has the exact representation
(u / D_alpha(1))^alpha, which cross-checks the path sampler.  All
moments of Z are known in closed form.

Run from the repository root:  python3 demos/05_inverse_subordinator.py
"""

import os

import numpy as np

from shotnoise_lab.limits import (
    inverse_integral_marginals,
    sample_inverse_marginal,
    sample_inverse_subordinator_path,
    sample_inverse_subordinator_paths,
)
from shotnoise_lab.oracle import z_moment
from shotnoise_lab.stats import ks_two_sample
from shotnoise_lab.streams import substream
from shotnoise_lab.svgplot import line_plot, save_svg

OUT = os.path.join(os.path.dirname(__file__), "output")


def main():
    os.makedirs(OUT, exist_ok=True)
    alpha = 0.5

    # path endpoints vs the exact marginal representation
    rng = substream(37, 0)
    ends = sample_inverse_subordinator_paths(alpha, 1.0, 129, 8000, rng)[:, -1]
    exact = sample_inverse_marginal(alpha, 1.0, rng, size=8000)
    d, p = ks_two_sample(ends, exact)
    print(f"V path endpoint vs exact marginal: KS d = {d:.4f} (p = {p:.3f})")
    print(f"mean V(1) = {ends.mean():.4f} vs 2/pi = {2/np.pi:.4f}")

    # moments of Z against the closed-form ladder
    beta = 1.0
    rng = substream(37, 1)
    z = inverse_integral_marginals(alpha, beta, 1.0, 257, 20_000, rng)
    print("Z_{0.5,1}(1) moments vs closed form:")
    for k in (1, 2, 3):
        print(f"  k = {k}: {np.mean(z**k):.5f} vs {z_moment(alpha, beta, 1.0, k):.5f}")

    # staircase paths: V is constant exactly where the subordinator jumps
    series = []
    for i in range(3):
        path = sample_inverse_subordinator_path(alpha, 1.0, 257, substream(37, 2, i))
        series.append((f"path {i}", path.grid, path.values))
    save_svg(line_plot(series, title="inverse subordinator paths, alpha = 0.5"),
             os.path.join(OUT, "inverse_paths.svg"))
    print(f"wrote {OUT}/inverse_paths.svg")


if __name__ == "__main__":
    main()
