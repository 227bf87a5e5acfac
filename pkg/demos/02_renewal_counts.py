"""Renewal counting processes across the inter-arrival families.

Each law is classified by the variance/tail structure of the
inter-arrival time into one of five normalization regimes:

    a1  finite variance            Gaussian limit
    a2  tail index 2, sigma2=inf   Gaussian limit, log-corrected scale
    a3  tail index in (1, 2)       spectrally negative stable limit
    a4  tail index in (0, 1)       inverse subordinator limit, no centering
    a5  tail index 1               boundary regime, reported unguarded

Run from the repository root:  python3 demos/02_renewal_counts.py
"""

import os

import numpy as np

from shotnoise_lab.renewal import (
    Exponential,
    GammaLaw,
    Pareto,
    ParetoLog,
    build_case_spec,
    sample_renewal_path,
)
from shotnoise_lab.response import PowerResponse
from shotnoise_lab.streams import substream
from shotnoise_lab.svgplot import line_plot, save_svg

OUT = os.path.join(os.path.dirname(__file__), "output")


def main():
    os.makedirs(OUT, exist_ok=True)
    laws = [
        ("exponential(1)", Exponential(rate=1.0)),
        ("gamma(2, 2)", GammaLaw(shape=2.0, rate=2.0)),
        ("pareto(2.5)", Pareto(alpha=2.5, xm=1.0)),
        ("pareto(2)", Pareto(alpha=2.0, xm=1.0)),
        ("pareto-log(2, p=1)", ParetoLog(alpha=2.0, xm=1.0, p=1.0)),
        ("pareto(1.5)", Pareto(alpha=1.5, xm=1.0)),
        ("pareto(1)", Pareto(alpha=1.0, xm=1.0)),
        ("pareto(0.5)", Pareto(alpha=0.5, xm=1.0)),
    ]
    h = PowerResponse(beta=1.0)
    print(f"{'law':22s} {'case':5s} {'mu':>8s} {'sigma2':>8s}")
    for name, law in laws:
        spec = build_case_spec(law, h)
        mu = f"{law.mu:.3f}" if np.isfinite(law.mu) else "inf"
        s2 = f"{law.sigma2:.3f}" if np.isfinite(law.sigma2) else "inf"
        flag = " (informational)" if spec.informational else ""
        print(f"{name:22s} {spec.case:5s} {mu:>8s} {s2:>8s}{flag}")

    # a few count paths on one horizon, one per regime
    horizon = 200.0
    grid = np.linspace(0.0, horizon, 401)
    series = []
    laws = (("exponential(1)", Exponential(rate=1.0)),
            ("pareto(1.5)", Pareto(alpha=1.5, xm=1.0)),
            ("pareto(0.5)", Pareto(alpha=0.5, xm=1.0)))
    for i, (name, law) in enumerate(laws):
        path = sample_renewal_path(law, horizon, substream(11, 0, i))
        counts = np.searchsorted(path.jumps, grid, side="right")
        series.append((name, grid, counts.astype(float)))
    save_svg(line_plot(series, title="renewal counts N(t), one path each"),
             os.path.join(OUT, "renewal_counts.svg"))
    print(f"wrote {OUT}/renewal_counts.svg")


if __name__ == "__main__":
    main()
