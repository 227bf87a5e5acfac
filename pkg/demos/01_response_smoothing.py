"""Response functions and exponential-window smoothing.

The laboratory works with eventually nondecreasing responses h that are
regularly varying at infinity.  Discontinuous responses (step CDFs) are
handled through the smoothed version

    h*(t) = E h(t - theta),  theta ~ Exp(1), truncated at t,

which is continuous, sits below any nondecreasing h, and stays
asymptotically equivalent to it: the gap integral int_0^t (h - h*) grows
like h(t) itself, one mean-one lag worth of mass.

Run from the repository root:  python3 demos/01_response_smoothing.py
"""

import os

import numpy as np

from shotnoise_lab.response import (
    PowerResponse,
    StepCdfResponse,
    smooth_response,
    smoothing_gap_integral,
)
from shotnoise_lab.svgplot import line_plot, save_svg

OUT = os.path.join(os.path.dirname(__file__), "output")


def main():
    os.makedirs(OUT, exist_ok=True)
    x = np.linspace(0.0, 8.0, 321)

    # a step response and its smoothing
    step = StepCdfResponse(atoms=(1.0, 3.0, 5.0), weights=(1.0, 2.0, 0.5))
    step_s = smooth_response(step)
    series = [
        ("step response", x, step.eval(x)),
        ("smoothed", x, step_s.eval(x)),
    ]
    save_svg(line_plot(series, title="step CDF response and its smoothing"),
             os.path.join(OUT, "smoothing_step.svg"))

    # closed form for the linear response: h*(t) = t - 1 + exp(-t)
    lin = PowerResponse(beta=1.0)
    lin_s = smooth_response(lin)
    closed = x - 1.0 + np.exp(-x)
    closed[x < 0] = 0.0
    worst = float(np.max(np.abs(lin_s.eval(x) - np.maximum(closed, 0.0))))
    print(f"linear response: max |h*(t) - (t - 1 + e^-t)| = {worst:.2e}")

    # the gap integral tracks h(t): ratio -> 1 for growing h
    print("gap integral ratio int_0^t (h - h*) / h(t) at t = 1e4:")
    for beta in (0.5, 1.0, 2.0):
        h = PowerResponse(beta=beta)
        ratio = smoothing_gap_integral(h, 1e4) / float(h.eval(np.array([1e4]))[0])
        print(f"  beta = {beta}: {ratio:.4f}")

    print(f"wrote {OUT}/smoothing_step.svg")


if __name__ == "__main__":
    main()
