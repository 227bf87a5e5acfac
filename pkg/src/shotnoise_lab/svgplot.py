"""Tiny dependency-free SVG plots.

Line and ECDF charts sufficient for the demo scripts and CLI output.
Rendering is fully deterministic: fixed palette, fixed viewport, fixed
number formatting, no ids or timestamps, so identical data yields
byte-identical files.
"""

from __future__ import annotations

import numpy as np

__all__ = ["line_plot", "ecdf_plot", "save_svg"]

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
_W, _H = 720, 440
_ML, _MR, _MT, _MB = 64, 16, 34, 44


def _fmt(v: float) -> str:
    return format(float(v), ".6g")


def _bounds(series):
    xs = np.concatenate([np.asarray(s[1], dtype=float) for s in series])
    ys = np.concatenate([np.asarray(s[2], dtype=float) for s in series])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    pad = 0.04 * (y1 - y0)
    return x0, x1, y0 - pad, y1 + pad


def line_plot(series, title: str = "") -> str:
    """SVG line chart. ``series`` is a list of (label, xs, ys) triples."""
    if not series:
        raise ValueError("line_plot needs at least one series")
    x0, x1, y0, y1 = _bounds(series)
    iw, ih = _W - _ML - _MR, _H - _MT - _MB

    def px(x):
        return _ML + (x - x0) / (x1 - x0) * iw

    def py(y):
        return _MT + (y1 - y) / (y1 - y0) * ih

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}" font-family="monospace" font-size="12">',
        f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="white"/>',
        f'<rect x="{_ML}" y="{_MT}" width="{iw}" height="{ih}" fill="none" '
        f'stroke="#333" stroke-width="1"/>',
    ]
    if title:
        parts.append(f'<text x="{_W // 2}" y="20" text-anchor="middle" '
                     f'font-size="14">{title}</text>')
    for k in range(5):
        fx = x0 + k / 4 * (x1 - x0)
        fy = y0 + k / 4 * (y1 - y0)
        parts.append(f'<text x="{_fmt(px(fx))}" y="{_H - _MB + 16}" '
                     f'text-anchor="middle">{_fmt(fx)}</text>')
        parts.append(f'<text x="{_ML - 6}" y="{_fmt(py(fy) + 4)}" '
                     f'text-anchor="end">{_fmt(fy)}</text>')
        if 0 < k < 4:
            parts.append(f'<line x1="{_ML}" y1="{_fmt(py(fy))}" x2="{_ML + iw}" '
                         f'y2="{_fmt(py(fy))}" stroke="#ddd" stroke-width="1"/>')
    for i, (label, xs, ys) in enumerate(series):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(f"{_fmt(px(float(x)))},{_fmt(py(float(y)))}"
                       for x, y in zip(np.asarray(xs), np.asarray(ys)))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" '
                     f'stroke-width="1.5"/>')
        parts.append(f'<text x="{_ML + iw - 8}" y="{_MT + 16 + 15 * i}" '
                     f'text-anchor="end" fill="{color}">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts)


def ecdf_plot(samples, title: str = "") -> str:
    """SVG ECDF overlay. ``samples`` is a list of (label, values) pairs."""
    series = []
    for label, values in samples:
        x = np.sort(np.asarray(values, dtype=float))
        y = np.arange(1, len(x) + 1) / len(x)
        series.append((label, x, y))
    return line_plot(series, title=title)


def save_svg(svg_text: str, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg_text)
