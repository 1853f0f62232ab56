"""Minimal deterministic SVG charts.

All emitters return a complete SVG document as a string. Coordinates are
formatted with fixed precision and colors come from a fixed palette, so the
same data always yields byte-identical markup (plots are diffable and safe
to regenerate in tests). No plotting library is involved: the charts are a
few hundred rects, lines, and polylines.
"""

from __future__ import annotations

import math

import numpy as np

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
CLASS_COLORS = ("#aec7e8", "#ffbb78")  # class 0, class 1 backgrounds


def _fmt(v: float) -> str:
    return format(float(v), ".2f")


def _label(v: float) -> str:
    return format(float(v), ".4g")


class _Frame:
    """Maps data coordinates into a margined pixel viewport."""

    def __init__(self, width, height, x_range, y_range, log_x=False):
        self.width, self.height = width, height
        self.left, self.right, self.top, self.bottom = 56.0, 16.0, 28.0, 40.0
        self.log_x = log_x
        x_lo, x_hi = x_range
        if log_x:
            x_lo, x_hi = math.log10(x_lo), math.log10(x_hi)
        self.x_lo, self.x_hi = _pad_range(x_lo, x_hi)
        self.y_lo, self.y_hi = _pad_range(*y_range)

    def x(self, v: float) -> float:
        if self.log_x:
            v = math.log10(v)
        span = self.x_hi - self.x_lo
        frac = (v - self.x_lo) / span
        return self.left + frac * (self.width - self.left - self.right)

    def y(self, v: float) -> float:
        span = self.y_hi - self.y_lo
        frac = (v - self.y_lo) / span
        return self.height - self.bottom - frac * (self.height - self.top - self.bottom)

    def axes(self, title, x_label, y_label) -> list[str]:
        parts = [
            f'<rect x="{_fmt(self.left)}" y="{_fmt(self.top)}" '
            f'width="{_fmt(self.width - self.left - self.right)}" '
            f'height="{_fmt(self.height - self.top - self.bottom)}" '
            f'fill="none" stroke="#333333" stroke-width="1"/>',
            f'<text x="{_fmt(self.width / 2)}" y="18" text-anchor="middle" '
            f'font-size="13" fill="#111111">{_escape(title)}</text>',
            f'<text x="{_fmt(self.width / 2)}" y="{_fmt(self.height - 6)}" '
            f'text-anchor="middle" font-size="11" fill="#333333">{_escape(x_label)}</text>',
            f'<text x="14" y="{_fmt(self.height / 2)}" text-anchor="middle" '
            f'font-size="11" fill="#333333" '
            f'transform="rotate(-90 14 {_fmt(self.height / 2)})">{_escape(y_label)}</text>',
        ]
        for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
            xv = self.x_lo + frac * (self.x_hi - self.x_lo)
            yv = self.y_lo + frac * (self.y_hi - self.y_lo)
            px = self.left + frac * (self.width - self.left - self.right)
            py = self.height - self.bottom - frac * (self.height - self.top - self.bottom)
            x_text = _label(10.0 ** xv) if self.log_x else _label(xv)
            parts.append(
                f'<text x="{_fmt(px)}" y="{_fmt(self.height - self.bottom + 14)}" '
                f'text-anchor="middle" font-size="10" fill="#555555">{x_text}</text>')
            parts.append(
                f'<text x="{_fmt(self.left - 6)}" y="{_fmt(py + 3)}" '
                f'text-anchor="end" font-size="10" fill="#555555">{_label(yv)}</text>')
            parts.append(
                f'<line x1="{_fmt(self.left)}" y1="{_fmt(py)}" '
                f'x2="{_fmt(self.width - self.right)}" y2="{_fmt(py)}" '
                f'stroke="#dddddd" stroke-width="1"/>')
        return parts


def _pad_range(lo: float, hi: float) -> tuple[float, float]:
    lo, hi = float(lo), float(hi)
    if hi <= lo:
        pad = abs(lo) * 0.1 + 1.0
        return lo - pad, lo + pad
    pad = (hi - lo) * 0.05
    return lo - pad, hi + pad


def _escape(text: str) -> str:
    return (str(text).replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;"))


def _document(width, height, parts: list[str]) -> str:
    body = "\n".join(parts)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>\n'
        f"{body}\n</svg>\n"
    )


def _series_points(frame, x, values) -> str:
    pts = [f"{_fmt(frame.x(float(xv)))},{_fmt(frame.y(float(yv)))}"
           for xv, yv in zip(x, values) if yv is not None]
    return " ".join(pts)


def _segments(x, values):
    """Split one series into runs of consecutive defined values."""
    segments, current = [], []
    for xv, yv in zip(x, values):
        if yv is None:
            if current:
                segments.append(current)
                current = []
        else:
            current.append((float(xv), float(yv)))
    if current:
        segments.append(current)
    return segments


def line_chart(x, series, *, title="", x_label="", y_label="",
               log_x=False, width=640, height=400) -> str:
    """Multi-series line chart. ``series`` is a list of (name, values);
    None values break the line (used for undefined TPR/TNR)."""
    x = [float(v) for v in x]
    for name, values in series:
        if len(values) != len(x):
            raise ValueError(f"series {name!r} has {len(values)} values for {len(x)} x points")
    flat = [float(v) for _, values in series for v in values if v is not None]
    if not flat:
        flat = [0.0, 1.0]
    frame = _Frame(width, height, (min(x), max(x)), (min(flat), max(flat)), log_x)
    parts = frame.axes(title, x_label, y_label)
    for k, (name, values) in enumerate(series):
        color = PALETTE[k % len(PALETTE)]
        for segment in _segments(x, values):
            if len(segment) == 1:
                px, py = segment[0]
                parts.append(f'<circle cx="{_fmt(frame.x(px))}" cy="{_fmt(frame.y(py))}" '
                             f'r="2" fill="{color}"/>')
            else:
                pts = " ".join(f"{_fmt(frame.x(px))},{_fmt(frame.y(py))}"
                               for px, py in segment)
                parts.append(f'<polyline points="{pts}" fill="none" '
                             f'stroke="{color}" stroke-width="1.5"/>')
        parts.append(
            f'<text x="{_fmt(width - 140)}" y="{_fmt(34 + 14 * k)}" font-size="10" '
            f'fill="{color}">{_escape(name)}</text>')
    return _document(width, height, parts)


def band_chart(x, bands, *, title="", x_label="", y_label="",
               width=640, height=400) -> str:
    """Mean lines with +-1 std bands. ``bands`` is a list of
    (name, means, stds)."""
    x = [float(v) for v in x]
    flat = []
    for name, means, stds in bands:
        if len(means) != len(x) or len(stds) != len(x):
            raise ValueError(f"band {name!r} length does not match x")
        flat.extend(float(m) - float(s) for m, s in zip(means, stds))
        flat.extend(float(m) + float(s) for m, s in zip(means, stds))
    frame = _Frame(width, height, (min(x), max(x)), (min(flat), max(flat)))
    parts = frame.axes(title, x_label, y_label)
    for k, (name, means, stds) in enumerate(bands):
        color = PALETTE[k % len(PALETTE)]
        upper = [f"{_fmt(frame.x(xv))},{_fmt(frame.y(float(m) + float(s)))}"
                 for xv, m, s in zip(x, means, stds)]
        lower = [f"{_fmt(frame.x(xv))},{_fmt(frame.y(float(m) - float(s)))}"
                 for xv, m, s in zip(reversed(x), reversed(list(means)), reversed(list(stds)))]
        parts.append(f'<polygon points="{" ".join(upper + lower)}" '
                     f'fill="{color}" fill-opacity="0.2" stroke="none"/>')
        parts.append(f'<polyline points="{_series_points(frame, x, list(means))}" '
                     f'fill="none" stroke="{color}" stroke-width="1.5"/>')
        parts.append(
            f'<text x="{_fmt(width - 140)}" y="{_fmt(34 + 14 * k)}" font-size="10" '
            f'fill="{color}">{_escape(name)}</text>')
    return _document(width, height, parts)


def bar_chart(labels, values, *, title="", y_label="", width=640, height=400) -> str:
    """Vertical bars, one per label; negative values drop below the zero line."""
    values = [float(v) for v in values]
    if len(labels) != len(values):
        raise ValueError("labels and values must have equal length")
    lo, hi = min(values + [0.0]), max(values + [0.0])
    frame = _Frame(width, height, (0.0, float(max(len(values), 1))), (lo, hi))
    parts = frame.axes(title, "", y_label)
    zero_y = frame.y(0.0)
    slot = (width - frame.left - frame.right) / max(len(values), 1)
    for k, (label, value) in enumerate(zip(labels, values)):
        color = PALETTE[k % len(PALETTE)]
        x0 = frame.left + slot * k + slot * 0.15
        y1 = frame.y(value)
        top = min(y1, zero_y)
        parts.append(
            f'<rect x="{_fmt(x0)}" y="{_fmt(top)}" width="{_fmt(slot * 0.7)}" '
            f'height="{_fmt(abs(y1 - zero_y))}" fill="{color}"/>')
        parts.append(
            f'<text x="{_fmt(x0 + slot * 0.35)}" y="{_fmt(height - frame.bottom + 14)}" '
            f'text-anchor="middle" font-size="10" fill="#555555">{_escape(label)}</text>')
    parts.append(
        f'<line x1="{_fmt(frame.left)}" y1="{_fmt(zero_y)}" '
        f'x2="{_fmt(width - frame.right)}" y2="{_fmt(zero_y)}" '
        f'stroke="#333333" stroke-width="1"/>')
    return _document(width, height, parts)


def boundary_heatmap(bounds, resolution, blackbox_labels, surrogate_labels=None,
                     *, instance=None, radius=None, title="",
                     width=520, height=520) -> str:
    """2-D label field as colored cells plus an optional boundary overlay.

    ``blackbox_labels`` colors each cell by class; where ``surrogate_labels``
    changes between adjacent cells a dark boundary dot is drawn on top. The
    explained instance is marked with a cross, its radius with a circle.
    Cell (i, j) holds grid point i*resolution + j, with i along axis 0.
    """
    bounds = np.asarray(bounds, dtype=np.float64)
    labels = np.asarray(blackbox_labels).reshape(resolution, resolution)
    frame = _Frame(width, height, (bounds[0, 0], bounds[0, 1]),
                   (bounds[1, 0], bounds[1, 1]))
    parts = frame.axes(title, "feature 0", "feature 1")
    axis0 = np.linspace(bounds[0, 0], bounds[0, 1], resolution)
    axis1 = np.linspace(bounds[1, 0], bounds[1, 1], resolution)
    cell_w = (frame.x(bounds[0, 1]) - frame.x(bounds[0, 0])) / max(resolution - 1, 1)
    cell_h = (frame.y(bounds[1, 0]) - frame.y(bounds[1, 1])) / max(resolution - 1, 1)
    for i in range(resolution):
        # one row-run per contiguous same-class stretch keeps the file small
        j = 0
        while j < resolution:
            k = j
            while k < resolution and labels[i, k] == labels[i, j]:
                k += 1
            color = CLASS_COLORS[int(labels[i, j])]
            y_top = frame.y(axis1[k - 1]) - cell_h / 2
            parts.append(
                f'<rect x="{_fmt(frame.x(axis0[i]) - cell_w / 2)}" y="{_fmt(y_top)}" '
                f'width="{_fmt(cell_w)}" height="{_fmt(cell_h * (k - j))}" '
                f'fill="{color}"/>')
            j = k
    if surrogate_labels is not None:
        surr = np.asarray(surrogate_labels).reshape(resolution, resolution)
        for i in range(resolution):
            for j in range(resolution):
                right = i + 1 < resolution and surr[i + 1, j] != surr[i, j]
                up = j + 1 < resolution and surr[i, j + 1] != surr[i, j]
                if right or up:
                    parts.append(
                        f'<circle cx="{_fmt(frame.x(axis0[i]))}" '
                        f'cy="{_fmt(frame.y(axis1[j]))}" r="1.2" fill="#222222"/>')
    if instance is not None:
        cx, cy = frame.x(float(instance[0])), frame.y(float(instance[1]))
        if radius is not None and radius > 0:
            rx = frame.x(float(instance[0]) + float(radius)) - cx
            parts.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(rx)}" '
                         f'fill="none" stroke="#111111" stroke-width="1.5" '
                         f'stroke-dasharray="4 3"/>')
        parts.append(f'<line x1="{_fmt(cx - 6)}" y1="{_fmt(cy)}" x2="{_fmt(cx + 6)}" '
                     f'y2="{_fmt(cy)}" stroke="#111111" stroke-width="2"/>')
        parts.append(f'<line x1="{_fmt(cx)}" y1="{_fmt(cy - 6)}" x2="{_fmt(cx)}" '
                     f'y2="{_fmt(cy + 6)}" stroke="#111111" stroke-width="2"/>')
    return _document(width, height, parts)
