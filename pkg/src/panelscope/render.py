"""Faceted line-plot rendering to standalone SVG.

Each facet of a KeyAllocation becomes one sub-panel; each key becomes one
polyline of its (x, y) points in index order. Scales are shared across
facets. SVG keeps the output textual and structurally checkable: the
document contains exactly one polyline per allocated key and one
``g.facet`` group per facet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from .errors import KeyMismatchError
from .panel import PanelTable
from .sampling import KeyAllocation

LINE_COLOR = "#2c6e9e"
MUTED_COLOR = "#bdbdbd"
HIGHLIGHT_COLORS = ("#d95f02", "#1b9e77", "#7570b3", "#e7298a", "#66a61e")


@dataclass(frozen=True)
class PlotSpec:
    """Layout and aesthetics for a faceted line plot."""

    y_col: str
    x_col: str | None = None
    width_px: int = 1200
    height_px: int = 900
    n_cols: int = 4
    title: str = ""
    breaks: tuple[float, ...] | None = None
    highlight: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("width_px and height_px must be positive")
        if self.n_cols < 1:
            raise ValueError("n_cols must be at least 1")


def _ticks(lo: float, hi: float, breaks=None) -> list[float]:
    if breaks is not None:
        return [float(b) for b in breaks]
    if hi == lo:
        return [lo]
    return list(np.linspace(lo, hi, 5))


def _fmt(v: float) -> str:
    return format(float(v), ".4g")


def render_facets(
    table: PanelTable,
    alloc: KeyAllocation,
    spec: PlotSpec,
    path: str | Path,
) -> None:
    """Write the faceted plot of the allocated keys to ``path`` as SVG 1.1."""
    x_col = spec.x_col or table.index_col
    for col in (x_col, spec.y_col):
        if col not in table.frame.columns:
            raise KeyMismatchError(f"no column {col!r} in panel")
    panel_keys = set(table.frame[table.key_col])
    missing = set(alloc.assignments) - panel_keys
    if missing:
        raise KeyMismatchError(f"allocated keys not in panel: {sorted(map(str, missing))[:5]}")

    series: dict = {}
    for key in alloc.assignments:
        group = table.key_rows(key)
        x = np.asarray(group[x_col], dtype=float)
        y = np.asarray(group[spec.y_col], dtype=float)
        ok = ~(np.isnan(x) | np.isnan(y))
        series[key] = (x[ok], y[ok])

    all_x = np.concatenate([xy[0] for xy in series.values()]) if series else np.array([0.0])
    all_y = np.concatenate([xy[1] for xy in series.values()]) if series else np.array([0.0])
    x_lo, x_hi = float(all_x.min()), float(all_x.max())
    y_lo, y_hi = float(all_y.min()), float(all_y.max())
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0
    y_lo, y_hi = y_lo - 0.03 * y_span, y_hi + 0.03 * y_span
    y_span = y_hi - y_lo

    n_facets = alloc.n_facets
    n_cols = min(spec.n_cols, n_facets)
    n_rows = math.ceil(n_facets / n_cols)
    margin_left, margin_right = 52.0, 12.0
    margin_top = 34.0 if spec.title else 12.0
    margin_bottom = 30.0
    gap = 10.0
    strip_h = 16.0
    cell_w = (spec.width_px - margin_left - margin_right - gap * (n_cols - 1)) / n_cols
    cell_h = (spec.height_px - margin_top - margin_bottom - gap * (n_rows - 1)) / n_rows
    panel_h = cell_h - strip_h

    highlight = [k for k in spec.highlight]
    palette = {k: HIGHLIGHT_COLORS[i % len(HIGHLIGHT_COLORS)] for i, k in enumerate(highlight)}

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width_px}" height="{spec.height_px}" '
        f'viewBox="0 0 {spec.width_px} {spec.height_px}">',
        f'<rect x="0" y="0" width="{spec.width_px}" height="{spec.height_px}" fill="white"/>',
    ]
    if spec.title:
        parts.append(
            f'<text x="{spec.width_px / 2:.1f}" y="22" text-anchor="middle" '
            f'font-family="sans-serif" font-size="15">{escape(spec.title)}</text>'
        )

    x_ticks = _ticks(x_lo, x_hi, spec.breaks)
    y_ticks = _ticks(y_lo, y_hi)

    for facet in range(1, n_facets + 1):
        row, col = divmod(facet - 1, n_cols)
        left = margin_left + col * (cell_w + gap)
        top = margin_top + row * (cell_h + gap) + strip_h
        bottom = top + panel_h

        def sx(v: float) -> float:
            return left + (v - x_lo) / x_span * cell_w

        def sy(v: float) -> float:
            return bottom - (v - y_lo) / y_span * panel_h

        parts.append(f'<g class="facet" id="facet-{facet}">')
        parts.append(
            f'<text x="{left + cell_w / 2:.1f}" y="{top - 4:.1f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{facet}</text>'
        )
        parts.append(
            f'<rect x="{left:.1f}" y="{top:.1f}" width="{cell_w:.1f}" height="{panel_h:.1f}" '
            f'fill="#f7f7f7" stroke="#cccccc"/>'
        )
        for tick in x_ticks:
            if not x_lo <= tick <= x_hi:
                continue
            parts.append(
                f'<line x1="{sx(tick):.1f}" y1="{bottom:.1f}" x2="{sx(tick):.1f}" '
                f'y2="{bottom + 4:.1f}" stroke="#888888"/>'
            )
            parts.append(
                f'<text x="{sx(tick):.1f}" y="{bottom + 14:.1f}" text-anchor="middle" '
                f'font-family="sans-serif" font-size="9">{_fmt(tick)}</text>'
            )
        if col == 0:
            for tick in y_ticks:
                parts.append(
                    f'<text x="{left - 4:.1f}" y="{sy(tick) + 3:.1f}" text-anchor="end" '
                    f'font-family="sans-serif" font-size="9">{_fmt(tick)}</text>'
                )
        for key in sorted((k for k, f in alloc.assignments.items() if f == facet), key=str):
            x, y = series[key]
            points = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in zip(x, y))
            color = palette.get(key, MUTED_COLOR if highlight else LINE_COLOR)
            parts.append(
                f'<polyline fill="none" stroke="{color}" stroke-width="1.2" points="{points}"/>'
            )
        parts.append("</g>")

    parts.append("</svg>")
    Path(path).write_text("\n".join(parts), encoding="utf-8")
