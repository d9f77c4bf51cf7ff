"""CSV, JSON and SVG writers for curve and profile series.

Output is byte-stable: numbers go through one fixed significant-digit
format, no timestamps are written and dict ordering is fixed by
construction.
"""

from __future__ import annotations

import io
import json
import math
import os
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union
from xml.sax.saxutils import escape, quoteattr

from .curves import CurveSeries, ProfileSeries
from .errors import DomainError
from .params import GaussianParams

SCHEMA_VERSION = 1
DEFAULT_PRECISION = 10

Series = Union[CurveSeries, ProfileSeries]
Destination = Union[str, os.PathLike, io.TextIOBase, None]


def fmt(value, precision: int = DEFAULT_PRECISION) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    return f"{value:.{precision}g}"


def _quantize(value, precision: int):
    if isinstance(value, bool):
        return value
    return float(fmt(value, precision))


def _as_list(series) -> list:
    items = [series] if isinstance(series, (CurveSeries, ProfileSeries)) else list(series)
    if not items:
        raise DomainError("nothing to write: no series given")
    return items


def _emit(text: str, destination: Destination) -> str:
    if destination is None:
        return text
    if hasattr(destination, "write"):
        destination.write(text)
        return text
    with open(destination, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return text


# -- CSV -----------------------------------------------------------------------


def write_csv(series, destination: Destination = None, precision: int = DEFAULT_PRECISION) -> str:
    """Write one series as ``<columns>`` rows, or several with a leading ``label`` column.

    Curves whose abscissae differ (Gaussian ``t`` next to Pareto
    ``a_ratio``) share a generic ``x`` column.
    """
    items = _as_list(series)
    multi = len(items) > 1
    columns = items[0].columns
    if any(s.columns[1:] != columns[1:] for s in items):
        raise DomainError("series in one CSV must share columns")
    if any(s.columns[0] != columns[0] for s in items):
        columns = ("x",) + tuple(columns[1:])
    header = (("label",) if multi else ()) + tuple(columns)
    lines = [",".join(header)]
    for s in items:
        label = s.label.replace(",", ";")
        for row in s.points:
            cells = [fmt(v, precision) for v in row]
            lines.append(",".join(([label] if multi else []) + cells))
    return _emit("\n".join(lines) + "\n", destination)


def read_csv(source) -> tuple[list[str], list[list]]:
    """Parse a CSV written by :func:`write_csv` into header and typed rows."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    lines = text.rstrip("\n").split("\n")
    header = lines[0].split(",")
    rows = []
    for line in lines[1:]:
        cells = line.split(",")
        rows.append([c if h == "label" else float(c) for h, c in zip(header, cells)])
    return header, rows


# -- JSON ----------------------------------------------------------------------


def _series_doc(s: Series, precision: int) -> dict:
    return {
        "label": s.label,
        "model": {k: _quantize(v, precision) if isinstance(v, float) else v for k, v in s.model.items()},
        "columns": list(s.columns),
        "generation": s.generation,
        "points": [[_quantize(v, precision) for v in row] for row in s.points],
    }


def write_json(
    series,
    destination: Destination = None,
    precision: int = DEFAULT_PRECISION,
    metadata: Optional[dict] = None,
) -> str:
    """Write series as JSON.

    A single series produces ``{schema_version, label, model, columns,
    generation, points}``; several are nested under ``series``.
    """
    items = _as_list(series)
    doc: dict = {"schema_version": SCHEMA_VERSION}
    if len(items) == 1 and not isinstance(series, (list, tuple)):
        doc.update(_series_doc(items[0], precision))
    else:
        doc["series"] = [_series_doc(s, precision) for s in items]
    if metadata:
        doc["metadata"] = metadata
    return _emit(json.dumps(doc, allow_nan=False) + "\n", destination)


def _series_from_doc(d: dict) -> Series:
    points = tuple(tuple(row) for row in d["points"])
    if d["columns"][0] == "x":
        m = d["model"]
        points = tuple((x, f, xf, bool(flag)) for x, f, xf, flag in points)
        gen = d.get("generation", {})
        return ProfileSeries(d["label"], GaussianParams(m["mu"], m["sigma"]), points,
                             gen.get("shade_t"), gen)
    return CurveSeries(d["label"], d["model"], points, d["columns"][0], d.get("generation", {}))


def read_json(source):
    """Parse :func:`write_json` output back into a series or list of series."""
    if hasattr(source, "read"):
        doc = json.load(source)
    elif isinstance(source, str) and source.lstrip().startswith("{"):
        doc = json.loads(source)
    else:
        with open(source, encoding="utf-8") as fh:
            doc = json.load(fh)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DomainError(f"unsupported schema_version {doc.get('schema_version')!r}")
    if "series" in doc:
        return [_series_from_doc(d) for d in doc["series"]]
    return _series_from_doc(doc)


# -- SVG -----------------------------------------------------------------------

COLUMN_TITLES = {"f": "f(x)", "xf": "x f(x)", "i_cause": "I_cause", "i_effect": "I_effect", "t": "X/σ"}
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b")
DASHES = ("", "6,4", "2,3", "8,3,2,3")


@dataclass
class PlotStyle:
    width: int = 800
    height: int = 600
    margin_top: int = 50
    margin_right: int = 170
    margin_bottom: int = 60
    margin_left: int = 75
    title: str = ""
    x_label: Optional[str] = None
    y_label: Optional[str] = None
    x_range: Optional[tuple[float, float]] = None
    y_range: Optional[tuple[float, float]] = None
    log_x: bool = False
    marker: Optional[tuple[float, float]] = None
    marker_label: str = ""
    shade: bool = True
    guides: Sequence[float] = field(default_factory=tuple)  # horizontal reference lines


def _nice_step(span: float, target: int = 6) -> float:
    raw = span / target
    mag = 10.0 ** math.floor(math.log10(raw))
    for m in (1.0, 2.0, 2.5, 5.0, 10.0):
        if m * mag >= raw:
            return m * mag
    return 10.0 * mag


def _nice_range(lo: float, hi: float) -> tuple[float, float]:
    if hi <= lo:
        pad = abs(lo) * 0.1 or 1.0
        lo, hi = lo - pad, hi + pad
    step = _nice_step(hi - lo)
    return math.floor(lo / step) * step, math.ceil(hi / step) * step


def _ticks(lo: float, hi: float, log: bool) -> list[float]:
    if log:
        return [10.0**k for k in range(math.ceil(math.log10(lo) - 1e-9), math.floor(math.log10(hi) + 1e-9) + 1)]
    step = _nice_step(hi - lo)
    first = math.ceil(lo / step - 1e-9)
    out = []
    k = first
    while k * step <= hi + 1e-9 * step:
        out.append(round(k * step, 12))
        k += 1
    return out


def _tick_label(v: float, log: bool) -> str:
    if log:
        return f"1e{round(math.log10(v))}"
    return f"{v:g}"


def _default_axes(s: Series) -> tuple[str, tuple[str, ...]]:
    if isinstance(s, ProfileSeries):
        return "x", ("f", "xf")
    return "i_cause", ("i_effect",)


def render_svg(
    series,
    destination: Destination = None,
    *,
    x: Optional[str] = None,
    y: Union[str, Sequence[str], None] = None,
    style: Optional[PlotStyle] = None,
) -> str:
    """Render series as polylines on shared axes.

    ``x`` names the column on the horizontal axis and ``y`` one or more
    columns drawn against it; defaults are effect-vs-cause for curves and
    ``f`` and ``xf`` against ``x`` for profiles. Profile rows flagged
    in-region are shaded when ``style.shade`` is set.

    The plot group carries ``data-*`` attributes with the axis mapping so
    pixel coordinates can be turned back into data values.
    """
    items = _as_list(series)
    style = style or PlotStyle()
    dx, dy = _default_axes(items[0])
    x = x or dx
    ys = (y,) if isinstance(y, str) else tuple(y or dy)

    lines = []  # (label, column, xs, ys, in_region)
    for s in items:
        xs = s.column(x)
        flags = s.column("in_region") if isinstance(s, ProfileSeries) else [False] * len(xs)
        for col in ys:
            vals = s.column(col)
            title = COLUMN_TITLES.get(col, col)
            if len(ys) == 1:
                label = s.label
            else:
                label = title if len(items) == 1 else f"{s.label}: {title}"
            keep = [i for i, xv in enumerate(xs) if not style.log_x or xv > 0]
            lines.append((label, col, [xs[i] for i in keep], [vals[i] for i in keep], [flags[i] for i in keep]))

    if style.x_range:
        x_lo, x_hi = style.x_range
    else:
        all_x = [v for ln in lines for v in ln[2]]
        if style.log_x:
            x_lo = 10.0 ** math.floor(math.log10(min(all_x)))
            x_hi = 10.0 ** math.ceil(math.log10(max(all_x)))
        else:
            x_lo, x_hi = _nice_range(min(all_x), max(all_x))
    if style.y_range:
        y_lo, y_hi = style.y_range
    else:
        all_y = [v for ln in lines for v in ln[3]] + list(style.guides)
        if style.marker:
            all_y.append(style.marker[1])
        y_lo, y_hi = _nice_range(min(all_y), max(all_y))

    left, top = style.margin_left, style.margin_top
    pw = style.width - style.margin_left - style.margin_right
    ph = style.height - style.margin_top - style.margin_bottom

    def px(v: float) -> float:
        if style.log_x:
            u = (math.log10(v) - math.log10(x_lo)) / (math.log10(x_hi) - math.log10(x_lo))
        else:
            u = (v - x_lo) / (x_hi - x_lo)
        return left + u * pw

    def py(v: float) -> float:
        return top + (1.0 - (v - y_lo) / (y_hi - y_lo)) * ph

    def c(v: float) -> str:
        return f"{v:.2f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{style.width}" '
        f'height="{style.height}" viewBox="0 0 {style.width} {style.height}">',
        '<style>text{font-family:sans-serif;font-size:13px;fill:#222}'
        '.axis{stroke:#222;stroke-width:1}.grid{stroke:#ddd;stroke-width:1}'
        '.series{fill:none;stroke-width:2}.guide{stroke:#888;stroke-dasharray:4,4}'
        '.marker{fill:#000}.shade{stroke:none;opacity:0.25}</style>',
        f'<rect x="0" y="0" width="{style.width}" height="{style.height}" fill="#fff"/>',
        f'<defs><clipPath id="plot-area"><rect x="{left}" y="{top}" width="{pw}" height="{ph}"/></clipPath></defs>',
    ]
    if style.title:
        out.append(f'<text x="{c(left + pw / 2)}" y="{c(top / 2 + 5)}" text-anchor="middle">{escape(style.title)}</text>')

    for tv in _ticks(x_lo, x_hi, style.log_x):
        X = px(tv)
        out.append(f'<line class="grid" x1="{c(X)}" y1="{top}" x2="{c(X)}" y2="{top + ph}"/>')
        out.append(f'<text x="{c(X)}" y="{top + ph + 18}" text-anchor="middle">{_tick_label(tv, style.log_x)}</text>')
    for tv in _ticks(y_lo, y_hi, False):
        Y = py(tv)
        out.append(f'<line class="grid" x1="{left}" y1="{c(Y)}" x2="{left + pw}" y2="{c(Y)}"/>')
        out.append(f'<text x="{left - 8}" y="{c(Y + 4)}" text-anchor="end">{_tick_label(tv, False)}</text>')
    out.append(f'<rect class="axis" x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none"/>')
    out.append(f'<text x="{c(left + pw / 2)}" y="{style.height - 15}" text-anchor="middle">{escape(style.x_label or x)}</text>')
    y_text = style.y_label or ", ".join(ys)
    out.append(f'<text x="18" y="{c(top + ph / 2)}" text-anchor="middle" '
               f'transform="rotate(-90 18 {c(top + ph / 2)})">{escape(y_text)}</text>')

    out.append(
        f'<g id="plot" clip-path="url(#plot-area)" data-left="{left}" data-top="{top}" '
        f'data-width="{pw}" data-height="{ph}" data-x-min="{x_lo!r}" data-x-max="{x_hi!r}" '
        f'data-y-min="{y_lo!r}" data-y-max="{y_hi!r}" data-log-x="{int(style.log_x)}">'
    )
    for g in style.guides:
        out.append(f'<line class="guide" x1="{left}" y1="{c(py(g))}" x2="{left + pw}" y2="{c(py(g))}"/>')
    for i, (label, col, xs, vs, flags) in enumerate(lines):
        colour = PALETTE[i % len(PALETTE)]
        if style.shade and any(flags):
            region = [(xv, yv) for xv, yv, fl in zip(xs, vs, flags) if fl]
            base = py(max(y_lo, min(0.0, y_hi)))
            poly = [(px(region[0][0]), base)] + [(px(a), py(b)) for a, b in region] + [(px(region[-1][0]), base)]
            pts = " ".join(f"{c(a)},{c(b)}" for a, b in poly)
            out.append(f'<polygon class="shade" fill="{colour}" points="{pts}"/>')
        pts = " ".join(f"{c(px(a))},{c(py(b))}" for a, b in zip(xs, vs))
        dash = DASHES[(i // len(PALETTE)) % len(DASHES)]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(
            f'<polyline class="series" data-label={quoteattr(label)} data-column="{col}" '
            f'stroke="{colour}"{dash_attr} points="{pts}"/>'
        )
    if style.marker:
        mx, my = style.marker
        out.append(f'<circle class="marker" cx="{c(px(mx))}" cy="{c(py(my))}" r="5" '
                   f'data-x="{mx!r}" data-y="{my!r}"/>')
        if style.marker_label:
            out.append(f'<text x="{c(px(mx) + 8)}" y="{c(py(my) - 8)}">{escape(style.marker_label)}</text>')
    out.append("</g>")

    lx = left + pw + 15
    for i, (label, *_rest) in enumerate(lines):
        ly = top + 10 + 20 * i
        colour = PALETTE[i % len(PALETTE)]
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 20}" y2="{ly}" stroke="{colour}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 26}" y="{ly + 4}">{escape(label)}</text>')
    out.append("</svg>")
    return _emit("\n".join(out) + "\n", destination)
