"""CSV and SVG emission for experiment results.

CSV output is deterministic: fixed column order, '%.12g' float formatting,
UTF-8, comma separator, one header row.  SVG plots are standalone documents
(800 x 600 viewport by default) with one polyline per series; no plotting
library is involved, so reruns are byte-identical.
"""

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import InvalidParameterError

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


@dataclass(frozen=True)
class SeriesSpec:
    """One family of polylines: column ``y`` against the plot's x column.

    ``where`` filters rows by exact column values; ``group`` splits the
    filtered rows into one line per distinct value; ``dash`` is an SVG
    dash pattern (solid when None).
    """

    y: str
    group: str | None = None
    where: tuple = ()
    dash: str | None = None
    label: str | None = None


@dataclass(frozen=True)
class PlotSpec:
    x: str
    series: tuple
    title: str = ""
    x_label: str | None = None
    y_label: str | None = None


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, (int,)):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return format(value, ".12g")
    return str(value)


def emit(result, format: str, path) -> Path | None:
    """Write an experiment result as 'csv' or 'svg'; returns the path written.

    An empty result yields a header-only CSV; for SVG nothing is written and
    None is returned.
    """
    path = Path(path)
    try:
        if format == "csv":
            return _emit_csv(result, path)
        if format == "svg":
            return _emit_svg(result, path)
    except OSError as exc:
        raise OSError(f"failed writing {path}: {exc}") from exc
    raise InvalidParameterError(f"unknown output format {format!r}")


def _emit_csv(result, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(result.columns)
        for row in result.rows:
            writer.writerow([_format_cell(v) for v in row])
    return path


def _collect_series(result):
    """Expand the plot spec into concrete (label, dash, color, points) series."""
    spec = result.plot
    cols = {name: i for i, name in enumerate(result.columns)}
    xi = cols[spec.x]
    out = []
    color_index = 0
    for ser in spec.series:
        rows = result.rows
        for col, val in ser.where:
            rows = [r for r in rows if r[cols[col]] == val]
        yi = cols[ser.y]
        if ser.group is None:
            buckets = {None: rows}
        else:
            gi = cols[ser.group]
            buckets = {}
            for r in rows:
                buckets.setdefault(r[gi], []).append(r)
        for key in sorted(buckets, key=lambda k: (str(type(k)), k)):
            pts = [(r[xi], r[yi]) for r in buckets[key]
                   if isinstance(r[yi], (int, float)) and not (
                       isinstance(r[yi], float) and math.isnan(r[yi]))]
            if not pts:
                continue
            pts.sort(key=lambda p: p[0])
            base = ser.label or ser.y
            label = base if key is None else f"{base} [{ser.group}={_format_cell(key)}]"
            out.append((label, ser.dash, _PALETTE[color_index % len(_PALETTE)], pts))
            color_index += 1
    return out


def _nice_ticks(lo: float, hi: float, count: int = 6):
    if hi <= lo:
        hi = lo + 1.0
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def _emit_svg(result, path: Path, width: int = 800, height: int = 600) -> Path | None:
    if result.plot is None or not result.rows:
        return None
    series = _collect_series(result)
    if not series:
        return None
    margin_l, margin_r, margin_t, margin_b = 70, 160, 40, 50
    plot_w = width - margin_l - margin_r
    plot_h = height - margin_t - margin_b
    xs = [p[0] for _, _, _, pts in series for p in pts]
    ys = [p[1] for _, _, _, pts in series for p in pts]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    pad = 0.04 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    def sx(x): return margin_l + (x - x_lo) / (x_hi - x_lo) * plot_w
    def sy(y): return margin_t + (y_hi - y) / (y_hi - y_lo) * plot_h

    spec = result.plot
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{margin_l}" y="{margin_t}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#333" stroke-width="1"/>',
    ]
    if spec.title:
        lines.append(f'<text x="{width/2:.1f}" y="24" text-anchor="middle" '
                     f'font-family="sans-serif" font-size="16">{spec.title}</text>')
    for tx in _nice_ticks(x_lo, x_hi):
        px = sx(tx)
        lines.append(f'<line x1="{px:.2f}" y1="{margin_t + plot_h}" x2="{px:.2f}" '
                     f'y2="{margin_t + plot_h + 5}" stroke="#333"/>')
        lines.append(f'<text x="{px:.2f}" y="{margin_t + plot_h + 18}" text-anchor="middle" '
                     f'font-family="sans-serif" font-size="11">{tx:.3g}</text>')
    for ty in _nice_ticks(y_lo, y_hi):
        py = sy(ty)
        lines.append(f'<line x1="{margin_l - 5}" y1="{py:.2f}" x2="{margin_l}" '
                     f'y2="{py:.2f}" stroke="#333"/>')
        lines.append(f'<text x="{margin_l - 8}" y="{py + 4:.2f}" text-anchor="end" '
                     f'font-family="sans-serif" font-size="11">{ty:.3g}</text>')
    lines.append(f'<text x="{margin_l + plot_w/2:.1f}" y="{height - 10}" text-anchor="middle" '
                 f'font-family="sans-serif" font-size="13">{spec.x_label or spec.x}</text>')
    y_label = spec.y_label or ", ".join(dict.fromkeys(s.y for s in spec.series))
    lines.append(f'<text x="18" y="{margin_t + plot_h/2:.1f}" text-anchor="middle" '
                 f'font-family="sans-serif" font-size="13" '
                 f'transform="rotate(-90 18 {margin_t + plot_h/2:.1f})">{y_label}</text>')
    legend_y = margin_t + 10
    for label, dash, color, pts in series:
        attrs = f'stroke="{color}" stroke-width="1.6" fill="none"'
        if dash:
            attrs += f' stroke-dasharray="{dash}"'
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        lines.append(f'<polyline points="{coords}" {attrs}/>')
        lx = margin_l + plot_w + 10
        lines.append(f'<line x1="{lx}" y1="{legend_y}" x2="{lx + 24}" y2="{legend_y}" {attrs}/>')
        lines.append(f'<text x="{lx + 30}" y="{legend_y + 4}" font-family="sans-serif" '
                     f'font-size="11">{label}</text>')
        legend_y += 18
    lines.append("</svg>")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
