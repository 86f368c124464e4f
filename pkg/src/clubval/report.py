"""Render regression reports, valuation tables, premium summaries, and
scatter figures to text, CSV, Markdown, and SVG.

All rendering is pure string building, so identical inputs give byte
identical output. Numbers are rounded half away from zero at render
time only; internal values are never rounded.
"""

from __future__ import annotations

import csv
import io
import math
import sys
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from xml.sax.saxutils import escape

from .dataset import ClubRecord
from .errors import DomainError, EmptyInput, IoError, NonPositiveLogInput
from .regression import RegressionFit
from .valuation import AggregateRow, PremiumResult, ValuationResult

FORMATS = ("text", "csv", "md", "svg")
SCALES = ("linear", "log10")

DEFAULT_DECIMALS = {
    "coefficient": 4,
    "statistic": 4,
    "value": 2,
    "ratio": 1,
    "aggregate": 1,
    "percent": 1,
}


@dataclass(frozen=True)
class RenderSpec:
    """How to render: output format, plot scale, per-column decimals."""

    format: str = "text"
    scale: str = "linear"
    decimal_places: dict = field(default_factory=dict)
    output_path: str | None = None

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise DomainError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.scale not in SCALES:
            raise DomainError(f"scale must be one of {SCALES}, got {self.scale!r}")
        for key, places in self.decimal_places.items():
            if int(places) != places or places < 0:
                raise DomainError(f"decimal places for {key!r} must be >= 0")

    def places(self, column: str) -> int:
        return int(self.decimal_places.get(column, DEFAULT_DECIMALS[column]))


@dataclass(frozen=True)
class ScatterSeries:
    """One plotted series: a label and (x, y, club) points in m EUR."""

    label: str
    points: tuple[tuple[float, float, str], ...]

    def __post_init__(self) -> None:
        for x, y, club in self.points:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise DomainError(f"{club}: scatter coordinates must be finite")


def fmt_fixed(value: float, places: int) -> str:
    """Fixed-point formatting, ties rounded away from zero."""
    value = float(value)
    if not math.isfinite(value):
        return str(value)
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def fmt_grouped(value: float, places: int = 0) -> str:
    """Like fmt_fixed but with thousands separators."""
    return f"{float(fmt_fixed(value, places)):,.{places}f}"


def fmt_sci(value: float) -> str:
    """Scientific notation with two decimals, e.g. 1.69E-06."""
    return f"{value:.2E}"


def write_document(doc: str, output_path: str | None = None) -> None:
    """Write to a file, or to stdout when no path is given."""
    if output_path is None or output_path == "-":
        sys.stdout.write(doc)
        return
    try:
        Path(output_path).write_text(doc, encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {output_path}: {exc}") from exc


def _text_table(rows: list[list[str]], right_align: set[int]) -> str:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [
            cell.rjust(widths[i]) if i in right_align else cell.ljust(widths[i])
            for i, cell in enumerate(row)
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _md_table(rows: list[list[str]], right_align: set[int]) -> str:
    header, *body = rows
    sep = ["---:" if i in right_align else "---" for i in range(len(header))]
    lines = ["| " + " | ".join(header) + " |", "| " + " | ".join(sep) + " |"]
    lines += ["| " + " | ".join(row) + " |" for row in body]
    return "\n".join(lines) + "\n"


def _csv_doc(rows: list[list[str]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(rows)
    return out.getvalue()


def render_regression_table(fit: RegressionFit, spec: RenderSpec) -> str:
    """One row per coefficient plus the summary statistics block."""
    if spec.format == "svg":
        raise DomainError("svg is only valid for plot rendering")
    cp = spec.places("coefficient")
    sp = spec.places("statistic")

    coef_rows = [["variable", "coefficient", "standard_error", "t_stat", "p_value"]]
    coef_rows.append(["intercept", "0", "", "", ""])
    for vid, coef, se, t, p in fit.summary_rows():
        coef_rows.append(
            [vid, fmt_fixed(coef, cp), fmt_fixed(se, cp), fmt_fixed(t, cp), fmt_sci(p)]
        )

    stat_rows = [["statistic", "value"]]
    stat_rows += [
        ["Multiple R", fmt_fixed(fit.multiple_r, sp)],
        ["R Square", fmt_fixed(fit.r_squared, sp)],
        ["Adjusted R Square", fmt_fixed(fit.adjusted_r_squared, sp)],
        ["Standard Error", fmt_fixed(fit.standard_error_of_regression, sp)],
        ["Observations", str(fit.n_observations)],
        ["Degrees of freedom", str(fit.dof)],
    ]

    if spec.format == "csv":
        return _csv_doc(coef_rows) + "\n" + _csv_doc(stat_rows)
    table = _md_table if spec.format == "md" else _text_table
    return table(coef_rows, {1, 2, 3, 4}) + "\n" + table(stat_rows, {1})


def render_valuation_table(
    results: list[ValuationResult],
    records: list[ClubRecord],
    aggregates: AggregateRow,
    spec: RenderSpec,
) -> str:
    """Per-club valuation rows followed by Average and Median rows.

    The Average and Median ratio cells aggregate the per-club ratios
    (mean of ratios, median of ratios), not the ratio of the aggregated
    firm values.
    """
    if spec.format == "svg":
        raise DomainError("svg is only valid for plot rendering")
    if not results:
        raise EmptyInput("no valuation rows to render")
    if len(results) != len(records):
        raise DomainError(f"{len(results)} results for {len(records)} records")
    vp = spec.places("value")
    ap = spec.places("aggregate")
    rp = spec.places("ratio")
    plain = spec.format == "csv"

    def sns_cell(value: float, places: int = 0) -> str:
        return fmt_fixed(value, places) if plain else fmt_grouped(value, places)

    rows = [
        [
            "league",
            "club",
            "sns_followers",
            "revenue_meur",
            "player_market_value_meur",
            "fv1_meur",
            "fv2_meur",
            "fv1_fv2",
        ]
    ]
    for rec, res in zip(records, results):
        rows.append(
            [
                rec.league,
                rec.name,
                sns_cell(rec.sns_followers),
                fmt_fixed(rec.revenue_meur, vp),
                fmt_fixed(rec.player_market_value_meur, vp),
                fmt_fixed(res.fv1, vp),
                fmt_fixed(res.fv2, vp),
                fmt_fixed(res.ratio_pct, rp) + "%",
            ]
        )
    rows.append(
        [
            "",
            "Average",
            sns_cell(aggregates.mean_sns),
            fmt_fixed(aggregates.mean_revenue, ap),
            fmt_fixed(aggregates.mean_pmv, ap),
            fmt_fixed(aggregates.mean_fv1, ap),
            fmt_fixed(aggregates.mean_fv2, ap),
            fmt_fixed(aggregates.mean_of_ratios_pct, rp) + "%",
        ]
    )
    rows.append(
        [
            "",
            "Median",
            sns_cell(aggregates.median_sns),
            fmt_fixed(aggregates.median_revenue, ap),
            fmt_fixed(aggregates.median_pmv, ap),
            fmt_fixed(aggregates.median_fv1, ap),
            fmt_fixed(aggregates.median_fv2, ap),
            fmt_fixed(aggregates.median_of_ratios_pct, rp) + "%",
        ]
    )

    note = (
        "Ratio aggregates are the mean and median of the per-club "
        "FV1/FV2 ratios.\n"
    )
    if spec.format == "csv":
        return _csv_doc(rows)
    table = _md_table if spec.format == "md" else _text_table
    return table(rows, {2, 3, 4, 5, 6, 7}) + "\n" + note


def render_premium_table(
    premiums: list[PremiumResult],
    ranges: dict[str, tuple[float, float]],
    spec: RenderSpec,
) -> str:
    """Per-case premiums and per-model premium ranges, in percent."""
    if spec.format == "svg":
        raise DomainError("svg is only valid for plot rendering")
    if not premiums:
        raise EmptyInput("no premiums to render")
    pp = spec.places("percent")
    vp = spec.places("value")

    rows = [["club", "model", "implied_stake_myen", "premium_pct"]]
    for p in premiums:
        rows.append(
            [
                p.club,
                p.model_name,
                fmt_fixed(p.implied_stake_value_myen, vp),
                fmt_fixed(100.0 * p.premium, pp),
            ]
        )
    range_rows = [["model", "min_premium_pct", "max_premium_pct"]]
    for model_name in sorted(ranges):
        low, high = ranges[model_name]
        range_rows.append(
            [model_name, fmt_fixed(100.0 * low, pp), fmt_fixed(100.0 * high, pp)]
        )

    if spec.format == "csv":
        return _csv_doc(rows) + "\n" + _csv_doc(range_rows)
    table = _md_table if spec.format == "md" else _text_table
    return table(rows, {2, 3}) + "\n" + table(range_rows, {1, 2})


def render_selection_table(report, spec: RenderSpec) -> str:
    """Ranked subsets with their headline fit statistics."""
    if spec.format == "svg":
        raise DomainError("svg is only valid for plot rendering")
    sp = spec.places("statistic")
    rows = [["rank", "variables", "adj_r_squared", "r_squared", "std_error", "all_significant"]]
    for rank, model in enumerate(report.ranked_models, start=1):
        rows.append(
            [
                str(rank),
                "+".join(model.variable_ids),
                fmt_fixed(model.fit.adjusted_r_squared, sp),
                fmt_fixed(model.fit.r_squared, sp),
                fmt_fixed(model.fit.standard_error_of_regression, sp),
                "yes" if model.all_significant else "no",
            ]
        )
    if len(rows) == 1:
        rows.append(["", "(none selected)", "", "", "", ""])

    trailer = ""
    if report.skipped:
        skipped = "; ".join("+".join(s) for s in report.skipped)
        trailer += f"Skipped rank-deficient subsets: {skipped}\n"
    if not report.converged:
        trailer += "Warning: selection stopped on a cycle before converging.\n"

    if spec.format == "csv":
        return _csv_doc(rows)
    table = _md_table if spec.format == "md" else _text_table
    doc = table(rows, {0, 2, 3, 4})
    return doc + ("\n" + trailer if trailer else "")


def scale_value(value: float, scale: str) -> float:
    """Map a data value onto the axis scale (identity or log10)."""
    if scale == "linear":
        return float(value)
    if scale == "log10":
        if value <= 0:
            raise NonPositiveLogInput(
                f"log10 axis requires positive values, got {value}"
            )
        return math.log10(value)
    raise DomainError(f"scale must be one of {SCALES}, got {scale!r}")


def _nice_step(span: float) -> float:
    raw = span / 5.0
    magnitude = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 5.0, 10.0):
        if raw <= mult * magnitude:
            return mult * magnitude
    return 10.0 * magnitude


def _linear_ticks(lo: float, hi: float) -> list[float]:
    if hi <= lo:
        return [lo]
    step = _nice_step(hi - lo)
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-9 * step:
        ticks.append(round(t, 10))
        t += step
    return ticks


def _log_ticks(lo: float, hi: float) -> list[float]:
    return [float(e) for e in range(math.ceil(lo - 1e-9), math.floor(hi + 1e-9) + 1)]


def _tick_label(tick: float, scale: str) -> str:
    value = 10.0 ** tick if scale == "log10" else tick
    if value == int(value) and abs(value) < 1e15:
        return f"{int(value):,}"
    return fmt_fixed(value, 2)


_MARKER_SHAPES = ("circle", "square", "triangle")


def _marker_element(shape: str, px: float, py: float, cls: str, club: str) -> str:
    title = f"<title>{escape(club)}</title>"
    if shape == "circle":
        return (
            f'<circle class="{cls}" cx="{px:.2f}" cy="{py:.2f}" r="4">'
            f"{title}</circle>"
        )
    if shape == "square":
        return (
            f'<rect class="{cls}" x="{px - 3.5:.2f}" y="{py - 3.5:.2f}" '
            f'width="7" height="7">{title}</rect>'
        )
    points = f"{px:.2f},{py - 4.5:.2f} {px - 4:.2f},{py + 3.5:.2f} {px + 4:.2f},{py + 3.5:.2f}"
    return f'<polygon class="{cls}" points="{points}">{title}</polygon>'


def emit_scatter(
    series: list[ScatterSeries],
    spec: RenderSpec,
    guide_line: bool = False,
    x_label: str = "FV1 (m EUR)",
    y_label: str = "FV2 (m EUR)",
) -> str:
    """Build an SVG 1.1 scatter figure.

    One marker element per point, a distinct shape per series, axes
    with tick labels, and optionally a y = x guide line (the 100 percent
    ratio locus).
    """
    if spec.format != "svg":
        raise DomainError(f"emit_scatter requires svg format, got {spec.format!r}")
    if not series or all(not s.points for s in series):
        raise EmptyInput("nothing to plot")

    xs, ys = [], []
    for s in series:
        for x, y, _club in s.points:
            xs.append(scale_value(x, spec.scale))
            ys.append(scale_value(y, spec.scale))

    def padded(values: list[float]) -> tuple[float, float]:
        lo, hi = min(values), max(values)
        if hi == lo:
            return lo - 0.5, hi + 0.5
        pad = 0.05 * (hi - lo)
        return lo - pad, hi + pad

    x_lo, x_hi = padded(xs)
    y_lo, y_hi = padded(ys)

    width, height = 720.0, 540.0
    ml, mr, mt, mb = 70.0, 160.0, 30.0, 55.0
    plot_w, plot_h = width - ml - mr, height - mt - mb

    def px(sx: float) -> float:
        return ml + (sx - x_lo) / (x_hi - x_lo) * plot_w

    def py(sy: float) -> float:
        return height - mb - (sy - y_lo) / (y_hi - y_lo) * plot_h

    ticks = _log_ticks if spec.scale == "log10" else _linear_ticks
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        "<style>"
        ".s0{fill:#1f6fb2;}"
        ".s1{fill:#c4552d;}"
        ".s2{fill:#3a8f4d;}"
        ".axis{stroke:#333;stroke-width:1;}"
        ".tick{stroke:#333;stroke-width:1;}"
        ".grid{stroke:#ddd;stroke-width:0.5;}"
        ".guide{stroke:#888;stroke-width:1;stroke-dasharray:5 4;fill:none;}"
        "text{font-family:sans-serif;font-size:11px;fill:#222;}"
        "</style>",
        f'<line class="axis" x1="{ml:.2f}" y1="{height - mb:.2f}" '
        f'x2="{width - mr:.2f}" y2="{height - mb:.2f}"/>',
        f'<line class="axis" x1="{ml:.2f}" y1="{mt:.2f}" '
        f'x2="{ml:.2f}" y2="{height - mb:.2f}"/>',
    ]

    for t in ticks(x_lo, x_hi):
        tx = px(t)
        parts.append(
            f'<line class="tick" x1="{tx:.2f}" y1="{height - mb:.2f}" '
            f'x2="{tx:.2f}" y2="{height - mb + 5:.2f}"/>'
        )
        parts.append(
            f'<text x="{tx:.2f}" y="{height - mb + 18:.2f}" '
            f'text-anchor="middle">{_tick_label(t, spec.scale)}</text>'
        )
    for t in ticks(y_lo, y_hi):
        ty = py(t)
        parts.append(
            f'<line class="tick" x1="{ml - 5:.2f}" y1="{ty:.2f}" '
            f'x2="{ml:.2f}" y2="{ty:.2f}"/>'
        )
        parts.append(
            f'<text x="{ml - 8:.2f}" y="{ty + 4:.2f}" '
            f'text-anchor="end">{_tick_label(t, spec.scale)}</text>'
        )

    parts.append(
        f'<text x="{ml + plot_w / 2:.2f}" y="{height - 12:.2f}" '
        f'text-anchor="middle">{escape(x_label)}</text>'
    )
    parts.append(
        f'<text x="18" y="{mt + plot_h / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 18 {mt + plot_h / 2:.2f})">{escape(y_label)}</text>'
    )

    if guide_line:
        lo = max(x_lo, y_lo)
        hi = min(x_hi, y_hi)
        if hi > lo:
            parts.append(
                f'<line class="guide" x1="{px(lo):.2f}" y1="{py(lo):.2f}" '
                f'x2="{px(hi):.2f}" y2="{py(hi):.2f}"/>'
            )

    for idx, s in enumerate(series):
        shape = _MARKER_SHAPES[idx % len(_MARKER_SHAPES)]
        label_attr = escape(s.label, {'"': "&quot;"})
        parts.append(f'<g class="series" data-label="{label_attr}">')
        for x, y, club in s.points:
            parts.append(
                _marker_element(
                    shape,
                    px(scale_value(x, spec.scale)),
                    py(scale_value(y, spec.scale)),
                    f"marker s{idx}",
                    club,
                )
            )
        parts.append("</g>")
        legend_y = mt + 16.0 * idx
        lx = width - mr + 18.0
        parts.append(_marker_element(shape, lx, legend_y - 4.0, f"swatch s{idx}", s.label))
        parts.append(
            f'<text x="{lx + 10:.2f}" y="{legend_y:.2f}">{escape(s.label)}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
