"""Render the two figure kinds from their CSV files.

The renderer is read-only with respect to the data: every plotted value is
carried verbatim into ``data-*`` attributes of the SVG markers, so tests
(and curious readers) can match the image back to the file byte for byte.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

from .svg import Axes, Svg

FIG3_COLUMNS = ["eta", "ratio_deph_erasure", "ratio_ampdamp_ceiling"]
FIG4_COLUMNS = ["N", "f_ii", "f_iii", "knysh", "universal"]

WIDTH, HEIGHT = 640, 420


class SchemaError(ValueError):
    """CSV header or contents do not match the expected figure schema."""


@dataclass
class FigureSpec:
    input_csv: str
    kind: str  # "fig3" | "fig4"
    output_path: str
    x_label: str = ""
    y_label: str = ""
    eta_annotation: str | None = None

    def __post_init__(self):
        if self.kind not in ("fig3", "fig4"):
            raise SchemaError(f"unknown figure kind {self.kind!r}")
        if not self.x_label:
            self.x_label = "decoherence parameter eta" if self.kind == "fig3" else "probes N"
        if not self.y_label:
            self.y_label = "QFI ratio" if self.kind == "fig3" else "QFI"


def _read_rows(path: str, expected: list[str]) -> list[dict]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"empty file, expected header {','.join(expected)}") from None
        if header != expected:
            missing = [c for c in expected if c not in header]
            extra = [c for c in header if c not in expected]
            raise SchemaError(
                f"header mismatch: missing columns {missing}, unexpected {extra}"
            )
        rows = [dict(zip(header, row)) for row in reader if row]
    if not rows:
        raise SchemaError("no data rows")
    return rows


def _frame(svg: Svg, axes: Axes, spec: FigureSpec, x_ticks, y_ticks) -> None:
    x0, y0 = axes.left, axes.top
    x1, y1 = axes.left + axes.inner_w, axes.top + axes.inner_h
    svg.rect(x0, y0, axes.inner_w, axes.inner_h, fill="white", stroke="black")
    for tick in x_ticks:
        px = axes.x(tick)
        svg.line(px, y1, px, y1 + 4, stroke="black")
        svg.text(px, y1 + 16, f"{tick:g}", text_anchor="middle", font_size="10")
    for tick in y_ticks:
        py = axes.y(tick)
        svg.line(x0 - 4, py, x0, py, stroke="black")
        svg.text(x0 - 7, py + 3, f"{tick:g}", text_anchor="end", font_size="10")
    svg.text((x0 + x1) / 2, y1 + 32, spec.x_label, text_anchor="middle", font_size="11")
    svg.text(14, (y0 + y1) / 2, spec.y_label, text_anchor="middle", font_size="11",
             transform=f'rotate(-90 14 {(y0 + y1) / 2:.2f})')


def _ticks(lo: float, hi: float, count: int = 6) -> list[float]:
    step = (hi - lo) / (count - 1)
    magnitude = 10 ** math.floor(math.log10(step))
    for nice in (1, 2, 2.5, 5, 10):
        if nice * magnitude >= step:
            step = nice * magnitude
            break
    first = math.ceil(lo / step) * step
    ticks = []
    value = first
    while value <= hi + 1e-12:
        ticks.append(round(value, 10))
        value += step
    return ticks


def render_fig3(spec: FigureSpec) -> str:
    """Advantage-ratio curves vs eta, with the detached noiseless limit dot."""
    rows = _read_rows(spec.input_csv, FIG3_COLUMNS)
    etas = [float(r["eta"]) for r in rows]
    ratios = [float(r["ratio_deph_erasure"]) for r in rows]
    ceilings = [float(r["ratio_ampdamp_ceiling"]) for r in rows]

    limit = math.e
    y_lo = min(0.0, min(ratios))
    y_hi = max(limit, max(ratios), max(ceilings)) * 1.05
    axes = Axes(WIDTH, HEIGHT, (0.0, 1.0), (y_lo, y_hi))
    svg = Svg(WIDTH, HEIGHT)
    _frame(svg, axes, spec, _ticks(0.0, 1.0), _ticks(y_lo, y_hi))

    svg.polyline(
        [(axes.x(e), axes.y(v)) for e, v in zip(etas, ceilings)],
        stroke="#999999", stroke_width="1.5", **{"class": "curve-ampdamp-ceiling"},
    )
    svg.polyline(
        [(axes.x(e), axes.y(v)) for e, v in zip(etas, ratios)],
        stroke="black", stroke_width="1.5", **{"class": "curve-deph-erasure"},
    )
    for row in rows:
        svg.circle(
            axes.x(float(row["eta"])), axes.y(float(row["ratio_deph_erasure"])), 1.6,
            fill="black", **{
                "class": "ratio-point",
                "data-eta": row["eta"],
                "data-ratio": row["ratio_deph_erasure"],
                "data-ceiling": row["ratio_ampdamp_ceiling"],
            },
        )
    # the advantage vanishes exactly at eta = 1: a detached dot marks the limit
    svg.circle(axes.x(1.0), axes.y(limit), 3.5, fill="black",
               **{"class": "limit-dot", "data-limit": f"{limit:.17g}"})
    if spec.eta_annotation:
        svg.text(axes.left + 8, axes.top + 14, spec.eta_annotation, font_size="11",
                 text_anchor="start", **{"class": "annotation"})
    return svg.render()


def render_fig4(spec: FigureSpec) -> str:
    """Strategy comparison: circles for attainable values, dashed ceilings,
    highlighted columns where the ancilla-assisted value beats the
    no-ancilla ceiling."""
    rows = _read_rows(spec.input_csv, FIG4_COLUMNS)
    ns = [float(r["N"]) for r in rows]
    top = max(float(r["universal"]) for r in rows)
    axes = Axes(WIDTH, HEIGHT, (min(ns) - 0.5, max(ns) + 0.5), (0.0, top * 1.05))
    svg = Svg(WIDTH, HEIGHT)
    _frame(svg, axes, spec, sorted(set(ns)), _ticks(0.0, top * 1.05))

    half = axes.inner_w / (2 * max(len(rows), 1)) * 0.8
    for row in rows:
        if float(row["f_iii"]) > float(row["knysh"]):
            px = axes.x(float(row["N"]))
            svg.rect(px - half, axes.top, 2 * half, axes.inner_h,
                     fill="#dddddd", **{"class": "highlight", "data-n": row["N"]})

    for column, style in (("knysh", "black"), ("universal", "#999999")):
        svg.polyline(
            [(axes.x(float(r["N"])), axes.y(float(r[column]))) for r in rows],
            stroke=style, stroke_width="1.2", stroke_dasharray="6 4",
            **{"class": f"bound-{column}"},
        )
    for row in rows:
        px = axes.x(float(row["N"]))
        svg.circle(px, axes.y(float(row["f_ii"])), 4, fill="black", **{
            "class": "point-ii", "data-n": row["N"], "data-value": row["f_ii"],
        })
        svg.circle(px, axes.y(float(row["f_iii"])), 4, fill="#888888", **{
            "class": "point-iii", "data-n": row["N"], "data-value": row["f_iii"],
        })
        for column in ("knysh", "universal"):
            svg.circle(px, axes.y(float(row[column])), 1.2, fill="none", **{
                "class": f"tick-{column}", "data-n": row["N"], "data-value": row[column],
            })
    if spec.eta_annotation:
        svg.text(axes.left + 8, axes.top + 14, spec.eta_annotation, font_size="11",
                 text_anchor="start", **{"class": "annotation"})
    return svg.render()


def render(spec: FigureSpec) -> None:
    """Render to ``spec.output_path``; nothing is written on error."""
    content = render_fig3(spec) if spec.kind == "fig3" else render_fig4(spec)
    with open(spec.output_path, "w") as fh:
        fh.write(content)
