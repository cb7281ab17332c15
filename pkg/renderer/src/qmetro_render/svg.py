"""Minimal deterministic SVG builder.

Elements are emitted in insertion order with fixed attribute order and
fixed coordinate formatting, so identical input data yields byte-identical
files (golden-file friendly)."""

from __future__ import annotations


def fmt(x: float) -> str:
    return f"{x:.2f}"


class Svg:
    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.parts: list[str] = []

    def add(self, tag: str, *, text: str | None = None, **attrs) -> None:
        rendered = " ".join(
            f'{key.replace("_", "-")}="{value}"' for key, value in attrs.items()
        )
        if text is None:
            self.parts.append(f"<{tag} {rendered}/>")
        else:
            self.parts.append(f"<{tag} {rendered}>{text}</{tag}>")

    def line(self, x1, y1, x2, y2, **attrs) -> None:
        self.add("line", x1=fmt(x1), y1=fmt(y1), x2=fmt(x2), y2=fmt(y2), **attrs)

    def polyline(self, points, **attrs) -> None:
        joined = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in points)
        self.add("polyline", points=joined, fill="none", **attrs)

    def circle(self, cx, cy, r, **attrs) -> None:
        self.add("circle", cx=fmt(cx), cy=fmt(cy), r=fmt(r), **attrs)

    def rect(self, x, y, w, h, **attrs) -> None:
        self.add("rect", x=fmt(x), y=fmt(y), width=fmt(w), height=fmt(h), **attrs)

    def text(self, x, y, content, **attrs) -> None:
        self.add("text", text=content, x=fmt(x), y=fmt(y), **attrs)

    def render(self) -> str:
        body = "\n".join(f"  {part}" for part in self.parts)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">\n'
            f"{body}\n</svg>\n"
        )


class Axes:
    """Affine map from data coordinates to the pixel frame."""

    def __init__(self, width, height, x_range, y_range,
                 left=60, right=20, top=20, bottom=45):
        self.left, self.top = left, top
        self.inner_w = width - left - right
        self.inner_h = height - top - bottom
        self.x_lo, self.x_hi = x_range
        self.y_lo, self.y_hi = y_range

    def x(self, value: float) -> float:
        frac = (value - self.x_lo) / (self.x_hi - self.x_lo)
        return self.left + frac * self.inner_w

    def y(self, value: float) -> float:
        frac = (value - self.y_lo) / (self.y_hi - self.y_lo)
        return self.top + (1 - frac) * self.inner_h
