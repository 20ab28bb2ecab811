"""Standalone SVG documents for curve plots; no external assets."""

from __future__ import annotations

from typing import Iterable, Sequence

WIDTH, HEIGHT = 800, 600
MARGIN = 40


class SvgCanvas:
    """Maps a parameter rectangle onto a fixed 800x600 viewBox, y up."""

    def __init__(self, x0: float, x1: float, y0: float, y1: float):
        self.x0, self.x1, self.y0, self.y1 = x0, x1, y0, y1
        self.parts: list[str] = []

    def tx(self, x: float) -> float:
        return MARGIN + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - 2 * MARGIN)

    def ty(self, y: float) -> float:
        # invert so larger parameter values are higher on the page
        return HEIGHT - MARGIN - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - 2 * MARGIN)

    def polyline(self, pts: Sequence[tuple[float, float]], color: str,
                 dashed: bool = False, width: float = 1.5) -> None:
        if len(pts) < 2:
            return
        coords = " ".join("%.2f,%.2f" % (self.tx(x), self.ty(y)) for x, y in pts)
        dash = ' stroke-dasharray="6,4"' if dashed else ""
        self.parts.append(
            '<polyline fill="none" stroke="%s" stroke-width="%.2f"%s points="%s"/>'
            % (color, width, dash, coords))

    def marker(self, x: float, y: float, label: str, color: str = "#000") -> None:
        px, py = self.tx(x), self.ty(y)
        self.parts.append('<circle cx="%.2f" cy="%.2f" r="3.5" fill="%s"/>' % (px, py, color))
        self.parts.append(
            '<text x="%.2f" y="%.2f" font-size="14" font-family="sans-serif" '
            'fill="%s">%s</text>' % (px + 6, py - 6, color, label))

    def text(self, x: float, y: float, s: str, size: int = 13) -> None:
        self.parts.append(
            '<text x="%.2f" y="%.2f" font-size="%d" font-family="sans-serif">%s</text>'
            % (self.tx(x), self.ty(y), size, s))

    def frame(self) -> None:
        self.parts.append(
            '<rect x="%d" y="%d" width="%d" height="%d" fill="none" stroke="#888"/>'
            % (MARGIN, MARGIN, WIDTH - 2 * MARGIN, HEIGHT - 2 * MARGIN))

    def render(self, title: str = "") -> str:
        head = ('<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 %d %d">'
                % (WIDTH, HEIGHT))
        body = []
        if title:
            body.append('<text x="%d" y="24" font-size="16" font-family="sans-serif">%s</text>'
                        % (MARGIN, title))
        return "\n".join([head] + body + self.parts + ["</svg>"])


CURVE_STYLE = {
    "disc": ("#1f77b4", False),
    "ties": ("#d62728", False),
    "zeros": ("#2ca02c", True),   # zero-value curves drawn dashed
}


def quintic_curves_svg(curves: dict[str, list], landmarks: dict[str, tuple]) -> str:
    cv = SvgCanvas(0.0, 3.0, 0.0, 1.0)
    cv.frame()
    for name, lines in curves.items():
        color, dashed = CURVE_STYLE.get(name, ("#000", False))
        for line in lines:
            cv.polyline(line, color, dashed)
    for name, (b, c) in landmarks.items():
        cv.marker(float(b), float(c), name)
    return cv.render("degree-5 stratification: disc (blue), ties (red), zeros (green)")


def section_svg(scan, curves: dict[str, list], box: tuple[float, float, float, float]) -> str:
    """Section of the degree-6 box at fixed c, zoomed to the main triangle.

    Solid tie curves, dashed zero-value curves, markers at component
    representatives labeled with their passports.
    """
    x0, x1, y0, y1 = box
    cv = SvgCanvas(x0, x1, y0, y1)
    cv.frame()
    for name, lines in curves.items():
        color, dashed = CURVE_STYLE.get(name, ("#000", False))
        for line in lines:
            cv.polyline(line, color, dashed)
    for comp in scan.components:
        a, b = float(comp.rep[0]), float(comp.rep[1])
        cv.marker(a, b, "".join(map(str, comp.passport)), "#444")
    return cv.render("c = %s section: main-triangle domains" % scan.gamma)
