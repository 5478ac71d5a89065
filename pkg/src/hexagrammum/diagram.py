"""Deterministic SVG diagrams of configurations on the conic.

The conic is drawn as the unit circle through the rational parametrization
alpha -> ((1 - a^2)/(1 + a^2), 2a/(1 + a^2)), infinity landing on (-1, 0).
In the same picture a plane point [a0 x1^2 + a1 x1 x2 + a2 x2^2] sits at
homogeneous coordinates (a0 - a2, -a1, a0 + a2).  Everything is exact until
the final float formatting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .conic_plane import ConicPoint, Line, PlanePoint, chord
from .labelling import LTR, crosshair_pairs, parse_array
from .pascal_engine import Hexad, pascal_of_array

CANVAS = 600
EXTENT = 3  # world coordinates visible: [-EXTENT, EXTENT]^2
STYLE = (
    ".conic{fill:none;stroke:#444;stroke-width:1.5}"
    ".side{stroke:#2b6cb0;stroke-width:1}"
    ".side2{stroke:#2f855a;stroke-width:1}"
    ".aux{stroke:#999;stroke-width:1;stroke-dasharray:4 3}"
    ".pascal{stroke:#c53030;stroke-width:2.5}"
    ".pt{fill:#000}"
    ".auxpt{fill:#805ad5}"
    "text{font-family:sans-serif;font-size:14px}"
)


@dataclass
class DiagramSpec:
    title: str
    points: dict[str, ConicPoint]
    aux_points: dict[str, PlanePoint] = field(default_factory=dict)
    segments: list[tuple[str, str, str]] = field(default_factory=list)  # (letter, letter, css class)
    lines: list[tuple[Line, str, str]] = field(default_factory=list)  # (line, css class, caption)
    warnings: list[str] = field(default_factory=list)


def conic_xy(z: ConicPoint) -> tuple[Fraction, Fraction]:
    a, b = z.form.coeffs
    # point of the square u^2 with u = a x1 + b x2
    return plane_xy(PlanePoint.of([a * a, 2 * a * b, b * b]))


def plane_xy(P: PlanePoint) -> tuple[Fraction, Fraction] | None:
    a0, a1, a2 = P.coeffs
    w = a0 + a2
    if w == 0:
        return None
    return Fraction(a0 - a2, w), Fraction(-a1, w)


def line_equation(L: Line) -> tuple[int, int, int]:
    """(a, b, c) with a*x + b*y + c = 0 in picture coordinates."""
    p0, p1, p2 = L.coeffs
    return p2 - p0, p1, p0 + p2


def clip_line(L: Line, extent: Fraction = Fraction(EXTENT)):
    a, b, c = line_equation(L)
    if a == 0 and b == 0:
        return None
    pts = []
    for x in (-extent, extent):
        if b != 0:
            y = Fraction(-(a * x + c), b)
            if -extent <= y <= extent:
                pts.append((x, y))
    for y in (-extent, extent):
        if a != 0:
            x = Fraction(-(b * y + c), a)
            if -extent <= x <= extent:
                pts.append((x, y))
    pts = sorted(set(pts))
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def _px(x: Fraction, y: Fraction) -> tuple[str, str]:
    scale = Fraction(CANVAS, 2 * EXTENT)
    X = float(CANVAS / 2 + x * scale)
    Y = float(CANVAS / 2 - y * scale)
    return f"{X:.3f}", f"{Y:.3f}"


def render_svg(spec: DiagramSpec) -> str:
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">',
        f"<title>{spec.title}</title>",
        f"<style>{STYLE}</style>",
    ]
    cx, cy = _px(Fraction(0), Fraction(0))
    radius = f"{CANVAS / (2 * EXTENT):.3f}"
    out.append(f'<circle class="conic" cx="{cx}" cy="{cy}" r="{radius}"/>')
    for x, y, cls in spec.segments:
        (x1, y1), (x2, y2) = _px(*conic_xy(spec.points[x])), _px(*conic_xy(spec.points[y]))
        out.append(f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"><title>{x}{y}</title></line>')
    for L, cls, caption in spec.lines:
        seg = clip_line(L)
        if seg is None:
            spec.warnings.append(f"line {caption} misses the canvas; skipped")
            continue
        (x1, y1), (x2, y2) = _px(*seg[0]), _px(*seg[1])
        out.append(f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"><title>{caption}</title></line>')
    for name, z in spec.points.items():
        x, y = conic_xy(z)
        px, py = _px(x, y)
        tx, ty = _px(x * Fraction(9, 8), y * Fraction(9, 8))
        out.append(f'<circle class="pt" cx="{px}" cy="{py}" r="4"/>')
        out.append(f'<text x="{tx}" y="{ty}" text-anchor="middle">{name}</text>')
    for name, P in spec.aux_points.items():
        xy = plane_xy(P)
        if xy is None or max(abs(xy[0]), abs(xy[1])) > EXTENT:
            spec.warnings.append(f"point {name} is off the canvas; skipped")
            continue
        px, py = _px(*xy)
        out.append(f'<circle class="auxpt" cx="{px}" cy="{py}" r="3.5"/>')
        out.append(f'<text x="{px}" y="{py}" dx="6" dy="-6">{name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _hexad_points(h: Hexad) -> dict[str, ConicPoint]:
    pts = {}
    for x in LTR:
        pts[x] = h[x]
    return pts


def array_sides(arr) -> list[tuple[str, str]]:
    return [side for pair in crosshair_pairs(arr) for side in pair]


def hexad_diagram(h: Hexad, arrays: Iterable[str], title: str = "Pascal lines") -> DiagramSpec:
    spec = DiagramSpec(title, _hexad_points(h))
    for n, text in enumerate(arrays):
        arr = parse_array(text)
        cls = "side" if n % 2 == 0 else "side2"
        for x, y in array_sides(arr):
            if h[x] != h[y]:
                spec.segments.append((x, y, cls))
        spec.lines.append((pascal_of_array(h, arr), "pascal", f"Pascal {text}"))
    return spec


def ricochet_diagram(data) -> DiagramSpec:
    from .configurations import RICOCHET_ARRAYS

    h = data.hexad
    spec = DiagramSpec("ricochet configuration", _hexad_points(h), {"V": data.V, "W": data.W})
    for n, text in enumerate(RICOCHET_ARRAYS):
        cls = "side" if n == 0 else "side2"
        for x, y in array_sides(parse_array(text)):
            spec.segments.append((x, y, cls))
    spec.lines.append((data.pascal, "pascal", "common Pascal VW"))
    return spec


def involution_diagram(data) -> DiagramSpec:
    h = data.hexad
    spec = DiagramSpec("involution", _hexad_points(h), {"Q": data.centre})
    for x, y in (("A", "F"), ("B", "E"), ("C", "D")):
        spec.lines.append((chord(h[x], h[y]), "aux", f"{x}{y}"))
    spec.lines.append((data.pascal, "pascal", "polar of Q"))
    return spec


def triple_diagram(data) -> DiagramSpec:
    from .configurations import TRIPLE_CONCURRENCES

    h = data.hexad
    spec = DiagramSpec("triple symmetric configuration", _hexad_points(h), dict(data.centres))
    for pairs in TRIPLE_CONCURRENCES.values():
        for x, y in pairs:
            spec.lines.append((chord(h[x], h[y]), "aux", f"{x}{y}"))
    spec.lines.append((Line(data.T), "pascal", "MN = polar of T"))
    spec.warnings.append("points M, N are not real; omitted")
    return spec
