"""ASCII and SVG drawings of regions, towers, reach hexagons and reception."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .broadcast import Params, reception_field, sorted_points, towers_of
from .lattice import STEPS, LatticePoint, MatchstickRegion, Window


@dataclass(frozen=True)
class RenderSpec:
    region: MatchstickRegion | Window
    towers: frozenset
    params: Params
    reception_values: bool = False
    reach_hexagons: bool = False
    boundary: bool = False

    @classmethod
    def build(cls, region, towers: Iterable, params: Params, **show) -> "RenderSpec":
        return cls(region, towers_of(towers), params, **show)


def region_points(region) -> list[LatticePoint]:
    if isinstance(region, Window):
        return sorted_points(region.core())
    return sorted_points(region)


def _fmt(x: float) -> str:
    # avoid "-0.0000" so equal inputs always give identical bytes
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def render_ascii(spec: RenderSpec) -> str:
    """One text row per lattice line ``n``, shifted half a cell per row.

    Region vertices show ``.`` (or their reception), towers show ``@``
    (or their reception followed by ``*``).  Towers outside the region
    are drawn as ``o``.
    """
    pts = region_points(spec.region)
    inside = set(pts)
    towers = spec.towers
    values = {}
    if spec.reception_values and pts:
        values = reception_field(pts, towers, spec.params.t).values

    cells: dict[LatticePoint, str] = {}
    for p in pts:
        if spec.reception_values:
            cells[p] = str(values[p]) + ("*" if p in towers else "")
        else:
            cells[p] = "@" if p in towers else "."
    for p in towers:
        if p not in inside:
            cells[p] = "o"
    if not cells:
        return ""

    width = max(len(c) for c in cells.values())
    half = (width + 2) // 2
    x2 = {p: 2 * p.m - p.n for p in cells}
    lo = min(x2.values())
    rows: dict[int, list[LatticePoint]] = {}
    for p in cells:
        rows.setdefault(p.n, []).append(p)
    lines = []
    for n in range(min(rows), max(rows) + 1):
        line = ""
        for p in sorted(rows.get(n, []), key=lambda q: q.m):
            col = (x2[p] - lo) * half
            line = line.ljust(col) + cells[p].rjust(width)
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"


def hexagon_corners(center, t: int) -> list[LatticePoint]:
    """The six extreme vertices of the ball of graph radius ``t - 1``."""
    c = LatticePoint(*center)
    k = t - 1
    return [LatticePoint(c.m + k * dm, c.n + k * dn) for dm, dn in STEPS]


def _boundary(region) -> list[LatticePoint]:
    if isinstance(region, Window):
        R = region.half_width
        cm, cn = region.center
        return [LatticePoint(cm + a, cn + b) for a, b in ((-R, -R), (R, -R), (R, R), (-R, R))]
    n = region.n
    return [LatticePoint(0, 0), LatticePoint(n, n), LatticePoint(0, n)]


def render_svg(spec: RenderSpec, unit: float = 24.0) -> str:
    """Standalone SVG 1.1 drawing in the planar embedding of the lattice.

    SVG's y axis points down, so T_n shows with its apex at the top.
    """
    pts = region_points(spec.region)
    inside = set(pts)
    towers = sorted_points(spec.towers)
    t = spec.params.t

    def xy(p) -> tuple[float, float]:
        x, y = LatticePoint(*p).cartesian()
        return x * unit, y * unit

    shapes = list(pts) + towers
    if spec.reach_hexagons:
        for s in towers:
            shapes.extend(hexagon_corners(s, t))
    pad = unit
    if shapes:
        xs = [xy(p)[0] for p in shapes]
        ys = [xy(p)[1] for p in shapes]
        x0, y0 = min(xs) - pad, min(ys) - pad
        w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    else:
        x0, y0, w, h = -pad, -pad, 2 * pad, 2 * pad

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(w)}" height="{_fmt(h)}" viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        f"<title>(t,r)=({t},{spec.params.r}) towers={len(towers)}</title>",
        '<g class="edges" stroke="#999999" stroke-width="1">',
    ]
    for p in pts:
        for dm, dn in ((1, 0), (0, 1), (1, 1)):
            q = LatticePoint(p.m + dm, p.n + dn)
            if q in inside:
                (ax, ay), (bx, by) = xy(p), xy(q)
                out.append(f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}"/>')
    out.append("</g>")

    if spec.boundary and pts:
        corners = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(xy, _boundary(spec.region)))
        out.append(f'<polygon class="boundary" points="{corners}" fill="none" stroke="#000000" stroke-width="2"/>')

    if spec.reach_hexagons:
        out.append('<g class="reach" fill="none" stroke="#1f77b4" stroke-width="1.5">')
        for s in towers:
            corners = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(xy, hexagon_corners(s, t)))
            out.append(f'<polygon points="{corners}"/>')
        out.append("</g>")

    out.append('<g class="vertices" fill="#555555">')
    for p in pts:
        x, y = xy(p)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(unit * 0.08)}"/>')
    out.append("</g>")

    out.append('<g class="towers" fill="#d62728">')
    for s in towers:
        x, y = xy(s)
        out.append(f'<circle class="tower" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(unit * 0.22)}"/>')
    out.append("</g>")

    if spec.reception_values and pts:
        values = reception_field(pts, spec.towers, t).values
        out.append(f'<g class="reception" font-family="monospace" font-size="{_fmt(unit * 0.4)}" text-anchor="middle">')
        for p in pts:
            x, y = xy(p)
            out.append(f'<text x="{_fmt(x)}" y="{_fmt(y - unit * 0.15)}">{values[p]}</text>')
        out.append("</g>")

    out.append("</svg>")
    return "\n".join(out) + "\n"
