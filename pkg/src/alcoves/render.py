"""Deterministic SVG rendering of rank-2 shadows, chimneys and orientations.

Alcove vertices are exact rationals in simple-coroot coordinates and are
mapped to the Euclidean plane only when the document is assembled, via
the symmetrized Cartan form, so the same inputs always produce the same
bytes.  Walls are clipped lines, shadow alcoves are filled triangles, the
base and target alcoves are highlighted, and one sector representing the
chimney is outlined whenever the chimney is not a single alcove.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .chimney import Chimney
from .coxeter import AffineElement, CoxeterSystem
from .errors import InputError
from .galleries import Shadow
from .geometry import HalfSpace, act_on_halfspace, alcove_vertices
from .polynomials import CountPolynomial  # noqa: F401  (re-exported alongside)

_STYLE = """\
  .wall { stroke: #9a9a9a; stroke-width: 0.015; }
  .alcove-shadow { fill: #2b2b2b; stroke: #2b2b2b; stroke-width: 0.01; }
  .alcove-base { fill: #f2c744; stroke: #8a6d1d; stroke-width: 0.02; fill-opacity: 0.85; }
  .alcove-target { fill: none; stroke: #c0392b; stroke-width: 0.035; }
  .sector { fill: #2b6fb3; fill-opacity: 0.18; stroke: #2b6fb3; stroke-width: 0.03; }
  .vertex-dot { fill: #1d6fa5; }
"""


def _symmetrizer(sys: CoxeterSystem) -> list[Fraction]:
    """Weights d_i with d_i A[i][j] = d_j A[j][i] (symmetrizable Cartan matrix)."""
    n = sys.rank
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    pending = True
    while pending:
        pending = False
        for i in range(n):
            for j in range(n):
                if i != j and sys.cartan[i][j] != 0:
                    if d[i] is not None and d[j] is None:
                        d[j] = d[i] * sys.cartan[i][j] / sys.cartan[j][i]
                        pending = True
    return [x if x is not None else Fraction(1) for x in d]


def _embedding(sys: CoxeterSystem) -> tuple[tuple[float, float], tuple[float, float]]:
    """Euclidean images of the two simple coroots."""
    d = _symmetrizer(sys)
    # Gram matrix of the coroot basis: (alpha_i^vee, alpha_j^vee) = A[i][j] / d_j
    g11 = sys.cartan[0][0] / d[0]
    g12 = Fraction(sys.cartan[0][1]) / d[1]
    g22 = sys.cartan[1][1] / d[1]
    e1x = math.sqrt(float(g11))
    e2x = float(g12) / e1x
    e2y = math.sqrt(float(g22) - e2x * e2x)
    return (e1x, 0.0), (e2x, e2y)


class _Mapper:
    def __init__(self, sys: CoxeterSystem):
        self.e1, self.e2 = _embedding(sys)

    def to_euclid(self, p) -> tuple[float, float]:
        a, b = float(p[0]), float(p[1])
        return (
            a * self.e1[0] + b * self.e2[0],
            a * self.e1[1] + b * self.e2[1],
        )

    def to_coroot(self, xy: tuple[float, float]) -> tuple[float, float]:
        det = self.e1[0] * self.e2[1] - self.e1[1] * self.e2[0]
        x, y = xy
        return (
            (x * self.e2[1] - y * self.e2[0]) / det,
            (-x * self.e1[1] + y * self.e1[0]) / det,
        )


def _fmt(v: float) -> str:
    out = f"{v:.4f}"
    return "0.0000" if out == "-0.0000" else out


def _pt(xy: tuple[float, float]) -> str:
    # SVG's y axis grows downward; flip so dominant directions point up
    return f"{_fmt(xy[0])},{_fmt(-xy[1])}"


def _polygon(points, css: str) -> str:
    body = " ".join(_pt(p) for p in points)
    return f'<polygon class="{css}" points="{body}" />'


def _clip_line_to_box(p, q, box) -> tuple | None:
    """Clip the infinite line through p, q to an axis-aligned box."""
    (x0, y0), (x1, y1) = box
    dx, dy = q[0] - p[0], q[1] - p[1]
    tmin, tmax = -math.inf, math.inf
    for start, delta, lo, hi in ((p[0], dx, x0, x1), (p[1], dy, y0, y1)):
        if abs(delta) < 1e-12:
            if start < lo or start > hi:
                return None
            continue
        t1, t2 = (lo - start) / delta, (hi - start) / delta
        if t1 > t2:
            t1, t2 = t2, t1
        tmin, tmax = max(tmin, t1), min(tmax, t2)
    if tmin >= tmax:
        return None
    a = (p[0] + tmin * dx, p[1] + tmin * dy)
    b = (p[0] + tmax * dx, p[1] + tmax * dy)
    return a, b


def _clip_polygon_halfplane(poly, value) -> list:
    """Sutherland-Hodgman clip of a polygon against {value(p) >= 0}."""
    out = []
    for idx, cur in enumerate(poly):
        prev = poly[idx - 1]
        vc, vp = value(cur), value(prev)
        if vp >= 0:
            out.append(prev)
        if (vp < 0) != (vc < 0):
            t = vp / (vp - vc)
            out.append(
                (prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1]))
            )
    return out


def _sector_halfspaces(ch: Chimney) -> list[HalfSpace]:
    """Half-spaces cutting out one representative sector of the chimney
    (all free levels chosen at zero)."""
    sys = ch.sys
    out = []
    for k in range(sys.n_positive):
        if k in ch.span_roots:
            out.append(act_on_halfspace(sys, ch.y, HalfSpace(k, 0, True)))
            out.append(act_on_halfspace(sys, ch.y, HalfSpace(k, 1, False)))
        else:
            out.append(act_on_halfspace(sys, ch.y, HalfSpace(k, 0, False)))
    return out


def render_svg(
    sys: CoxeterSystem,
    sh: Shadow,
    ch: Chimney,
    target: AffineElement | None = None,
    window: tuple[tuple[float, float], tuple[float, float]] | None = None,
    scale: float = 72.0,
) -> str:
    """Render a rank-2 shadow to a standalone SVG document (a string).

    Identical inputs produce byte-identical output: the scene is assembled
    from exact rational alcove data in a fixed order and floats are
    formatted with fixed precision at the very end.
    """
    if sys.rank != 2:
        raise InputError(f"SVG rendering supports rank 2 only, got {sys.label}")
    mapper = _Mapper(sys)

    shadow_polys: list[tuple[tuple, list]] = []
    vertex_dots: list[tuple[float, float]] = []
    anchors: list[tuple[float, float]] = []
    if sh.kind == "alcove":
        for alc in sorted(sh.elements, key=sys.sort_key):
            pts = [mapper.to_euclid(v) for v in alcove_vertices(sys, alc)]
            shadow_polys.append((sys.sort_key(alc), pts))
            anchors.extend(pts)
    elif sh.kind == "vertex":
        for mu in sorted(sh.elements):
            xy = mapper.to_euclid(mu)
            vertex_dots.append(xy)
            anchors.append(xy)
    else:
        raise InputError(f"unknown shadow kind {sh.kind!r}")

    base_pts = [mapper.to_euclid(v) for v in alcove_vertices(sys, sys.identity)]
    anchors.extend(base_pts)
    target_pts = None
    if target is not None:
        target_pts = [mapper.to_euclid(v) for v in alcove_vertices(sys, target)]
        anchors.extend(target_pts)
    ypts = [mapper.to_euclid(v) for v in alcove_vertices(sys, ch.y)]
    anchors.extend(ypts)

    if window is None:
        margin = 1.0
        xs = [p[0] for p in anchors]
        ys = [p[1] for p in anchors]
        window = (
            (min(xs) - margin, min(ys) - margin),
            (max(xs) + margin, max(ys) + margin),
        )
    (wx0, wy0), (wx1, wy1) = window

    # walls crossing the window, per positive root
    corners = [(wx0, wy0), (wx0, wy1), (wx1, wy0), (wx1, wy1)]
    corner_coroot = [mapper.to_coroot(c) for c in corners]
    wall_lines = []
    for root in range(sys.n_positive):
        pv = sys.pair_vecs[root]
        values = [c[0] * pv[0] + c[1] * pv[1] for c in corner_coroot]
        for k in range(math.ceil(min(values)), math.floor(max(values)) + 1):
            # two coroot-coordinate points with <p, root> = k
            if pv[0] != 0:
                p0 = (Fraction(k, pv[0]), Fraction(0))
            else:
                p0 = (Fraction(0), Fraction(k, pv[1]))
            direction = (-pv[1], pv[0])
            a = mapper.to_euclid(p0)
            b = mapper.to_euclid((p0[0] + direction[0], p0[1] + direction[1]))
            seg = _clip_line_to_box(a, b, window)
            if seg:
                wall_lines.append((root, k, seg))

    # a representative sector, clipped to the window
    sector_poly = None
    if ch.J != frozenset(range(1, sys.rank + 1)):
        poly = [(wx0, wy0), (wx1, wy0), (wx1, wy1), (wx0, wy1)]
        for hs in _sector_halfspaces(ch):
            pv = sys.pair_vecs[hs.root]
            sign = 1.0 if hs.geq else -1.0

            def value(p, pv=pv, k=hs.level, sign=sign):
                c = mapper.to_coroot(p)
                return sign * (c[0] * pv[0] + c[1] * pv[1] - k)

            poly = _clip_polygon_halfplane(poly, value)
            if not poly:
                break
        if poly:
            sector_poly = poly

    width = _fmt((wx1 - wx0) * scale)
    height = _fmt((wy1 - wy0) * scale)
    view = f"{_fmt(wx0)} {_fmt(-wy1)} {_fmt(wx1 - wx0)} {_fmt(wy1 - wy0)}"
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{view}">',
        f"<style>\n{_STYLE}</style>",
        "<g>",
    ]
    for root, k, (a, b) in wall_lines:
        parts.append(
            f'<line class="wall" x1="{_fmt(a[0])}" y1="{_fmt(-a[1])}" '
            f'x2="{_fmt(b[0])}" y2="{_fmt(-b[1])}" />'
        )
    for _, pts in shadow_polys:
        parts.append(_polygon(pts, "alcove-shadow"))
    parts.append(_polygon(base_pts, "alcove-base"))
    if target_pts is not None:
        parts.append(_polygon(target_pts, "alcove-target"))
    if sector_poly is not None:
        parts.append(_polygon(sector_poly, "sector"))
    for xy in vertex_dots:
        parts.append(
            f'<circle class="vertex-dot" cx="{_fmt(xy[0])}" cy="{_fmt(-xy[1])}" r="0.07" />'
        )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
