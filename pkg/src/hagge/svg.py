"""Deterministic SVG figures of scenes and certificates.

Geometry is exact up to the final affine coordinates, which are converted to
floats once and printed with two decimals, so the same scene always yields the
same bytes.
"""

from __future__ import annotations

from fractions import Fraction

from .conics import Conic, circle_through_three, conic_through_five, parametrize
from .core import INF, ProjPoint
from .errors import EmptyScene, GeometryError, NonRationalField
from .linalg import det3

CANVAS = 1000
SAMPLES = 256
MARGIN = Fraction(1, 10)

_STYLE = {
    "triangle": 'fill="none" stroke="#444444" stroke-width="2"',
    "sigma": 'fill="none" stroke="#1f5fbf" stroke-width="2.5"',
    "aux": 'fill="none" stroke="#9a9a9a" stroke-width="1" stroke-dasharray="6,4"',
    "chord": 'stroke="#c0392b" stroke-width="2"',
    "point": 'fill="#000000"',
    "common": 'fill="#c0392b" stroke="#000000" stroke-width="1"',
    "label": 'font-family="DejaVu Sans, Arial, sans-serif" font-size="20" fill="#000000"',
}


def sample_params(n: int = SAMPLES):
    """n exact parameters u/(1 - u^2), u evenly spaced in (-1, 1)."""
    out = []
    for k in range(n):
        u = Fraction(2 * k - (n - 1), n)
        out.append(u / (1 - u * u))
    return out


def direction_params(par, n: int = SAMPLES):
    """n parameters whose pencil lines point along (1 - s^2, 2s), s evenly spaced in (-1, 1).

    For an affine base point this spreads samples evenly by direction, which
    on a circle means evenly along the arc (up to a factor of two).  Other
    base points fall back to sample_params.
    """
    if not par.base.is_affine:
        return sample_params(n)
    b, q0, q1 = par.base.coords, par.q0.coords, par.q1.coords
    out = []
    for k in range(n):
        s = Fraction(2 * k - (n - 1), n)
        d = (1 - s * s, 2 * s, 0)
        den = det3(b, q1, d)
        out.append(INF if not den else -det3(b, q0, d) / den)
    return out


class _View:
    def __init__(self, pts):
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        span = max(x1 - x0, y1 - y0, Fraction(1))
        cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
        half = span * (1 + 2 * MARGIN) / 2
        self.x0, self.y1 = cx - half, cy + half
        self.scale = Fraction(CANVAS) / (2 * half)
        self.half = half
        self.cx, self.cy = cx, cy

    def map(self, x, y):
        return float((x - self.x0) * self.scale), float((self.y1 - y) * self.scale)

    def near(self, x, y) -> bool:
        lim = 20 * self.half
        return abs(x - self.cx) <= lim and abs(y - self.cy) <= lim


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _between(m, p, q) -> bool:
    return min(p[0], q[0]) <= m[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= m[1] <= max(p[1], q[1])


def _polylines(c: Conic, base: ProjPoint, view: _View):
    """Polylines through the samples, broken where the conic passes through infinity."""
    par = parametrize(c, base)
    ts = direction_params(par)
    ts.append(ts[0])
    runs, cur = [], []
    prev = None
    for t in ts:
        p = par.point(t)
        if not p.is_affine or not view.near(*p.affine()):
            if len(cur) > 1:
                runs.append(cur)
            cur, prev = [], None
            continue
        xy = p.affine()
        if prev is not None and max(abs(xy[0] - prev[1][0]), abs(xy[1] - prev[1][1])) > view.half:
            # a long step is a real arc only if the middle parameter lands between its ends
            legit = False
            if t is not INF and prev[0] is not INF:
                mid = par.point((t + prev[0]) / 2)
                legit = mid.is_affine and _between(mid.affine(), prev[1], xy)
            if not legit:
                if len(cur) > 1:
                    runs.append(cur)
                cur = []
        cur.append(view.map(*xy))
        prev = (t, xy)
    if len(cur) > 1:
        runs.append(cur)
    return runs


def _poly(points, style: str) -> str:
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
    return f'<polyline points="{coords}" {style}/>'


def _auxiliary(doc, scene):
    p = scene.points()
    if doc.kind == "t1":
        trip = ((p["B"], p["C"], p["D"]), (p["A"], p["C"], p["D"]), (p["A"], p["B"], p["D"]))
        return [circle_through_three(*t) for t in trip]
    rest = (p["D"], p["E"], p["F"])
    pairs = ((p["B"], p["C"]), (p["A"], p["C"]), (p["A"], p["B"]))
    out = []
    for a, b in pairs:
        try:
            out.append(conic_through_five(a, b, *rest))
        except GeometryError:
            pass
    return out


def render_svg(doc, cert=None) -> str:
    """SVG text for a scene document, with chords and common point if cert is given."""
    if not doc.field.is_rational:
        raise NonRationalField("figures are drawn in the real affine chart z = 1")
    scene = doc.to_scene()
    labelled = dict(scene.points())
    if cert is not None:
        labelled.update(cert.six.as_dict())
    finite = {k: p.affine() for k, p in labelled.items() if p.is_affine}
    if cert is not None and cert.common_point is not None and cert.common_point.is_affine:
        common = cert.common_point.affine()
    else:
        common = None
    bbox = list(finite.values()) + ([common] if common else [])
    if not bbox:
        raise EmptyScene("no finite points to draw")
    view = _View(bbox)

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">',
        f'<rect x="0" y="0" width="{CANVAS}" height="{CANVAS}" fill="#ffffff"/>',
    ]
    out.append('<g id="auxiliary">')
    for c in _auxiliary(doc, scene):
        out.extend(_poly(run, _STYLE["aux"]) for run in _polylines(c, scene.D, view))
    out.append("</g>")
    out.append('<g id="sigma">')
    out.extend(_poly(run, _STYLE["sigma"]) for run in _polylines(scene.sigma, scene.D, view))
    out.append("</g>")
    tri = [finite[k] for k in "ABC" if k in finite]
    if len(tri) == 3:
        out.append(f'<polygon id="triangle" points="{" ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (view.map(*t) for t in tri))}" {_STYLE["triangle"]}/>')
    if cert is not None:
        out.append('<g id="chords">')
        for a, b in (("U", "X"), ("V", "Y"), ("W", "Z")):
            ends = [finite[k] for k in (a, b) if k in finite]
            if common:
                ends.append(common)
            if len(ends) < 2:
                continue
            ends.sort()
            (x1, y1), (x2, y2) = view.map(*ends[0]), view.map(*ends[-1])
            out.append(
                f'<line class="chord" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" {_STYLE["chord"]}/>'
            )
        out.append("</g>")
    out.append('<g id="points">')
    for name in sorted(finite):
        x, y = view.map(*finite[name])
        out.append(f'<circle class="point" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" {_STYLE["point"]}/>')
        out.append(f'<text x="{_fmt(x + 8)}" y="{_fmt(y - 8)}" {_STYLE["label"]}>{name}</text>')
    if common:
        x, y = view.map(*common)
        out.append(f'<circle id="common-point" cx="{_fmt(x)}" cy="{_fmt(y)}" r="7" {_STYLE["common"]}/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


__all__ = ["render_svg", "sample_params", "direction_params", "CANVAS", "SAMPLES"]
