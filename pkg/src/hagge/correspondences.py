"""Euclidean inversion and the Steiner correspondence of two conics."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, count

from sympy import Matrix, Poly, Rational, symbols

from .conics import Conic, conic_through_five, polar
from .core import INF, ProjLine, ProjPoint, are_collinear, incident, join, meet
from .errors import (
    CollinearDEF,
    DegenerateConic,
    IdenticalConics,
    LineThroughVertex,
    NotRationallyDiagonalizable,
    NotThroughPole,
    NotThroughVertex,
    PointAtInfinity,
    PoleInput,
    ProportionalSeeds,
    RepeatedEigenvalue,
    ThroughTwoVertices,
    VertexInput,
    WrongField,
    ZeroSeedEntry,
)
from .field import Mod, field_of
from .involution import PointPair, parametrize_line
from .linalg import adjugate3, cross, mat_mul, nullspace, transpose

# ---------------------------------------------------------------- inversion


@dataclass(frozen=True)
class InversionMap:
    pole: ProjPoint
    power: object = 1

    def __post_init__(self):
        if not self.pole.field.is_rational:
            raise WrongField("inversion needs a Euclidean (rational) plane")
        if not self.pole.is_affine:
            raise PointAtInfinity("the pole must be a finite point")
        if not self.power:
            raise ValueError("inversion power must be nonzero")


def invert(m: InversionMap, p: ProjPoint) -> ProjPoint:
    """pole + power * (p - pole) / |p - pole|^2."""
    if not p.field.is_rational:
        raise WrongField("inversion needs a Euclidean (rational) plane")
    if not p.is_affine:
        raise PointAtInfinity(f"{p} is at infinity")
    if p == m.pole:
        raise PoleInput("the pole has no image")
    px, py = m.pole.affine()
    x, y = p.affine()
    dx, dy = x - px, y - py
    k = m.power / (dx * dx + dy * dy)
    return ProjPoint(px + k * dx, py + k * dy, 1)


def invert_circle_through_pole(m: InversionMap, c: Conic) -> ProjLine:
    """Image line of a circle through the pole."""
    if not c.is_circle:
        raise ValueError(f"{c} is not a circle")
    if not c.contains(m.pole):
        raise NotThroughPole(f"{c} does not pass through {m.pole}")
    a, _, _, d, e, _ = c.coefficients()
    d, e = d / a, e / a
    px, py = m.pole.affine()
    # shifted to the pole: X^2 + Y^2 + d' X + e' Y = 0, image d' X + e' Y + k = 0
    d1, e1 = d + 2 * px, e + 2 * py
    if not (d1 or e1):
        raise DegenerateConic("point circle at the pole")
    return ProjLine(d1, e1, m.power - d1 * px - e1 * py)


# ---------------------------------------------------------------- Steiner


@dataclass(frozen=True)
class SelfPolarTriangle:
    vertices: tuple

    def __post_init__(self):
        d1, d2, d3 = self.vertices
        if len({d1, d2, d3}) < 3 or are_collinear(d1, d2, d3):
            raise CollinearDEF("triangle vertices must be distinct and non-collinear")

    def sides(self) -> tuple:
        """Side lines, side i opposite vertex i."""
        d1, d2, d3 = self.vertices
        return (join(d2, d3), join(d3, d1), join(d1, d2))

    def is_self_polar(self, c: Conic) -> bool:
        return all(polar(c, v) == s for v, s in zip(self.vertices, self.sides()))

    def on_side(self, p: ProjPoint) -> bool:
        return any(incident(p, s) for s in self.sides())

    def same_as(self, other: "SelfPolarTriangle") -> bool:
        return set(self.vertices) == set(other.vertices)


@dataclass(frozen=True)
class SteinerMap:
    sigma1: Conic
    sigma2: Conic
    triangle: SelfPolarTriangle

    def __post_init__(self):
        for c in (self.sigma1, self.sigma2):
            if c.is_degenerate:
                raise DegenerateConic(f"{c} is degenerate")
        if self.sigma1 == self.sigma2:
            raise IdenticalConics("the two conics coincide")
        for c in (self.sigma1, self.sigma2):
            if not self.triangle.is_self_polar(c):
                raise ValueError(f"triangle is not self-polar for {c}")

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return steiner_apply(self, p)


def _lam_poly(s1: Conic, s2: Conic):
    """Coefficients of det(s1 - lam * s2), highest degree first, as sympy numbers."""
    lam = symbols("lam")
    field = field_of(*s1.matrix[0], *s1.matrix[1], *s1.matrix[2])

    def conv(x):
        if isinstance(x, Mod):
            return x.v
        return Rational(x.numerator, x.denominator)

    m = Matrix(3, 3, lambda i, j: conv(s1.matrix[i][j]) - lam * conv(s2.matrix[i][j]))
    if field.is_rational:
        return Poly(m.det(), lam, domain="QQ"), field
    return Poly(m.det(), lam, modulus=field.p), field


def _field_roots(poly, field):
    """Roots with multiplicity from the linear factors of poly over the field."""
    roots = []
    _, factors = poly.factor_list()
    for fac, mult in factors:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            if field.is_rational:
                r = -Rational(b) / Rational(a)
                roots.extend([field(int(r.p)) / int(r.q)] * mult)
            else:
                roots.extend([Mod(-int(b), field.p) / Mod(int(a), field.p)] * mult)
    return roots


def build_steiner(sigma1: Conic, sigma2: Conic) -> SteinerMap:
    """Recover the common self-polar triangle from det(sigma1 - lam sigma2)."""
    for c in (sigma1, sigma2):
        if c.is_degenerate:
            raise DegenerateConic(f"{c} is degenerate")
    if sigma1 == sigma2:
        raise IdenticalConics("the two conics coincide")
    poly, field = _lam_poly(sigma1, sigma2)
    if poly.degree() == 3 and poly.discriminant() == 0:
        raise RepeatedEigenvalue("the characteristic cubic has a repeated root")
    roots = _field_roots(poly, field)
    if len(roots) < 3:
        raise NotRationallyDiagonalizable("the cubic does not split over the base field")
    vertices = []
    for lam in sorted(roots, key=lambda r: r.v if isinstance(r, Mod) else r):
        rows = [
            tuple(a - lam * b for a, b in zip(r1, r2))
            for r1, r2 in zip(sigma1.matrix, sigma2.matrix)
        ]
        kernel = nullspace(rows, 3)
        if len(kernel) != 1:
            raise RepeatedEigenvalue("eigenspace is not one-dimensional")
        vertices.append(ProjPoint(kernel[0]))
    return SteinerMap(sigma1, sigma2, SelfPolarTriangle(tuple(vertices)))


def _diag_conic(t, seed):
    d = [[0] * 3 for _ in range(3)]
    for i in range(3):
        d[i][i] = seed[i]
    return Conic(mat_mul(mat_mul(transpose(t), d), t))


def steiner_for_triangle(d: ProjPoint, e: ProjPoint, f: ProjPoint, seeds=((1, 1, 1), (1, 2, 3))) -> SteinerMap:
    """Two conics T^T diag(seed) T with self-polar triangle DEF (T sends D, E, F to the basis)."""
    if len({d, e, f}) < 3 or are_collinear(d, e, f):
        raise CollinearDEF("D, E, F must be non-collinear")
    s1, s2 = seeds
    fld = field_of(*d.coords, *e.coords, *f.coords)
    s1, s2 = tuple(map(fld, s1)), tuple(map(fld, s2))
    if not all(s1) or not all(s2):
        raise ZeroSeedEntry("seed entries must be nonzero")
    if not any(cross(s1, s2)):
        raise ProportionalSeeds("seeds define the same conic")
    # rows of adj(columns D, E, F) are dual to D, E, F
    t = adjugate3(transpose((d.coords, e.coords, f.coords)))
    return SteinerMap(_diag_conic(t, s1), _diag_conic(t, s2), SelfPolarTriangle((d, e, f)))


def steiner_apply(s: SteinerMap, p: ProjPoint) -> ProjPoint:
    """p' = intersection of the polars of p with respect to both conics."""
    if p in s.triangle.vertices:
        raise VertexInput(f"{p} is a vertex of the self-polar triangle")
    p1, p2 = polar(s.sigma1, p), polar(s.sigma2, p)
    if p1 == p2:
        raise VertexInput(f"the two polars of {p} coincide")
    return meet(p1, p2)


def _line_samples(l: ProjLine, s: SteinerMap, n: int, avoid=None):
    """Deterministic points of l off the triangle's sides (parameters 0, 1, -1, 2, ...)."""
    par = parametrize_line(l)
    fld = field_of(*par.q0.coords, *par.q1.coords)
    if fld.is_rational:
        ts = chain([0], (sign * k for k in count(1) for sign in (1, -1)))
    else:
        ts = chain(fld.elements(), [INF])
    out = []
    for t in ts:
        p = par.point(t if t is INF else fld(t))
        if p == avoid or p in out or s.triangle.on_side(p):
            continue
        out.append(p)
        if len(out) == n:
            break
    return out


def steiner_line_image(s: SteinerMap, l: ProjLine, samples=None, extra: int = 10) -> Conic:
    """The conic S(l) for a line avoiding the triangle's vertices.

    Five images determine the conic; every further sample image and all
    three vertices are then checked for incidence.
    """
    for v in s.triangle.vertices:
        if incident(v, l):
            raise LineThroughVertex(f"{l} passes through {v}")
    if samples is None:
        samples = _line_samples(l, s, 5 + extra)
    samples = [p for p in samples if not s.triangle.on_side(p)]
    if len(samples) < 5:
        raise ValueError("need at least five sample points off the triangle's sides")
    images = [steiner_apply(s, p) for p in samples]
    c = conic_through_five(images[:5])
    for q in list(images[5:]) + list(s.triangle.vertices):
        if not c.contains(q):
            raise AssertionError(f"{q} is not on the image conic {c}")
    return c


def steiner_vertex_line_image(s: SteinerMap, l: ProjLine, samples=None) -> ProjLine:
    """Image of l minus its vertex, for a line through exactly one vertex."""
    through = [v for v in s.triangle.vertices if incident(v, l)]
    if not through:
        raise NotThroughVertex(f"{l} avoids the triangle's vertices")
    if len(through) > 1:
        raise ThroughTwoVertices(f"{l} is a side line; its image is the opposite vertex")
    if samples is None:
        samples = _line_samples(l, s, 6, avoid=through[0])
    images = [steiner_apply(s, p) for p in samples if p != through[0] and not s.triangle.on_side(p)]
    distinct = list(dict.fromkeys(images))
    if len(distinct) < 2:
        raise ValueError("need two distinct sample images")
    image = join(distinct[0], distinct[1])
    for q in distinct[2:]:
        if not incident(q, image):
            raise AssertionError(f"sample images are not collinear: {q}")
    return image


def pushforward_pairs(mapping, pairs) -> list[PointPair]:
    """Apply an InversionMap or SteinerMap to every point of every pair."""
    if isinstance(mapping, InversionMap):
        f = lambda p: invert(mapping, p)  # noqa: E731
    elif isinstance(mapping, SteinerMap):
        f = lambda p: steiner_apply(mapping, p)  # noqa: E731
    else:
        raise TypeError(f"unsupported map {mapping!r}")
    return [PointPair(f(a), f(b)) for a, b in pairs]
