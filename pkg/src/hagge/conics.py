"""Conics as symmetric 3x3 forms.

Every intersection is taken through a point already known to be common, so the
result always stays in the base field: :func:`second_intersection` factors the
known root out of a line's restricted quadratic, and :func:`fourth_intersection`
splits a degenerate pencil member into two lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .core import INF, ProjLine, ProjPoint, are_collinear, canonical, incident, join, meet
from .errors import (
    CollinearInput,
    DegenerateConic,
    DegeneratePosition,
    DuplicatePoints,
    IdenticalConics,
    NotCommonPoints,
    PointNotOnConic,
    PointNotOnLine,
    TangentialContact,
    WrongField,
)
from .field import field_of
from .linalg import adjugate3, cross, dot, mat_vec, nullspace, rank

_BASIS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


class Conic:
    """Nondegenerate or degenerate conic X^T M X = 0, M symmetric up to scale."""

    __slots__ = ("matrix", "rank")

    def __init__(self, matrix):
        rows = [tuple(r) for r in matrix]
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("conic matrix must be 3x3")
        for i in range(3):
            for j in range(i + 1, 3):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("conic matrix must be symmetric")
        flat = canonical([x for r in rows for x in r])
        object.__setattr__(self, "matrix", (flat[0:3], flat[3:6], flat[6:9]))
        object.__setattr__(self, "rank", rank(self.matrix))

    def __setattr__(self, name, value):
        raise AttributeError("Conic is immutable")

    @classmethod
    def from_coefficients(cls, a, b, c, d, e, f) -> "Conic":
        """a x^2 + b xy + c y^2 + d xz + e yz + f z^2."""
        two_inv = _half_like(a, b, c, d, e, f)
        return cls(
            (
                (a, b * two_inv, d * two_inv),
                (b * two_inv, c, e * two_inv),
                (d * two_inv, e * two_inv, f),
            )
        )

    def coefficients(self):
        """(a, b, c, d, e, f) of the quadratic form, matching from_coefficients."""
        m = self.matrix
        return (m[0][0], 2 * m[0][1], m[1][1], 2 * m[0][2], 2 * m[1][2], m[2][2])

    def __call__(self, p: ProjPoint):
        """Value of the quadratic form at p (meaningful only up to scale)."""
        return dot(p.coords, mat_vec(self.matrix, p.coords))

    def bilinear(self, p, q):
        return dot(p.coords, mat_vec(self.matrix, q.coords))

    def contains(self, p: ProjPoint) -> bool:
        return not self(p)

    @property
    def is_degenerate(self) -> bool:
        return self.rank < 3

    @property
    def is_circle(self) -> bool:
        m = self.matrix
        return bool(m[0][0]) and m[0][0] == m[1][1] and not m[0][1]

    @property
    def field(self):
        return field_of(*self.matrix[0], *self.matrix[1], *self.matrix[2])

    def __eq__(self, other):
        return isinstance(other, Conic) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        a, b, c, d, e, f = self.coefficients()
        return f"Conic({a}, {b}, {c}, {d}, {e}, {f})"

    def __reduce__(self):
        return (Conic, (self.matrix,))


def _half_like(*values):
    for v in values:
        if not isinstance(v, int):
            return 1 / (v - v + 2)
    return Fraction(1, 2)


def _require_nondegenerate(c: Conic):
    if c.rank < 3:
        raise DegenerateConic(f"{c} has rank {c.rank}")


def _monomials(p: ProjPoint):
    x, y, z = p.coords
    return (x * x, x * y, y * y, x * z, y * z, z * z)


def conic_through_five(*points: ProjPoint) -> Conic:
    """The unique nondegenerate conic through five points in general position."""
    if len(points) == 1:
        points = tuple(points[0])
    if len(points) != 5:
        raise ValueError("need exactly five points")
    if len(set(points)) < 5:
        raise DuplicatePoints("five distinct points required")
    kernel = nullspace([_monomials(p) for p in points], 6)
    if len(kernel) != 1:
        raise DegeneratePosition("conic through the five points is not unique")
    c = Conic.from_coefficients(*kernel[0])
    if c.is_degenerate:
        raise DegeneratePosition("three of the five points are collinear")
    return c


def circle_through_three(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> Conic:
    """Circle x^2 + y^2 + d xz + e yz + f z^2 = 0 through three affine points."""
    for p in (a, b, c):
        if not p.field.is_rational:
            raise WrongField("circles exist only over the rationals")
        if not p.is_affine:
            raise ValueError(f"{p} is not an affine point")
    if len({a, b, c}) < 3 or are_collinear(a, b, c):
        raise CollinearInput("circle needs three non-collinear points")
    rows = []
    for p in (a, b, c):
        x, y = p.affine()
        # d x + e y + f = -(x^2 + y^2), written as a homogeneous system
        rows.append((x, y, 1, x * x + y * y))
    (d, e, f, s) = nullspace(rows, 4)[0]
    d, e, f = d / s, e / s, f / s
    one = s / s
    zero = one - one
    return Conic.from_coefficients(one, zero, one, d, e, f)


def polar(c: Conic, p: ProjPoint) -> ProjLine:
    _require_nondegenerate(c)
    return ProjLine(mat_vec(c.matrix, p.coords))


def pole(c: Conic, l: ProjLine) -> ProjPoint:
    _require_nondegenerate(c)
    return ProjPoint(mat_vec(adjugate3(c.matrix), l.coords))


def tangent(c: Conic, p: ProjPoint) -> ProjLine:
    if not c.contains(p):
        raise PointNotOnConic(f"{p} is not on {c}")
    return polar(c, p)


def other_point_on_line(l: ProjLine, avoid: ProjPoint) -> ProjPoint:
    """A deterministic point of l different from ``avoid``."""
    for e in _BASIS:
        v = cross(l.coords, e)
        if any(v):
            q = ProjPoint(v)
            if q != avoid:
                return q
    raise AssertionError("a line has at least three points")


class Hit(NamedTuple):
    point: ProjPoint
    tangent: bool


def second_intersection(c: Conic, l: ProjLine, p: ProjPoint) -> Hit:
    """The other point of c on l, given the known common point p.

    If l touches c at p the result is p itself with ``tangent=True``.
    """
    _require_nondegenerate(c)
    if not c.contains(p):
        raise PointNotOnConic(f"{p} is not on {c}")
    if not incident(p, l):
        raise PointNotOnLine(f"{p} is not on {l}")
    q = other_point_on_line(l, p)
    # points s*p + t*q: C = 2 s t B + t^2 A, roots t = 0 and 2 s B + t A = 0
    a = c(q)
    b = c.bilinear(p, q)
    if not b:
        return Hit(p, True)
    x = tuple(a * pi - 2 * b * qi for pi, qi in zip(p.coords, q.coords))
    return Hit(ProjPoint(x), False)


def split_line_pair(m_conic, known: ProjLine) -> ProjLine:
    """Given a degenerate form q = (known . X)(other . X), return ``other``."""
    m = known.coords
    s = next(e for e in _BASIS if dot(m, e))
    ms = dot(m, s)
    ds = mat_vec(m_conic, s)
    qs = dot(s, ds)
    # D s = (m (l.s) + l (m.s)) / 2 and q(s) = (m.s)(l.s)
    v = tuple(2 * di * ms - mi * qs for di, mi in zip(ds, m))
    return ProjLine(v)


def radical_axis(c1: Conic, c2: Conic) -> ProjLine:
    """Line through the finite common points of two circles."""
    if not (c1.is_circle and c2.is_circle):
        raise ValueError("radical axis is defined for circles")
    a1, _, _, d1, e1, f1 = c1.coefficients()
    a2, _, _, d2, e2, f2 = c2.coefficients()
    v = (d1 / a1 - d2 / a2, e1 / a1 - e2 / a2, f1 / a1 - f2 / a2)
    if not any(v):
        raise IdenticalConics("circles coincide")
    return ProjLine(v)


def fourth_intersection(c1: Conic, c2: Conic, p1: ProjPoint, p2=None, p3=None) -> ProjPoint:
    """Fourth common point of two conics sharing p1, p2, p3.

    With only p1 given, both conics must be circles: their other two common
    points are the circular points at infinity and the pencil member used is
    the line at infinity together with the radical axis.
    """
    _require_nondegenerate(c1)
    _require_nondegenerate(c2)
    if c1 == c2:
        raise IdenticalConics(f"{c1}")
    if p2 is None and p3 is None:
        if not (c1.contains(p1) and c2.contains(p1)):
            raise NotCommonPoints(f"{p1} is not on both circles")
        axis = radical_axis(c1, c2)
        hit = second_intersection(c1, axis, p1)
        if hit.tangent:
            raise TangentialContact("circles touch at the known point")
        return hit.point
    known = (p1, p2, p3)
    if len(set(known)) < 3:
        raise NotCommonPoints("the three known points must be distinct")
    for p in known:
        if not (c1.contains(p) and c2.contains(p)):
            raise NotCommonPoints(f"{p} is not on both conics")
    m = join(p1, p2)
    r = ProjPoint(tuple(x + y for x, y in zip(p1.coords, p2.coords)))
    lam, mu = c2(r), -c1(r)
    member = tuple(
        tuple(lam * x + mu * y for x, y in zip(r1, r2)) for r1, r2 in zip(c1.matrix, c2.matrix)
    )
    other = split_line_pair(member, m)
    hit = second_intersection(c1, other, p3)
    if hit.tangent or hit.point in known:
        raise TangentialContact("the fourth common point coincides with a known one")
    return hit.point


@dataclass(frozen=True)
class ConicParametrization:
    """Conic points indexed by the pencil of lines through ``base``.

    Parameter t selects the line joining base and q0 + t*q1; q1 lies on the
    tangent at base, so INF corresponds to base itself.
    """

    conic: Conic
    base: ProjPoint
    q0: ProjPoint
    q1: ProjPoint

    def point(self, t) -> ProjPoint:
        if t is INF:
            return self.base
        r = ProjPoint(tuple(a + t * b for a, b in zip(self.q0.coords, self.q1.coords)))
        return second_intersection(self.conic, join(self.base, r), self.base).point

    def param(self, p: ProjPoint):
        if p == self.base:
            return INF
        if not self.conic.contains(p):
            raise PointNotOnConic(f"{p} is not on {self.conic}")
        r = meet(join(self.base, p), join(self.q0, self.q1))
        alpha, beta = coordinates_in_basis(r, self.q0, self.q1)
        return beta / alpha


def coordinates_in_basis(r: ProjPoint, q0: ProjPoint, q1: ProjPoint):
    """(alpha, beta) with r proportional to alpha*q0 + beta*q1."""
    w = cross(q0.coords, q1.coords)
    k = next(i for i in range(3) if w[i])
    alpha = cross(r.coords, q1.coords)[k] / w[k]
    beta = cross(q0.coords, r.coords)[k] / w[k]
    return alpha, beta


def parametrize(c: Conic, base: ProjPoint) -> ConicParametrization:
    _require_nondegenerate(c)
    tau = tangent(c, base)
    q1 = None
    for probe in ((0, 0, 1), (1, 0, 0), (0, 1, 0)):
        v = cross(tau.coords, probe)
        if any(v) and ProjPoint(v) != base:
            q1 = ProjPoint(v)
            break
    f = base.field
    q0 = next(ProjPoint(tuple(map(f, e))) for e in _BASIS if dot(tau.coords, e))
    return ConicParametrization(c, base, q0, q1)


def conic_points(c: Conic, field) -> list[ProjPoint]:
    """All points of c over a prime field, by exhaustive scan."""
    return [p for p in all_points(field) if c.contains(p)]


def all_points(field) -> list[ProjPoint]:
    """The p^2 + p + 1 points of PG(2, p) in canonical form."""
    els = list(field.elements())
    zero, one = els[0], els[1]
    pts = [ProjPoint(one, y, z) for y in els for z in els]
    pts += [ProjPoint(zero, one, z) for z in els]
    pts.append(ProjPoint(zero, zero, one))
    return pts


def no_three_collinear(points) -> bool:
    return not any(are_collinear(a, b, c) for a, b, c in combinations(points, 3))
