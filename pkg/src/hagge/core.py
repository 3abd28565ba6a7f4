"""Homogeneous points and lines of the projective plane over an exact field.

Points and lines are both triples canonicalized so that the first nonzero
entry is 1; equality of canonical triples is projective equality.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import EqualLines, EqualPoints, NotCollinear, TooManyCoincident
from .field import FieldSpec, Mod, field_of
from .linalg import cross, det3, dot


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


#: The point at infinity of a parameter line, also a cross-ratio value.
INF = _Infinity()


def _coerce(values):
    p = next((v.p for v in values if isinstance(v, Mod)), None)
    out = []
    for v in values:
        t = type(v)
        if t is Fraction and p is None:
            out.append(v)
        elif t is Mod:
            if v.p != p:
                raise TypeError("mixed prime fields")
            out.append(v)
        elif t is int:
            out.append(Fraction(v) if p is None else Mod(v, p))
        elif t is Fraction:
            out.append(Mod(v.numerator, p) / Mod(v.denominator, p))
        else:
            raise TypeError(f"not an exact scalar: {v!r}")
    return out


def canonical(values):
    """Scale a nonzero vector so that its first nonzero entry is 1."""
    vals = _coerce(values)
    for v in vals:
        if v:
            if v == 1:
                return tuple(vals)
            inv = 1 / v
            return tuple(x * inv for x in vals)
    raise ValueError("the zero vector has no projective meaning")


class _Triple:
    __slots__ = ("coords",)

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise ValueError("homogeneous triples have exactly 3 entries")
        object.__setattr__(self, "coords", canonical(coords))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return 3

    def __eq__(self, other):
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(c) for c in self.coords)})"

    def __reduce__(self):
        return (type(self), self.coords)

    @property
    def field(self) -> FieldSpec:
        return field_of(*self.coords)


class ProjPoint(_Triple):
    """A point (x:y:z)."""

    __slots__ = ()

    @property
    def is_affine(self) -> bool:
        return bool(self.coords[2])

    def affine(self):
        """(x/z, y/z) for a point off the line at infinity."""
        x, y, z = self.coords
        return x / z, y / z


class ProjLine(_Triple):
    """A line a*x + b*y + c*z = 0, stored as (a:b:c)."""

    __slots__ = ()

    def contains(self, p: ProjPoint) -> bool:
        return not dot(self.coords, p.coords)


def point(x, y, z=1, field: FieldSpec | None = None) -> ProjPoint:
    """Shorthand; ``field`` lifts plain ints into a prime field."""
    if field is not None:
        return ProjPoint(field(x), field(y), field(z))
    return ProjPoint(x, y, z)


def line(a, b, c, field: FieldSpec | None = None) -> ProjLine:
    if field is not None:
        return ProjLine(field(a), field(b), field(c))
    return ProjLine(a, b, c)


def incident(p: ProjPoint, l: ProjLine) -> bool:
    return not dot(p.coords, l.coords)


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The line through two distinct points."""
    v = cross(p.coords, q.coords)
    if not any(v):
        raise EqualPoints(f"{p} = {q}")
    return ProjLine(v)


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """The common point of two distinct lines."""
    v = cross(l.coords, m.coords)
    if not any(v):
        raise EqualLines(f"{l} = {m}")
    return ProjPoint(v)


def are_collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return not det3(p.coords, q.coords, r.coords)


def are_concurrent(l: ProjLine, m: ProjLine, n: ProjLine) -> bool:
    return not det3(l.coords, m.coords, n.coords)


def concurrency_determinant(l: ProjLine, m: ProjLine, n: ProjLine):
    return det3(l.coords, m.coords, n.coords)


def bracket_on_line(l: ProjLine, k: int, p: ProjPoint, q: ProjPoint):
    """[pq] relative to the carrier line l: p x q = [pq] * l, read off entry k."""
    return cross(p.coords, q.coords)[k] / l.coords[k]


def cross_ratio(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint, p4: ProjPoint):
    """cr(p1, p2; p3, p4) = (c-a)(d-b) / ((c-b)(d-a)) in any affine parameter.

    Returns :data:`INF` when the denominator vanishes.
    """
    pts = (p1, p2, p3, p4)
    distinct = set(pts)
    if len(distinct) == 1:
        raise TooManyCoincident("all four points coincide")
    for p in distinct:
        if sum(q == p for q in pts) >= 3:
            raise TooManyCoincident(f"{p} appears three times")
    a, b = list(dict.fromkeys(pts))[:2]
    carrier = join(a, b)
    for p in pts:
        if not incident(p, carrier):
            raise NotCollinear("cross-ratio needs four collinear points")
    k = next(i for i in range(3) if carrier.coords[i])

    def br(x, y):
        return bracket_on_line(carrier, k, x, y)

    num = br(p1, p3) * br(p2, p4)
    den = br(p2, p3) * br(p1, p4)
    if not den:
        if not num:
            raise TooManyCoincident("cross-ratio is indeterminate (0/0)")
        return INF
    return num / den


def param_cross_ratio(a, b, c, d):
    """Cross-ratio of four parameter values (scalars or INF)."""
    h = [_homog(t) for t in (a, b, c, d)]

    def br(u, v):
        return u[0] * v[1] - u[1] * v[0]

    num = br(h[0], h[2]) * br(h[1], h[3])
    den = br(h[1], h[2]) * br(h[0], h[3])
    if not den:
        if not num:
            raise TooManyCoincident("cross-ratio is indeterminate (0/0)")
        return INF
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return num / den


def _homog(t):
    """Parameter t as a homogeneous pair (t : 1); INF is (1 : 0)."""
    if t is INF:
        return (1, 0)
    return (t, 1)


def apply_matrix(m, p: ProjPoint) -> ProjPoint:
    """Image of a point under the collineation with matrix m (rows)."""
    return ProjPoint(tuple(dot(row, p.coords) for row in m))
