"""Involutions on parametrized lines and conics.

An involution acts on the parameter t of its carrier through a 2x2 matrix M
with trace 0, on homogeneous pairs (t : 1) with INF = (1 : 0).  The same code
therefore serves lines and conics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import NamedTuple

from .conics import Conic, ConicParametrization, coordinates_in_basis, parametrize
from .core import (
    INF,
    ProjLine,
    ProjPoint,
    are_collinear,
    are_concurrent,
    incident,
    join,
    meet,
    param_cross_ratio,
)
from .errors import (
    DegenerateQuadrangle,
    DuplicatePoints,
    FactViolation,
    LineThroughVertex,
    NoInvolution,
    OverlappingPairs,
    PointNotOnLine,
    PointsNotOnConic,
    Underdetermined,
)
from .linalg import cross, det3, nullspace

class PointPair:
    """Unordered pair of points; (P, P) is allowed and denotes a fixed point."""

    __slots__ = ("first", "second")

    def __init__(self, first, second):
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)

    def __setattr__(self, name, value):
        raise AttributeError("PointPair is immutable")

    def __iter__(self):
        yield self.first
        yield self.second

    @property
    def is_fixed(self) -> bool:
        return self.first == self.second

    def as_set(self) -> frozenset:
        return frozenset((self.first, self.second))

    def __eq__(self, other):
        return isinstance(other, PointPair) and self.as_set() == other.as_set()

    def __hash__(self):
        return hash(self.as_set())

    def __repr__(self):
        return f"PointPair({self.first!r}, {self.second!r})"

    def __reduce__(self):
        return (PointPair, (self.first, self.second))


@dataclass(frozen=True)
class LineParametrization:
    """Affine parameter on a line: t picks q0 + t*q1, INF picks q1."""

    line: ProjLine
    q0: ProjPoint
    q1: ProjPoint

    def point(self, t) -> ProjPoint:
        if t is INF:
            return self.q1
        return ProjPoint(tuple(a + t * b for a, b in zip(self.q0.coords, self.q1.coords)))

    def param(self, p: ProjPoint):
        if not incident(p, self.line):
            raise PointNotOnLine(f"{p} is not on {self.line}")
        alpha, beta = coordinates_in_basis(p, self.q0, self.q1)
        if not alpha:
            return INF
        return beta / alpha


def parametrize_line(l: ProjLine) -> LineParametrization:
    """On a finite line q1 is its point at infinity, so t is an affine coordinate."""
    pts = []
    for e in ((0, 0, 1), (1, 0, 0), (0, 1, 0)):
        v = cross(l.coords, e)
        if any(v) and ProjPoint(v) not in pts:
            pts.append(ProjPoint(v))
    return LineParametrization(l, pts[1], pts[0])


def as_parametrization(carrier, pairs=()):
    """Accept a line, a conic or a ready-made parametrization."""
    if isinstance(carrier, (LineParametrization, ConicParametrization)):
        return carrier
    if isinstance(carrier, ProjLine):
        return parametrize_line(carrier)
    if isinstance(carrier, Conic):
        pts = [p for pair in pairs for p in pair]
        if not pts:
            raise ValueError("need a point of the conic to parametrize it")
        for p in pts:
            if not carrier.contains(p):
                raise PointsNotOnConic(f"{p} is not on {carrier}")
        return parametrize(carrier, pts[0])
    raise TypeError(f"unsupported carrier {carrier!r}")


def _homog(t):
    return (1, 0) if t is INF else (t, 1)


def _from_homog(u):
    if not u[1]:
        return INF
    if isinstance(u[0], int) and isinstance(u[1], int):
        return Fraction(u[0], u[1])
    return u[0] / u[1]


def _sym_row(t, s):
    u, w = _homog(t), _homog(s)
    return (u[0] * w[0], u[0] * w[1] + u[1] * w[0], u[1] * w[1])


@dataclass(frozen=True)
class Involution:
    """Self-inverse projectivity of a carrier; ``matrix`` acts on (t : 1)."""

    carrier: object
    matrix: tuple

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        if a + d:
            raise NoInvolution("matrix trace is not zero")
        if not (a * d - b * c):
            raise NoInvolution("matrix is singular")

    def apply_param(self, t):
        (a, b), (c, d) = self.matrix
        u = _homog(t)
        return _from_homog((a * u[0] + b * u[1], c * u[0] + d * u[1]))

    def apply(self, p: ProjPoint) -> ProjPoint:
        return self.carrier.point(self.apply_param(self.carrier.param(p)))

    def swaps(self, pair: PointPair) -> bool:
        return self.apply(pair.first) == pair.second


def _matrix_through_conditions(conds):
    """Solve M u ~ w for each (u, w) as a linear system in the entries of M."""
    rows = []
    for t, s in conds:
        u, w = _homog(t), _homog(s)
        rows.append((u[0] * w[1], u[1] * w[1], -u[0] * w[0], -u[1] * w[0]))
    kernel = nullspace(rows, 4)
    if len(kernel) != 1:
        raise NoInvolution("the pair conditions do not determine a unique map")
    m00, m01, m10, m11 = kernel[0]
    return ((m00, m01), (m10, m11))


def _matrix_from_symmetric(r1, r2):
    k = cross(r1, r2)
    if not any(k):
        raise NoInvolution("the two pairs impose dependent conditions")
    k0, k1, k2 = k
    return ((k1, k2), (-k0, -k1))


def involution_matrix(pair1, pair2):
    """Matrix of the involution exchanging two parameter pairs."""
    (t1, s1), (t2, s2) = pair1, pair2
    if {t1, s1} & {t2, s2}:
        raise OverlappingPairs(f"{pair1} and {pair2} share a point")
    if t1 == s1 or t2 == s2:
        # fixed points need the symmetric-relation form
        return _matrix_from_symmetric(_sym_row(t1, s1), _sym_row(t2, s2))
    return _matrix_through_conditions([(t1, s1), (s1, t1), (t2, s2)])


def involution_from_two_pairs(carrier, pair1: PointPair, pair2: PointPair) -> Involution:
    par = as_parametrization(carrier, (pair1, pair2))
    if pair1.as_set() & pair2.as_set():
        raise OverlappingPairs(f"{pair1} and {pair2} share a point")
    p1 = tuple(par.param(p) for p in pair1)
    p2 = tuple(par.param(p) for p in pair2)
    inv = Involution(par, involution_matrix(p1, p2))
    if inv.apply_param(p2[0]) != p2[1] or inv.apply_param(p1[0]) != p1[1]:
        raise NoInvolution("constructed map does not exchange the pairs")
    return inv


def det_criterion(param_pairs) -> bool:
    """Pairs (t, t') lie in one involution iff det[t t', t + t', 1] = 0."""
    return not det3(*(_sym_row(t, s) for t, s in param_pairs))


def cross_ratio_criterion(param_pairs):
    """cr(P1, P2; P3, P3') == cr(P1', P2'; P3', P3) after a valid reordering.

    Returns None when no ordering makes the test meaningful (this happens
    only with repeated points, e.g. two fixed-point pairs).
    """
    for order in permutations(param_pairs):
        for flips in product((False, True), repeat=3):
            (a, a2), (b, b2), (c, c2) = [(s, t) if f else (t, s) for (t, s), f in zip(order, flips)]
            if c == c2 or len({a, b, c}) < 3 or len({a2, b2, c2}) < 3:
                continue
            return param_cross_ratio(a, b, c, c2) == param_cross_ratio(a2, b2, c2, c)
    return None


def _check_determined(sets):
    if not any(not (x & y) for x, y in combinations(sets, 2)):
        raise Underdetermined("fewer than two disjoint pairs")


def params_in_involution(param_pairs, method: str = "both") -> bool:
    param_pairs = [tuple(p) for p in param_pairs]
    if len(param_pairs) != 3:
        raise ValueError("expected three pairs")
    _check_determined([frozenset(p) for p in param_pairs])
    if method == "cross-ratio":
        verdict = cross_ratio_criterion(param_pairs)
        if verdict is None:
            raise Underdetermined("cross-ratio criterion does not apply to these pairs")
        return verdict
    verdict = det_criterion(param_pairs)
    if method == "both":
        other = cross_ratio_criterion(param_pairs)
        if other is not None and other != verdict:
            raise FactViolation(f"involution criteria disagree on {param_pairs}")
    elif method != "determinant":
        raise ValueError(f"unknown method {method!r}")
    return verdict


def in_involution(carrier, pairs, method: str = "both") -> bool:
    """Are the three point pairs pairs of one involution on the carrier?"""
    pairs = list(pairs)
    par = as_parametrization(carrier, pairs)
    return params_in_involution([tuple(par.param(p) for p in pair) for pair in pairs], method)


QUADRANGLE_SIDES = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def quadrangle_involution_pairs(quad, l: ProjLine) -> list[PointPair]:
    """Meets of the three pairs of opposite sides with l, ordered {12,34}, {13,24}, {14,23}."""
    quad = list(quad)
    if len(quad) != 4:
        raise ValueError("a quadrangle has four vertices")
    if len(set(quad)) < 4 or any(are_collinear(*t) for t in combinations(quad, 3)):
        raise DegenerateQuadrangle("three vertices are collinear")
    for q in quad:
        if incident(q, l):
            raise LineThroughVertex(f"{l} passes through {q}")
    out = []
    for (i, j), (k, m) in QUADRANGLE_SIDES:
        out.append(PointPair(meet(l, join(quad[i], quad[j])), meet(l, join(quad[k], quad[m]))))
    return out


class FactB(NamedTuple):
    concurrent: bool
    involution: bool
    common_point: ProjPoint | None


def concurrent_iff_involution(c: Conic, pairs) -> FactB:
    """Chords UX, VY, WZ concur exactly when (UX), (VY), (WZ) are in involution on c."""
    pairs = list(pairs)
    pts = [p for pair in pairs for p in pair]
    if len(set(pts)) < 6:
        raise DuplicatePoints("six distinct points required")
    for p in pts:
        if not c.contains(p):
            raise PointsNotOnConic(f"{p} is not on {c}")
    chords = [join(a, b) for a, b in pairs]
    concurrent = are_concurrent(*chords)
    involution = in_involution(parametrize(c, pts[0]), pairs)
    if concurrent != involution:
        raise FactViolation(f"concurrency={concurrent} but involution={involution}")
    return FactB(concurrent, involution, meet(chords[0], chords[1]) if concurrent else None)
