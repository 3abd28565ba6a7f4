import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hagge.conics import Conic, parametrize, second_intersection
from hagge.core import INF, join, line, meet, point
from hagge.errors import (
    DegenerateQuadrangle,
    DuplicatePoints,
    LineThroughVertex,
    NoInvolution,
    OverlappingPairs,
    PointsNotOnConic,
    Underdetermined,
)
from hagge.field import FieldSpec
from hagge.involution import (
    Involution,
    PointPair,
    concurrent_iff_involution,
    cross_ratio_criterion,
    det_criterion,
    in_involution,
    involution_from_two_pairs,
    involution_matrix,
    params_in_involution,
    parametrize_line,
    quadrangle_involution_pairs,
)

import oracles
from strategies import BACKENDS

X_AXIS = line(0, 1, 0)
UNIT = Conic.from_coefficients(1, 0, 1, 0, 0, -1)


def _on_axis(*xs):
    return [point(x, 0) for x in xs]


def test_x_axis_parameter_is_x():
    par = parametrize_line(X_AXIS)
    assert par.point(3) == point(3, 0)
    assert par.param(point(Fraction(-5, 2), 0)) == Fraction(-5, 2)
    assert par.param(par.point(INF)) is INF


def test_reciprocal_involution():
    p2, p3 = _on_axis(2, 3)
    p1, p6 = _on_axis(1, 6)
    inv = involution_from_two_pairs(X_AXIS, PointPair(p2, p3), PointPair(p1, p6))
    assert inv.apply(point(4, 0)) == point(Fraction(3, 2), 0)
    assert inv.apply_param(0) is INF
    assert inv.apply_param(INF) == 0
    assert in_involution(X_AXIS, [PointPair(p2, p3), PointPair(p1, p6), PointPair(*_on_axis(-2, -3))])
    assert not in_involution(X_AXIS, [PointPair(p2, p3), PointPair(p1, p6), PointPair(*_on_axis(4, 5))])


def test_negation_involution_with_fixed_pair():
    assert params_in_involution([(1, -1), (2, -2), (0, 0)])
    assert params_in_involution([(1, -1), (0, 0), (INF, INF)])
    assert not params_in_involution([(1, -1), (2, -3), (0, 0)])
    m = involution_matrix((1, -1), (0, 0))
    inv = Involution(parametrize_line(X_AXIS), m)
    assert inv.apply_param(5) == -5
    assert inv.apply_param(INF) is INF


def test_pair_errors():
    a, b, c = _on_axis(1, 2, 3)
    with pytest.raises(OverlappingPairs):
        involution_from_two_pairs(X_AXIS, PointPair(a, b), PointPair(b, c))
    with pytest.raises(Underdetermined):
        params_in_involution([(1, 2), (2, 3), (3, 1)])
    with pytest.raises(Underdetermined):
        params_in_involution([(0, 0), (1, 1), (2, 2)], method="cross-ratio")
    with pytest.raises(NoInvolution):
        Involution(None, ((1, 0), (0, 1)))
    with pytest.raises(NoInvolution):
        Involution(None, ((1, 1), (0, 1)))
    with pytest.raises(NoInvolution):
        Involution(None, ((1, 1), (-1, -1)))
    assert Involution(None, ((1, 0), (0, -1))).apply_param(3) == -3
    with pytest.raises(ValueError):
        params_in_involution([(1, 2), (3, 4), (5, 6)], method="guess")


def test_criteria_on_examples():
    good = [(2, 3), (1, 6), (-2, -3)]
    bad = [(2, 3), (1, 6), (4, 5)]
    assert det_criterion(good) and not det_criterion(bad)
    assert cross_ratio_criterion(good) is True
    assert cross_ratio_criterion(bad) is False
    assert cross_ratio_criterion([(0, 0), (1, 1), (2, 2)]) is None


def test_unit_square_quadrangle():
    quad = [point(0, 0), point(1, 0), point(0, 1), point(1, 1)]
    l = line(0, 1, -2)
    pairs = quadrangle_involution_pairs(quad, l)
    direct = []
    for (i, j), (k, m) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        direct.append({meet(l, join(quad[i], quad[j])), meet(l, join(quad[k], quad[m]))})
    assert [p.as_set() for p in pairs] == direct
    assert pairs[1].as_set() == {point(0, 2), point(1, 2)}
    assert pairs[2].as_set() == {point(2, 2), point(-1, 2)}
    assert pairs[0].is_fixed
    assert in_involution(l, pairs)


def test_quadrangle_errors():
    quad = [point(0, 0), point(1, 0), point(0, 1), point(1, 1)]
    with pytest.raises(LineThroughVertex):
        quadrangle_involution_pairs(quad, line(1, 0, 0))
    with pytest.raises(DegenerateQuadrangle):
        quadrangle_involution_pairs([point(0, 0), point(1, 1), point(2, 2), point(1, 0)], line(0, 1, -5))


def _circle_point(t):
    t = Fraction(t)
    return point((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))


def _chord_partner(p, centre):
    return second_intersection(UNIT, join(p, centre), p).point


def test_chords_through_a_common_point():
    centre = point(0, Fraction(1, 2))
    pairs = [PointPair(p, _chord_partner(p, centre)) for p in map(_circle_point, (2, Fraction(1, 3), -5))]
    fb = concurrent_iff_involution(UNIT, pairs)
    assert fb.concurrent and fb.involution
    assert fb.common_point == centre


def test_diameters():
    pairs = [PointPair(p, point(*(-x for x in p.affine())))
             for p in map(_circle_point, (2, Fraction(1, 3), -5))]
    fb = concurrent_iff_involution(UNIT, pairs)
    assert fb.involution and fb.common_point == point(0, 0)


def test_generic_chords_are_not_in_involution():
    pts = [_circle_point(t) for t in (0, 1, 2, 3, 4, 5)]
    pairs = [PointPair(pts[0], pts[1]), PointPair(pts[2], pts[3]), PointPair(pts[4], pts[5])]
    fb = concurrent_iff_involution(UNIT, pairs)
    assert not fb.concurrent and not fb.involution and fb.common_point is None


def test_fact_b_errors():
    pts = [_circle_point(t) for t in (0, 1, 2, 3, 4)]
    with pytest.raises(DuplicatePoints):
        concurrent_iff_involution(UNIT, [PointPair(pts[0], pts[1]), PointPair(pts[2], pts[3]), PointPair(pts[4], pts[0])])
    with pytest.raises(PointsNotOnConic):
        concurrent_iff_involution(UNIT, [PointPair(pts[0], pts[1]), PointPair(pts[2], pts[3]),
                                         PointPair(pts[4], point(5, 5))])


def _distinct(rng, f, n):
    out = []
    while len(out) < n:
        t = f.random(rng, 40)
        if t not in out:
            out.append(t)
    return out


@pytest.mark.parametrize("f", BACKENDS, ids=lambda f: f.name)
def test_matrix_is_traceless_and_squares_to_scalar(f):
    rng = random.Random(f"mat-{f.name}")
    for _ in range(200):
        t1, s1, t2, s2 = _distinct(rng, f, 4)
        (a, b), (c, d) = involution_matrix((t1, s1), (t2, s2))
        assert a + d == 0
        sq = ((a * a + b * c, a * b + b * d), (c * a + d * c, c * b + d * d))
        assert sq[0][1] == 0 and sq[1][0] == 0 and sq[0][0] == sq[1][1] != 0


@pytest.mark.parametrize("f", BACKENDS, ids=lambda f: f.name)
def test_orbit_pairs_satisfy_both_criteria(f):
    rng = random.Random(f"orb-{f.name}")
    par = parametrize_line(X_AXIS)
    for _ in range(200):
        t1, s1, t2, s2 = _distinct(rng, f, 4)
        inv = Involution(par, involution_matrix((t1, s1), (t2, s2)))
        assert inv.apply_param(s1) == t1 and inv.apply_param(t2) == s2
        u = f.random(rng, 40)
        v = inv.apply_param(u)
        assert inv.apply_param(v) == u
        assert params_in_involution([(t1, s1), (t2, s2), (u, v)], method="both")


def test_against_sympy_mobius_oracle():
    rng = random.Random(5)
    f = FieldSpec()
    for _ in range(100):
        t1, s1, t2, s2, u = _distinct(rng, f, 5)
        target = oracles.involution_oracle((t1, s1), (t2, s2))(u)
        inv = Involution(parametrize_line(X_AXIS), involution_matrix((t1, s1), (t2, s2)))
        got = inv.apply_param(u)
        assert (got is INF) if target is None else got == target


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=6, max_size=6, unique=True))
def test_criteria_agree(vals):
    pairs = [tuple(vals[i:i + 2]) for i in range(0, 6, 2)]
    assert det_criterion(pairs) == cross_ratio_criterion(pairs)


@pytest.mark.parametrize("f", BACKENDS, ids=lambda f: f.name)
def test_verdict_does_not_depend_on_conic_base(f):
    rng = random.Random(f"base-{f.name}")
    done = 0
    while done < 30:
        ts = _distinct(rng, f, 6)
        if f.is_rational:
            pts = [_circle_point(t) for t in ts]
        else:
            # conic xz = y^2 with points (1 : t : t^2)
            pts = [point(1, t, t * t, field=f) for t in ts]
        c = UNIT if f.is_rational else Conic.from_coefficients(*(f(v) for v in (0, 0, -1, 1, 0, 0)))
        pairs = [PointPair(pts[0], pts[1]), PointPair(pts[2], pts[3]), PointPair(pts[4], pts[5])]
        verdicts = {in_involution(parametrize(c, b), pairs) for b in pts}
        assert len(verdicts) == 1
        assert concurrent_iff_involution(c, pairs).involution in verdicts
        done += 1
