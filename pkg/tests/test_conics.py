import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hagge.conics import (
    Conic,
    all_points,
    circle_through_three,
    conic_points,
    conic_through_five,
    fourth_intersection,
    parametrize,
    polar,
    pole,
    second_intersection,
    tangent,
)
from hagge.core import INF, ProjPoint, incident, join, line, param_cross_ratio, point
from hagge.errors import (
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
from hagge.field import FieldSpec

import oracles
from strategies import BACKENDS

UNIT = Conic.from_coefficients(1, 0, 1, 0, 0, -1)


def test_unit_circle_from_five_points():
    pts = [point(1, 0), point(0, 1), point(-1, 0), point(0, -1), point(Fraction(3, 5), Fraction(4, 5))]
    assert conic_through_five(*pts) == UNIT
    assert conic_through_five(pts) == UNIT


def test_conic_through_basis_points_matches_nullspace():
    pts = [ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1), ProjPoint(1, 1, 1), ProjPoint(1, 2, 3)]
    c = conic_through_five(*pts)
    got = c.coefficients()
    k = next(v for v in got if v)
    assert tuple(v / k for v in got) == oracles.nullspace_conic([p.coords for p in pts])
    assert all(c.contains(p) for p in pts)
    assert not c.is_degenerate


def test_conic_through_five_errors():
    with pytest.raises(DegeneratePosition):
        conic_through_five(point(0, 0), point(1, 1), point(2, 2), point(1, 0), point(0, 1))
    with pytest.raises(DuplicatePoints):
        conic_through_five(point(0, 0), point(0, 0), point(2, 3), point(1, 0), point(0, 1))


def test_circle_through_three():
    c = circle_through_three(point(0, 0), point(1, 0), point(0, 1))
    assert c == Conic.from_coefficients(1, 0, 1, -1, -1, 0)
    assert c.is_circle
    assert circle_through_three(point(1, 0), point(-1, 0), point(0, 1)) == UNIT
    with pytest.raises(CollinearInput):
        circle_through_three(point(0, 0), point(1, 1), point(2, 2))
    f = FieldSpec(11)
    with pytest.raises(WrongField):
        circle_through_three(point(0, 0, field=f), point(1, 0, field=f), point(0, 1, field=f))


def test_circle_matches_linear_solve():
    a, b, c = (Fraction(2, 3), Fraction(-1)), (Fraction(5), Fraction(1, 7)), (Fraction(-3, 2), Fraction(4))
    d, e, f = oracles.circle_through(a, b, c)
    assert circle_through_three(point(*a), point(*b), point(*c)) == Conic.from_coefficients(1, 0, 1, d, e, f)


def test_conic_matrix_is_symmetric_and_canonical():
    with pytest.raises(ValueError):
        Conic(((1, 2, 0), (0, 1, 0), (0, 0, 1)))
    c = Conic(((2, 0, 0), (0, 2, 0), (0, 0, -2)))
    assert c == UNIT
    assert c.rank == 3
    pair = Conic.from_coefficients(0, 1, 0, 0, 0, 0)  # xy = 0
    assert pair.rank == 2 and pair.is_degenerate
    double = Conic.from_coefficients(1, 0, 0, 0, 0, 0)
    assert double.rank == 1


def test_polar_examples():
    assert polar(UNIT, point(2, 0)) == line(2, 0, -1)
    assert polar(UNIT, point(0, 0)) == line(0, 0, 1)
    p = point(Fraction(3, 5), Fraction(4, 5))
    assert incident(p, polar(UNIT, p))
    assert tangent(UNIT, p) == polar(UNIT, p)
    with pytest.raises(DegenerateConic):
        polar(Conic.from_coefficients(0, 1, 0, 0, 0, 0), p)


def test_second_intersection_examples():
    hit = second_intersection(UNIT, line(1, -1, -1), point(1, 0))
    assert hit.point == point(0, -1) and not hit.tangent
    hit = second_intersection(UNIT, line(1, 0, -1), point(1, 0))
    assert hit.point == point(1, 0) and hit.tangent
    with pytest.raises(PointNotOnConic):
        second_intersection(UNIT, line(0, 0, 1), ProjPoint(1, 0, 0))
    with pytest.raises(PointNotOnLine):
        second_intersection(UNIT, line(0, 1, 0), point(0, 1))


def test_fourth_intersection_examples():
    c2 = Conic.from_coefficients(1, 1, 1, 0, 0, -1)
    p = fourth_intersection(UNIT, c2, point(1, 0), point(0, 1), point(-1, 0))
    assert p == point(0, -1)
    with pytest.raises(IdenticalConics):
        fourth_intersection(UNIT, UNIT, point(1, 0), point(0, 1), point(-1, 0))
    with pytest.raises(NotCommonPoints):
        fourth_intersection(UNIT, c2, point(1, 0), point(0, 1), point(0, -1, 2))


def test_fourth_intersection_tangential_contact():
    # x^2 + 2y^2 - y - 1 touches the unit circle at (0, 1)
    c2 = Conic.from_coefficients(1, 0, 2, 0, -1, -1)
    pts = [point(1, 0), point(-1, 0), point(0, 1)]
    assert all(c2.contains(p) for p in pts)
    with pytest.raises(TangentialContact):
        fourth_intersection(UNIT, c2, *pts)


def test_two_circles_through_d_meet_again_at_q():
    d, q = point(1, 2), point(Fraction(-3, 4), 5)
    c1 = circle_through_three(d, q, point(0, 0))
    c2 = circle_through_three(d, q, point(7, Fraction(1, 3)))
    got = fourth_intersection(c1, c2, d)
    sols = oracles.common_affine_points(oracles.affine_conic(c1.coefficients()),
                                        oracles.affine_conic(c2.coefficients()))
    assert sols == {d.affine(), q.affine()}
    assert got == q


@pytest.mark.parametrize("seed", range(20))
def test_random_circle_pairs_against_resultant(seed):
    rng = random.Random(seed)
    r = lambda: Fraction(rng.randint(-9, 9), rng.randint(1, 5))  # noqa: E731
    d, q = point(r(), r()), point(r(), r())
    a, b = point(r(), r()), point(r(), r())
    try:
        c1, c2 = circle_through_three(d, q, a), circle_through_three(d, q, b)
    except CollinearInput:
        pytest.skip("collinear draw")
    if c1 == c2 or d == q:
        pytest.skip("degenerate draw")
    sols = oracles.common_affine_points(oracles.affine_conic(c1.coefficients()),
                                        oracles.affine_conic(c2.coefficients()))
    assert fourth_intersection(c1, c2, d).affine() in sols - {d.affine()}


def test_unit_circle_parametrization():
    par = parametrize(UNIT, point(-1, 0))
    assert par.point(1) == point(0, 1)
    assert par.param(point(-1, 0)) is INF
    for t in (Fraction(0), Fraction(1, 2), Fraction(-3), Fraction(7, 5)):
        x = (1 - t * t) / (1 + t * t)
        y = 2 * t / (1 + t * t)
        assert par.point(t) == point(x, y)
        assert par.param(point(x, y)) == t


def test_parametrization_over_gf11_exhausts_conic():
    f = FieldSpec(11)
    c = conic_through_five(*(point(x, y, z, field=f) for x, y, z in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3))))
    base = point(1, 0, 0, field=f)
    par = parametrize(c, base)
    walked = {par.point(t) for t in list(f.elements()) + [INF]}
    assert len(walked) == 12
    q = oracles.quad_form(c.coefficients(), 11)
    scan = {v for v in oracles.plane(11) if q(v) == 0}
    assert {oracles.point_residues(p, 11) for p in walked} == scan
    assert len(all_points(f)) == 133
    assert set(conic_points(c, f)) == walked


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_conic_point_count(p):
    f = FieldSpec(p)
    rng = random.Random(p)
    done = 0
    while done < 5:
        pts = [point(rng.randrange(p), rng.randrange(p), 1, field=f) for _ in range(5)]
        try:
            c = conic_through_five(*pts)
        except (DegeneratePosition, DuplicatePoints):
            continue
        q = oracles.quad_form(c.coefficients(), p)
        assert sum(1 for v in oracles.plane(p) if q(v) == 0) == p + 1
        done += 1


def _random_conic(rng, f):
    while True:
        if f.p:
            vs = [tuple(f.random(rng, 20) for _ in range(3)) for _ in range(5)]
            if not all(any(v) for v in vs):
                continue
            pts = [ProjPoint(*v) for v in vs]
        else:
            pts = [point(f.random(rng, 20), f.random(rng, 20)) for _ in range(5)]
        try:
            return conic_through_five(*pts), pts
        except (DegeneratePosition, DuplicatePoints):
            continue


@pytest.mark.parametrize("f", BACKENDS, ids=lambda f: f.name)
def test_pole_polar_involutive(f):
    rng = random.Random(f"pp-{f.name}")
    for _ in range(200):
        c, _ = _random_conic(rng, f)
        v = (f.random(rng, 50), f.random(rng, 50), f.random(rng, 50))
        if not any(v):
            continue
        p = ProjPoint(v)
        assert pole(c, polar(c, p)) == p


@pytest.mark.parametrize("f", BACKENDS, ids=lambda f: f.name)
def test_second_intersection_twice_returns_start(f):
    rng = random.Random(f"si-{f.name}")
    for _ in range(100):
        c, pts = _random_conic(rng, f)
        p = pts[0]
        other = ProjPoint(*(f.random(rng, 50) + k for k in (0, 1, 1)))
        if other == p:
            continue
        l = join(p, other)
        hit = second_intersection(c, l, p)
        assert c.contains(hit.point) and incident(hit.point, l)
        if not hit.tangent:
            assert second_intersection(c, l, hit.point).point == p


@pytest.mark.parametrize("f", BACKENDS, ids=lambda f: f.name)
def test_parametrization_roundtrip(f):
    rng = random.Random(f"par-{f.name}")
    for _ in range(50):
        c, pts = _random_conic(rng, f)
        par = parametrize(c, pts[0])
        for p in pts:
            assert par.point(par.param(p)) == p
        t = f.random(rng, 50)
        assert par.param(par.point(t)) == t if par.point(t) != pts[0] else True


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_change_of_base_preserves_cross_ratio(seed):
    rng = random.Random(seed)
    c, pts = _random_conic(rng, FieldSpec())
    a, b = parametrize(c, pts[0]), parametrize(c, pts[1])
    qa = [a.param(p) for p in pts[1:5]]
    qb = [b.param(p) for p in pts[1:5]]
    assert param_cross_ratio(*qa) == param_cross_ratio(*qb)
