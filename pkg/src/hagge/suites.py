"""Randomized property suites for the supporting facts.

Every case is drawn from its own RNG stream (suite, check, field, seed, case,
attempt).  A degenerate draw is redrawn and its reason counted; a failed
property is recorded with enough detail to reproduce it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .conics import (
    Conic,
    circle_through_three,
    conic_through_five,
    fourth_intersection,
    parametrize,
    second_intersection,
)
from .core import (
    INF,
    ProjLine,
    ProjPoint,
    are_collinear,
    are_concurrent,
    cross_ratio,
    incident,
    join,
    param_cross_ratio,
)
from .correspondences import (
    InversionMap,
    build_steiner,
    invert,
    invert_circle_through_pole,
    steiner_apply,
    steiner_for_triangle,
    steiner_line_image,
    steiner_vertex_line_image,
)
from .errors import GeometryError, IdenticalConics, TangentialContact
from .field import RATIONALS, FieldSpec
from .harness import random_point, stream
from .involution import (
    QUADRANGLE_SIDES,
    PointPair,
    concurrent_iff_involution,
    cross_ratio_criterion,
    det_criterion,
    in_involution,
    involution_matrix,
    parametrize_line,
    quadrangle_involution_pairs,
)

MAX_ATTEMPTS = 500
DEFAULT_BOUND = 20


class Redraw(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass
class SuiteResult:
    name: str
    fields: list
    seed: int
    passed: Counter = field(default_factory=Counter)
    rejected: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)

    def check(self, label: str, holds: bool, case=None, detail=None) -> bool:
        if holds:
            self.passed[label] += 1
        else:
            self.failures.append({"check": label, "case": case, "detail": detail})
        return holds

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "fields": self.fields,
            "seed": self.seed,
            "passed": dict(sorted(self.passed.items())),
            "rejected": dict(sorted(self.rejected.items())),
            "failures": self.failures,
        }

    def summary(self) -> str:
        lines = [f"check {self.name} over {', '.join(self.fields)} (seed {self.seed})"]
        for label, n in sorted(self.passed.items()):
            lines.append(f"  {label}: {n} passed")
        if self.rejected:
            lines.append(f"  redrawn degenerate draws: {sum(self.rejected.values())}")
        lines.append(f"  failures: {len(self.failures)}")
        return "\n".join(lines)


def _run(res: SuiteResult, label: str, f: FieldSpec, n: int, make, verify):
    """n cases of make(rng) -> instance, verify(instance) -> [(check, holds, detail)]."""
    for case in range(n):
        for attempt in range(MAX_ATTEMPTS):
            rng = stream(res.name, label, f.name, res.seed, case, attempt)
            try:
                inst = make(rng)
            except Redraw as exc:
                res.rejected[f"{label}:{exc.reason}"] += 1
                continue
            except GeometryError as exc:
                res.rejected[f"{label}:{type(exc).__name__}"] += 1
                continue
            break
        else:
            res.check(f"{label} [{f.name}]", False, case, "no non-degenerate draw")
            continue
        try:
            outcomes = verify(inst)
        except (GeometryError, AssertionError, ZeroDivisionError) as exc:
            outcomes = [(label, False, f"{type(exc).__name__}: {exc}")]
        for name, holds, detail in outcomes:
            res.check(f"{name} [{f.name}]", holds, case, None if holds else detail)


# ---------------------------------------------------------------- drawing helpers


def _scalar(rng, f: FieldSpec, bound: int, nonzero: bool = False):
    while True:
        x = f.random(rng, bound)
        if x or not nonzero:
            return x


def _line(rng, f: FieldSpec, bound: int) -> ProjLine:
    while True:
        v = tuple(_scalar(rng, f, bound) for _ in range(3))
        if any(v):
            return ProjLine(v)


def _general_points(rng, f, bound, n):
    pts = [random_point(rng, f, bound) for _ in range(n)]
    if len(set(pts)) < n or any(are_collinear(*t) for t in combinations(pts, 3)):
        raise Redraw("collinear")
    return pts


def _conic(rng, f, bound):
    """A random non-degenerate conic together with the five points defining it."""
    pts = _general_points(rng, f, bound, 5)
    return conic_through_five(*pts), pts


def _params(rng, f, bound, n, exclude=()):
    out = []
    for _ in range(100 * n):
        t = INF if rng.random() < 0.05 else _scalar(rng, f, bound)
        if t not in out and t not in exclude:
            out.append(t)
            if len(out) == n:
                return out
    raise Redraw("too-few-parameters")


def _apply(m, t):
    (a, b), (c, d) = m
    u = (1, 0) if t is INF else (t, 1)
    x, y = a * u[0] + b * u[1], c * u[0] + d * u[1]
    return INF if not y else x / y


def _pt(p):
    return None if p is None else [p.field.format(c) for c in p.coords]


def _pairs(pairs):
    return [[_pt(p) for p in pair] for pair in pairs]


def _pair_params(par, pairs):
    return [tuple(par.param(p) for p in pair) for pair in pairs]


# ---------------------------------------------------------------- fact A


def fact_a(cases: int, seed: int, fields=(RATIONALS,), bound: int = DEFAULT_BOUND) -> SuiteResult:
    """Opposite sides of a complete quadrangle cut a line in three pairs of an involution."""
    res = SuiteResult("fact-a", [f.name for f in fields], seed)
    for f in fields:
        bnd = bound if f.is_rational else f.p
        def make(rng, f=f):
            quad = _general_points(rng, f, bnd, 4)
            l = _line(rng, f, bnd)
            return quad, l, quadrangle_involution_pairs(quad, l)

        def verify(inst):
            quad, l, pairs = inst
            # independent route: meet every side directly
            direct = []
            for (i, j), (k, m) in QUADRANGLE_SIDES:
                s1, s2 = join(quad[i], quad[j]), join(quad[k], quad[m])
                direct.append(PointPair(*(ProjPoint(_cross(l.coords, s.coords)) for s in (s1, s2))))
            return [
                ("pairs are the meets with opposite sides", direct == pairs, _pairs(pairs)),
                ("quadrangle pairs in involution", in_involution(l, pairs, method="both"), _pairs(pairs)),
            ]

        _run(res, "quadrangle", f, cases, make, verify)
    return res


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


# ---------------------------------------------------------------- fact B


def fact_b(cases: int, seed: int, fields=(RATIONALS,), bound: int = DEFAULT_BOUND) -> SuiteResult:
    """Chords concur iff their endpoint pairs are in involution; both criteria agree."""
    res = SuiteResult("fact-b", [f.name for f in fields], seed)
    for f in fields:
        bnd = bound if f.is_rational else f.p
        def make_forced(rng, f=f):
            c, pts = _conic(rng, f, bnd)
            o = random_point(rng, f, bnd)
            if c.contains(o):
                raise Redraw("centre-on-conic")
            par = parametrize(c, pts[0])
            pairs = []
            for t in _params(rng, f, bnd, 3):
                u = par.point(t)
                hit = second_intersection(c, join(o, u), u)
                if hit.tangent:
                    raise Redraw("tangent-chord")
                pairs.append(PointPair(u, hit.point))
            if len({p for pair in pairs for p in pair}) < 6:
                raise Redraw("coincident")
            return c, pairs, o

        def verify_forced(inst):
            c, pairs, o = inst
            fb = concurrent_iff_involution(c, pairs)
            par = parametrize(c, pairs[0].first)
            params = _pair_params(par, pairs)
            det, cr = det_criterion(params), cross_ratio_criterion(params)
            return [
                ("forced: concurrent and in involution", fb.concurrent and fb.involution, _pairs(pairs)),
                ("forced: common point is the chosen centre", fb.common_point == o, _pt(fb.common_point)),
                ("criteria agree", cr is not None and cr == det, [det, cr]),
            ]

        def make_generic(rng, f=f):
            c, pts = _conic(rng, f, bnd)
            par = parametrize(c, pts[0])
            six = [par.point(t) for t in _params(rng, f, bnd, 6)]
            pairs = [PointPair(six[0], six[1]), PointPair(six[2], six[3]), PointPair(six[4], six[5])]
            if are_concurrent(*(join(a, b) for a, b in pairs)):
                raise Redraw("accidentally-concurrent")
            return c, pairs

        def verify_generic(inst):
            c, pairs = inst
            fb = concurrent_iff_involution(c, pairs)
            par = parametrize(c, pairs[0].first)
            params = _pair_params(par, pairs)
            det, cr = det_criterion(params), cross_ratio_criterion(params)
            return [
                ("generic: neither concurrent nor in involution",
                 not fb.concurrent and not fb.involution and fb.common_point is None, _pairs(pairs)),
                ("criteria agree", cr is not None and cr == det, [det, cr]),
            ]

        def make_fixed(rng, f=f):
            fixed, a, b, e = _params(rng, f, bnd, 4)
            image = _apply(involution_matrix((fixed, fixed), (a, b)), e)
            if image in (fixed, a, b, e):
                raise Redraw("coincident")
            member = rng.random() < 0.5
            if not member:
                image = _params(rng, f, bnd, 1, exclude=(fixed, a, b, e, image))[0]
            return [(fixed, fixed), (a, b), (e, image)], member

        def verify_fixed(inst):
            triple, member = inst
            det, cr = det_criterion(triple), cross_ratio_criterion(triple)
            return [
                ("fixed pair: determinant verdict", det == member, [str(x) for p in triple for x in p]),
                ("criteria agree (fixed pair)", cr is not None and cr == det, [det, cr]),
            ]

        _run(res, "forced", f, cases, make_forced, verify_forced)
        _run(res, "generic", f, cases, make_generic, verify_generic)
        _run(res, "fixed-pair", f, max(1, cases // 5), make_fixed, verify_fixed)
    return res


# ---------------------------------------------------------------- Steiner correspondence


def _steiner(rng, f, bound):
    d, e, g = _general_points(rng, f, bound, 3)
    s1 = tuple(_scalar(rng, f, bound, nonzero=True) for _ in range(3))
    s2 = tuple(_scalar(rng, f, bound, nonzero=True) for _ in range(3))
    # equal ratios give a pencil with a repeated eigenvalue and no unique self-polar triangle
    if len({a / b for a, b in zip(s1, s2)}) < 3:
        raise Redraw("repeated-seed-ratio")
    return steiner_for_triangle(d, e, g, (s1, s2))


def _off_sides(rng, s, f, bound):
    p = random_point(rng, f, bound)
    if s.triangle.on_side(p):
        raise Redraw("on-side")
    return p


def _line_points(l, s, n, avoid=()):
    """Up to n points of l off the triangle's sides, in parameter order 0, 1, -1, 2, ..."""
    par = parametrize_line(l)
    f = par.q0.field
    if f.is_rational:
        ts = [0] + [sgn * k for k in range(1, 4 * n) for sgn in (1, -1)]
    else:
        ts = list(f.elements()) + [INF]
    out = []
    for t in ts:
        p = par.point(t if t is INF else f(t))
        if p in avoid or p in out or s.triangle.on_side(p):
            continue
        out.append(p)
        if len(out) == n:
            break
    return out


def steiner(cases: int, seed: int, fields=(RATIONALS,), bound: int = DEFAULT_BOUND) -> SuiteResult:
    """Involutivity, conic and line images, involution transfer, and triangle recovery.

    cases involutivity checks; cases/5 line images, vertex lines and
    recoveries; 2*cases/5 pushforward triples.
    """
    res = SuiteResult("steiner", [f.name for f in fields], seed)
    fifth = max(1, cases // 5)
    for f in fields:
        bnd = bound if f.is_rational else f.p
        def make_point(rng, f=f):
            s = _steiner(rng, f, bnd)
            return s, _off_sides(rng, s, f, bnd)

        def verify_point(inst):
            s, p = inst
            q = steiner_apply(s, p)
            return [("S(S(P)) = P", steiner_apply(s, q) == p, _pt(p))]

        def make_line(rng, f=f):
            s = _steiner(rng, f, bnd)
            l = _line(rng, f, bnd)
            if any(incident(v, l) for v in s.triangle.vertices):
                raise Redraw("line-through-vertex")
            samples = _line_points(l, s, 15)
            if len(samples) < 6:
                raise Redraw("few-samples")
            return s, l, samples

        def verify_line(inst):
            s, l, samples = inst
            c = steiner_line_image(s, l, samples[:5], extra=0)
            images = [steiner_apply(s, p) for p in samples]
            extra = images[5:]
            return [
                ("S(l) is a non-degenerate conic", not c.is_degenerate, repr(c)),
                ("S(l) contains the three vertices", all(c.contains(v) for v in s.triangle.vertices), repr(c)),
                ("S(l) contains the extra sample images", all(c.contains(q) for q in extra), len(extra)),
                ("S maps S(l) back onto l", all(incident(steiner_apply(s, q), l) for q in images), repr(l)),
            ]

        def make_vertex_line(rng, f=f):
            s = _steiner(rng, f, bnd)
            v = s.triangle.vertices[rng.randrange(3)]
            q = _off_sides(rng, s, f, bnd)
            l = join(v, q)
            samples = _line_points(l, s, 6, avoid=(v,))
            if len(samples) < 3:
                raise Redraw("few-samples")
            return s, l, samples

        def verify_vertex_line(inst):
            s, l, samples = inst
            image = steiner_vertex_line_image(s, l, samples)
            pts = [steiner_apply(s, p) for p in samples]
            return [
                ("vertex-line images on one line", all(incident(p, image) for p in pts), repr(image)),
                ("vertex-line images collinear by determinant",
                 all(are_collinear(*t) for t in combinations(pts, 3)), len(pts)),
            ]

        def make_push(rng, f=f):
            s = _steiner(rng, f, bnd)
            l = _line(rng, f, bnd)
            if any(incident(v, l) for v in s.triangle.vertices):
                raise Redraw("line-through-vertex")
            par = parametrize_line(l)
            a, b, c, d, e = _params(rng, f, bnd, 5)
            member = rng.random() < 0.5
            if member:
                g = _apply(involution_matrix((a, b), (c, d)), e)
            else:
                g = _params(rng, f, bnd, 1, exclude=(a, b, c, d, e))[0]
            pairs = [PointPair(par.point(x), par.point(y)) for x, y in ((a, b), (c, d), (e, g))]
            pts = [p for pair in pairs for p in pair]
            if len(set(pts[:4])) < 4 or any(s.triangle.on_side(p) for p in pts):
                raise Redraw("degenerate-pairs")
            conic = steiner_line_image(s, l, _line_points(l, s, 5))
            return s, l, conic, pairs

        def verify_push(inst):
            s, l, conic, pairs = inst
            image = [PointPair(steiner_apply(s, a), steiner_apply(s, b)) for a, b in pairs]
            before = in_involution(l, pairs)
            after = in_involution(conic, image)
            back = [PointPair(steiner_apply(s, a), steiner_apply(s, b)) for a, b in image]
            return [
                ("pushforward to S(l) keeps the involution verdict", before == after, [before, after]),
                ("pulling back returns the original pairs", back == pairs, _pairs(image)),
            ]

        def make_pull(rng, f=f):
            # start from pairs on the conic S(l) and pull back to l
            s = _steiner(rng, f, bnd)
            l = _line(rng, f, bnd)
            if any(incident(v, l) for v in s.triangle.vertices):
                raise Redraw("line-through-vertex")
            conic = steiner_line_image(s, l, _line_points(l, s, 5))
            par = parametrize(conic, s.triangle.vertices[0])
            a, b, c, d, e = _params(rng, f, bnd, 5, exclude=(INF,))
            member = rng.random() < 0.5
            g = _apply(involution_matrix((a, b), (c, d)), e)
            if not member:
                g = _params(rng, f, bnd, 1, exclude=(a, b, c, d, e, g, INF))[0]
            if g is INF:
                raise Redraw("vertex")
            pairs = [PointPair(par.point(x), par.point(y)) for x, y in ((a, b), (c, d), (e, g))]
            if any(p in s.triangle.vertices for pair in pairs for p in pair):
                raise Redraw("vertex")
            return s, l, conic, pairs

        def verify_pull(inst):
            s, l, conic, pairs = inst
            back = [PointPair(steiner_apply(s, a), steiner_apply(s, b)) for a, b in pairs]
            on_l = all(incident(p, l) for pair in back for p in pair)
            return [
                ("pull back from S(l) lands on l", on_l, repr(l)),
                ("pull back keeps the involution verdict", in_involution(conic, pairs) == in_involution(l, back),
                 _pairs(pairs)),
            ]

        def make_recover(rng, f=f):
            return _steiner(rng, f, bnd)

        def verify_recover(s):
            found = build_steiner(s.sigma1, s.sigma2)
            return [("build_steiner recovers the triangle", found.triangle.same_as(s.triangle),
                     [_pt(v) for v in found.triangle.vertices])]

        _run(res, "involutive", f, cases, make_point, verify_point)
        _run(res, "line-image", f, fifth, make_line, verify_line)
        _run(res, "vertex-line", f, fifth, make_vertex_line, verify_vertex_line)
        _run(res, "pushforward", f, fifth, make_push, verify_push)
        _run(res, "pullback", f, fifth, make_pull, verify_pull)
        _run(res, "recover", f, fifth, make_recover, verify_recover)
    return res


# ---------------------------------------------------------------- inversion


def inversion(cases: int, seed: int, fields=(RATIONALS,), bound: int = DEFAULT_BOUND) -> SuiteResult:
    """Involutivity, circles through the pole, and the two cross-ratio transfers.

    cases involutivity checks; 2*cases/5 of each of the other three.
    """
    res = SuiteResult("inversion", [f.name for f in fields], seed)
    share = max(1, 2 * cases // 5)
    for f in fields:
        bnd = bound if f.is_rational else f.p
        if not f.is_rational:
            raise ValueError("inversion is a Euclidean map; use the rational field")

        def draw_map(rng):
            return InversionMap(random_point(rng, f, bnd), _scalar(rng, f, bnd, nonzero=True))

        def make_point(rng):
            m = draw_map(rng)
            p = random_point(rng, f, bnd)
            if p == m.pole:
                raise Redraw("pole")
            return m, p

        def verify_point(inst):
            m, p = inst
            return [("inversion is involutive", invert(m, invert(m, p)) == p, _pt(p))]

        def make_circle(rng):
            m = draw_map(rng)
            p, q = random_point(rng, f, bnd), random_point(rng, f, bnd)
            c = circle_through_three(m.pole, p, q)
            par = parametrize(c, m.pole)
            samples = [par.point(t) for t in _params(rng, f, bnd, 5, exclude=(INF,))]
            return m, c, p, q, samples

        def verify_circle(inst):
            m, c, p, q, samples = inst
            l = invert_circle_through_pole(m, c)
            return [
                ("circle through pole maps into its image line", all(incident(invert(m, s), l) for s in samples),
                 repr(l)),
                ("image line joins the images of the defining points", join(invert(m, p), invert(m, q)) == l,
                 repr(l)),
            ]

        def make_collinear(rng):
            m = draw_map(rng)
            dx, dy = _scalar(rng, f, bnd), _scalar(rng, f, bnd)
            if not (dx or dy):
                raise Redraw("zero-direction")
            ts = _params(rng, f, bnd, 4, exclude=(INF, 0))
            x0, y0 = m.pole.affine()
            return m, [ProjPoint(x0 + t * dx, y0 + t * dy, 1) for t in ts]

        def verify_collinear(inst):
            m, pts = inst
            before = cross_ratio(*pts)
            after = cross_ratio(*(invert(m, p) for p in pts))
            return [("cross-ratio kept on lines through the pole", before == after, [str(before), str(after)])]

        def make_concyclic(rng):
            m = draw_map(rng)
            p, q = random_point(rng, f, bnd), random_point(rng, f, bnd)
            c = circle_through_three(m.pole, p, q)
            par = parametrize(c, m.pole)
            ts = _params(rng, f, bnd, 5, exclude=(INF,))
            pts = [par.point(t) for t in ts]
            # parametrize from a point other than the pole for an independent parameter
            return m, c, pts[:4], pts[4]

        def verify_concyclic(inst):
            m, c, pts, base = inst
            par = parametrize(c, base)
            on_conic = param_cross_ratio(*(par.param(p) for p in pts))
            on_line = cross_ratio(*(invert(m, p) for p in pts))
            return [("conic cross-ratio equals image-line cross-ratio", on_conic == on_line,
                     [str(on_conic), str(on_line)])]

        _run(res, "involutive", f, cases, make_point, verify_point)
        _run(res, "circle-image", f, share, make_circle, verify_circle)
        _run(res, "collinear-cr", f, share, make_collinear, verify_collinear)
        _run(res, "concyclic-cr", f, share, make_concyclic, verify_concyclic)
    return res


# ---------------------------------------------------------------- brute-force oracle over small fields


def _residues(p: ProjPoint):
    return tuple(c.v for c in p.coords)


def _brute_points(p: int):
    """All points of PG(2, p) as residue triples with first nonzero entry 1."""
    pts = [(1, y, z) for y in range(p) for z in range(p)]
    pts += [(0, 1, z) for z in range(p)]
    pts.append((0, 0, 1))
    return pts


def _form(c: Conic, p: int):
    m = [[x.v for x in row] for row in c.matrix]
    return lambda v: sum(m[i][j] * v[i] * v[j] for i in range(3) for j in range(3)) % p


def _on_line(l: ProjLine, p: int):
    a = [x.v for x in l.coords]
    return lambda v: (a[0] * v[0] + a[1] * v[1] + a[2] * v[2]) % p == 0


def oracle(cases: int, seed: int, fields=(FieldSpec.prime(11), FieldSpec.prime(13)), bound: int = 1000) -> SuiteResult:
    """Intersections and point counts against exhaustive scans of the finite plane."""
    res = SuiteResult("oracle", [f.name for f in fields], seed)
    for f in fields:
        if f.is_rational:
            raise ValueError("the exhaustive oracle needs a prime field")
        p = f.p
        plane = _brute_points(p)

        def make_second(rng, f=f):
            c, _ = _conic(rng, f, bound)
            q = _form(c, p)
            on_c = [v for v in plane if q(v) == 0]
            base = ProjPoint(tuple(f(x) for x in on_c[rng.randrange(len(on_c))]))
            other = random_point(rng, f, bound)
            if other == base:
                raise Redraw("same-point")
            return c, join(base, other), base, on_c

        def verify_second(inst):
            c, l, base, on_c = inst
            hit = second_intersection(c, l, base)
            inc = _on_line(l, p)
            rest = [v for v in on_c if inc(v) and v != _residues(base)]
            if not rest:
                ok = hit.tangent and hit.point == base
            else:
                ok = len(rest) == 1 and not hit.tangent and _residues(hit.point) == rest[0]
            return [("second_intersection matches the scan", ok, [_pt(hit.point), rest])]

        def make_fourth(rng, f=f):
            c1, _ = _conic(rng, f, bound)
            q1 = _form(c1, p)
            on_c1 = [v for v in plane if q1(v) == 0]
            picks = rng.sample(on_c1, 4)
            known = [ProjPoint(tuple(f(x) for x in v)) for v in picks[:3]]
            extra = [random_point(rng, f, bound)]
            # half the instances force a fourth common point, the rest leave it to chance
            extra.append(ProjPoint(tuple(f(x) for x in picks[3])) if rng.random() < 0.5 else random_point(rng, f, bound))
            c2 = conic_through_five(*known, *extra)
            if c2 == c1:
                raise Redraw("same-conic")
            return c1, c2, known, on_c1

        def verify_fourth(inst):
            c1, c2, known, on_c1 = inst
            q2 = _form(c2, p)
            common = [v for v in on_c1 if q2(v) == 0]
            rest = [v for v in common if v not in {_residues(k) for k in known}]
            try:
                got = fourth_intersection(c1, c2, *known)
            except TangentialContact:
                got = None
            except IdenticalConics:
                return [("fourth_intersection matches the scan", False, "identical conics reported")]
            if not rest:
                ok = got is None
            else:
                ok = len(rest) == 1 and got is not None and _residues(got) == rest[0]
            return [("fourth_intersection matches the scan", ok, [_pt(got), rest])]

        def make_count(rng, f=f):
            c, pts = _conic(rng, f, bound)
            return c, pts[0]

        def verify_count(inst):
            c, base = inst
            q = _form(c, p)
            scan = {v for v in plane if q(v) == 0}
            par = parametrize(c, base)
            walked = {_residues(par.point(t)) for t in list(f.elements()) + [INF]}
            return [
                ("conic has p + 1 points", len(scan) == p + 1, len(scan)),
                ("parametrization exhausts the conic", walked == scan, len(walked)),
            ]

        _run(res, "second", f, cases, make_second, verify_second)
        _run(res, "fourth", f, cases, make_fourth, verify_fourth)
        _run(res, "count", f, cases, make_count, verify_count)
    return res


SUITES = {
    "fact-a": fact_a,
    "fact-b": fact_b,
    "steiner": steiner,
    "inversion": inversion,
    "oracle": oracle,
}

DEFAULT_FIELDS = {
    "fact-a": ("rational", "prime:13", "prime:101"),
    "fact-b": ("rational", "prime:101"),
    "steiner": ("rational", "prime:101"),
    "inversion": ("rational",),
    "oracle": ("prime:11", "prime:13"),
}


def run_suite(name: str, cases: int, seed: int, fields=None) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    specs = [FieldSpec.parse(x) if isinstance(x, str) else x for x in (fields or DEFAULT_FIELDS[name])]
    return SUITES[name](cases, seed, specs)


__all__ = ["SUITES", "DEFAULT_FIELDS", "SuiteResult", "run_suite"]
