"""Scenes, the two concurrency pipelines, and their proof-trace certificates.

Theorem 1 (circles): the circle sigma through D meets the circles BCD, ACD,
ABD again at U, V, W and the lines AD, BD, CD again at X, Y, Z; the chords
UX, VY, WZ concur.  The trace replays the inversion argument with pole D.

Theorem 2 (conics): as above with the conics BCDEF, ACDEF, ABDEF and a conic
sigma through D, E, F.  The trace replays the argument with the Steiner
correspondence of two conics having DEF as common self-polar triangle.
"""

from __future__ import annotations

import hashlib
import json
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from fractions import Fraction

from .conics import (
    Conic,
    circle_through_three,
    conic_through_five,
    fourth_intersection,
    parametrize,
    second_intersection,
)
from .core import (
    ProjPoint,
    are_collinear,
    concurrency_determinant,
    cross_ratio,
    incident,
    join,
    meet,
    param_cross_ratio,
)
from .correspondences import (
    InversionMap,
    invert,
    invert_circle_through_pole,
    steiner_apply,
    steiner_for_triangle,
)
from .errors import (
    DegenerateScene,
    ExhaustedAttempts,
    GeometryError,
    IdenticalConics,
    InvalidScene,
    TangentialContact,
    TheoremViolation,
)
from .field import RATIONALS, FieldSpec, field_of
from .involution import PointPair, in_involution, quadrangle_involution_pairs

DEFAULT_SEEDS = ((1, 1, 1), (1, 2, 3))
ALT_SEEDS = ((2, 3, 5), (1, 1, 2))
# redraw cap per case; a GF(11) scene needs about 500 draws on average
MAX_ATTEMPTS = 20000
SIX = ("U", "V", "W", "X", "Y", "Z")


def _points_field(points) -> FieldSpec:
    return field_of(*(c for p in points for c in p.coords))


def _check_triangle(a, b, c, extra):
    if len({a, b, c}) < 3 or are_collinear(a, b, c):
        raise InvalidScene("A, B, C are collinear", "collinear-ABC")
    sides = (join(a, b), join(b, c), join(c, a))
    for name, p in extra.items():
        if any(incident(p, s) for s in sides):
            raise InvalidScene(f"{name} lies on a side line of ABC", "point-on-ABC-side")


@dataclass(frozen=True)
class SceneT1:
    A: ProjPoint
    B: ProjPoint
    C: ProjPoint
    D: ProjPoint
    sigma: Conic

    def __post_init__(self):
        pts = (self.A, self.B, self.C, self.D)
        if not _points_field(pts).is_rational or not self.sigma.field.is_rational:
            raise InvalidScene("Theorem 1 scenes live in the rational Euclidean plane", "wrong-field")
        if not all(p.is_affine for p in pts):
            raise InvalidScene("scene points must be finite", "point-at-infinity")
        _check_triangle(self.A, self.B, self.C, {"D": self.D})
        if not self.sigma.is_circle:
            raise InvalidScene("sigma must be a circle", "sigma-not-circle")
        if self.sigma.is_degenerate:
            raise InvalidScene("sigma is degenerate", "sigma-degenerate")
        if not self.sigma.contains(self.D):
            raise InvalidScene("sigma does not pass through D", "sigma-misses-point")

    field = RATIONALS
    kind = "t1"

    def points(self) -> dict:
        return {"A": self.A, "B": self.B, "C": self.C, "D": self.D}


@dataclass(frozen=True)
class SceneT2:
    field: FieldSpec
    A: ProjPoint
    B: ProjPoint
    C: ProjPoint
    D: ProjPoint
    E: ProjPoint
    F: ProjPoint
    sigma: Conic
    steiner_seeds: tuple = DEFAULT_SEEDS

    kind = "t2"

    def __post_init__(self):
        pts = (self.A, self.B, self.C, self.D, self.E, self.F)
        if _points_field(pts) != self.field or self.sigma.field != self.field:
            raise InvalidScene(f"scene data is not over {self.field}", "wrong-field")
        if len({self.D, self.E, self.F}) < 3 or are_collinear(self.D, self.E, self.F):
            raise InvalidScene("D, E, F are collinear", "collinear-DEF")
        _check_triangle(self.A, self.B, self.C, {"D": self.D, "E": self.E, "F": self.F})
        if self.sigma.is_degenerate:
            raise InvalidScene("sigma is degenerate", "sigma-degenerate")
        for name in ("D", "E", "F"):
            if not self.sigma.contains(getattr(self, name)):
                raise InvalidScene(f"sigma does not pass through {name}", "sigma-misses-point")

    def points(self) -> dict:
        return {k: getattr(self, k) for k in "ABCDEF"}


@dataclass(frozen=True)
class DerivedSix:
    U: ProjPoint
    V: ProjPoint
    W: ProjPoint
    X: ProjPoint
    Y: ProjPoint
    Z: ProjPoint

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in SIX}

    def pairs(self) -> list[PointPair]:
        return [PointPair(self.U, self.X), PointPair(self.V, self.Y), PointPair(self.W, self.Z)]

    def swapped(self, a: str, b: str) -> "DerivedSix":
        d = self.as_dict()
        d[a], d[b] = d[b], d[a]
        return DerivedSix(**d)


def _check_six(six: DerivedSix, sigma: Conic, known=()) -> DerivedSix:
    pts = list(six.as_dict().values())
    if len(set(pts)) < 6:
        raise DegenerateScene("coincident-six", "U, V, W, X, Y, Z are not distinct")
    if set(pts) & set(known):
        raise DegenerateScene("coincident-six", "a derived point equals a given point")
    for p in pts:
        if not sigma.contains(p):
            raise AssertionError(f"derived point {p} is off sigma")
    return six


def _second(sigma, through, d):
    hit = second_intersection(sigma, join(through, d), d)
    if hit.tangent:
        raise DegenerateScene("tangency", f"line through {through} touches sigma at D")
    return hit.point


def _fourth(sigma, other, *known):
    try:
        return fourth_intersection(sigma, other, *known)
    except TangentialContact as exc:
        raise DegenerateScene("tangency", str(exc)) from exc
    except IdenticalConics as exc:
        raise DegenerateScene("identical-conics", str(exc)) from exc


def derive_six_t1(s: SceneT1) -> DerivedSix:
    a, b, c, d, sigma = s.A, s.B, s.C, s.D, s.sigma
    circles = (circle_through_three(b, c, d), circle_through_three(a, c, d), circle_through_three(a, b, d))
    u, v, w = (_fourth(sigma, k, d) for k in circles)
    x, y, z = (_second(sigma, p, d) for p in (a, b, c))
    return _check_six(DerivedSix(u, v, w, x, y, z), sigma, known=(d,))


def derive_six_t2(s: SceneT2) -> DerivedSix:
    a, b, c, d, e, f, sigma = s.A, s.B, s.C, s.D, s.E, s.F, s.sigma
    try:
        conics = (
            conic_through_five(b, c, d, e, f),
            conic_through_five(a, c, d, e, f),
            conic_through_five(a, b, d, e, f),
        )
    except GeometryError as exc:
        raise DegenerateScene("degenerate-auxiliary-conic", str(exc)) from exc
    u, v, w = (_fourth(sigma, k, d, e, f) for k in conics)
    x, y, z = (_second(sigma, p, d) for p in (a, b, c))
    return _check_six(DerivedSix(u, v, w, x, y, z), sigma, known=(d, e, f))


@dataclass
class ConcurrencyCertificate:
    kind: str
    field: FieldSpec
    six: DerivedSix
    chords: tuple = ()
    determinant: object = None
    common_point: ProjPoint | None = None
    involution_pairs_verdict: bool | None = None
    proof_trace: list = field(default_factory=list)

    def fact(self, name: str, holds: bool) -> bool:
        self.proof_trace.append((name, bool(holds)))
        return bool(holds)

    @property
    def ok(self) -> bool:
        return (
            self.determinant is not None
            and not self.determinant
            and self.involution_pairs_verdict is True
            and all(h for _, h in self.proof_trace)
        )

    def to_dict(self) -> dict:
        fmt = self.field.format

        def pt(p):
            return None if p is None else [fmt(c) for c in p.coords]

        return {
            "kind": self.kind,
            "field": self.field.name,
            "six": {k: pt(p) for k, p in self.six.as_dict().items()},
            "chords": [pt(l) for l in self.chords],
            "determinant": None if self.determinant is None else fmt(self.determinant),
            "common_point": pt(self.common_point),
            "involution_pairs_verdict": self.involution_pairs_verdict,
            "proof_trace": [[name, holds] for name, holds in self.proof_trace],
        }

    def digest(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def _guarded(cert, name, fn):
    try:
        return cert.fact(name, fn())
    except GeometryError as exc:
        cert.fact(f"{name} [{type(exc).__name__}]", False)
        return False


def _finish(cert: ConcurrencyCertificate, sigma: Conic) -> ConcurrencyCertificate:
    six = cert.six
    chords = tuple(join(p, q) for p, q in six.pairs())
    cert.chords = chords
    cert.determinant = concurrency_determinant(*chords)
    cert.involution_pairs_verdict = _guarded(
        cert, "(UX), (VY), (WZ) in involution on sigma", lambda: in_involution(sigma, six.pairs())
    )
    cert.common_point = meet(chords[0], chords[1])
    cert.fact("WZ passes through UX ^ VY", incident(cert.common_point, chords[2]))
    if not cert.ok:
        failed = [name for name, holds in cert.proof_trace if not holds]
        raise TheoremViolation(
            f"{cert.kind}: determinant {cert.determinant}, failed facts {failed}", cert
        )
    return cert


def verify_theorem1(s: SceneT1, six: DerivedSix | None = None, power=1) -> ConcurrencyCertificate:
    """Certificate that UX, VY, WZ concur, with the inversion trace (pole D)."""
    if six is None:
        six = derive_six_t1(s)
    cert = ConcurrencyCertificate("t1", RATIONALS, six)
    inv = InversionMap(s.D, Fraction(power))
    d = s.D
    pr = {k: invert(inv, p) for k, p in {**s.points(), **six.as_dict()}.items() if k != "D"}
    triples = (("D", "A", "X"), ("D", "B", "Y"), ("D", "C", "Z"), ("A", "B", "W"), ("A", "C", "V"), ("B", "C", "U"))
    for t in triples:
        pts = [d if k == "D" else pr[k] for k in t]
        label = ", ".join("D" if k == "D" else k + "'" for k in t)
        cert.fact(f"collinear {{{label}}}", are_collinear(*pts))
    image = invert_circle_through_pole(inv, s.sigma)
    cert.fact("U'..Z' lie on the image line of sigma", all(incident(pr[k], image) for k in SIX))
    primed = [PointPair(pr["U"], pr["X"]), PointPair(pr["V"], pr["Y"]), PointPair(pr["W"], pr["Z"])]
    _guarded(
        cert,
        "opposite sides of A'B'C'D meet sigma' in (U'X'), (V'Y'), (W'Z')",
        lambda: set(quadrangle_involution_pairs([pr["A"], pr["B"], pr["C"], d], image)) == set(primed),
    )
    _guarded(cert, "(U'X'), (V'Y'), (W'Z') in involution on sigma'", lambda: in_involution(image, primed))

    def transfer():
        par = parametrize(s.sigma, six.U)
        on_conic = [par.param(six.as_dict()[k]) for k in ("U", "V", "W", "X")]
        return param_cross_ratio(*on_conic) == cross_ratio(*(pr[k] for k in ("U", "V", "W", "X")))

    _guarded(cert, "inversion preserves cr(U, V; W, X)", transfer)
    return _finish(cert, s.sigma)


def _side_check(s: SceneT2):
    sides = (join(s.E, s.F), join(s.F, s.D), join(s.D, s.E))
    for name in "ABC":
        p = getattr(s, name)
        if any(incident(p, l) for l in sides):
            raise DegenerateScene("point-on-DEF-side", f"{name} lies on a side line of DEF")


def verify_theorem2(s: SceneT2, six: DerivedSix | None = None, seeds=None) -> ConcurrencyCertificate:
    """Certificate that UX, VY, WZ concur, with the Steiner-correspondence trace."""
    if six is None:
        six = derive_six_t2(s)
    _side_check(s)
    cert = ConcurrencyCertificate("t2", s.field, six)
    st = steiner_for_triangle(s.D, s.E, s.F, seeds or s.steiner_seeds)
    pr = {}
    for k, p in {**s.points(), **six.as_dict()}.items():
        if k in "DEF":
            continue
        try:
            pr[k] = steiner_apply(st, p)
        except GeometryError:
            cert.fact(f"{k} has a Steiner image", False)
            pr[k] = None
    if any(v is None for v in pr.values()):
        raise TheoremViolation("points outside the Steiner domain", cert)
    d = s.D
    for t in (("U", "V", "W"), ("U", "B", "C"), ("V", "A", "C"), ("W", "A", "B")):
        cert.fact(f"collinear {{{', '.join(k + chr(39) for k in t)}}}", are_collinear(*(pr[k] for k in t)))
    uv = None
    if pr["U"] != pr["V"]:
        uv = join(pr["U"], pr["V"])
    for x, a in (("X", "A"), ("Y", "B"), ("Z", "C")):
        _guarded(cert, f"{x}' = DA' ^ U'V'".replace("A", a),
                 lambda a=a, x=x: uv is not None and meet(join(d, pr[a]), uv) == pr[x])
    primed = [PointPair(pr["U"], pr["X"]), PointPair(pr["V"], pr["Y"]), PointPair(pr["W"], pr["Z"])]
    _guarded(
        cert,
        "opposite sides of A'B'C'D meet U'V' in (U'X'), (V'Y'), (W'Z')",
        lambda: set(quadrangle_involution_pairs([pr["A"], pr["B"], pr["C"], d], uv)) == set(primed),
    )
    _guarded(cert, "(U'X'), (V'Y'), (W'Z') in involution on U'V'", lambda: in_involution(uv, primed))
    cert.fact("S maps the primed pairs back onto sigma",
              all(steiner_apply(st, pr[k]) == six.as_dict()[k] for k in SIX))
    return _finish(cert, s.sigma)


# ---------------------------------------------------------------- generation


def stream(*key) -> random.Random:
    """Independent Mersenne Twister stream seeded by SHA-256 of the key path."""
    h = hashlib.sha256("/".join(map(str, key)).encode()).digest()
    return random.Random(int.from_bytes(h[:16], "big"))


def random_point(rng, f: FieldSpec, bound: int) -> ProjPoint:
    if f.is_rational:
        return ProjPoint(f.random(rng, bound), f.random(rng, bound), f.one)
    while True:
        v = (f.random(rng, bound), f.random(rng, bound), f.random(rng, bound))
        if any(v):
            return ProjPoint(v)


class Generated(NamedTuple):
    scene: object
    six: DerivedSix
    rejections: Counter


def _reason(exc: Exception) -> str:
    if isinstance(exc, (DegenerateScene, InvalidScene)):
        return exc.reason
    return "sigma:" + type(exc).__name__


def random_scene_t1(seed: int, bound: int, *, case: int = 0, max_attempts: int = MAX_ATTEMPTS) -> Generated:
    if bound < 1:
        raise ValueError("bound must be positive")
    rejections = Counter()
    for attempt in range(max_attempts):
        pts = {k: random_point(stream("t1", seed, case, attempt, k), RATIONALS, bound) for k in ("A", "B", "C", "D", "P", "Q")}
        try:
            sigma = circle_through_three(pts["D"], pts["P"], pts["Q"])
            scene = SceneT1(pts["A"], pts["B"], pts["C"], pts["D"], sigma)
            six = derive_six_t1(scene)
        except GeometryError as exc:
            rejections[_reason(exc)] += 1
            continue
        return Generated(scene, six, rejections)
    raise ExhaustedAttempts(f"no acceptable t1 scene in {max_attempts} attempts (seed {seed}, bound {bound})")


def random_scene_t2(seed: int, bound: int, f: FieldSpec = RATIONALS, *, case: int = 0,
                    max_attempts: int = MAX_ATTEMPTS, seeds=DEFAULT_SEEDS) -> Generated:
    if bound < 1:
        raise ValueError("bound must be positive")
    rejections = Counter()
    for attempt in range(max_attempts):
        pts = {k: random_point(stream("t2", f.name, seed, case, attempt, k), f, bound) for k in "ABCDEFPQ"}
        try:
            sigma = conic_through_five(pts["D"], pts["E"], pts["F"], pts["P"], pts["Q"])
            scene = SceneT2(f, *(pts[k] for k in "ABCDEF"), sigma, seeds)
            six = derive_six_t2(scene)
            _side_check(scene)
        except GeometryError as exc:
            rejections[_reason(exc)] += 1
            continue
        return Generated(scene, six, rejections)
    raise ExhaustedAttempts(f"no acceptable t2 scene over {f} in {max_attempts} attempts")
