"""Scene documents: versioned JSON with every scalar carried as an exact string."""

from __future__ import annotations

import json
from dataclasses import dataclass

import jsonschema

from .conics import Conic, circle_through_three, conic_through_five
from .core import ProjPoint
from .errors import GeometryError, ScalarParseError
from .field import FieldSpec
from .harness import DEFAULT_SEEDS, SceneT1, SceneT2

SCHEMA_VERSION = "1.0"

_SCALAR = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_TRIPLE = {"type": "array", "items": _SCALAR, "minItems": 3, "maxItems": 3}

SCENE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "hagge scene document",
    "description": (
        "Scalars are strings: 'a' or 'a/b' (b > 0, lowest terms) over the rationals, "
        "least nonnegative residues over prime:P. Points are homogeneous triples. "
        "A conic is given by five points (three for a t1 circle) or by its symmetric matrix. "
        "Figures: 1000x1000 SVG canvas, conics sampled at 256 parameter values."
    ),
    "type": "object",
    "required": ["schema_version", "kind", "field", "points", "conics"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "kind": {"enum": ["t1", "t2"]},
        "field": {"type": "string", "pattern": r"^(rational|prime:\d+)$"},
        "points": {
            "type": "object",
            "additionalProperties": _TRIPLE,
        },
        "conics": {
            "type": "object",
            "required": ["sigma"],
            "additionalProperties": {
                "oneOf": [
                    {
                        "type": "object",
                        "required": ["points"],
                        "additionalProperties": False,
                        "properties": {
                            "points": {"type": "array", "items": _TRIPLE, "minItems": 3, "maxItems": 5}
                        },
                    },
                    {
                        "type": "object",
                        "required": ["matrix"],
                        "additionalProperties": False,
                        "properties": {
                            "matrix": {"type": "array", "items": _TRIPLE, "minItems": 3, "maxItems": 3}
                        },
                    },
                ]
            },
        },
        "steiner_seeds": {"type": "array", "items": _TRIPLE, "minItems": 2, "maxItems": 2},
    },
}


class SceneFormatError(ValueError):
    pass


@dataclass(frozen=True)
class SceneDocument:
    kind: str
    field: FieldSpec
    points: dict
    conics: dict
    steiner_seeds: tuple | None = None
    schema_version: str = SCHEMA_VERSION

    # -------------------------------------------------------- conversion

    @classmethod
    def from_scene(cls, scene) -> "SceneDocument":
        pts = {k: tuple(p.coords) for k, p in scene.points().items()}
        conics = {"sigma": ("matrix", scene.sigma.matrix)}
        seeds = None
        if scene.kind == "t2":
            seeds = tuple(tuple(scene.field(x) for x in s) for s in scene.steiner_seeds)
        return cls(scene.kind, scene.field, pts, conics, seeds)

    def _point(self, name: str) -> ProjPoint:
        try:
            return ProjPoint(self.points[name])
        except KeyError:
            raise SceneFormatError(f"point {name!r} missing") from None
        except ValueError as exc:
            raise SceneFormatError(f"point {name!r}: {exc}") from None

    def _conic(self, name: str) -> Conic:
        how, data = self.conics[name]
        if how == "matrix":
            return Conic(data)
        pts = [ProjPoint(t) for t in data]
        if len(pts) == 3 and self.kind == "t1":
            return circle_through_three(*pts)
        if len(pts) != 5:
            raise SceneFormatError(f"conic {name!r} needs five points")
        return conic_through_five(pts)

    def to_scene(self):
        try:
            sigma = self._conic("sigma")
            if self.kind == "t1":
                return SceneT1(*(self._point(k) for k in "ABCD"), sigma)
            seeds = self.steiner_seeds or DEFAULT_SEEDS
            return SceneT2(self.field, *(self._point(k) for k in "ABCDEF"), sigma, seeds)
        except (GeometryError, ValueError) as exc:
            if isinstance(exc, SceneFormatError):
                raise
            raise SceneFormatError(f"invalid scene: {exc}") from exc

    # -------------------------------------------------------- JSON

    def to_json_obj(self) -> dict:
        fmt = self.field.format
        obj = {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "field": self.field.name,
            "points": {k: [fmt(x) for x in v] for k, v in self.points.items()},
            "conics": {
                k: {how: [[fmt(x) for x in row] for row in data]} for k, (how, data) in self.conics.items()
            },
        }
        if self.steiner_seeds is not None:
            obj["steiner_seeds"] = [[fmt(x) for x in s] for s in self.steiner_seeds]
        return obj

    def render(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"


def parse_scene(text: str) -> SceneDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneFormatError(f"not JSON: {exc}") from exc
    return scene_from_obj(obj)


def scene_from_obj(obj) -> SceneDocument:
    try:
        jsonschema.validate(obj, SCENE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SceneFormatError(f"schema violation at {list(exc.absolute_path)}: {exc.message}") from exc
    try:
        f = FieldSpec.parse(obj["field"])
    except ValueError as exc:
        raise SceneFormatError(str(exc)) from exc
    try:
        points = {k: tuple(f.parse_scalar(x) for x in v) for k, v in obj["points"].items()}
        conics = {}
        for name, spec in obj["conics"].items():
            (how, data), = spec.items()
            conics[name] = (how, tuple(tuple(f.parse_scalar(x) for x in row) for row in data))
        seeds = None
        if "steiner_seeds" in obj:
            seeds = tuple(tuple(f.parse_scalar(x) for x in s) for s in obj["steiner_seeds"])
    except ScalarParseError as exc:
        raise SceneFormatError(str(exc)) from exc
    required = "ABCD" if obj["kind"] == "t1" else "ABCDEF"
    missing = [k for k in required if k not in points]
    if missing:
        raise SceneFormatError(f"missing points {missing}")
    return SceneDocument(obj["kind"], f, points, conics, seeds, obj["schema_version"])


def load_scene(path) -> SceneDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_scene(fh.read())


def schema_text() -> str:
    return json.dumps(SCENE_SCHEMA, indent=2) + "\n"
