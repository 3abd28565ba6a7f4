"""Command line: verify scenes, run property checks, render figures, print the schema.

Exit codes: 0 all checks passed, 1 a theorem or property failed (the
counterexample is printed as JSON on stdout), 2 bad input or usage.
Human-readable reports go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .campaign import WORKERS_ENV, run_campaign
from .errors import GeometryError, TheoremViolation
from .field import FieldSpec
from .harness import verify_theorem1, verify_theorem2
from .scene_io import SceneDocument, SceneFormatError, load_scene, schema_text
from .suites import DEFAULT_FIELDS, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

DEFAULT_BOUND = {"t1": 50, "t2": 30}


class InputError(Exception):
    pass


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hagge",
        description="Exact verification of two concurrency theorems for chords of a conic.",
        epilog=f"Campaigns use a process pool; set {WORKERS_ENV} to override the worker count.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify one scene file or a random campaign")
    v.add_argument("theorem", choices=["t1", "t2"])
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--scene", metavar="FILE", help="scene JSON document")
    src.add_argument("--random", metavar="N", type=_positive, help="number of random scenes to accept")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--bound", type=_positive, help="coordinate bound (default 50 for t1, 30 for t2)")
    v.add_argument("--field", type=_field, default=FieldSpec(), help="rational or prime:P (t2 only)")
    v.add_argument("--alt-seeds", type=int, default=0, metavar="K",
                   help="rerun the first K t2 cases with alternate Steiner seeds")
    v.add_argument("--json", metavar="PATH", help="write the machine-readable report")
    v.add_argument("--csv", metavar="PATH", help="write one row per case")
    v.add_argument("--plot", metavar="PATH", help="write a PNG summary of a campaign")

    c = sub.add_parser("check", help="run a randomized property suite")
    c.add_argument("suite", choices=sorted(SUITES))
    c.add_argument("--cases", type=_positive, default=100)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--field", type=_field, action="append",
                   help="backend, repeatable (defaults depend on the suite)")
    c.add_argument("--json", metavar="PATH")
    c.add_argument("--csv", metavar="PATH")
    c.add_argument("--plot", metavar="PATH")

    r = sub.add_parser("render", help="draw a scene as SVG")
    r.add_argument("--scene", metavar="FILE", required=True)
    r.add_argument("--certificate", action="store_true", help="verify first and draw chords and common point")
    r.add_argument("--out", metavar="FILE.svg", required=True)

    s = sub.add_parser("schema", help="scene JSON schema")
    s.add_argument("--print", action="store_true", dest="do_print", help="print the schema (default)")
    return p


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def _load(path) -> SceneDocument:
    try:
        return load_scene(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except SceneFormatError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _verify_doc(doc: SceneDocument):
    try:
        scene = doc.to_scene()
    except SceneFormatError as exc:
        raise InputError(str(exc)) from exc
    try:
        if doc.kind == "t1":
            return verify_theorem1(scene)
        return verify_theorem2(scene)
    except TheoremViolation:
        raise
    except GeometryError as exc:
        raise InputError(f"scene is not in general position: {exc}") from exc


def _cmd_verify(args, out, err) -> int:
    if args.scene:
        doc = _load(args.scene)
        if doc.kind != args.theorem:
            raise InputError(f"{args.scene} holds a {doc.kind} scene, not {args.theorem}")
        try:
            cert = _verify_doc(doc)
        except TheoremViolation as exc:
            print(json.dumps({"error": str(exc), "scene": doc.to_json_obj(),
                              "certificate": exc.certificate.to_dict()}, indent=2), file=out)
            print(f"VIOLATION: {exc}", file=err)
            return EXIT_FAIL
        cp = ":".join(doc.field.format(x) for x in cert.common_point.coords)
        print(f"verified {doc.kind} scene {args.scene} over {doc.field}", file=err)
        for name, holds in cert.proof_trace:
            print(f"  [{'ok' if holds else 'FAIL'}] {name}", file=err)
        print(f"  common point ({cp})", file=err)
        print(f"  certificate digest {cert.digest()}", file=err)
        if args.json:
            _write(args.json, json.dumps({"certificate": cert.to_dict(), "digest": cert.digest()}, indent=2) + "\n")
        return EXIT_OK

    if args.theorem == "t1" and not args.field.is_rational:
        raise InputError("t1 scenes are Euclidean; use --field rational")
    bound = args.bound or DEFAULT_BOUND[args.theorem]
    report = run_campaign(args.theorem, args.random, args.seed, bound, args.field, alt_seed_cases=args.alt_seeds)
    print(report.summary(), file=err)
    if args.json:
        _write(args.json, json.dumps({**report.to_dict(), "digest": report.digest()}, indent=2) + "\n")
    if args.csv:
        from .report import write_campaign_csv

        write_campaign_csv(report, args.csv)
    if args.plot:
        from .report import plot_campaign

        plot_campaign(report, args.plot)
    bad = [r.counterexample for r in report.results if r.counterexample]
    if bad:
        print(json.dumps(bad, indent=2), file=out)
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_check(args, out, err) -> int:
    fields = args.field or [FieldSpec.parse(x) for x in DEFAULT_FIELDS[args.suite]]
    try:
        result = run_suite(args.suite, args.cases, args.seed, fields)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(result.summary(), file=err)
    if args.json:
        _write(args.json, json.dumps(result.to_dict(), indent=2) + "\n")
    if args.csv:
        from .report import write_suite_csv

        write_suite_csv(result, args.csv)
    if args.plot:
        from .report import plot_suite

        plot_suite(result, args.plot)
    if result.failures:
        print(json.dumps(result.failures, indent=2, default=str), file=out)
        return EXIT_FAIL
    return EXIT_OK


def _cmd_render(args, out, err) -> int:
    from .svg import render_svg

    doc = _load(args.scene)
    cert = None
    if args.certificate:
        try:
            cert = _verify_doc(doc)
        except TheoremViolation as exc:
            print(json.dumps({"error": str(exc), "certificate": exc.certificate.to_dict()}, indent=2), file=out)
            return EXIT_FAIL
    try:
        text = render_svg(doc, cert)
    except SceneFormatError as exc:
        raise InputError(str(exc)) from exc
    except GeometryError as exc:
        raise InputError(f"cannot draw this scene: {exc}") from exc
    _write(args.out, text)
    print(f"wrote {args.out}", file=err)
    return EXIT_OK


def _cmd_schema(args, out, err) -> int:
    out.write(schema_text())
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    handler = {"verify": _cmd_verify, "check": _cmd_check, "render": _cmd_render, "schema": _cmd_schema}
    try:
        return handler[args.command](args, out, err)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
