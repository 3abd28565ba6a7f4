"""Verification campaigns over generated scenes.

Each case draws its scene from its own RNG stream, so cases can be verified in
any order or in worker processes and the merged report is still identical.
Set HAGGE_WORKERS to override the worker count (default: os.cpu_count()).
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import ExhaustedAttempts, TheoremViolation
from .field import RATIONALS, FieldSpec
from .harness import ALT_SEEDS, MAX_ATTEMPTS, random_scene_t1, random_scene_t2, verify_theorem1, verify_theorem2
from .scene_io import SceneDocument

WORKERS_ENV = "HAGGE_WORKERS"


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            n = int(raw)
        except ValueError:
            raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}") from None
        if n < 1:
            raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}")
        return n
    return os.cpu_count() or 1


@dataclass
class CaseResult:
    case: int
    status: str  # "accepted", "violation" or "exhausted"
    rejections: dict
    digest: str | None = None
    common_point: list | None = None
    seconds: float = 0.0
    counterexample: dict | None = None


@dataclass
class CampaignReport:
    kind: str
    field: str
    seed: int
    bound: int
    cases: int
    attempted: int = 0
    accepted: int = 0
    rejected: int = 0
    rejection_reasons: dict = field(default_factory=dict)
    violations: int = 0
    exhausted: int = 0
    alt_seed_checks: int = 0
    wall_time: float = 0.0
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violations == 0 and self.exhausted == 0 and self.accepted == self.cases

    def to_dict(self, with_time: bool = True) -> dict:
        d = {
            "kind": self.kind,
            "field": self.field,
            "seed": self.seed,
            "bound": self.bound,
            "cases": self.cases,
            "attempted": self.attempted,
            "accepted": self.accepted,
            "rejected": self.rejected,
            "rejection_reasons": dict(sorted(self.rejection_reasons.items())),
            "violations": self.violations,
            "exhausted": self.exhausted,
            "alt_seed_checks": self.alt_seed_checks,
            "digests": [r.digest for r in self.results],
        }
        if with_time:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def digest(self) -> str:
        """Hash of everything except timing."""
        blob = json.dumps(self.to_dict(with_time=False), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def summary(self) -> str:
        lines = [
            f"campaign {self.kind} over {self.field}: seed {self.seed}, bound {self.bound}, {self.cases} cases",
            f"  accepted {self.accepted}, rejected {self.rejected}, attempted {self.attempted}",
        ]
        for reason, n in sorted(self.rejection_reasons.items()):
            lines.append(f"    {reason}: {n}")
        if self.alt_seed_checks:
            lines.append(f"  alternate Steiner seeds re-checked on {self.alt_seed_checks} cases")
        lines.append(f"  violations {self.violations}, exhausted {self.exhausted}")
        lines.append(f"  wall time {self.wall_time:.2f} s")
        lines.append(f"  report digest {self.digest()}")
        return "\n".join(lines)


def run_case(kind: str, f: FieldSpec, seed: int, bound: int, case: int, alt_check: bool = False,
             max_attempts: int = MAX_ATTEMPTS) -> CaseResult:
    t0 = time.perf_counter()
    try:
        if kind == "t1":
            gen = random_scene_t1(seed, bound, case=case, max_attempts=max_attempts)
        else:
            gen = random_scene_t2(seed, bound, f, case=case, max_attempts=max_attempts)
    except ExhaustedAttempts:
        return CaseResult(case, "exhausted", {"exhausted": max_attempts}, seconds=time.perf_counter() - t0)
    rej = dict(gen.rejections)
    try:
        if kind == "t1":
            cert = verify_theorem1(gen.scene, gen.six)
        else:
            cert = verify_theorem2(gen.scene, gen.six)
            if alt_check:
                alt = verify_theorem2(gen.scene, gen.six, seeds=ALT_SEEDS)
                if alt.common_point != cert.common_point:
                    cert.fact("common point independent of Steiner seeds", False)
                    raise TheoremViolation("alternate Steiner seeds moved the common point", cert)
    except TheoremViolation as exc:
        counter = {
            "case": case,
            "error": str(exc),
            "scene": SceneDocument.from_scene(gen.scene).to_json_obj(),
            "certificate": exc.certificate.to_dict() if exc.certificate is not None else None,
        }
        return CaseResult(case, "violation", rej, seconds=time.perf_counter() - t0, counterexample=counter)
    cp = [f.format(c) for c in cert.common_point.coords]
    return CaseResult(case, "accepted", rej, cert.digest(), cp, time.perf_counter() - t0)


def _run_chunk(args):
    kind, fname, seed, bound, cases, alt_limit = args
    f = FieldSpec.parse(fname)
    return [run_case(kind, f, seed, bound, c, c < alt_limit) for c in cases]


def run_campaign(kind: str, n: int, seed: int, bound: int, f: FieldSpec = RATIONALS, *,
                 alt_seed_cases: int = 0, workers: int | None = None) -> CampaignReport:
    """Verify n generated scenes; the first alt_seed_cases t2 cases also rerun with other seeds."""
    if kind not in ("t1", "t2"):
        raise ValueError(f"unknown theorem {kind!r}")
    if kind == "t1" and not f.is_rational:
        raise ValueError("theorem 1 concerns circles and needs the rational field")
    if n < 0:
        raise ValueError("case count must be nonnegative")
    alt_limit = alt_seed_cases if kind == "t2" else 0
    workers = worker_count() if workers is None else workers
    t0 = time.perf_counter()
    if workers <= 1 or n < 2:
        results = _run_chunk((kind, f.name, seed, bound, range(n), alt_limit))
    else:
        chunks = [list(range(i, n, workers)) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_run_chunk, [(kind, f.name, seed, bound, c, alt_limit) for c in chunks if c])
            results = sorted((r for part in parts for r in part), key=lambda r: r.case)
    report = CampaignReport(kind, f.name, seed, bound, n, results=results)
    reasons = Counter()
    for r in results:
        reasons.update({k: v for k, v in r.rejections.items() if k != "exhausted"})
        # accepted = passed the generator; violations are a subset of those
        report.accepted += r.status in ("accepted", "violation")
        report.violations += r.status == "violation"
        report.exhausted += r.status == "exhausted"
        if r.status == "exhausted":
            reasons["exhausted-attempts"] += r.rejections["exhausted"]
    report.rejection_reasons = dict(reasons)
    report.rejected = sum(reasons.values())
    report.attempted = report.rejected + report.accepted
    report.alt_seed_checks = min(alt_limit, n)
    report.wall_time = time.perf_counter() - t0
    return report
