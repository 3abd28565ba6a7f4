"""Delimited per-case output and matplotlib summary figures for campaigns and suites."""

from __future__ import annotations

import csv

CASE_COLUMNS = ["case", "status", "rejected_draws", "seconds", "digest", "common_point"]
CHECK_COLUMNS = ["check", "passed", "failed"]


def write_campaign_csv(report, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CASE_COLUMNS)
        for r in report.results:
            w.writerow([
                r.case,
                r.status,
                sum(r.rejections.values()),
                f"{r.seconds:.6f}",
                r.digest or "",
                ":".join(r.common_point) if r.common_point else "",
            ])


def write_suite_csv(result, path) -> None:
    failed = {}
    for f in result.failures:
        failed[f["check"]] = failed.get(f["check"], 0) + 1
    labels = sorted(set(result.passed) | set(failed))
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CHECK_COLUMNS)
        for label in labels:
            w.writerow([label, result.passed.get(label, 0), failed.get(label, 0)])


def plot_campaign(report, path) -> None:
    """Two panels: rejection reasons and per-case verification time."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (left, right) = plt.subplots(1, 2, figsize=(11, 4.5))
    reasons = sorted(report.rejection_reasons.items(), key=lambda kv: (-kv[1], kv[0]))
    if reasons:
        names, counts = zip(*reasons)
        left.barh(range(len(names)), counts, color="#1f5fbf")
        left.set_yticks(range(len(names)), names, fontsize=8)
        left.invert_yaxis()
    else:
        left.text(0.5, 0.5, "no rejected draws", ha="center", va="center", transform=left.transAxes)
    left.set_xlabel("rejected draws")
    left.set_title(f"{report.kind} over {report.field}: {report.accepted} accepted, {report.rejected} rejected")

    times = [r.seconds * 1000 for r in report.results if r.status == "accepted"]
    if times:
        right.hist(times, bins=min(40, max(5, len(times) // 10)), color="#c0392b")
    right.set_xlabel("generation + verification time per case (ms)")
    right.set_ylabel("cases")
    right.set_title(f"violations: {report.violations}")
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)


def plot_suite(result, path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = sorted(result.passed)
    fig, ax = plt.subplots(figsize=(9, 0.3 * len(labels) + 1.5))
    ax.barh(range(len(labels)), [result.passed[k] for k in labels], color="#1f5fbf")
    ax.set_yticks(range(len(labels)), labels, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("cases passed")
    ax.set_title(f"check {result.name}: {len(result.failures)} failures")
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
