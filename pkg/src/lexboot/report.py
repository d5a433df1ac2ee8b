"""Rendering of pass reports and snapshot statistics.

Text output is for reading, TSV for machines, and the figure path draws
per-pass acquisition counts so a run can be eyeballed at a glance.
"""

from __future__ import annotations

from collections import Counter

from .bootstrap import RunResult
from .lkb import LkbSnapshot
from .patterns import LABELS


def _unresolved_key(u) -> tuple[str, str, str]:
    return (u.entry.headword, u.kind, u.detail)


def render_reports_text(result: RunResult) -> str:
    lines: list[str] = []
    for r in result.reports:
        lines.append(
            f"pass {r.pass_no}: {r.new_triples} new, {r.reattachments} reattached, "
            f"{len(r.unresolved)} unresolved, {len(r.fallback_entries)} fallback entries"
        )
        for u in sorted(r.unresolved, key=_unresolved_key):
            lines.append(
                f"  unresolved {u.kind} ({u.entry.headword}): {u.detail}  [{u.reason}]"
            )
    lines.append(f"status: {result.status} after {len(result.reports)} passes")
    return "\n".join(lines) + "\n"


def render_reports_tsv(result: RunResult) -> str:
    lines = ["pass\tnew\treattached\tunresolved\tfallbacks"]
    for r in result.reports:
        lines.append(
            f"{r.pass_no}\t{r.new_triples}\t{r.reattachments}"
            f"\t{len(r.unresolved)}\t{len(r.fallback_entries)}"
        )
    lines.append(f"# status: {result.status}")
    return "\n".join(lines) + "\n"


def label_counts(snapshot: LkbSnapshot) -> dict[tuple[int, str], int]:
    """Triple counts keyed by (pass acquired, relation label)."""
    counts: Counter[tuple[int, str]] = Counter()
    for t in snapshot.triples:
        counts[(t.pass_no, t.label)] += 1
    return dict(counts)


def _stats_rows(snapshot: LkbSnapshot) -> list[list[str]]:
    counts = label_counts(snapshot)
    passes = sorted({p for p, _ in counts})
    rows = [["pass", *LABELS, "total"]]
    for p in passes:
        row = [str(p)]
        total = 0
        for label in LABELS:
            n = counts.get((p, label), 0)
            row.append(str(n))
            total += n
        row.append(str(total))
        rows.append(row)
    footer = ["all"]
    grand = 0
    for label in LABELS:
        n = sum(counts.get((p, label), 0) for p in passes)
        footer.append(str(n))
        grand += n
    footer.append(str(grand))
    rows.append(footer)
    return rows


def render_stats_text(snapshot: LkbSnapshot) -> str:
    rows = _stats_rows(snapshot)
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    ]
    return "\n".join(lines) + "\n"


def render_stats_tsv(snapshot: LkbSnapshot) -> str:
    return "\n".join("\t".join(row) for row in _stats_rows(snapshot)) + "\n"


def save_figure(snapshot: LkbSnapshot, path: str) -> str:
    """Write a grouped bar chart of per-pass label counts to path."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    counts = label_counts(snapshot)
    passes = sorted({p for p, _ in counts}) or [1]
    width = 0.8 / len(LABELS)
    fig, ax = plt.subplots(figsize=(7, 4))
    for i, label in enumerate(LABELS):
        xs = [p + (i - (len(LABELS) - 1) / 2) * width for p in passes]
        ys = [counts.get((p, label), 0) for p in passes]
        ax.bar(xs, ys, width=width, label=label)
    ax.set_xticks(passes)
    ax.set_xlabel("pass")
    ax.set_ylabel("triples acquired")
    ax.set_title("relation acquisition by pass")
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
