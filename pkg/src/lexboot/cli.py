"""Command-line surface.

Subcommands: run (acquire over a dictionary), query (look up triples),
explain (per-sense derivation trace), dump (validate and reprint a
knowledge-base file), stats (per-pass label counts, optional figure).
Exit codes: 0 ok, 2 usage error, 1 data error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .bootstrap import RunConfig, run_passes, run_until_converged
from .corpus import load_corpus_path
from .errors import LexbootError
from .explain import explain
from .lkb import deserialize, format_triple, serialize
from .patterns import LABELS
from .report import (
    render_reports_text,
    render_reports_tsv,
    render_stats_text,
    render_stats_tsv,
    save_figure,
)

STATUS_OK = "ok"
STATUS_USAGE = "usage-error"
STATUS_DATA = "data-error"


@dataclass(frozen=True)
class CommandOutcome:
    status: str
    rendered: str
    diagnostics: str = ""


def _csv_lemmas(text: str) -> frozenset[str]:
    items = frozenset(part.strip().lower() for part in text.split(",") if part.strip())
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated lemma list")
    return items


def _weight_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two comma-separated integers")
    try:
        pair, textual = (int(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if pair < 0 or textual < 0:
        raise argparse.ArgumentTypeError("weights must be non-negative")
    return (pair, textual)


def _add_config_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--max-passes", type=int, default=None, metavar="N")
    sub.add_argument(
        "--transparent-heads", type=_csv_lemmas, default=None, metavar="LEMMAS"
    )
    sub.add_argument(
        "--portion-heads", type=_csv_lemmas, default=None, metavar="LEMMAS"
    )
    sub.add_argument("--substances", type=_csv_lemmas, default=None, metavar="LEMMAS")
    sub.add_argument(
        "--weights",
        type=_weight_pair,
        default=None,
        metavar="PAIR,TEXT",
        help="similarity weights: shared relation pairs, shared defining words",
    )
    sub.add_argument(
        "--no-unresolved",
        action="store_true",
        help="omit unresolved-site listings from reports",
    )


def _config_from(args: argparse.Namespace) -> RunConfig:
    kwargs = {}
    if getattr(args, "max_passes", None) is not None:
        if args.max_passes < 1:
            raise LexbootError("--max-passes must be at least 1")
        kwargs["max_passes"] = args.max_passes
    if getattr(args, "transparent_heads", None) is not None:
        kwargs["transparent_heads"] = args.transparent_heads
    if getattr(args, "portion_heads", None) is not None:
        kwargs["portion_heads"] = args.portion_heads
    if getattr(args, "substances", None) is not None:
        kwargs["substance_seeds"] = args.substances
    if getattr(args, "weights", None) is not None:
        kwargs["pair_weight"], kwargs["text_weight"] = args.weights
    if getattr(args, "no_unresolved", False):
        kwargs["emit_unresolved"] = False
    return RunConfig(**kwargs)


def cmd_run(args: argparse.Namespace) -> CommandOutcome:
    corpus = load_corpus_path(args.dict)
    config = _config_from(args)
    if args.passes is not None:
        if args.passes < 1:
            return CommandOutcome(STATUS_USAGE, "--passes must be at least 1")
        result = run_passes(corpus, args.passes, config)
    else:
        result = run_until_converged(corpus, config)
    render = render_reports_tsv if args.format == "tsv" else render_reports_text
    reports = render(result)
    dump = serialize(result.snapshot)
    if args.plot:
        save_figure(result.snapshot, args.plot)
    if args.out:
        Path(args.out).write_text(dump)
        return CommandOutcome(STATUS_OK, reports)
    return CommandOutcome(STATUS_OK, dump, diagnostics=reports)


def cmd_query(args: argparse.Namespace) -> CommandOutcome:
    if args.label is not None and args.label not in LABELS:
        return CommandOutcome(
            STATUS_USAGE,
            f"unknown label {args.label!r}; expected one of {', '.join(LABELS)}",
        )
    snapshot = deserialize(Path(args.lkb).read_text())
    lemma = args.lemma.lower()
    rows = [
        format_triple(t)
        for t in snapshot.triples
        if t.source.headword == lemma
        and (args.label is None or t.label == args.label)
    ]
    return CommandOutcome(STATUS_OK, "".join(row + "\n" for row in rows))


def cmd_explain(args: argparse.Namespace) -> CommandOutcome:
    corpus = load_corpus_path(args.dict)
    snapshot = deserialize(Path(args.lkb).read_text())
    passes = max(1, snapshot.pass_completed)
    return CommandOutcome(STATUS_OK, explain(corpus, passes, args.selector))


def cmd_dump(args: argparse.Namespace) -> CommandOutcome:
    snapshot = deserialize(Path(args.lkb).read_text())
    return CommandOutcome(STATUS_OK, serialize(snapshot))


def cmd_stats(args: argparse.Namespace) -> CommandOutcome:
    snapshot = deserialize(Path(args.lkb).read_text())
    render = render_stats_tsv if args.format == "tsv" else render_stats_text
    if args.plot:
        save_figure(snapshot, args.plot)
    return CommandOutcome(STATUS_OK, render(snapshot))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexboot",
        description="Bootstrap lexical relations from dictionary definitions.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    run = subs.add_parser("run", help="run acquisition passes over a dictionary")
    run.add_argument("dict", help="tab-separated dictionary file")
    run.add_argument("-o", "--out", default=None, metavar="LKB",
                     help="write the final dump here (default: stdout)")
    mode = run.add_mutually_exclusive_group()
    mode.add_argument("--passes", type=int, default=None, metavar="N",
                      help="run exactly N passes")
    mode.add_argument("--until-converged", action="store_true",
                      help="run until a pass changes nothing (default)")
    run.add_argument("--format", choices=("text", "tsv"), default="text",
                     help="pass-report format")
    run.add_argument("--plot", default=None, metavar="PNG",
                     help="also draw per-pass acquisition counts to this file")
    _add_config_flags(run)
    run.set_defaults(handler=cmd_run)

    query = subs.add_parser("query", help="print a lemma's triples from a dump")
    query.add_argument("lkb")
    query.add_argument("lemma")
    query.add_argument("--label", default=None, help="restrict to one relation label")
    query.set_defaults(handler=cmd_query)

    exp = subs.add_parser("explain", help="trace one sense's derivation")
    exp.add_argument("dict")
    exp.add_argument("lkb")
    exp.add_argument("selector", help="lemma[/pos[/sense]], e.g. plantain/n")
    exp.set_defaults(handler=cmd_explain)

    dump = subs.add_parser("dump", help="validate a dump and reprint it canonically")
    dump.add_argument("lkb")
    dump.set_defaults(handler=cmd_dump)

    stats = subs.add_parser("stats", help="triple counts per label per pass")
    stats.add_argument("lkb")
    stats.add_argument("--format", choices=("text", "tsv"), default="text")
    stats.add_argument("--plot", default=None, metavar="PNG",
                       help="also draw the counts to this file")
    stats.set_defaults(handler=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        outcome = args.handler(args)
    except LexbootError as exc:
        outcome = CommandOutcome(STATUS_DATA, f"error: {exc}")
    except OSError as exc:
        outcome = CommandOutcome(STATUS_DATA, f"error: {exc}")
    if outcome.status == STATUS_OK:
        if outcome.diagnostics:
            sys.stderr.write(outcome.diagnostics)
        sys.stdout.write(outcome.rendered)
        return 0
    sys.stderr.write(outcome.rendered.rstrip("\n") + "\n")
    return 2 if outcome.status == STATUS_USAGE else 1


if __name__ == "__main__":
    raise SystemExit(main())
