"""Command-line interface.

Subcommands:
  analyze   -- per-sentence and corpus-level indices for one corpus (JSON/CSV)
  stats     -- language distribution and index summary tables
  compare   -- per-index mean deltas and verdicts for two corpora
  plot      -- scatter of an index against sentence length (SVG or CSV)
  generate  -- deterministic synthetic corpus in COLUMN format

All output is UTF-8 and byte-stable for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .corpus_io import (
    CorpusFormat,
    ParseError,
    TagPolicy,
    UnknownTagAction,
    parse_column_format,
    parse_inline_format,
    write_corpus,
)
from .metrics import MetricConfig
from .model import Corpus
from .render import (
    render_comparison_csv,
    render_comparison_json,
    render_distribution_table,
    render_per_sentence_csv,
    render_report_json,
    render_scatter_csv,
    render_scatter_svg,
    render_summary_table,
)
from .stats import INDEX_NAMES, aggregate, compare, scatter_data
from .synth import Arrangement, GenSpec, generate


class CliError(Exception):
    """A diagnostic that should reach the user as `error: ...` with exit status 1."""


def _build_policy(args: argparse.Namespace) -> TagPolicy:
    kwargs: dict = {}
    if getattr(args, "language_codes", None):
        codes = [c.strip() for c in args.language_codes.split(",") if c.strip()]
        if not codes:
            raise CliError("--languages requires at least one code")
        kwargs["language_codes"] = frozenset(codes)
    if getattr(args, "unknown", None):
        kwargs["unknown_tag_action"] = UnknownTagAction(args.unknown)
    return TagPolicy(**kwargs)


def _parse_weights(raw: str) -> MetricConfig:
    parts = raw.split(",")
    if len(parts) != 2:
        raise CliError(f"--weights expects 'A,B', got {raw!r}")
    try:
        mix, switch = float(parts[0]), float(parts[1])
    except ValueError:
        raise CliError(f"--weights expects two numbers, got {raw!r}") from None
    try:
        return MetricConfig(mix_weight=mix, switch_weight=switch)
    except ValueError as exc:
        raise CliError(f"invalid weights {raw!r}: {exc}") from None


def _read_corpus(path: str, args: argparse.Namespace) -> Corpus:
    policy = _build_policy(args)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}") from exc
    parser = parse_inline_format if args.format == "inline" else parse_column_format
    try:
        return parser(text, policy, name=Path(path).stem)
    except ParseError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _cmd_analyze(args: argparse.Namespace) -> int:
    corpus = _read_corpus(args.file, args)
    config = _parse_weights(args.weights)
    try:
        report = aggregate(corpus, config)
    except ValueError as exc:
        raise CliError(f"{args.file}: {exc}") from exc
    if args.out == "csv":
        sys.stdout.write(render_per_sentence_csv(report))
    else:
        sys.stdout.write(render_report_json(report, config, per_sentence=args.per_sentence))
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    corpus = _read_corpus(args.file, args)
    try:
        report = aggregate(corpus)
    except ValueError as exc:
        raise CliError(f"{args.file}: {exc}") from exc
    sys.stdout.write(f"corpus: {report.corpus_name or args.file}\n")
    sys.stdout.write(f"sentences: {report.sentence_count}  tokens: {report.token_count}\n")
    sys.stdout.write(f"CMI all: {report.cmi_all:.2f}  CMI mixed: {report.cmi_mixed:.2f}\n\n")
    sys.stdout.write(render_distribution_table(report))
    sys.stdout.write("\n")
    sys.stdout.write(render_summary_table(report))
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    reports = []
    for path in (args.file_a, args.file_b):
        corpus = _read_corpus(path, args)
        try:
            reports.append(aggregate(corpus))
        except ValueError as exc:
            raise CliError(f"{path}: {exc}") from exc
    comparison = compare(reports[0], reports[1])
    if args.out == "csv":
        sys.stdout.write(render_comparison_csv(comparison))
    else:
        sys.stdout.write(render_comparison_json(comparison))
    return 0


def _cmd_plot(args: argparse.Namespace) -> int:
    corpus = _read_corpus(args.file, args)
    try:
        report = aggregate(corpus)
    except ValueError as exc:
        raise CliError(f"{args.file}: {exc}") from exc
    pairs = scatter_data(report, args.index)
    if args.svg:
        Path(args.svg).write_text(render_scatter_svg(pairs, args.index), encoding="utf-8")
    else:
        Path(args.csv).write_text(render_scatter_csv(pairs, args.index), encoding="utf-8")
    return 0


def _parse_words(raw: str) -> int | tuple[int, int]:
    try:
        if ":" in raw:
            lo, hi = raw.split(":", 1)
            return int(lo), int(hi)
        return int(raw)
    except ValueError:
        raise CliError(f"--words expects N or MIN:MAX, got {raw!r}") from None


def _cmd_generate(args: argparse.Namespace) -> int:
    try:
        spec = GenSpec(
            sentence_count=args.sentences,
            words=_parse_words(args.words),
            language_count=args.languages,
            arrangement=Arrangement(args.arrangement),
            undefined_ratio=args.undefined_ratio,
            seed=args.seed,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    sys.stdout.write(write_corpus(generate(spec), CorpusFormat.COLUMN))
    return 0


def _add_policy_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["column", "inline"], default="column", help="input format")
    parser.add_argument(
        "--languages",
        dest="language_codes",
        metavar="CODES",
        help="comma-separated language codes accepted as tags (default: the nine built-in codes)",
    )
    parser.add_argument(
        "--unknown",
        choices=["error", "undefined"],
        help="what to do with unrecognized tags (default: error)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="codemix", description="Code-mixing complexity metrics for tagged corpora.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one corpus")
    p.add_argument("file")
    _add_policy_flags(p)
    p.add_argument("--weights", default="50,50", metavar="A,B", help="mix,switch weights (default 50,50)")
    p.add_argument("--out", choices=["json", "csv"], default="json", help="output format")
    p.add_argument("--per-sentence", action="store_true", help="include per-sentence rows in JSON output")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("stats", help="distribution and summary tables for one corpus")
    p.add_argument("file")
    _add_policy_flags(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("compare", help="per-index deltas between two corpora")
    p.add_argument("file_a")
    p.add_argument("file_b")
    _add_policy_flags(p)
    p.add_argument("--out", choices=["json", "csv"], default="json", help="output format")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("plot", help="scatter of an index against sentence length")
    p.add_argument("file")
    _add_policy_flags(p)
    p.add_argument("--index", choices=list(INDEX_NAMES), required=True)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--svg", metavar="PATH", help="write an SVG scatter")
    target.add_argument("--csv", metavar="PATH", help="write a two-column CSV")
    p.set_defaults(func=_cmd_plot)

    p = sub.add_parser("generate", help="emit a deterministic synthetic corpus (COLUMN format)")
    p.add_argument("--sentences", type=int, required=True)
    p.add_argument("--words", required=True, metavar="N|MIN:MAX")
    p.add_argument("--languages", type=int, required=True)
    p.add_argument("--arrangement", choices=[a.value for a in Arrangement], default="alternating")
    p.add_argument("--undefined-ratio", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="warning: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
