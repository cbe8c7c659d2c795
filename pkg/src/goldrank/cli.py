"""Command-line entry point: ``goldrank <command> ...``.

Exit codes: 0 on success (or when every reproduced value matches), 1 when
``reproduce`` finds a mismatch, 2 on usage, parse, validation or data errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .aggregation import LAYERINGS, aggregate
from .agreement import CSV_HEADER, compare, ranking_stats
from .dataset import load_dataset
from .pairwise import centroid_relation, tally_pairs
from .ranking import ParseError, Ranking, Universe, ValidationError, format_ranking, parse_ranking, parse_universe
from .reproduce import reproduce

EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as err:
        raise UsageError(f"cannot read {source}: {err.strerror}") from err


def read_ranking_file(source: str) -> Ranking:
    """Read the single ranking line of a file, ignoring blank and ``#`` lines."""
    lines = [ln for ln in _read_text(source).splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 1:
        raise UsageError(f"{source}: expected exactly one ranking line, found {len(lines)}")
    try:
        return parse_ranking(lines[0])
    except (ParseError, ValidationError) as err:
        raise UsageError(f"{source}: {err}") from err


def _read_rankings(sources: list[str]) -> list[Ranking]:
    if sources.count("-") > 1:
        raise UsageError("stdin ('-') can be given only once")
    return [read_ranking_file(s) for s in sources]


def _universe(args: argparse.Namespace, rankings: list[Ranking]) -> Universe:
    if args.universe_from_rankings:
        return Universe.from_rankings(rankings)
    try:
        return parse_universe(_read_text(args.universe))
    except ParseError as err:
        raise UsageError(f"{args.universe}: {err}") from err


def _emit(args: argparse.Namespace, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_aggregate(args: argparse.Namespace) -> int:
    rankings = _read_rankings(args.rankings)
    gs = aggregate(rankings, _universe(args, rankings), layering=args.layering)
    _emit(args, format_ranking(gs))
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    rankings = _read_rankings([args.file_a, args.file_b])
    report = compare(*rankings, _universe(args, rankings))
    if args.format == "csv":
        _emit(args, f"{CSV_HEADER}\n{report.csv_row()}")
    else:
        _emit(args, report.text_table())
    return EXIT_OK


def cmd_pairs(args: argparse.Namespace) -> int:
    rankings = _read_rankings(args.rankings)
    lines = [
        f"{a} {b} {t.n_s} {t.n_i} {t.n_u} {centroid_relation(t).glyph}"
        for (a, b), t in tally_pairs(rankings, _universe(args, rankings)).items()
    ]
    _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    stats = ranking_stats(read_ranking_file(args.ranking))
    _emit(args, " ".join(str(v) for v in stats.as_tuple()))
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace) -> int:
    report = reproduce(load_dataset(args.data), args.topic)
    _emit(args, report.render())
    for failure in report.failures:
        print(f"mismatch: {failure.kind} {failure.key}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _add_universe(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--universe", metavar="FILE", help="participant universe, one token per line or comma separated")
    group.add_argument("--universe-from-rankings", action="store_true",
                       help="use the union of all ranked participants as the universe")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="goldrank", description="Consensus of partial expert rankings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("aggregate", help="build the consensus ranking of several rankings")
    p.add_argument("rankings", nargs="+", metavar="RANKING_FILE")
    _add_universe(p)
    p.add_argument("--layering", choices=LAYERINGS, default="in-degree")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("compare", help="count agreeing, disagreeing and unspecified pairs")
    p.add_argument("file_a")
    p.add_argument("file_b")
    _add_universe(p)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("pairs", help="print per-pair tallies and centroid relations")
    p.add_argument("rankings", nargs="+", metavar="RANKING_FILE")
    _add_universe(p)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("stats", help="participants ranked, ranks used, ranks percentage")
    p.add_argument("ranking", metavar="RANKING_FILE")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("reproduce", help="recompute the survey results and compare with the record")
    p.add_argument("--topic", type=str.lower, choices=("debian", "hibernate", "all"), default="all")
    p.add_argument("--data", metavar="DIR", help="read the survey TSV files from DIR")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, OSError) as err:
        print(f"goldrank: error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
