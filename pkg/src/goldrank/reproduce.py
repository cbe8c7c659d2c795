"""Recompute every transcribed survey result and diff it against the record."""

from __future__ import annotations

from dataclasses import dataclass

from .aggregation import aggregate
from .agreement import LikertCounts, compare, compare_gs, format_likert, likert_average, ranking_stats
from .dataset import KINDS, Dataset, ExpectedResult
from .ranking import Ranking, format_ranking, parse_ranking

__all__ = ["CheckResult", "ReproduceReport", "gold_standards", "reproduce"]

LABELS = {
    "gs": "GS",
    "agreement_row": "agreement",
    "gs_agreement_row": "GS-pair",
    "stats_row": "stats",
    "feedback_row": "feedback",
}


@dataclass(frozen=True)
class CheckResult:
    kind: str
    key: str
    computed: str
    expected: str

    @property
    def ok(self) -> bool:
        return self.computed == self.expected

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        if self.ok:
            return f"{status} {self.kind} {self.key}: {self.computed}"
        return f"{status} {self.kind} {self.key}: computed {self.computed}, expected {self.expected}"


@dataclass(frozen=True)
class ReproduceReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.ok]

    def tally(self) -> dict[str, tuple[int, int]]:
        """``kind -> (passed, total)`` for every kind that has at least one check."""
        out: dict[str, tuple[int, int]] = {}
        for kind in KINDS:
            of_kind = [c for c in self.checks if c.kind == kind]
            if of_kind:
                out[kind] = (sum(c.ok for c in of_kind), len(of_kind))
        return out

    def summary(self) -> str:
        return ", ".join(f"{p}/{n} {LABELS[k]}" for k, (p, n) in self.tally().items())

    def render(self) -> str:
        return "\n".join([*(c.line() for c in self.checks), self.summary()])


def gold_standards(ds: Dataset, topics: list[str] | None = None) -> dict[tuple[str, str], Ranking]:
    """Aggregate each (topic, scope) cell of the survey into its gold standard."""
    names = [ds.topic(t).name for t in topics] if topics else [t.name for t in ds.topics.values()]
    out = {}
    for name in names:
        universe = ds.universe(name)
        for scope in ("first", "second", "both"):
            rankings = [s.ranking for s in ds.subject_rankings(name, scope)]
            out[(name.lower(), scope)] = aggregate(rankings, universe)
    return out


def _fmt_counts(values) -> str:
    return " ".join(str(v) for v in values)


def _check(ds: Dataset, gs: dict[tuple[str, str], Ranking], exp: ExpectedResult) -> CheckResult:
    parts = exp.key.split("/")
    if exp.kind == "gs":
        topic, scope = parts
        expected = format_ranking(parse_ranking(str(exp.value)))
        return CheckResult(exp.kind, exp.key, format_ranking(gs[(topic, scope)]), expected)
    if exp.kind == "agreement_row":
        topic, scope, subject = parts
        r = ds.ranking_of(topic, int(subject)).ranking
        report = compare(r, gs[(topic, scope)], ds.universe(topic))
        return CheckResult(exp.kind, exp.key, _fmt_counts((*report.counts, *report.percentages)),
                           _fmt_counts(exp.value))
    if exp.kind == "gs_agreement_row":
        topic, pair = parts
        left, _, right = pair.partition("-vs-")
        report = compare_gs(gs[(topic, left)], gs[(topic, right)], ds.universe(topic))
        return CheckResult(exp.kind, exp.key, _fmt_counts((*report.counts, *report.percentages)),
                           _fmt_counts(exp.value))
    if exp.kind == "stats_row":
        topic, subject = parts
        stats = ranking_stats(ds.ranking_of(topic, int(subject)).ranking)
        return CheckResult(exp.kind, exp.key, _fmt_counts(stats.as_tuple()), _fmt_counts(exp.value))
    if exp.kind == "feedback_row":
        question = ds.feedback[int(exp.key) - 1]
        avg = format_likert(likert_average(LikertCounts(*question.counts)))
        return CheckResult(exp.kind, exp.key, avg, str(exp.value))
    raise ValueError(f"unknown expectation kind {exp.kind!r}")


def reproduce(ds: Dataset, topic: str | None = None) -> ReproduceReport:
    """Run every check, or only those of one topic (feedback is topic-independent and skipped then)."""
    wanted = None if topic in (None, "all") else ds.topic(topic).name.lower()
    gs = gold_standards(ds, [wanted] if wanted else None)
    checks = []
    for (kind, key), exp in ds.expectations.items():
        if wanted is not None and (kind == "feedback_row" or key.split("/")[0] != wanted):
            continue
        checks.append(_check(ds, gs, exp))
    return ReproduceReport(tuple(checks))
