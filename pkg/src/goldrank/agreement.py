"""Agreement between two rankings, ranking shape statistics, Likert means."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from math import comb

from .pairwise import Relation, relation_in_ranking
from .ranking import Ranking, Universe, validate_against_universe

__all__ = [
    "CSV_HEADER",
    "AgreementReport",
    "LikertCounts",
    "RankingStats",
    "compare",
    "compare_gs",
    "format_likert",
    "likert_average",
    "percent",
    "ranking_stats",
]

CSV_HEADER = "agree,disagree,unspecified,pct_agree,pct_disagree,pct_unspecified"


def percent(count: int, total: int) -> int:
    """``100 * count / total`` rounded to the nearest integer, halves away from zero."""
    if total <= 0:
        raise ValueError("percentage of an empty total")
    if count < 0:
        return -percent(-count, total)
    return (200 * count + total) // (2 * total)


@dataclass(frozen=True)
class AgreementReport:
    agree: int
    disagree: int
    unspecified: int

    @property
    def total(self) -> int:
        return self.agree + self.disagree + self.unspecified

    @property
    def counts(self) -> tuple[int, int, int]:
        return self.agree, self.disagree, self.unspecified

    @property
    def percentages(self) -> tuple[int, int, int]:
        return tuple(percent(c, self.total) for c in self.counts)  # type: ignore[return-value]

    @property
    def pct_agree(self) -> int:
        return self.percentages[0]

    @property
    def pct_disagree(self) -> int:
        return self.percentages[1]

    @property
    def pct_unspecified(self) -> int:
        return self.percentages[2]

    def csv_row(self) -> str:
        return ",".join(str(v) for v in (*self.counts, *self.percentages))

    def text_table(self) -> str:
        cells = [f"{c} ({p}%)" for c, p in zip(self.counts, self.percentages)]
        headers = ["Agreement", "Disagreement", "Unspecified"]
        widths = [max(len(h), len(c)) for h, c in zip(headers, cells)]
        head = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
        row = "  ".join(c.ljust(w) for c, w in zip(cells, widths))
        return f"{head.rstrip()}\n{row.rstrip()}"


def compare(r1: Ranking, r2: Ranking, u: Universe) -> AgreementReport:
    """Classify every pair of ``u`` as agreed, disagreed, or unspecified.

    A pair is unspecified as soon as either ranking leaves it unordered,
    whether through a tie or a missing participant.
    """
    validate_against_universe(r1, u)
    validate_against_universe(r2, u)
    agree = disagree = 0
    for a, b in itertools.combinations(u.members, 2):
        x = relation_in_ranking(r1, a, b)
        y = relation_in_ranking(r2, a, b)
        if x is Relation.NO_ORDER or y is Relation.NO_ORDER:
            continue
        if x is y:
            agree += 1
        else:
            disagree += 1
    return AgreementReport(agree, disagree, comb(len(u), 2) - agree - disagree)


def compare_gs(gs1: Ranking, gs2: Ranking, u: Universe) -> AgreementReport:
    return compare(gs1, gs2, u)


@dataclass(frozen=True)
class RankingStats:
    participants_ranked: int
    ranks_used: int

    @property
    def ranks_pct(self) -> int:
        return percent(self.ranks_used, self.participants_ranked)

    def as_tuple(self) -> tuple[int, int, int]:
        return self.participants_ranked, self.ranks_used, self.ranks_pct


def ranking_stats(r: Ranking) -> RankingStats:
    return RankingStats(sum(len(rank) for rank in r.ranks), len(r.ranks))


@dataclass(frozen=True)
class LikertCounts:
    """Answer counts for the five points of a No..Yes scale."""

    counts: tuple[int, int, int, int, int]

    def __init__(self, *counts: int) -> None:
        if len(counts) == 1 and not isinstance(counts[0], int):
            counts = tuple(counts[0])
        if len(counts) != 5:
            raise ValueError(f"expected 5 Likert counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError(f"negative Likert count in {counts}")
        object.__setattr__(self, "counts", tuple(int(c) for c in counts))

    @property
    def respondents(self) -> int:
        return sum(self.counts)


def likert_average(c: LikertCounts) -> Fraction:
    if c.respondents == 0:
        raise ValueError("Likert average needs at least one respondent")
    return Fraction(sum(score * n for score, n in enumerate(c.counts, start=1)), c.respondents)


def format_likert(avg: Fraction) -> str:
    """One-decimal display, halves rounded up."""
    exact = Decimal(avg.numerator) / Decimal(avg.denominator)
    return str(exact.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))
