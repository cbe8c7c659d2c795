"""Ordered-pair decomposition of rankings and the per-pair centroid.

Every ranking votes on each pair ``(a, b)`` with one of three unit vectors:
``(1, 0)`` when it puts ``a`` above ``b``, ``(0, 1)`` when it puts ``b``
above ``a``, and ``(0, 0)`` when it says nothing (tie, or a participant is
missing). The centroid of those votes is snapped to whichever of ``(1, 0)``
and ``(0, 1)`` is nearer; a centroid on the diagonal gives no order.
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .ranking import Ranking, Universe, validate_against_universe

__all__ = [
    "CentroidVector",
    "PairKey",
    "PairTally",
    "Relation",
    "centroid_pairs",
    "centroid_relation",
    "relation_in_ranking",
    "tally_pair",
    "tally_pairs",
]


class Relation(enum.Enum):
    SUPERIOR = ">"
    INFERIOR = "<"
    NO_ORDER = "="

    @property
    def glyph(self) -> str:
        return self.value

    def swapped(self) -> Relation:
        """The same relation read from the other participant's side."""
        if self is Relation.SUPERIOR:
            return Relation.INFERIOR
        if self is Relation.INFERIOR:
            return Relation.SUPERIOR
        return self


class PairKey(NamedTuple):
    """An unordered pair, stored with ``a`` first in the universe's canonical order."""

    a: str
    b: str


@dataclass(frozen=True)
class CentroidVector:
    x: Fraction
    y: Fraction

    def squared_distance(self, px: int, py: int) -> Fraction:
        return (self.x - px) ** 2 + (self.y - py) ** 2


@dataclass(frozen=True)
class PairTally:
    """How many rankings put ``a`` above ``b`` (n_s), below (n_i), or neither (n_u)."""

    n_s: int
    n_i: int
    n_u: int

    def __post_init__(self) -> None:
        if min(self.n_s, self.n_i, self.n_u) < 0:
            raise ValueError(f"negative count in {self}")

    @property
    def n(self) -> int:
        return self.n_s + self.n_i + self.n_u

    def swapped(self) -> PairTally:
        return PairTally(self.n_i, self.n_s, self.n_u)

    def centroid(self) -> CentroidVector:
        if self.n == 0:
            raise ValueError("centroid of an empty tally is undefined")
        return CentroidVector(Fraction(self.n_s, self.n), Fraction(self.n_i, self.n))


def relation_in_ranking(r: Ranking, a: str, b: str) -> Relation:
    if a == b:
        raise ValueError(f"a participant cannot be compared with itself ({a})")
    ra, rb = r.rank_of(a), r.rank_of(b)
    if ra is None or rb is None or ra == rb:
        return Relation.NO_ORDER
    return Relation.SUPERIOR if ra < rb else Relation.INFERIOR


def tally_pair(rankings: Sequence[Ranking], a: str, b: str) -> PairTally:
    """Count the three possible answers to "a versus b" over ``rankings``.

    ``rankings`` is a multiset: a ranking given twice votes twice.
    """
    if not rankings:
        raise ValueError("cannot tally a pair over zero rankings")
    counts = {rel: 0 for rel in Relation}
    for r in rankings:
        counts[relation_in_ranking(r, a, b)] += 1
    return PairTally(counts[Relation.SUPERIOR], counts[Relation.INFERIOR], counts[Relation.NO_ORDER])


def centroid_relation(t: PairTally) -> Relation:
    v = t.centroid()
    to_superior = v.squared_distance(1, 0)
    to_inferior = v.squared_distance(0, 1)
    if to_superior < to_inferior:
        return Relation.SUPERIOR
    if to_inferior < to_superior:
        return Relation.INFERIOR
    return Relation.NO_ORDER


def tally_pairs(rankings: Sequence[Ranking], u: Universe) -> dict[PairKey, PairTally]:
    """Tally every unordered pair of ``u``, keyed in canonical pair order."""
    if not rankings:
        raise ValueError("cannot tally pairs over zero rankings")
    for r in rankings:
        validate_against_universe(r, u)
    return {
        PairKey(a, b): tally_pair(rankings, a, b)
        for a, b in itertools.combinations(u.members, 2)
    }


def centroid_pairs(rankings: Sequence[Ranking], u: Universe) -> dict[PairKey, Relation]:
    return {key: centroid_relation(t) for key, t in tally_pairs(rankings, u).items()}
