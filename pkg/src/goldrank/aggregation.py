"""Turning centroid pair relations back into a ranking.

The centroid pairs need not be transitive (three rankings rotating a, b, c
give a>b, b>c, c>a). The pipeline restores a proper ranking in four steps:

1. collect the directed "strictly above" pairs,
2. close them transitively (to a fixpoint),
3. drop every pair that is contradicted by its mirror image,
4. peel off layers of undominated participants.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .pairwise import PairKey, Relation, centroid_pairs
from .ranking import Ranking, Universe

__all__ = [
    "LAYERINGS",
    "SupRelation",
    "aggregate",
    "layered_ranking",
    "pairs_to_sup",
    "remove_cycles",
    "transitive_closure",
]

LAYERINGS = ("in-degree", "pseudocode")


@dataclass(frozen=True)
class SupRelation:
    """Directed pairs ``(a, b)`` meaning "a is strictly above b", over ``elements``."""

    pairs: frozenset[tuple[str, str]]
    elements: frozenset[str]

    def __init__(self, pairs: Iterable[tuple[str, str]], elements: Iterable[str]) -> None:
        pairs = frozenset((a, b) for a, b in pairs)
        elements = frozenset(elements)
        for a, b in pairs:
            if a == b:
                raise ValueError(f"reflexive pair ({a}, {a})")
            if a not in elements or b not in elements:
                raise ValueError(f"pair ({a}, {b}) leaves the element set")
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "elements", elements)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def is_transitive(self) -> bool:
        # reflexive consequences of mutual pairs are never stored
        succ = self._successors()
        return all((a, c) in self.pairs for a, b in self.pairs for c in succ[b] if c != a)

    def is_asymmetric(self) -> bool:
        return all((b, a) not in self.pairs for a, b in self.pairs)

    def _successors(self) -> dict[str, set[str]]:
        succ: dict[str, set[str]] = {e: set() for e in self.elements}
        for a, b in self.pairs:
            succ[a].add(b)
        return succ


def pairs_to_sup(centroid: Mapping[PairKey, Relation], u: Universe) -> SupRelation:
    sup = set()
    for (a, b), rel in centroid.items():
        if rel is Relation.SUPERIOR:
            sup.add((a, b))
        elif rel is Relation.INFERIOR:
            sup.add((b, a))
    return SupRelation(sup, u.members)


def transitive_closure(s: SupRelation) -> SupRelation:
    """Smallest transitive superset of ``s``, by Warshall's algorithm.

    Reflexive pairs that a cycle would generate are left out; the cycle
    already shows up as mutual pairs, which is all cycle removal needs.
    """
    reach = s._successors()
    nodes = sorted(s.elements)
    for k in nodes:
        into_k = [i for i in nodes if k in reach[i]]
        if not into_k:
            continue
        from_k = reach[k]
        for i in into_k:
            reach[i] |= from_k
    return SupRelation(
        ((a, b) for a, targets in reach.items() for b in targets if a != b),
        s.elements,
    )


def remove_cycles(s: SupRelation) -> SupRelation:
    """Drop both directions of every mutually contradicting pair."""
    return SupRelation(((a, b) for a, b in s.pairs if (b, a) not in s.pairs), s.elements)


def layered_ranking(s: SupRelation, layering: str = "in-degree") -> Ranking:
    """Build ranks by repeatedly taking every undominated, not yet ranked element.

    With ``layering="in-degree"`` an element is ranked as soon as no remaining
    pair points at it, so sinks and isolated elements are ranked too. The
    ``"pseudocode"`` variant additionally requires an outgoing pair, as in the
    literal algorithm listing; elements it never reaches are appended as one
    final rank.

    Raises:
        ValueError: ``s`` still contains a cycle, or ``layering`` is unknown.
    """
    if layering not in LAYERINGS:
        raise ValueError(f"unknown layering {layering!r}; expected one of {LAYERINGS}")
    if not s.elements:
        raise ValueError("cannot rank an empty element set")

    pairs = set(s.pairs)
    remaining = set(s.elements)
    ranks: list[set[str]] = []
    while remaining:
        dominated = {b for _, b in pairs}
        top = remaining - dominated
        if layering == "pseudocode":
            if not pairs:
                ranks.append(remaining)
                break
            top &= {a for a, _ in pairs}
        if not top:
            raise ValueError("relation contains a cycle; remove cycles before layering")
        ranks.append(top)
        remaining -= top
        pairs = {(a, b) for a, b in pairs if a not in top}
    return Ranking(ranks)


def aggregate(rankings: Sequence[Ranking], u: Universe, layering: str = "in-degree") -> Ranking:
    """Consensus ranking of ``rankings`` over the whole universe ``u``."""
    sup = pairs_to_sup(centroid_pairs(rankings, u), u)
    return layered_ranking(remove_cycles(transitive_closure(sup)), layering)

