"""Consensus ("gold standard") rankings from partial, tied expert rankings."""

from .aggregation import SupRelation, aggregate, layered_ranking, pairs_to_sup, remove_cycles, transitive_closure
from .agreement import (
    AgreementReport,
    LikertCounts,
    RankingStats,
    compare,
    compare_gs,
    likert_average,
    ranking_stats,
)
from .dataset import DataIntegrityError, load_dataset
from .pairwise import PairKey, PairTally, Relation, centroid_pairs, centroid_relation, relation_in_ranking, tally_pair
from .ranking import (
    ParseError,
    Ranking,
    Universe,
    ValidationError,
    format_ranking,
    parse_ranking,
    parse_universe,
    validate_against_universe,
)

__version__ = "0.1.0"

__all__ = [
    "AgreementReport",
    "DataIntegrityError",
    "LikertCounts",
    "PairKey",
    "PairTally",
    "ParseError",
    "Ranking",
    "RankingStats",
    "Relation",
    "SupRelation",
    "Universe",
    "ValidationError",
    "aggregate",
    "centroid_pairs",
    "centroid_relation",
    "compare",
    "compare_gs",
    "format_ranking",
    "layered_ranking",
    "likert_average",
    "load_dataset",
    "pairs_to_sup",
    "parse_ranking",
    "parse_universe",
    "ranking_stats",
    "relation_in_ranking",
    "remove_cycles",
    "tally_pair",
    "transitive_closure",
    "validate_against_universe",
]
