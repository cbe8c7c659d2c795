"""The XWiki expert-ranking survey, shipped as TSV files.

The files live in the package's ``data/`` directory. Passing another
directory to :func:`load_dataset` reads the same file names from there
instead, which is how perturbed copies are checked against the expected
results.
"""

from __future__ import annotations

import csv
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .ranking import ParseError, Ranking, Universe, ValidationError, parse_ranking

__all__ = [
    "KINDS",
    "SCOPES",
    "TASK_ORDERS",
    "DataIntegrityError",
    "Dataset",
    "ExpectedResult",
    "FeedbackQuestion",
    "PerceptionRecord",
    "SubjectRanking",
    "Topic",
    "load_dataset",
]

TASK_ORDERS = ("first", "second")
SCOPES = ("first", "second", "both")
GS_PAIRS = ("both-vs-first", "both-vs-second", "first-vs-second")
KINDS = ("gs", "agreement_row", "gs_agreement_row", "stats_row", "feedback_row")
RANKINGS_PER_CELL = 5


class DataIntegrityError(ValueError):
    """An embedded data file is malformed or violates a dataset invariant."""


@dataclass(frozen=True)
class Topic:
    name: str
    thread_ids: tuple[int, ...]
    email_count: int
    universe: Universe


@dataclass(frozen=True)
class SubjectRanking:
    subject_id: int
    topic: str
    task_order: str
    ranking: Ranking


@dataclass(frozen=True)
class PerceptionRecord:
    subject_id: int
    topic: str
    task_order: str
    expertise: int
    confidence: int
    difficulty: int


@dataclass(frozen=True)
class FeedbackQuestion:
    number: int
    question: str
    counts: tuple[int, int, int, int, int]


@dataclass(frozen=True)
class ExpectedResult:
    kind: str
    key: str
    value: str | tuple[int, ...]


_COLUMNS = {
    "participants.tsv": ("id", "name"),
    "topics.tsv": ("topic", "thread_ids", "emails", "participants"),
    "rankings.tsv": ("topic", "subject", "task_order", "ranking"),
    "perception.tsv": ("topic", "subject", "task_order", "expertise", "confidence", "difficulty"),
    "feedback.tsv": ("question", "c1", "c2", "c3", "c4", "c5"),
    "expected_gs.tsv": ("topic", "scope", "ranking"),
    "expected_agreement.tsv": ("topic", "scope", "row_key", "agree", "disagree", "unspecified",
                               "pct_agree", "pct_disagree", "pct_unspecified"),
    "expected_stats.tsv": ("topic", "subject", "task_order", "participants_ranked", "ranks_used", "ranks_pct"),
    "expected_feedback.tsv": ("question", "average"),
}


def _rows(directory, name: str) -> Iterator[tuple[str, dict[str, str]]]:
    """Yield ``(location, row)`` for each data row of a TSV file, skipping ``#`` comments."""
    path = directory / name
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as err:
        raise DataIntegrityError(f"missing data file {name}") from err
    numbered = [(i, line) for i, line in enumerate(text.splitlines(), start=1)
                if line.strip() and not line.lstrip().startswith("#")]
    if not numbered:
        raise DataIntegrityError(f"{name}: no header row")
    reader = csv.DictReader((line for _, line in numbered), delimiter="\t", quoting=csv.QUOTE_NONE)
    absent = [c for c in _COLUMNS[name] if c not in (reader.fieldnames or ())]
    if absent:
        raise DataIntegrityError(f"{name}:{numbered[0][0]}: header lacks columns {absent}")
    for (lineno, _), row in zip(numbered[1:], reader):
        where = f"{name}:{lineno}"
        if None in row or any(v is None for v in row.values()):
            raise DataIntegrityError(f"{where}: wrong number of columns")
        yield where, {k: v.strip() for k, v in row.items()}


def _int(where: str, row: dict[str, str], column: str) -> int:
    try:
        return int(row[column])
    except (KeyError, ValueError) as err:
        raise DataIntegrityError(f"{where}: column {column!r} must be an integer") from err


def _choice(where: str, value: str, allowed: tuple[str, ...], what: str) -> str:
    if value not in allowed:
        raise DataIntegrityError(f"{where}: unknown {what} {value!r}")
    return value


def _ranking(where: str, text: str) -> Ranking:
    try:
        return parse_ranking(text)
    except (ParseError, ValidationError) as err:
        raise DataIntegrityError(f"{where}: {err}") from err


def _topic_key(name: str) -> str:
    return name.strip().lower()


@dataclass(frozen=True)
class Dataset:
    participants: dict[int, str]
    topics: dict[str, Topic]
    rankings: tuple[SubjectRanking, ...]
    perception: tuple[PerceptionRecord, ...]
    feedback: tuple[FeedbackQuestion, ...]
    expectations: dict[tuple[str, str], ExpectedResult]

    def topic(self, name: str) -> Topic:
        try:
            return self.topics[_topic_key(name)]
        except KeyError:
            raise KeyError(f"unknown topic {name!r}") from None

    def universe(self, topic: str) -> Universe:
        return self.topic(topic).universe

    def subject_rankings(self, topic: str, scope: str = "both") -> list[SubjectRanking]:
        """Rankings of ``topic`` for one task order, or for both when ``scope == "both"``."""
        name = self.topic(topic).name
        if scope not in SCOPES:
            raise KeyError(f"unknown scope {scope!r}")
        return [s for s in self.rankings
                if s.topic == name and (scope == "both" or s.task_order == scope)]

    def ranking_of(self, topic: str, subject_id: int) -> SubjectRanking:
        for s in self.subject_rankings(topic):
            if s.subject_id == subject_id:
                return s
        raise KeyError(f"no ranking by subject {subject_id} for {topic}")

    def expected(self, kind: str, key: str) -> ExpectedResult:
        """Look up a transcribed result.

        Keys are ``/``-joined and case-insensitive on the topic:
        ``gs`` -> ``debian/both``; ``agreement_row`` -> ``hibernate/first/1``;
        ``gs_agreement_row`` -> ``debian/both-vs-first``; ``stats_row`` ->
        ``debian/4``; ``feedback_row`` -> the 1-based question number.
        """
        if kind not in KINDS:
            raise KeyError(f"unknown expectation kind {kind!r}")
        norm = "/".join(part.strip().lower().removeprefix("subject ").strip() for part in str(key).split("/"))
        try:
            return self.expectations[(kind, norm)]
        except KeyError:
            raise KeyError(f"no expected {kind} for key {key!r}") from None

    def expected_of_kind(self, kind: str) -> list[ExpectedResult]:
        return [e for (k, _), e in self.expectations.items() if k == kind]


def _load_participants(root) -> dict[int, str]:
    participants: dict[int, str] = {}
    for where, row in _rows(root, "participants.tsv"):
        pid = _int(where, row, "id")
        if pid in participants:
            raise DataIntegrityError(f"{where}: duplicate participant id {pid}")
        if not row["name"]:
            raise DataIntegrityError(f"{where}: participant {pid} has no name")
        participants[pid] = row["name"]
    return participants


def _load_topics(root, participants: dict[int, str]) -> dict[str, Topic]:
    topics: dict[str, Topic] = {}
    for where, row in _rows(root, "topics.tsv"):
        name = row["topic"]
        try:
            threads = tuple(int(t) for t in row["thread_ids"].split(","))
            members = [int(t) for t in row["participants"].split(",")]
            universe = Universe(str(m) for m in members)
        except (ValueError, ValidationError) as err:
            raise DataIntegrityError(f"{where}: {err}") from err
        unknown = [m for m in members if m not in participants]
        if unknown:
            raise DataIntegrityError(f"{where}: unknown participant ids {unknown}")
        if len(set(threads)) != len(threads):
            raise DataIntegrityError(f"{where}: duplicate thread id")
        if _topic_key(name) in topics:
            raise DataIntegrityError(f"{where}: duplicate topic {name}")
        topics[_topic_key(name)] = Topic(name, threads, _int(where, row, "emails"), universe)
    return topics


def _topic_name(where: str, topics: dict[str, Topic], name: str) -> str:
    if _topic_key(name) not in topics:
        raise DataIntegrityError(f"{where}: unknown topic {name!r}")
    return topics[_topic_key(name)].name


def _load_rankings(root, topics: dict[str, Topic]) -> tuple[SubjectRanking, ...]:
    rankings: list[SubjectRanking] = []
    seen: set[tuple[str, int]] = set()
    for where, row in _rows(root, "rankings.tsv"):
        topic = _topic_name(where, topics, row["topic"])
        subject = _int(where, row, "subject")
        order = _choice(where, row["task_order"], TASK_ORDERS, "task order")
        ranking = _ranking(where, row["ranking"])
        outside = ranking.participants - set(topics[_topic_key(topic)].universe)
        if outside:
            raise DataIntegrityError(f"{where}: participants {sorted(outside)} are not in the {topic} universe")
        if (topic, subject) in seen:
            raise DataIntegrityError(f"{where}: subject {subject} ranks {topic} twice")
        seen.add((topic, subject))
        rankings.append(SubjectRanking(subject, topic, order, ranking))

    cells = Counter((s.topic, s.task_order) for s in rankings)
    for t in topics.values():
        for order in TASK_ORDERS:
            if cells[(t.name, order)] != RANKINGS_PER_CELL:
                raise DataIntegrityError(
                    f"rankings.tsv: {t.name}/{order} has {cells[(t.name, order)]} rankings, "
                    f"expected {RANKINGS_PER_CELL}")
        covered = set().union(*(s.ranking.participants for s in rankings if s.topic == t.name))
        if covered != set(t.universe):
            raise DataIntegrityError(f"rankings.tsv: {t.name} rankings do not cover its universe")
    return tuple(rankings)


def _load_perception(root, topics, rankings) -> tuple[PerceptionRecord, ...]:
    known = {(s.topic, s.subject_id): s.task_order for s in rankings}
    records = []
    for where, row in _rows(root, "perception.tsv"):
        topic = _topic_name(where, topics, row["topic"])
        subject = _int(where, row, "subject")
        order = _choice(where, row["task_order"], TASK_ORDERS, "task order")
        if known.get((topic, subject)) != order:
            raise DataIntegrityError(f"{where}: no {order}-task ranking by subject {subject} for {topic}")
        scores = [_int(where, row, c) for c in ("expertise", "confidence", "difficulty")]
        if not all(1 <= s <= 5 for s in scores):
            raise DataIntegrityError(f"{where}: perception scores must be within 1-5")
        records.append(PerceptionRecord(subject, topic, order, *scores))
    return tuple(records)


def _load_feedback(root) -> tuple[FeedbackQuestion, ...]:
    questions = []
    for number, (where, row) in enumerate(_rows(root, "feedback.tsv"), start=1):
        counts = tuple(_int(where, row, f"c{i}") for i in range(1, 6))
        if any(c < 0 for c in counts) or sum(counts) == 0:
            raise DataIntegrityError(f"{where}: feedback counts must be non-negative with at least one answer")
        questions.append(FeedbackQuestion(number, row["question"], counts))  # type: ignore[arg-type]
    return tuple(questions)


def _load_expectations(root, topics, rankings, feedback) -> dict[tuple[str, str], ExpectedResult]:
    out: dict[tuple[str, str], ExpectedResult] = {}

    def put(where: str, kind: str, key: str, value) -> None:
        if (kind, key) in out:
            raise DataIntegrityError(f"{where}: duplicate expectation {kind} {key}")
        out[(kind, key)] = ExpectedResult(kind, key, value)

    subjects = {(s.topic, s.subject_id): s.task_order for s in rankings}

    for where, row in _rows(root, "expected_gs.tsv"):
        topic = _topic_name(where, topics, row["topic"])
        scope = _choice(where, row["scope"], SCOPES, "scope")
        gs = _ranking(where, row["ranking"])
        put(where, "gs", f"{topic.lower()}/{scope}", row["ranking"])
        if gs.participants != set(topics[topic.lower()].universe):
            raise DataIntegrityError(f"{where}: gold standard does not rank the whole {topic} universe")

    columns = ("agree", "disagree", "unspecified", "pct_agree", "pct_disagree", "pct_unspecified")
    for where, row in _rows(root, "expected_agreement.tsv"):
        topic = _topic_name(where, topics, row["topic"])
        scope = _choice(where, row["scope"], (*SCOPES, "gs"), "scope")
        value = tuple(_int(where, row, c) for c in columns)
        if scope == "gs":
            pair = _choice(where, row["row_key"], GS_PAIRS, "GS pair")
            put(where, "gs_agreement_row", f"{topic.lower()}/{pair}", value)
            continue
        subject = _int(where, row, "row_key")
        order = subjects.get((topic, subject))
        if order is None or scope not in (order, "both"):
            raise DataIntegrityError(f"{where}: subject {subject} has no {scope} ranking for {topic}")
        put(where, "agreement_row", f"{topic.lower()}/{scope}/{subject}", value)

    for where, row in _rows(root, "expected_stats.tsv"):
        topic = _topic_name(where, topics, row["topic"])
        subject = _int(where, row, "subject")
        if subjects.get((topic, subject)) != row["task_order"]:
            raise DataIntegrityError(f"{where}: no {row['task_order']}-task ranking by subject {subject} for {topic}")
        value = tuple(_int(where, row, c) for c in ("participants_ranked", "ranks_used", "ranks_pct"))
        put(where, "stats_row", f"{topic.lower()}/{subject}", value)

    by_text = {q.question: q.number for q in feedback}
    for where, row in _rows(root, "expected_feedback.tsv"):
        number = by_text.get(row["question"])
        if number is None:
            raise DataIntegrityError(f"{where}: question not found in feedback.tsv")
        put(where, "feedback_row", str(number), row["average"])
    return out


def load_dataset(data_dir: str | Path | None = None) -> Dataset:
    """Load and validate the survey data, from ``data_dir`` or the packaged copy.

    Raises:
        DataIntegrityError: naming the file and line of the offending record.
    """
    root = Path(data_dir) if data_dir is not None else resources.files("goldrank") / "data"
    if data_dir is not None and not Path(data_dir).is_dir():
        raise DataIntegrityError(f"data directory {data_dir} does not exist")
    participants = _load_participants(root)
    topics = _load_topics(root, participants)
    rankings = _load_rankings(root, topics)
    perception = _load_perception(root, topics, rankings)
    feedback = _load_feedback(root)
    expectations = _load_expectations(root, topics, rankings, feedback)
    return Dataset(participants, topics, rankings, perception, feedback, expectations)
