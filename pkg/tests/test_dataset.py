import shutil
from pathlib import Path

import pytest

from goldrank import DataIntegrityError, format_ranking, load_dataset
from goldrank.dataset import KINDS


def test_topics(ds):
    debian, hibernate = ds.topic("Debian"), ds.topic("hibernate")
    assert debian.thread_ids == (71, 251, 546, 560, 562, 667) and debian.email_count == 34
    assert hibernate.thread_ids == (147, 153, 154, 172, 185, 444, 576, 687) and hibernate.email_count == 37
    assert debian.universe.members == tuple(str(i) for i in (1, 2, 4, 5, 6, 8, 9, 10, 12, 13, 14, 15, 16))
    assert hibernate.universe.members == tuple(str(i) for i in (2, 3, 5, 7, 11, 14, 15, 16, 17, 18))
    assert len(debian.universe) == 13


def test_participants(ds):
    assert len(ds.participants) == 18
    assert ds.participants[16] == "Thomas Mortagne"


def test_rankings(ds):
    assert len(ds.rankings) == 20
    s = ds.ranking_of("Hibernate", 9)
    assert s.task_order == "second"
    assert format_ranking(s.ranking) == "[16]>[15]>[14]>[11]>[18]>[17]>[2]>[3, 7]>[5]"
    assert all(2 not in {s.subject_id for s in ds.subject_rankings(t)} for t in ("Debian", "Hibernate"))
    for topic in ("Debian", "Hibernate"):
        assert {s.subject_id for s in ds.subject_rankings(topic)} == {1, 3, 4, 5, 6, 7, 8, 9, 10, 11}
        covered = set().union(*(s.ranking.participants for s in ds.subject_rankings(topic)))
        assert covered == set(ds.universe(topic))


def test_perception(ds):
    assert len(ds.perception) == 20
    rec = next(p for p in ds.perception if p.topic == "Debian" and p.subject_id == 6)
    assert (rec.expertise, rec.confidence, rec.difficulty) == (4, 5, 1)


def test_expected_lookup(ds):
    assert ds.expected("gs", "Debian/both").value == "[8]>[16]>[4]>[13]>[6]>[15]>[2]>[1]>[14]>[9]>[10]>[12]>[5]"
    assert ds.expected("agreement_row", "Hibernate/first/subject 1").value[:3] == (26, 8, 11)
    assert ds.expected("stats_row", "Debian/subject 4").value == (6, 5, 83)
    assert ds.expected("feedback_row", "2").value == "4.5"
    with pytest.raises(KeyError):
        ds.expected("gs", "Debian/third")
    with pytest.raises(KeyError):
        ds.expected("nonsense", "x")


def test_expected_coverage(ds):
    counts = {k: len(ds.expected_of_kind(k)) for k in KINDS}
    assert counts == {"gs": 6, "agreement_row": 40, "gs_agreement_row": 6, "stats_row": 20, "feedback_row": 8}


def test_loads_are_equal(ds):
    assert load_dataset() == ds


@pytest.fixture
def data_copy(tmp_path):
    src = Path(__file__).resolve().parents[1] / "src" / "goldrank" / "data"
    dst = tmp_path / "data"
    shutil.copytree(src, dst)
    return dst


def edit(path: Path, old: str, new: str) -> None:
    text = path.read_text(encoding="utf-8")
    assert old in text
    path.write_text(text.replace(old, new, 1), encoding="utf-8")


def test_override_dir_loads(data_copy, ds):
    assert load_dataset(data_copy) == ds


@pytest.mark.parametrize(
    "name, old, new, fragment",
    [
        ("rankings.tsv", "[8]>[6, 13]>[16]>[14]>[10]", "[8]>[6, 13]>[16]>[14]>[99]", "rankings.tsv:3: participants"),
        ("rankings.tsv", "[8]>[6, 13]>[16]>[14]>[10]", "[8]>[6, 8]", "duplicate participant"),
        ("rankings.tsv", "Debian\t4\tfirst", "Debian\t4\tsecond", "has 4 rankings"),
        ("perception.tsv", "Debian\t6\tsecond\t4\t5\t1", "Debian\t6\tsecond\t4\t9\t1", "perception.tsv:10"),
        ("topics.tsv", "2,3,5,7,11", "2,3,5,7,11,99", "unknown participant"),
        ("expected_gs.tsv", "Debian\tfirst", "Debian\tthird", "unknown scope"),
        ("participants.tsv", "id\tname", "ident\tname", "header lacks"),
    ],
)
def test_integrity_errors(data_copy, name, old, new, fragment):
    edit(data_copy / name, old, new)
    with pytest.raises(DataIntegrityError, match=fragment):
        load_dataset(data_copy)


def test_missing_file(data_copy):
    (data_copy / "feedback.tsv").unlink()
    with pytest.raises(DataIntegrityError, match="feedback.tsv"):
        load_dataset(data_copy)
