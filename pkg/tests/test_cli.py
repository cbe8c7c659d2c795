import io
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from goldrank.cli import main

DATA = Path(__file__).resolve().parents[1] / "src" / "goldrank" / "data"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text + "\n", encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def survey_files(ds, write):
    def _files(topic, scope):
        files = [write(f"{topic}-{s.subject_id}.txt", f"# subject {s.subject_id}\n{s.ranking}")
                 for s in ds.subject_rankings(topic, scope)]
        universe = write(f"{topic}.universe", "\n".join(ds.universe(topic).members))
        return files, universe
    return _files


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_aggregate_debian_second(capsys, survey_files):
    files, universe = survey_files("Debian", "second")
    code, out, _ = run(capsys, "aggregate", *files, "--universe", universe)
    assert code == 0
    assert out == "[16]>[4, 13]>[8, 14]>[6]>[15]>[2]>[12]>[1]>[9]>[10]>[5]\n"


def test_aggregate_echoes_total_order(capsys, write):
    code, out, _ = run(capsys, "aggregate", write("r.txt", "c > b>a"), "--universe-from-rankings")
    assert (code, out) == (0, "[c]>[b]>[a]\n")


def test_aggregate_loop(capsys, write):
    files = [write(f"{i}.txt", t) for i, t in enumerate(("a>b>c", "c>a>b", "b>c>a"))]
    code, out, _ = run(capsys, "aggregate", *files, "--universe-from-rankings")
    assert out == "[a, b, c]\n"


def test_aggregate_out_file(capsys, write, tmp_path):
    target = tmp_path / "gs.txt"
    code, out, _ = run(capsys, "aggregate", write("r.txt", "a>b"), "--universe-from-rankings", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "[a]>[b]\n"


def test_compare_csv(capsys, ds, write, survey_files):
    _, universe = survey_files("Debian", "both")
    subject = write("s3.txt", str(ds.ranking_of("Debian", 3).ranking))
    gs = write("gs.txt", ds.expected("gs", "Debian/both").value)
    code, out, _ = run(capsys, "compare", subject, gs, "--universe", universe, "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["agree,disagree,unspecified,pct_agree,pct_disagree,pct_unspecified",
                                "36,25,17,46,32,22"]


def test_compare_text_and_identical(capsys, write):
    f = write("r.txt", "[a, b]>c")
    code, out, _ = run(capsys, "compare", f, f, "--universe-from-rankings")
    assert code == 0
    assert out.splitlines()[0].split() == ["Agreement", "Disagreement", "Unspecified"]
    assert out.splitlines()[1].split() == ["2", "(67%)", "0", "(0%)", "1", "(33%)"]


def test_compare_hibernate_gs(capsys, ds, write, survey_files):
    _, universe = survey_files("Hibernate", "both")
    a = write("first.txt", ds.expected("gs", "Hibernate/first").value)
    b = write("second.txt", ds.expected("gs", "Hibernate/second").value)
    _, out, _ = run(capsys, "compare", a, b, "--universe", universe, "--format", "csv")
    assert out.splitlines()[1].startswith("34,6,5,")


def test_pairs(capsys, write, survey_files):
    files = [write(f"{i}.txt", t) for i, t in enumerate(("a>b>c", "c>a>b", "b>c>a"))]
    _, out, _ = run(capsys, "pairs", *files, "--universe-from-rankings")
    assert out.splitlines() == ["a b 2 1 0 >", "a c 1 2 0 <", "b c 2 1 0 >"]
    _, out, _ = run(capsys, "pairs", write("tie.txt", "[a, b]"), "--universe-from-rankings")
    assert out == "a b 0 0 1 =\n"
    files, universe = survey_files("Debian", "first")
    _, out, _ = run(capsys, "pairs", *files, "--universe", universe)
    assert "8 16 4 0 1 >" in out.splitlines()
    assert len(out.splitlines()) == 78


def test_stats(capsys, ds, write):
    _, out, _ = run(capsys, "stats", write("h9.txt", str(ds.ranking_of("Hibernate", 9).ranking)))
    assert out == "10 9 90\n"
    _, out, _ = run(capsys, "stats", write("d11.txt", str(ds.ranking_of("Debian", 11).ranking)))
    assert out == "9 5 56\n"
    _, out, _ = run(capsys, "stats", write("one.txt", "x"))
    assert out == "1 1 100\n"


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("[a, b]>c\n"))
    assert run(capsys, "stats", "-")[1] == "3 2 67\n"


@pytest.mark.parametrize(
    "argv_tail, text",
    [
        (("--universe-from-rankings",), "[1]>[1, 2]"),
        (("--universe-from-rankings",), "# only a comment"),
        (("--universe-from-rankings",), "a>b\nb>a"),
    ],
)
def test_parse_errors_exit_2(capsys, write, argv_tail, text):
    code, out, err = run(capsys, "aggregate", write("bad.txt", text), *argv_tail)
    assert code == 2 and out == "" and "error" in err


def test_outside_universe_exit_2(capsys, write):
    code, _, err = run(capsys, "aggregate", write("r.txt", "a>z"), "--universe", write("u.txt", "a, b"))
    assert code == 2 and "z" in err


def test_missing_file_and_usage(capsys, tmp_path):
    assert run(capsys, "stats", str(tmp_path / "nope.txt"))[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["aggregate", "x.txt"])  # no universe option
    assert info.value.code == 2


def test_reproduce_all(capsys):
    code, out, _ = run(capsys, "reproduce")
    assert code == 0
    assert out.splitlines()[-1] == "6/6 GS, 40/40 agreement, 6/6 GS-pair, 20/20 stats, 8/8 feedback"


def test_reproduce_topic(capsys):
    code, out, _ = run(capsys, "reproduce", "--topic", "Hibernate")
    assert code == 0
    assert out.splitlines()[-1] == "3/3 GS, 20/20 agreement, 3/3 GS-pair, 10/10 stats"
    assert all("debian" not in line for line in out.splitlines())


def test_reproduce_is_deterministic(capsys):
    assert run(capsys, "reproduce")[1] == run(capsys, "reproduce")[1]


def test_reproduce_mismatch(capsys, tmp_path):
    data = tmp_path / "data"
    shutil.copytree(DATA, data)
    gs = data / "expected_gs.tsv"
    gs.write_text(gs.read_text().replace("[16]>[15]>[14]>[18]>[7, 11]", "[16]>[15]>[14]>[18]>[11]>[7]"))
    code, out, err = run(capsys, "reproduce", "--data", str(data))
    assert code == 1
    assert "FAIL gs hibernate/both" in out
    assert "mismatch: gs hibernate/both" in err


def test_reproduce_bad_data_exit_2(capsys, tmp_path):
    assert run(capsys, "reproduce", "--data", str(tmp_path / "absent"))[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "goldrank", "reproduce", "--topic", "debian"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "3/3 GS, 20/20 agreement, 3/3 GS-pair, 10/10 stats"
