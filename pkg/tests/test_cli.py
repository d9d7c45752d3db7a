import csv
import io
import json

import pytest

from octograd import codecs
from octograd.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main, parse_l_element
from octograd.errors import PreconditionError
from octograd.twisted import EtaleCubic, TypeIIILabel, minimal_typeIII_instances


def run(*argv: str) -> int:
    return main(["--samples", "4", *argv])


@pytest.fixture(scope="module")
def twisted_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("dumps") / "tc-os.json"
    assert run("--out", str(path), "construct", "--twisted", "tc", "--cayley", "Os") == EXIT_PASS
    return path


@pytest.fixture(scope="module")
def fine_so_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("dumps") / "fine-so71.json"
    argv = ["--out", str(path), "construct", "--grading", "typeIII-so", "--cayley", "O", "--gammaC", "cd:Z2^3"]
    assert run(*argv, "--h-order", "3") == EXIT_PASS
    return path


def test_construct_algebra(tmp_path):
    path = tmp_path / "split.json"
    assert run("--out", str(path), "construct", "--algebra", "split-cayley") == EXIT_PASS
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["type"] == "algebra"
    assert data["dim"] == 8


def test_construct_writes_to_stdout(capsys):
    assert run("construct", "--grading", "cartan") == EXIT_PASS
    assert json.loads(capsys.readouterr().out)["type"] == "grading"


def test_repeated_runs_are_identical(capsys):
    outputs = []
    for _ in range(2):
        assert run("--seed", "3", "construct", "--grading", "typeIII", "--item", "4.c") == EXIT_PASS
        outputs.append(capsys.readouterr().out)

    assert outputs[0] == outputs[1]


def test_twisted_dump_is_24_dimensional(twisted_file):
    data = json.loads(twisted_file.read_text(encoding="utf-8"))
    assert data["type"] == "twisted"
    assert len(data["basis_names"]) == 24


def test_verify_constructed_grading(fine_so_file, capsys):
    assert run("verify", str(fine_so_file)) == EXIT_PASS
    report = json.loads(capsys.readouterr().out)
    assert report["status"] == "pass"


def test_census_of_fine_grading(fine_so_file, capsys):
    assert run("census", str(fine_so_file)) == EXIT_PASS
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert sorted(int(row["dim"]) for row in rows) == [1] * 14 + [2] * 7
    assert all(row["degree"].count(";") == 2 for row in rows)


def test_verify_twisted_with_adjoint_similitude(twisted_file):
    assert run("verify", str(twisted_file), "--lambda", "(2,1)") == EXIT_PASS


def test_verify_twisted_with_square_multiplier_fails(twisted_file, capsys):
    assert run("verify", str(twisted_file), "--lambda", "(2,1)", "--mu", "(4,1)") == EXIT_FAIL
    assert "FAIL" in capsys.readouterr().err


def test_verify_corrupted_dump_fails_with_witness(twisted_file, tmp_path, capsys):
    data = json.loads(twisted_file.read_text(encoding="utf-8"))
    data["beta"][0][0][0] = [5, 1]
    corrupted = tmp_path / "corrupted.json"
    corrupted.write_text(json.dumps(data), encoding="utf-8")
    assert run("verify", str(corrupted)) == EXIT_FAIL
    err = capsys.readouterr().err
    assert "FAIL stored tables" in err
    assert "('beta', 0, 0)" in err


def test_universal_group_of_cartan_grading(tmp_path, capsys):
    path = tmp_path / "cartan.json"
    assert run("--out", str(path), "construct", "--grading", "cartan") == EXIT_PASS
    assert run("universal", str(path)) == EXIT_PASS
    result = json.loads(capsys.readouterr().out)
    assert result["group"] == "Z^2"
    assert result["census"] == {"1": 6, "2": 1}


def test_iso_of_cartan_labels_shifted_by_h(tmp_path, capsys):
    label = minimal_typeIII_instances()["2.c"]
    shifted = TypeIIILabel(type(label.cayley)(tuple(g + label.h for g in label.cayley.gamma)), label.h)
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    first.write_text(codecs.dumps(label), encoding="utf-8")
    second.write_text(codecs.dumps(shifted), encoding="utf-8")
    assert run("iso", str(first), str(second)) == EXIT_PASS
    assert capsys.readouterr().out == "true\n"


def test_iso_of_different_items(tmp_path, capsys):
    instances = minimal_typeIII_instances()
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    first.write_text(codecs.dumps(instances["4.a"]), encoding="utf-8")
    second.write_text(codecs.dumps(instances["4.b"]), encoding="utf-8")
    assert run("iso", str(first), str(second)) == EXIT_PASS
    assert capsys.readouterr().out == "false\n"


def test_list_fine(capsys):
    assert run("list-fine", "--algebra", "G2-split") == EXIT_PASS
    result = json.loads(capsys.readouterr().out)
    assert [row["grading"] for row in result["fine_gradings"]] == ["Os-Z2^3", "Os-Z^2"]


@pytest.mark.parametrize(
    "argv",
    [
        ("construct",),
        ("construct", "--grading", "typeIII", "--cayley", "O", "--gammaC", "trivial", "--h-order", "2"),
        ("construct", "--grading", "typeIII", "--item", "3.a"),
        ("construct", "--twisted", "tc"),
        ("verify", "does-not-exist.json"),
        ("list-fine", "--algebra", "so62"),
    ],
    ids=["nothing", "h-order", "item", "no-cayley", "missing-file", "bad-algebra"],
)
def test_usage_errors(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert run(*argv) == EXIT_USAGE


def test_unparseable_dump_is_a_usage_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")
    assert run("verify", str(path)) == EXIT_USAGE


def test_parse_l_element():
    L = EtaleCubic.twisted()
    assert parse_l_element("(2,1)") == L.from_pair(2, 1)
    assert parse_l_element("(0, 1, 0)") == L.xi()
    with pytest.raises(PreconditionError):
        parse_l_element("(1,2,3,4)")
