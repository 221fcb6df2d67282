from __future__ import annotations

import json
from importlib import resources

import pytest

from lievanish import kostant
from lievanish.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_kostant_example(capsys):
    code, out, _ = _run(capsys, "kostant", "G", "2", "--nu", "2,2", "--parts", "2", "--json")
    assert code == 0 and json.loads(out)["value"] == 2


def test_kostant_exclusion_and_forcing(capsys):
    args = ["kostant", "B", "3", "--nu", "2,3,4", "--parts", "4", "--json"]
    total = json.loads(_run(capsys, *args)[1])["value"]
    without = json.loads(_run(capsys, *args, "--exclude", "0,0,1")[1])["value"]
    forced = json.loads(_run(capsys, *args, "--force", "0,0,1:1")[1])["value"]
    assert total == without + forced > 0


def test_vanish_e6(capsys):
    code, out, _ = _run(capsys, "vanish", "E6", "6", "--p", "13", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["D"] == 16
    first = doc["records"][0]
    assert (first["lambda"], first["dim"]) == ([1, 0, 0, 0, 0, 0], 1)


def test_vanish_adjoint_uses_root_lattice(capsys):
    code, out, _ = _run(capsys, "vanish", "D", "5", "--p", "11", "--adjoint", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["D"] == 19
    assert doc["records"][0]["lambda"] == [0, 4, 0, 0, 0]


def test_dim_and_certify(capsys):
    code, out, _ = _run(capsys, "dim", "D", "4", "--p", "7", "--lambda", "1,0,0,0", "--degree", "6",
                        "--json")
    assert code == 0 and json.loads(out)["dim"] == 1
    code, out, _ = _run(capsys, "certify", "G", "2", "--p", "7", "--degree", "6", "--lambda", "1,1",
                        "--json")
    assert code == 1 and json.loads(out)["status"] == "blocked"


def test_build_info_and_bounds(capsys):
    code, out, _ = _run(capsys, "build-info", "E", "7", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["coxeter_number"] == 18 and doc["num_positive_roots"] == 63
    code, out, _ = _run(capsys, "bounds", "E6", "6", "--p", "19", "--r", "2", "--json")
    doc = json.loads(out)
    assert (doc["D"], doc["sharp"], doc["first_nonzero"]) == (64, "unknown", 70)


def test_json_output_round_trips(capsys):
    for argv in (["table", "g2", "--json"], ["verify", "f4", "--m-max", "3", "--json"],
                 ["vanish", "B", "3", "--p", "7", "--json"]):
        code, out, _ = _run(capsys, *argv)
        assert code == 0
        assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out


def test_tsv_output(capsys):
    code, out, _ = _run(capsys, "table", "b3", "--tsv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].split("\t")[:4] == ["inputs", "expected", "computed", "match"]
    assert all(line.split("\t")[3] == "yes" for line in lines[1:])


def test_wrong_expectation_flips_exit_code(capsys, tmp_path):
    src = resources.files("lievanish").joinpath("data/b3.tsv").read_text()
    assert _run(capsys, "table", "b3")[0] == 0
    bad = tmp_path / "b3.tsv"
    bad.write_text(src.replace("row\t7\t0,0,1\t6\t0\t6", "row\t7\t0,0,1\t6\t1\t6"))
    code, out, _ = _run(capsys, "table", "b3", "--expected", str(bad))
    assert code == 1 and "MISMATCH" in out


@pytest.mark.parametrize(
    "argv,flag",
    [
        (["dim", "B", "5", "--p", "19", "--lambda", "0,0,9", "--degree", "35"], "--lambda"),
        (["kostant", "G", "2", "--nu", "1,x", "--parts", "1"], "--nu"),
        (["kostant", "G", "2", "--nu", "1,1", "--parts", "1", "--exclude", "1,2"], "--exclude"),
        (["kostant", "G", "2", "--nu", "1,1", "--parts", "1", "--force", "1,0"], "--force"),
        (["verify", "f4", "--m-max", "12"], "verify f4"),
        (["verify", "d", "--n-max", "9"], "verify d"),
        (["bounds", "G", "2", "--p", "5"], "--p"),
        (["dim", "E", "9", "--p", "31", "--lambda", "0", "--degree", "1"], "TYPE RANK"),
        (["vanish", "G", "2", "--p", "7", "--threads", "0"], "--threads"),
        (["dim", "G", "2", "--p", "seven", "--lambda", "1,0", "--degree", "1"], "--p"),
    ],
)
def test_usage_errors_name_the_flag(capsys, argv, flag):
    code, _, err = _run(capsys, *argv)
    assert code == 2
    assert flag in err


def test_memo_budget_flag(capsys, fresh_memos):
    saved = kostant.DEFAULT_MEMO_BUDGET
    try:
        code, _, err = _run(capsys, "--memo-budget", "3", "dim", "B", "4", "--p", "11", "--lambda",
                            "0,0,0,3", "--degree", "14")
    finally:
        kostant.set_memo_budget(saved)
    assert code == 2 and "--memo-budget" in err
