import json

import pytest

from orthdet.cli import main
from orthdet.hecke import QIntProduct
from orthdet.squareclass import SquareClass


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_det_unipotent_json(capsys):
    code, out, _ = run(capsys, "det-unipotent", "--shape", "3,1,1", "--q", "3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["class"] == {"sign": 1, "squarefree": "1", "parity": "odd"}
    assert data["parity"] == "odd"
    assert data["degree"] == "3510"
    assert data["symbolic"] == [{"type": "q-int", "k": 5, "mult": 1}]


def test_det_unipotent_rejects_odd_degree(capsys):
    code, _, err = run(capsys, "det-unipotent", "--shape", "1,1", "--q", "3")
    assert code == 1
    assert "odd" in err


def test_det_unipotent_rejects_bad_shape_and_q(capsys):
    assert run(capsys, "det-unipotent", "--shape", "1,2", "--q", "3")[0] == 1
    assert run(capsys, "det-unipotent", "--shape", "2,2", "--q", "4")[0] == 1
    assert run(capsys, "det-unipotent", "--shape", "2,2", "--q", "15")[0] == 1


def test_det_hecke_and_symmetric(capsys):
    code, out, _ = run(capsys, "det-hecke", "--shape", "2,2", "--q", "5",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["class"]["squarefree"] == "155"

    code, out, _ = run(capsys, "det-symmetric", "--shape", "2,2", "--format", "json")
    assert code == 0
    assert json.loads(out)["class"]["squarefree"] == "3"


def test_det_hecke_round_trip_recomputes_class(capsys):
    _, out, _ = run(capsys, "det-hecke", "--shape", "3,1,1", "--q", "7",
                    "--format", "json")
    data = json.loads(out)
    rebuilt = QIntProduct.from_factors_json(data["factors"])
    cls = rebuilt.square_class(data["q"])
    assert cls == SquareClass(data["class"]["sign"], int(data["class"]["squarefree"]))


def test_det_sgnpair(capsys):
    code, out, _ = run(capsys, "det-sgnpair", "--lambda", "2", "--mu", "2,2",
                       "--q", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["class"]["squarefree"] == "39"

    code, out, _ = run(capsys, "det-sgnpair", "--mu", "3,1,1", "--q", "3",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["class"]["squarefree"] == "1"


def test_syt_reproduces_tableau_list(capsys):
    code, out, _ = run(capsys, "syt", "--shape", "3,1,1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 6
    assert [[1, 2, 4], [3], [5]] in data["tableaux"]
    assert "edges" not in data

    code, out, _ = run(capsys, "syt", "--shape", "3,1,1", "--graph", "--format", "json")
    data = json.loads(out)
    assert len(data["edges"]) == 6


def test_verify_parker_families(capsys):
    code, out, _ = run(capsys, "verify-parker", "--n-max", "5", "--q", "3",
                       "--jobs", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True and data["checked"] == 5

    code, out, _ = run(capsys, "verify-parker", "--n-max", "6", "--family", "symmetric",
                       "--jobs", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["ok"] is True

    code, out, _ = run(capsys, "verify-parker", "--n-max", "4", "--q", "3,5",
                       "--family", "sgnpair", "--jobs", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_oracle_check_gram_and_skew(capsys):
    code, out, _ = run(capsys, "oracle-check", "--n-max", "4", "--q", "1,3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["checked"] == 4  # shapes (2,1) and (2,2), two q values
    assert data["mismatches"] == []

    code, out, _ = run(capsys, "oracle-check", "--n-max", "4", "--q", "3",
                       "--method", "skew", "--seed", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["mismatches"] == []


def test_oracle_check_resource_guard(capsys, monkeypatch):
    monkeypatch.setenv("ORTHDET_ORACLE_DIM_LIMIT", "1")
    code, _, err = run(capsys, "oracle-check", "--n-max", "4", "--q", "3")
    assert code == 3
    assert "limit" in err


def test_selftest_small_scopes(capsys):
    code, out, _ = run(capsys, "selftest", "--cyclotomic-max", "30",
                       "--parity-max", "50", "--relations-max", "4",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert {c["name"] for c in data["checks"]} == {
        "cyclotomic", "parity-lemma", "relations", "trace-pairing"
    }


def test_identical_invocations_are_byte_identical(capsys):
    argv = ["det-unipotent", "--shape", "2,2", "--q", "9", "--format", "json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second

    argv = ["oracle-check", "--n-max", "4", "--q", "3", "--method", "skew",
            "--seed", "3", "--format", "json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_text_format_mentions_class(capsys):
    code, out, _ = run(capsys, "det-unipotent", "--shape", "2,2", "--q", "3")
    assert code == 0
    assert "39" in out and "odd" in out


def test_unknown_flag_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["det-unipotent", "--shape", "2,2", "--q", "3", "--bogus"])
    assert exc.value.code == 1


def test_missing_subcommand_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1
