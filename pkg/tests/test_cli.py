import json

import pytest

from sl2cat.cli import run


def _run(args, tmp_path):
    out = tmp_path / "report.json"
    code = run([*args, "--output", str(out)])
    return code, json.loads(out.read_text()) if out.exists() else None


def test_groth_check_n2_contains_golden_identities(tmp_path):
    code, rep = _run(["groth-check", "--n", "2"], tmp_path)
    assert code == 0
    assert rep["schema"] == "1"
    assert rep["result"]["gl2: KL+_s = M_s + q M_e"]["pass"]
    assert rep["result"]["gl2: v_1 <> v_0 = v_1 (x) v_0 + q^-1 v_0 (x) v_1"]["pass"]
    assert rep["failures"] == []


def test_vn_check_trivial(tmp_path):
    code, rep = _run(["vn-check", "--n", "1"], tmp_path)
    assert code == 0 and rep["pass"]


def test_conjecture_n3_composition(tmp_path):
    code, rep = _run(["conjecture", "--n", "3", "--d", "1,2"], tmp_path)
    assert code == 0 and rep["pass"]
    assert [c["d"] for c in rep["result"]["compositions"]] == [[1, 2]]


def test_reports_are_deterministic(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for target, jobs in ((a, "1"), (b, "2")):
        assert run(["--seed", "7", "conjecture", "--n", "2", "--jobs", jobs, "--output", str(target)]) == 0
    ja, jb = json.loads(a.read_text()), json.loads(b.read_text())
    ja["config"].pop("jobs"), jb["config"].pop("jobs")
    assert ja == jb
    assert run(["--seed", "7", "conjecture", "--n", "2", "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("cmd", [
    ["kl", "--n", "3", "--i", "1", "--sign", "negative"],
    ["canonical-basis", "--n", "3", "--dual"],
    ["coinv-check", "--n", "3"],
    ["dump-dictionary", "--n", "2"],
])
def test_other_subcommands(cmd, tmp_path):
    code, rep = _run(cmd, tmp_path)
    assert code == 0
    assert rep["command"] == cmd[0]


def test_dump_dictionary_n1_is_identity(tmp_path):
    code, rep = _run(["dump-dictionary", "--n", "1"], tmp_path)
    for w in rep["result"]["weights"]:
        for m in w["matrices"].values():
            assert m["entries"] == [[{"0": 1}]]


def test_dump_dictionary_n2_rows(tmp_path):
    code, rep = _run(["dump-dictionary", "--n", "2"], tmp_path)
    w1 = rep["result"]["weights"][1]
    row = next(r for r in w1["correspondence"] if r["tilting"] == [1, 0])
    assert row["canonical"] == "(1)v_(1, 0) + (q^-1)v_(0, 1)"


@pytest.mark.parametrize("argv", [
    ["conjecture", "--n", "3", "--d", "1,1"],
    ["conjecture", "--n", "5"],
    ["kl", "--n", "0"],
    ["groth-check"],
    ["nonsense", "--n", "2"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == 2


def test_resource_error(tmp_path, capsys):
    assert run(["conjecture", "--n", "3", "--max-dim", "5", "--output", str(tmp_path / "x.json")]) == 3
    assert "resource error" in capsys.readouterr().err


@pytest.mark.slow
def test_conjecture_n4_reports_without_failing(tmp_path):
    code, rep = _run(["conjecture", "--n", "4", "--jobs", "2"], tmp_path)
    assert code == 0
    assert rep["assert"] is False
    assert rep["finding"] in ("all cases agree", "disagreements found")
    assert len(rep["result"]["compositions"]) == 8
