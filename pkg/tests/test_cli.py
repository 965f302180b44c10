import csv
import io
import json

import pytest

from chromsym.cli import EXIT_CAP, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from chromsym.yamanouchi import load_fixture


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_claw(capsys):
    code, out, _ = run(capsys, "expand", "--graph", "claw")
    assert code == EXIT_OK
    assert out.strip() == "s_31 - s_22 + 5s_211 + 8s_1111"


def test_expand_path_shows_e1_split(capsys):
    code, out, _ = run(capsys, "expand", "--graph", "path:4", "--basis", "e")
    assert code == EXIT_OK
    assert out.strip().splitlines()[1] == "= e_1 (2e_3) + (4e_4 + 2e_22)"


def test_expand_methods_agree(capsys):
    _, a, _ = run(capsys, "expand", "--graph", "spider:2,1,1", "--basis", "m", "--json")
    _, b, _ = run(capsys, "expand", "--graph", "spider:2,1,1", "--basis", "m", "--method", "colorings", "--json")
    ja, jb = json.loads(a), json.loads(b)
    assert ja["records"] == jb["records"]


def test_json_is_canonical(capsys):
    code, out, _ = run(capsys, "expand", "--graph", "net", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["status"] == "pass"
    assert out == json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    assert "timing_ms" not in data
    _, again, _ = run(capsys, "expand", "--graph", "net", "--json")
    assert again == out


def test_timing_only_on_request(capsys):
    _, out, _ = run(capsys, "expand", "--graph", "claw", "--json", "--timing")
    assert "timing_ms" in json.loads(out)


def test_csv_output(capsys):
    code, out, _ = run(capsys, "classify", "--family", "a,2,1", "--range", "2:4", "--csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["class"] for r in rows] == ["schur-positive", "e-positive", "schur-positive"]


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "--family", "a,3,1", "--range", "3:5")
    assert code == EXIT_OK
    assert "S(4,3,1): e-positive" in out
    code, out, _ = run(capsys, "classify", "--graph", "claw")
    assert "not-schur-positive" in out and "s_22" in out


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "expand", "--graph", "path:25")[0] == EXIT_CAP
    assert run(capsys, "expand", "--graph", "path:12", "--max-edges", "5")[0] == EXIT_CAP
    assert run(capsys, "expand", "--graph", "cycle:4")[0] == EXIT_USAGE
    assert run(capsys, "expand", "--graph", "claw", "--basis", "q")[0] == EXIT_USAGE
    assert run(capsys, "bogus")[0] == EXIT_USAGE
    assert run(capsys, "classify", "--family", "a,2,1")[0] == EXIT_USAGE
    assert run(capsys, "verify", "lemma41", "--n", "8")[0] == EXIT_USAGE
    assert run(capsys, "analogs", "de", "--n", "5")[0] == EXIT_USAGE
    assert run(capsys, "expand", "--graph", f"file:{tmp_path / 'missing.txt'}")[0] == EXIT_USAGE


def test_failing_suite_exits_one(capsys, tmp_path):
    fixture = load_fixture()
    fixture["records"][0]["X_lt"] = "999"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(fixture))
    code, out, _ = run(capsys, "verify", "prop10", "--fixture", str(bad), "--json")
    assert code == EXIT_FAIL
    assert json.loads(out)["status"] == "fail"


def test_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_n": 5}))
    assert run(capsys, "expand", "--graph", "path:6", "--config", str(cfg))[0] == EXIT_CAP
    # flags override the file
    assert run(capsys, "expand", "--graph", "path:6", "--config", str(cfg), "--max-n", "6")[0] == EXIT_OK
    for body in ['{"colour": 3}', '{"max_n": 0}', "[1]", "not json"]:
        cfg.write_text(body)
        assert run(capsys, "expand", "--graph", "claw", "--config", str(cfg))[0] == EXIT_USAGE


@pytest.mark.parametrize("suite,extra", [
    ("cor36", ["--max-n", "8", "--k", "3"]),
    ("lemma33", ["--max-n", "12"]),
    ("thm31", ["--max-n", "6"]),
    ("lemma41", ["--n", "8", "--k", "3"]),
    ("lemma42", ["--n", "7"]),
    ("lemma45", ["--n", "8", "--z", "5"]),
    ("spider", ["--a", "4", "--b", "2"]),
    ("prop10", []),
])
def test_verify_suites_pass(capsys, suite, extra):
    code, out, _ = run(capsys, "verify", suite, *extra, "--json")
    assert code == EXIT_OK, out
    assert json.loads(out)["status"] == "pass"


def test_analogs(capsys):
    code, out, _ = run(capsys, "analogs", "path", "--n", "3", "--basis", "Lambda")
    assert code == EXIT_OK and "ρ =" in out
    code, out, _ = run(capsys, "analogs", "ab", "--n", "5")
    assert code == EXIT_OK and "B_5 = 5e_5 + 7e_32" in out
    code, out, _ = run(capsys, "analogs", "de", "--n", "7", "--k", "3", "--json")
    assert code == EXIT_OK and json.loads(out)["status"] == "pass"


def test_thread_count_does_not_change_json(capsys):
    _, one, _ = run(capsys, "verify", "lemma42", "--n", "8", "--json", "--threads", "1")
    _, two, _ = run(capsys, "verify", "lemma42", "--n", "8", "--json", "--threads", "2")
    assert one == two
