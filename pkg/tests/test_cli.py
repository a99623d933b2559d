from __future__ import annotations

import json

import pytest

from subspace_codec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_size(capsys):
    code, out, _ = run(capsys, "size", "--n", "7", "--k", "3", "--q", "2", "--dist", "4", "--method", "improved")
    assert code == 0 and out.strip() == "q^8+q^4+q^3+2q^2+q+1 = 291"
    code, out, _ = run(capsys, "size", "--n", "7", "--k", "3", "--q", "3", "--json")
    assert json.loads(out) == {"polynomial": "q^8+q^4+q^3+2q^2+q+1", "q": 3, "size": 6691}


def test_lexicode(capsys):
    code, out, _ = run(capsys, "lexicode", "--n", "6", "--k", "3", "--d", "4")
    assert code == 0 and out.split()[:3] == ["111000", "100110", "010101"]


def test_inspect(capsys):
    code, out, _ = run(capsys, "inspect", "--vector", "1001100", "--delta", "2", "--json")
    data = json.loads(out)
    assert data["row_lengths"] == [4, 2, 2] and data["bound_exponent"] == 4 and data["pending_count"] == 1
    code, out, _ = run(capsys, "inspect", "--vector", "1001100")
    assert "o * * *" in out


def test_construct_verify_round_trip(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run(capsys, "construct", "--n", "8", "--k", "3", "--q", "2", "--out", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    code, out, _ = run(capsys, "verify", "--in", str(a), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["n_codewords"] == 1179


def test_verify_materialized_and_tampered(tmp_path, capsys):
    path = tmp_path / "c.json"
    run(capsys, "construct", "--n", "6", "--k", "3", "--method", "classic", "--materialize", "--out", str(path))
    assert run(capsys, "verify", "--in", str(path), "--full-scan")[0] == 0
    data = json.loads(path.read_text())
    data["codewords"][1] = data["codewords"][0]
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--in", str(path))
    assert code == 1 and "FAIL" in out


def test_bad_file_reports_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 6, "k": 3, "q": 2, "min_distance": 4, "method": "classic",
                                "components": [{"identifying_vector": "1100", "dimension": 0, "pending": None}]}))
    code, _, err = run(capsys, "verify", "--in", str(path))
    assert code == 2 and "error" in err


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--q", "2", "--json")
    rows = json.loads(out)["rows"]
    improved = {r["n"]: r["size"] for r in rows if r["method"] == "improved"}
    assert code == 0 and improved == {7: 291, 8: 1179, 9: 4747}


def test_jobs_env_default(tmp_path, capsys, monkeypatch):
    path = tmp_path / "d.json"
    run(capsys, "construct", "--n", "7", "--k", "3", "--out", str(path))
    monkeypatch.setenv("SUBSPACE_CODEC_JOBS", "2")
    assert run(capsys, "verify", "--in", str(path))[0] == 0


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code != 0
    with pytest.raises(SystemExit):
        main(["size", "--n", "7"])
