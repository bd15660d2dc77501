import json

import pytest

from tracegor import cli
from tracegor.results import TheoremInstanceResult

P = {"dim": 2, "generators": [[1, 0], [1, 1], [2, 3], [3, 5]], "grading": [1, 0], "label": "P"}
N2 = {"dim": 2, "generators": [[1, 0], [0, 1]], "grading": [1, 1]}


@pytest.fixture
def write(tmp_path):
    def _w(obj, name="spec.json"):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)
    return _w


def test_classify_json(write, capsys):
    assert cli.main(["classify", write(P), "--json"]) == 0
    out = json.loads(capsys.readouterr().out)["classification"]
    assert out["nearly_gorenstein"] and out["pseudo_gorenstein"] and not out["level"] and out["cm_type"] == 2


def test_text_and_json_agree(write, capsys):
    path = write(P)
    cli.main(["classify", path])
    text = capsys.readouterr().out
    cli.main(["classify", path, "--json"])
    doc = json.loads(capsys.readouterr().out)
    for key, val in doc["classification"].items():
        assert f"{key}: {json.dumps(val)}" in text


def test_veronese_quasi_gorenstein_check(write, capsys):
    assert cli.main(["veronese", write(N2), "-k", "2", "--check-okokok", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["classification"]["quasi_gorenstein"] is True
    assert doc["veronese_check"]["status"] == "verified"


def test_exit_codes(write, capsys):
    assert cli.main(["classify", write({"dim": 2, "generators": []})]) == 2
    assert cli.main(["classify", write("{oops")]) == 2
    assert cli.main(["classify", "/nonexistent/ring.json"]) == 2
    assert cli.main(["classify", write(P), "--degree-cap", "3"]) == 3
    capsys.readouterr()


def test_harness_and_examples(capsys, tmp_path):
    out = tmp_path / "rep.json"
    assert cli.main(["harness", "--seed", "3", "--count", "20", "--json", "--output", str(out)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert json.loads(out.read_text()) == doc
    assert all(c["counterexamples"] == 0 for c in doc["counts"].values())
    assert cli.main(["harness", "--theorems", "", "--count", "5"]) == 0
    assert cli.main(["examples", "--run-all"]) == 0
    assert "examples reproduced" in capsys.readouterr().out


def test_check_round_trip(write, capsys, monkeypatch):
    inst = {"theorem": "T1", "ring": N2, "witnesses": {}}
    assert cli.main(["check", "--instance", write(inst), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "verified"

    # a forced failure is packaged as a counterexample and re-verified through the cli
    from tracegor import harness
    monkeypatch.setitem(harness._CHECKS, "T1",
                        lambda F, i: TheoremInstanceResult("T1", {"h": True}, False, {}))
    res = harness.check_theorem(harness.TheoremInstance.from_dict(inst))
    assert res.status == "counterexample" and res.counterexample == inst
    payload = write({"instance": res.counterexample}, "cex.json")
    assert cli.main(["check", "--instance", payload]) == 1
    capsys.readouterr()
