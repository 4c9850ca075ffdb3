import json

import pytest

from drumwidth.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_width_santos(capsys):
    code, js = call(capsys, "width", "--santos")
    assert code == 0 and js["width"] == 6


def test_certify(capsys, tmp_path):
    out = tmp_path / "cert.json"
    code, js = call(capsys, "certify", "--k", "1", "--out", str(out), "--dot", str(tmp_path))
    assert code == 0 and js["bound"] >= 6 and js["valid"]
    assert json.loads(out.read_text())["valid"]
    assert (tmp_path / "G_k1.dot").read_text().startswith("graph G")


def test_verify_phi(capsys):
    code, js = call(capsys, "verify", "--k", "3", "--stage", "phi")
    assert code == 0
    v = js["phi"]["values"]
    assert v["phi+(B)"] == "a1-" and v["phi-(B-)"] == "n"
    assert v["phi+(C2)"] == v["phi+(E3)"] == "n-" and v["phi-(C1-)"] == "a1"


def test_build_params_file(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"k": 1, "a": [["100", "0"], ["75", "75"]]}))
    code, js = call(capsys, "build", "--params", str(p))
    assert code == 0 and js["n_vertices"] == 40 and js["params_report"]["ok"]


def test_build_motif_and_fvmap(capsys, tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps([[0, 0, 3, 3, 1], [98, 0, 1, 0, 1], [100, 0, 0, 0, 1], [75, 75, 0, 0, 1]]))
    code, js = call(capsys, "fvmap", "--motif", str(m), "--side", "+", "--out", str(tmp_path / "phi.csv"))
    assert code == 0 and len(js["phi"]["+"]) == 64 and js["two_cycle"] is False


def test_export_graphs(capsys):
    for what in ("G", "Gminus", "frq"):
        code, js = call(capsys, "export", "--k", "1", "--what", what)
        assert code == 0 and js["content"].startswith("graph")


def test_search(capsys, tmp_path):
    out = tmp_path / "r.jsonl"
    code, js = call(capsys, "search", "--seed", "1", "--budget", "3", "--out", str(out))
    assert code == 0 and sum(js["outcomes"].values()) == 3
    assert len(out.read_text().splitlines()) == 3


def test_repeat_is_byte_identical(capsys):
    run(["verify", "--k", "1", "--stage", "graphs"])
    a = capsys.readouterr().out
    run(["verify", "--k", "1", "--stage", "graphs"])
    assert capsys.readouterr().out == a


@pytest.mark.parametrize("argv", [["bogus"], ["width"], ["width", "--k", "1", "--santos"], ["certify"], []])
def test_usage_errors(capsys, argv):
    assert run(argv) == 2


def test_invalid_params_exit_1(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"k": 1, "a": [["100", "0"], ["70", "75"]]}))
    assert run(["build", "--params", str(p)]) == 1
