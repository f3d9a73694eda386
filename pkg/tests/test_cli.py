import json

import pytest

from pezzo import checks, cli


def _run(tmp_path, *argv):
    out = tmp_path / "out.json"
    code = cli.main([*argv, "--out", str(out)])
    return code, json.loads(out.read_text())


def test_fixtures_command(tmp_path):
    code, rep = _run(tmp_path, "fixtures")
    assert code == 0 and all(r["intact"] for r in rep)


def test_lattice_command(tmp_path):
    code, rep = _run(tmp_path, "lattice", "--n", "6")
    assert code == 0
    assert "27" in json.dumps(rep)


def test_hull_command(tmp_path):
    code, rep = _run(tmp_path, "hull")
    assert code == 0
    assert rep["f_vector"] == [15, 60, 90, 45]


def test_amplitude_list(tmp_path):
    code, _ = _run(tmp_path, "amplitude", "m05", "--list")
    assert code == 0


def test_verify_all_only(tmp_path):
    code, rep = _run(tmp_path, "verify-all", "--only", "lattice.weyl", "--quiet")
    assert code == 0
    assert rep["schema_version"] == 1 and rep["checks"]
    assert all(c["status"] == "pass" for c in rep["checks"])


def test_verify_all_reports_are_reproducible(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        cli.main(["verify-all", "--only", "subsystems", "--no-timing", "--quiet", "--out", str(path)])
    assert a.read_bytes() == b.read_bytes()


def test_verify_all_fails_on_failure(tmp_path, monkeypatch):
    def boom(seed):
        raise RuntimeError("broken")

    fake = [checks.Check("demo.ok", None, 1, lambda s: 1), checks.Check("demo.bad", None, 1, boom)]
    monkeypatch.setattr(checks, "CHECKS", fake)
    code, rep = _run(tmp_path, "verify-all", "--only", "demo", "--quiet")
    assert code == 1
    assert [c["status"] for c in rep["checks"]] == ["pass", "fail"]
    assert "RuntimeError" in str(rep["checks"][1])


def test_csv_export(tmp_path):
    path = tmp_path / "edges.csv"
    assert cli.main(["graph", "--n", "6", "--csv", str(path), "--out", str(tmp_path / "g.json")]) == 0
    assert len(path.read_text().strip().splitlines()) >= 60


def test_unknown_subcommand():
    with pytest.raises(SystemExit):
        cli.main(["nope"])
