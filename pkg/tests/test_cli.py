import json

import pytest

from buildings.cli import main


@pytest.fixture(scope="module")
def fano_path(tmp_path_factory):
    out = tmp_path_factory.mktemp("scenes") / "fano.json"
    assert main([
        "build", "--family", "sph-a2", "--p", "2", "--radius", "3",
        "--format", "json", "--out", str(out),
    ]) == 0
    return out


def test_build_writes_scene(fano_path):
    raw = json.loads(fano_path.read_bytes())
    assert raw["stats"]["chamber_count"] == 21


def test_build_obj(tmp_path):
    out = tmp_path / "ball.obj"
    assert main([
        "build", "--family", "aff-a1", "--p", "2", "--radius", "2",
        "--format", "obj", "--out", str(out),
    ]) == 0
    assert out.read_text().startswith("# building scene family=aff-a1")


def test_stats(fano_path, capsys):
    assert main(["stats", "--scene", str(fano_path)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {
        "chamber_count": 21,
        "vertex_count": 14,
        "edge_count": 42,
        "max_distance_from_base": 3,
    }


def test_path_self(fano_path, capsys):
    assert main(["path", "--scene", str(fano_path), "--from", "0", "--to", "0"]) == 0
    assert capsys.readouterr().out.strip() == "0, []"


def test_path_adjacent(fano_path, capsys):
    raw = json.loads(fano_path.read_bytes())
    edge = raw["edges"][0]
    assert main([
        "path", "--scene", str(fano_path),
        "--from", str(edge["a"]), "--to", str(edge["b"]),
    ]) == 0
    distance, word = capsys.readouterr().out.strip().split(", ", 1)
    assert distance == "1"
    assert json.loads(word) == [edge["type"]]


def test_path_out_of_range(fano_path, capsys):
    assert main(["path", "--scene", str(fano_path), "--from", "0", "--to", "99"]) == 1


def test_verify_exit_zero(tmp_path, capsys):
    report = tmp_path / "report.json"
    assert main(["verify", "--case", "3,2", "--json-out", str(report)]) == 0
    out = capsys.readouterr().out
    assert "[PASS]" in out and "[FAIL]" not in out
    payload = json.loads(report.read_text())
    assert payload["passed"] is True
    assert payload["cases"][0]["n"] == 3


def test_usage_errors(tmp_path):
    assert main(["build", "--family", "sph-a2", "--p", "4", "--radius", "1",
                 "--out", str(tmp_path / "x.json")]) == 1  # non-prime p
    assert main(["build", "--family", "bogus", "--p", "2", "--radius", "1",
                 "--out", str(tmp_path / "x.json")]) == 1
    assert main(["stats", "--scene", str(tmp_path / "missing.json")]) == 1
    assert main(["verify", "--case", "banana"]) == 1
    assert main(["build", "--family", "aff-a1", "--p", "2", "--radius", "1",
                 "--embed-center", "--out", str(tmp_path / "x.json")]) == 1


def test_malformed_scene(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert main(["stats", "--scene", str(bad)]) == 1


def test_resource_cap_exit():
    assert main(["verify", "--case", "4,2"]) == 3


def test_affine_radius_cap(tmp_path):
    assert main(["build", "--family", "aff-a2", "--p", "2", "--radius", "9",
                 "--out", str(tmp_path / "x.json")]) == 3
