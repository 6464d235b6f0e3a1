from __future__ import annotations

import json

import pytest

from cubic_e6 import cli
from cubic_e6.errors import InvariantViolation
from cubic_e6.exact import QPoly

V4 = ("x0", "x1", "x2", "x3")
x0, x1, x2, x3 = QPoly.gens(V4)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def three_a2(tmp_path):
    surface = tmp_path / "threeA2.json"
    surface.write_text(json.dumps((x0 * x1 * x2 - x3**3).to_json()))
    line = tmp_path / "l0.json"
    line.write_text(json.dumps({"points": [[1, 0, 0, 0], [0, 1, 0, 0]]}))
    return surface, line


def test_table1_json(capsys):
    data = run_json(capsys, "table1")
    assert len(data) == 21
    assert {"config", "type", "count"} == set(data[0])
    assert next(r for r in data if r["config"] == "3A2")["count"] == 5
    assert next(r for r in data if r["config"] == "∅")["count"] == 72


def test_table1_text_has_21_rows(capsys):
    code, out, _ = run_cli(capsys, "table1")
    assert code == 0
    assert len(out.strip().splitlines()) == 21


def test_six_ways(capsys):
    data = run_json(capsys, "six-ways", "--root", "2,-1,-1,-1,-1,-1,-1")
    assert data["count"] == 6 and len(data["pairs"]) == 6
    for a, b in data["pairs"]:
        assert [u - v for u, v in zip(a, b)] == [2, -1, -1, -1, -1, -1, -1]


def test_lattice_inventory_verbs(capsys):
    assert run_json(capsys, "roots")["count"] == 72
    assert run_json(capsys, "lines")["count"] == 27
    assert run_json(capsys, "double-sixes")["count"] == 36
    assert run_json(capsys, "tritangents")["count"] == 45
    w = run_json(capsys, "weyl-order")
    assert (w["order"], w["sextuple_stabilizer"]) == (51840, 720)


def test_orbits_and_line_orbits(capsys):
    data = run_json(capsys, "orbits", "--config", "A1")
    assert data["config"] == "A1" and data["embedding_classes"] == 1
    assert data["classes"][0]["orbit_count"] == 51
    lo = run_json(capsys, "line-orbits", "--config", "3A2")
    assert lo["count"] == 3
    assert all(o["multiplicity"] == 9 for o in lo["orbits"])


def test_skew_count_verb(capsys):
    data = run_json(capsys, "skew-count", "--config", "A1", "--line-types", "first:all")
    assert [data[k] for k in ("type_i", "type_ii", "type_iii", "type_iv", "total")] == [120, 6, 15, 0, 141]
    code, out, _ = run_cli(capsys, "skew-count", "--config", "3A2", "--line-types", "second:all")
    assert code == 0 and "III=3" in out and "IV=6" in out


def test_skew_count_for_elliptic_cone(capsys, tmp_path):
    path = tmp_path / "cone.json"
    path.write_text(json.dumps((x0**3 + x1**3 + x2**3).to_json()))
    assert run_json(capsys, "skew-count", "--surface", str(path))["total"] == "infinite_sym2E"


def test_classify_line_on_three_a2(capsys, three_a2):
    surface, line = three_a2
    code, out, _ = run_cli(capsys, "classify-line", "--surface", str(surface), "--line", str(line))
    assert (code, out.strip()) == (0, "second")
    data = run_json(capsys, "classify-line", "--surface", str(surface), "--line", str(line))
    assert data["type"] == "second" and len(data["singular_points"]) == 2


def test_symbolic_verbs(capsys, three_a2):
    surface, line = three_a2
    s = run_json(capsys, "singularity", "--surface", str(surface), "--point", "1,0,0,0")
    assert s["ade_label"] == "A2" and s["milnor_number"] == 2
    assert run_json(capsys, "cone", "--surface", str(surface), "--point", "1,0,0,0")["result"] == "not_cone"
    q = run_json(capsys, "quadric", "--a", "1", "--b", "1")
    assert q["tangent"] is True
    hp = run_json(capsys, "hilbert-poly")
    assert [e["type"] for e in hp] == ["I", "II", "III", "IV"]
    assert all(e["values"] == [4, 6, 8, 10, 12, 14] for e in hp)


def test_output_is_byte_identical_across_runs(capsys):
    for argv in (["table1", "--format", "json"], ["line-orbits", "--config", "A1"], ["double-sixes"]):
        first = run_cli(capsys, *argv)
        second = run_cli(capsys, *argv)
        assert first == second


@pytest.mark.parametrize("argv", [
    ["orbits", "--config", "B7"],
    ["table2"],
    ["six-ways", "--root", "1,0,0,0,0,0,0"],
    ["classify-line", "--surface", "/nonexistent/s.json", "--line", "/nonexistent/l.json"],
    ["skew-count", "--config", "A1"],
    ["quadric", "--a", "0", "--b", "0"],
    ["quadric", "--a", "half", "--b", "1"],
])
def test_input_errors_exit_2_with_one_line(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_invalid_polynomial_file_exits_2(capsys, tmp_path, three_a2):
    _, line = three_a2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, "classify-line", "--surface", str(bad), "--line", str(line))
    assert code == 2 and "invalid JSON" in err
    quad = tmp_path / "quad.json"
    quad.write_text(json.dumps((x0 * x1).to_json()))
    code, _, _ = run_cli(capsys, "classify-line", "--surface", str(quad), "--line", str(line))
    assert code == 2


def test_invariant_violation_exits_3(capsys, monkeypatch):
    def broken(args):
        raise InvariantViolation("orbit sizes do not sum to 72")

    monkeypatch.setitem(cli.HANDLERS, "roots", broken)
    code, _, err = run_cli(capsys, "roots")
    assert code == 3 and "orbit sizes" in err
