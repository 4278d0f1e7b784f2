"""Command line interface: output formats, determinism, exit codes."""

import json
import subprocess
import sys

import pytest

from blowcube.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# report commands
# ---------------------------------------------------------------------------

def test_classify_reports_the_table_row(capsys):
    code, out, err = run(capsys, "classify", "sigma")
    assert code == 0 and err == ""
    data = json.loads(out)
    assert data["map"] == "sigma"
    assert data["table_row"] == 1
    assert data["mu"] == 0
    assert data["degree_class"] == "bounded"


def test_classify_accepts_raw_map_specs(capsys):
    code, out, _err = run(capsys, "classify", "A2:(x*y, y)", "-n", "4")
    assert code == 0
    data = json.loads(out)
    assert data["table_row"] == 2
    assert data["N"] == 4


def test_classify_all_builtins(capsys):
    code, out, _err = run(capsys, "classify", "--all-builtins", "-n", "3")
    assert code == 0
    data = json.loads(out)
    # every bundled plane map, keyed by name; the higher-dimensional
    # monomial example has no plane resolution and is left out
    assert sorted(data) == ["hen2", "henon", "jonq1", "jonq2", "lox1", "sigma"]
    rows = {name: rep["table_row"] for name, rep in data.items()}
    assert rows == {"sigma": 1, "jonq1": 2, "jonq2": 3,
                    "henon": 6, "hen2": 6, "lox1": 7}


def test_mu_command(capsys):
    code, out, _err = run(capsys, "mu", "jonq1")
    assert code == 0
    data = json.loads(out)
    assert data["mu"] == 2
    assert data["base_point_counts"] == [3, 5, 7, 9, 11]


def test_nu_command(capsys):
    code, out, _err = run(capsys, "nu", "jonq2")
    assert code == 0
    data = json.loads(out)
    assert data["nu_forward"] == 1 and data["nu_backward"] == 1


def test_base_points_accounting(capsys):
    code, out, _err = run(capsys, "base-points", "lox1")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 5
    assert data["accounting"] == {"multiplicity_sum": 6,
                                  "multiplicity_sum_expected": 6,
                                  "square_sum": 8,
                                  "square_sum_expected": 8}


def test_degseq_csv_and_json(capsys):
    code, out, _err = run(capsys, "degseq", "henon")
    assert code == 0
    assert out == "n,deg\n1,2\n2,4\n3,8\n4,16\n5,32\n"
    code, out, _err = run(capsys, "degseq", "henon", "--format", "json", "-n", "3")
    assert code == 0
    assert json.loads(out) == {"map": "henon", "degrees": [2, 4, 8]}


def test_ball_json_and_dot(capsys):
    code, out, _err = run(capsys, "ball", "sigma")
    assert code == 0
    data = json.loads(out)
    assert len(data["vertices"]) == 15
    assert len(data["edges"]) == 24
    assert len(data["cubes"]["2"]) == 12
    assert len(data["cubes"]["3"]) == 2
    assert "id[]" in data["vertices"]
    code, out, _err = run(capsys, "ball", "sigma", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph cubes {")
    assert out.count("->") == 24


# ---------------------------------------------------------------------------
# determinism and files
# ---------------------------------------------------------------------------

def test_output_is_byte_identical_across_runs(capsys):
    outs = set()
    for _ in range(2):
        _code, out, _err = run(capsys, "classify", "jonq2")
        outs.add(out)
    assert len(outs) == 1
    assert outs.pop().endswith("\n")


def test_output_flag_writes_the_same_bytes(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _err = run(capsys, "nu", "henon", "-o", str(target))
    assert code == 0 and out == ""
    _code, stdout, _err = run(capsys, "nu", "henon")
    assert target.read_text() == stdout


def test_ball_roundtrips_through_check_cat0(tmp_path, capsys):
    target = tmp_path / "ball.json"
    code, _out, _err = run(capsys, "ball", "sigma", "-o", str(target))
    assert code == 0
    code, out, _err = run(capsys, "check-cat0", str(target))
    assert code == 0
    assert json.loads(out)["flag"] is True


def test_check_cat0_rejects_an_empty_corner(tmp_path, capsys):
    axes = ("100", "010", "001")
    corners = {"100": "110", "010": "011", "001": "101"}  # opposite per square
    vertices = ["000"] + list(axes) + sorted(corners.values())
    edges, squares = [], []
    for i, a in enumerate(axes):
        edges.append([a, "000"])
        for b in axes[i + 1:]:
            far = format(int(a, 2) | int(b, 2), "03b")
            edges += [[far, a], [far, b]]
            squares.append(sorted(["000", a, b, far]))
    payload = {"vertices": vertices, "edges": sorted(edges),
               "cubes": {"2": sorted(squares)}}
    target = tmp_path / "corner.json"
    target.write_text(json.dumps(payload))
    code, out, _err = run(capsys, "check-cat0", str(target))
    assert code == 1
    report = json.loads(out)
    assert report["flag"] is False
    assert report["witness_vertex"] == "000"


def test_check_bound_verdict(capsys):
    code, out, _err = run(capsys, "check-bound", "jonq2", "-n", "6")
    assert code == 0
    data = json.loads(out)
    assert data["holds"] is True and data["vacuous"] is False


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

def test_environment_overrides_and_flag_precedence(monkeypatch, capsys):
    monkeypatch.setenv("BLOWCUBE_ITERS", "3")
    _code, out, _err = run(capsys, "degseq", "henon", "--format", "json")
    assert json.loads(out)["degrees"] == [2, 4, 8]
    _code, out, _err = run(capsys, "degseq", "henon", "--format", "json", "-n", "2")
    assert json.loads(out)["degrees"] == [2, 4]


def test_degree_cap_flag_is_honored(capsys):
    code, _out, err = run(capsys, "degseq", "lox1", "-n", "6", "--degree-cap", "50")
    assert code == 4
    assert "cap" in err


# ---------------------------------------------------------------------------
# failure exit codes
# ---------------------------------------------------------------------------

def test_parse_failures_exit_3(capsys):
    code, _out, err = run(capsys, "classify", "P2:[x : y]")
    assert code == 3 and "coordinates" in err
    code, _out, _err = run(capsys, "mu", "A2:(x +, y)")
    assert code == 3


def test_map_failures_exit_4(capsys):
    code, _out, err = run(capsys, "classify", "MON:2:[[1,1],[1,1]]")
    assert code == 4 and "singular" in err
    code, _out, err = run(capsys, "mu", "P2:[x^2 : y^2 : z^2]")
    assert code == 4 and "inverse" in err


def test_resolution_failures_exit_5(capsys):
    code, _out, err = run(capsys, "mu", "mon3")
    assert code == 5 and "plane" in err
    code, _out, _err = run(capsys,
                           "base-points",
                           "P2:[x*z^2 : y*(y^2 - 2*z^2) : z*(y^2 - 2*z^2)]")
    assert code == 5


def test_complex_failures_exit_6(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": ["a"], "edges": [["a", "b"]]}))
    code, _out, err = run(capsys, "check-cat0", str(bad))
    assert code == 6 and "edge" in err


def test_io_failures_exit_8(tmp_path, capsys):
    code, _out, _err = run(capsys, "check-cat0", str(tmp_path / "missing.json"))
    assert code == 8
    code, _out, _err = run(capsys, "classify", "sigma", "-o",
                           str(tmp_path / "no" / "such" / "dir.json"))
    assert code == 8


def test_not_json_exits_3(tmp_path, capsys):
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{not json")
    code, _out, _err = run(capsys, "check-cat0", str(garbled))
    assert code == 3


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["degseq"])  # missing the map argument
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "blowcube", "degseq", "sigma",
                          "-n", "2"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout == "n,deg\n1,2\n2,1\n"
