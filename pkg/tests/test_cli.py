import json

import pytest

from cone_spectra import __version__
from cone_spectra.cli import RunConfig, UsageError, dispatch
from cone_spectra.graph import cycle_graph, from_graph6


def run(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", "--pi", "[4,3,2,2,2,1]", "--t", "0", "--c", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == __version__
    assert doc["result"]["sequence"]["case"] == "4.2.4"
    assert doc["config"]["command"] == "validate"


def test_validate_rejects_bad_sequence(capsys):
    code, _, err = run(capsys, "validate", "--pi", "[3,2,2,1]", "--t", "0", "--c", "0")
    assert code == 1 and "error" in err
    code, _, err = run(capsys, "validate", "--pi", "not json", "--t", "0", "--c", "0")
    assert code == 1 and "JSON" in err


def test_theta_from_file(tmp_path, capsys):
    path = tmp_path / "c5.json"
    path.write_text(json.dumps(cycle_graph(5).to_json()))
    code, out, _ = run(capsys, "theta", "--graph", str(path), "--alpha", "1")
    doc = json.loads(out)["result"]
    assert code == 0
    assert doc["theta"] == pytest.approx(4.0, abs=1e-12)
    assert set(doc["perron"]) == {"theta", "f", "residual", "iterations"}
    assert doc["eigen_residual"] <= 1e-12


def test_theta_graph6_inline(capsys):
    code, out, _ = run(capsys, "theta", "--graph", "Bw", "--alpha", "0")
    assert code == 0
    assert json.loads(out)["result"]["theta"] == pytest.approx(2.0)


def test_bad_alpha_and_command(capsys):
    with pytest.raises(SystemExit) as info:
        dispatch(["theta", "--graph", "Bw", "--alpha", "-1"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        dispatch(["frobnicate"])
    assert info.value.code == 1
    capsys.readouterr()


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig("theta", eigen_tol=0)
    with pytest.raises(UsageError):
        RunConfig("theta", alphas=[-0.5])


def test_construct_formats(tmp_path, capsys):
    args = ["construct", "--pi", "[3,2,2,2,1]", "--t", "0", "--c", "1"]
    code, out, _ = run(capsys, *args)
    doc = json.loads(out)["result"]
    assert code == 0 and doc["construction"]["assigned"] == [3, 2, 2, 2, 1]
    code, out, _ = run(capsys, *args, "--format", "graph6")
    assert from_graph6(out.strip()).degree_sequence() == (3, 2, 2, 2, 1)
    dot = tmp_path / "g.dot"
    code, out, _ = run(capsys, *args, "--format", "dot", "--out", str(dot))
    assert out == "" and dot.read_text().startswith("graph G {")
    assert json.loads((tmp_path / "g.dot.json").read_text())["result"]["sequence"]["case"] == "4.1.2"


def test_chain(capsys):
    code, out, _ = run(capsys, "chain", "--pi", "[2,2,2,1,1]", "--pi-prime", "[4,1,1,1,1]",
                       "--t", "0", "--c", "0")
    assert code == 0
    chain = json.loads(out)["result"]["chain"]
    assert chain["sequences"][0] == [2, 2, 2, 1, 1]
    assert chain["sequences"][-1] == [4, 1, 1, 1, 1]


def test_verify_theorem_exit_zero(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify-theorem", "--id", "4.4", "--n", "7", "--t", "1",
                     "--alpha", "0.5", "--out", str(out))
    doc = json.loads(out.read_text())
    assert code == 0
    assert doc["result"]["sweep"]["verdict"] == "Holds"
    assert doc["config"]["alphas"] == [0.5]


def test_enumerate_lines(capsys):
    code, out, _ = run(capsys, "enumerate", "--pi-star", "[3,2,2,2,1]")
    lines = out.split()
    assert code == 0 and len(lines) == 2
    assert all(from_graph6(x).degree_sequence() == (3, 2, 2, 2, 1) for x in lines)


def test_oracle_infers_c(capsys):
    code, out, _ = run(capsys, "oracle", "--pi", "[4,3,2,2,2,1]", "--alpha", "1")
    doc = json.loads(out)["result"]
    assert code == 0 and doc["sequence"]["c"] == 2 and doc["unique"]


def test_search_counterexample_exit_two(capsys):
    code, out, _ = run(capsys, "search-counterexample", "--n", "9", "--c", "3", "--alpha", "0")
    assert code == 2
    assert json.loads(out)["result"]["violations"] == 22
    code, out, _ = run(capsys, "search-counterexample", "--n", "7", "--c", "1", "--alpha", "0")
    assert code == 0 and json.loads(out)["result"]["hits"] == []


def test_output_is_byte_identical(capsys):
    argv = ["verify-theorem", "--id", "5.7", "--n", "8", "--t", "0", "--alpha", "0.25"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_parallel_output_matches_serial(capsys, monkeypatch):
    argv = ["verify-theorem", "--id", "4.2", "--n", "8", "--t", "1", "--alpha", "0.5"]
    _, serial, _ = run(capsys, *argv)
    monkeypatch.setenv("CONE_SPECTRA_THREADS", "2")
    _, parallel, _ = run(capsys, *argv)
    assert serial == parallel
