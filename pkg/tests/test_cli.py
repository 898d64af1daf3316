"""Command-line interface: reports, exit codes, external ids."""

import json

import pytest

import alphabound as ab
from alphabound.cli import RunReport, main
from helpers import petersen


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def c5_path(tmp_path):
    path = tmp_path / "c5.col"
    ab.write_graph(ab.cycle_graph(5), str(path))
    return str(path)


def test_bounds_command(c5_path, capsys):
    code, out, err = run_cli(capsys, "bounds", c5_path, "--p2")
    assert code == 0 and err == ""
    rep = json.loads(out)
    assert rep["command"] == "bounds"
    assert rep["result"] == {"p": 3, "p1": 3, "p2": 2, "wp_complement": 3}
    assert rep["input"]["format"] == "dimacs"
    assert (rep["input"]["n"], rep["input"]["m"]) == (5, 5)
    assert rep["wall_ms"] >= 0


def test_bounds_without_p2(c5_path, capsys):
    code, out, _ = run_cli(capsys, "bounds", c5_path)
    assert code == 0
    assert json.loads(out)["result"]["p2"] is None


def test_decide_yes_exit_zero(c5_path, capsys):
    code, out, _ = run_cli(capsys, "decide", c5_path, "--k", "1")
    assert code == 0
    res = json.loads(out)["result"]
    assert res["answer"] == "YES" and res["resolved_at"] == "P2_BOUND"


def test_decide_no_reports_external_ids(tmp_path, capsys):
    path = tmp_path / "h.edges"
    ab.write_graph(ab.h_np(10, 4), str(path), external_ids=[v * 10 for v in range(10)])
    code, out, _ = run_cli(capsys, "decide", str(path), "--k", "1")
    assert code == 1
    res = json.loads(out)["result"]
    assert res["answer"] == "NO"
    assert res["certificate"]["vertices"] == [60, 70, 80, 90]


def test_decide_skip_bound_steps(c5_path, capsys):
    code, out, _ = run_cli(capsys, "decide", c5_path, "--k", "1", "--skip-bound-steps")
    assert code == 0
    assert json.loads(out)["result"]["resolved_at"] == "VC_SEARCH"


def test_decide_parameter_error_exit_two(tmp_path, capsys):
    path = tmp_path / "k9.col"
    ab.write_graph(ab.complete_graph(9), str(path))
    code, out, err = run_cli(capsys, "decide", str(path), "--k", "1")
    assert code == 2 and out == ""
    assert json.loads(err)["error"]["type"] == "ParameterError"


def test_missing_file_exit_two(capsys):
    code, out, err = run_cli(capsys, "bounds", "/nonexistent/graph.col")
    assert code == 2 and out == ""
    assert json.loads(err)["error"]["type"] == "FileNotFoundError"


def test_parse_error_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 2 1\ne 1 5\n")
    code, out, err = run_cli(capsys, "bounds", str(bad))
    assert code == 2
    payload = json.loads(err)["error"]
    assert payload["type"] == "ParseError" and "line 2" in payload["message"]


def test_usage_error_is_json(capsys):
    with pytest.raises(SystemExit) as e:
        main(["decide"])
    assert e.value.code == 2
    captured = capsys.readouterr()
    assert json.loads(captured.err)["error"]["type"] == "usage"


def test_kernel_command_with_emit(tmp_path, capsys):
    src = tmp_path / "h.col"
    ab.write_graph(ab.h_np(10, 4), str(src))
    emitted = tmp_path / "kernel.edges"
    code, out, _ = run_cli(capsys, "kernel", str(src), "--k", "1", "--emit", str(emitted))
    assert code == 0
    res = json.loads(out)["result"]
    assert res["n0"] == 4 and res["budget"] == 0
    assert res["kept"] == [7, 8, 9, 10]
    back, ids = ab.read_graph(str(emitted))
    assert back.n == 4 and back.m == 0 and ids == (7, 8, 9, 10)


def test_oracle_command(tmp_path, capsys):
    path = tmp_path / "pet.col"
    ab.write_graph(petersen(), str(path))
    code, out, _ = run_cli(capsys, "oracle", str(path))
    res = json.loads(out)["result"]
    assert res["alpha"] == 4 and len(res["witness"]) == 4
    code, out, _ = run_cli(capsys, "oracle", str(path), "--vc")
    res = json.loads(out)["result"]
    assert res["vc_size"] == 6 and len(res["witness"]) == 6


def test_gen_writes_raw_edgelist_to_stdout(capsys):
    code, out, err = run_cli(capsys, "gen", "cycle", "5")
    assert code == 0 and err == ""
    g, _ = ab.parse_edgelist(out)
    assert g == ab.cycle_graph(5)


def test_gen_gnp_to_file(tmp_path, capsys):
    target = tmp_path / "g.col"
    code, out, _ = run_cli(capsys, "gen", "gnp", "30", "0.2", "--seed", "7", "--out", str(target))
    assert code == 0
    rep = json.loads(out)
    written, _ = ab.read_graph(str(target))
    assert written == ab.gnp(30, 0.2, seed=7)
    assert rep["result"]["m"] == written.m


def test_gen_gnp_requires_seed(capsys):
    with pytest.raises(SystemExit) as e:
        main(["gen", "gnp", "10", "0.5"])
    assert e.value.code == 2


def test_extremal_generate_and_classify(tmp_path, capsys):
    target = tmp_path / "member.edges"
    code, _, _ = run_cli(capsys, "extremal", "generate", "k2_c1", "8", "--out", str(target))
    assert code == 0
    code, out, _ = run_cli(capsys, "extremal", "classify", str(target), "-p", "8", "-k", "2")
    assert code == 0
    res = json.loads(out)["result"]
    assert res["family_tag"] == "k2_c1"
    assert res["residual_nonedges"] == 12
    assert res["residual_budget"] == 14
    assert res["rest_size_range"] == [0, 2]


def test_extremal_enumerate(capsys):
    code, out, _ = run_cli(capsys, "extremal", "enumerate", "3")
    assert code == 0
    assert json.loads(out)["result"]["counts"] == {"k1_a": 1, "k1_b": 6}


def test_run_report_roundtrip():
    rep = RunReport(
        command="bounds",
        input={"path": "x.col", "format": "dimacs", "n": 3, "m": 1},
        parameters={"with_p2": True},
        result={"p": 2},
        wall_ms=1.25,
    )
    assert RunReport.from_json(rep.to_json()) == rep
