import csv
import json

import pytest

from ifvs.cli import main
from ifvs.formats import (
    emit_dis,
    emit_graph,
    graph_comment_value,
    parse_dis_instance,
    parse_graph,
    parse_solution,
)
from ifvs.generators import gadget_tent_branch
from ifvs.instance import InternalSolverError, check_solution

from helpers import complete, cycle


@pytest.fixture
def c5_file(tmp_path):
    p = tmp_path / "c5.gr"
    p.write_text(emit_graph(cycle(5)))
    return str(p)


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.gr"
    p.write_text(emit_graph(complete(4)))
    return str(p)


def test_solve_yes_text_output(c5_file, capsys):
    rc = main(["solve", "--input", c5_file, "--k", "1", "--minimize"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "status: yes" in out
    assert "size: 1" in out
    witness = out.splitlines()[-1].split(":")[1].split()
    assert len(witness) == 1 and 1 <= int(witness[0]) <= 5


def test_solve_no_exit_code(k4_file, capsys):
    rc = main(["solve", "--input", k4_file, "--k", "4"])
    assert rc == 1
    assert "status: no" in capsys.readouterr().out


def test_solve_json_key_order(c5_file, capsys):
    rc = main(["solve", "--input", c5_file, "--k", "1", "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert list(payload) == ["status", "solution", "size", "stats"]
    assert list(payload["stats"]) == [
        "fvs_size", "guesses_tried", "branch_nodes", "max_mu",
    ]
    assert payload["status"] == "yes"
    assert len(payload["solution"]) == 1
    assert payload["size"] == 1


def test_solve_json_no_has_null_solution(k4_file, capsys):
    rc = main(["solve", "--input", k4_file, "--k", "3", "--json"])
    assert rc == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["solution"] is None and payload["size"] is None


def test_solve_graph_without_budget_is_input_error(c5_file, capsys):
    rc = main(["solve", "--input", c5_file])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file_is_input_error(tmp_path, capsys):
    rc = main(["solve", "--input", str(tmp_path / "nope.gr"), "--k", "1"])
    assert rc == 2


def test_malformed_file_is_input_error(tmp_path, capsys):
    p = tmp_path / "bad.gr"
    p.write_text("p ifvs 2 5\ne 1 2\n")
    assert main(["solve", "--input", str(p), "--k", "1"]) == 2


def test_internal_failure_maps_to_exit_three(c5_file, monkeypatch, capsys):
    def boom(*a, **kw):
        raise InternalSolverError("forced for the test")

    monkeypatch.setattr("ifvs.cli.solve_ifvs", boom)
    rc = main(["solve", "--input", c5_file, "--k", "1"])
    assert rc == 3
    assert "internal error" in capsys.readouterr().err


def test_solve_dis_file_and_budget_override(tmp_path, capsys):
    inst, _site = gadget_tent_branch()
    p = tmp_path / "tent.dis"
    p.write_text(emit_dis(inst))
    assert main(["solve", "--input", str(p)]) == 0
    capsys.readouterr()
    assert main(["solve", "--input", str(p), "--k", "0"]) == 1


def test_solve_trace_file_is_json_lines(c5_file, tmp_path, capsys):
    trace = tmp_path / "trace.jsonl"
    rc = main([
        "solve", "--input", c5_file, "--k", "1",
        "--minimize", "--trace", str(trace),
    ])
    assert rc == 0
    lines = trace.read_text().splitlines()
    assert lines
    recs = [json.loads(line) for line in lines]
    for rec in recs:
        assert set(rec) == {
            "guess", "path", "kind", "mu", "pivot", "case", "answer", "reductions",
        }
    assert any(rec["path"] == "" for rec in recs)


def test_solve_accepts_external_fvs_file(tmp_path, capsys):
    g = cycle(6)
    gp = tmp_path / "c6.gr"
    gp.write_text(emit_graph(g))
    fp = tmp_path / "fvs.txt"
    fp.write_text("1 4\n")
    rc = main(["solve", "--input", str(gp), "--k", "1",
               "--fvs", str(fp), "--json"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["stats"]["fvs_size"] == 2


def test_oracle_graph_and_dis(c5_file, tmp_path, capsys):
    assert main(["oracle", "--input", c5_file, "--k", "1"]) == 0
    assert "status: yes" in capsys.readouterr().out
    assert main(["oracle", "--input", c5_file, "--k", "0"]) == 1
    capsys.readouterr()

    inst, _site = gadget_tent_branch()
    p = tmp_path / "tent.dis"
    p.write_text(emit_dis(inst))
    rc = main(["oracle", "--input", str(p), "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["size"] == 2


def test_oracle_minimize_respects_budget_filter(k4_file, capsys):
    assert main(["oracle", "--input", k4_file, "--minimize"]) == 1


def test_verify_valid_and_invalid(c5_file, tmp_path, capsys):
    sol = tmp_path / "sol.txt"
    sol.write_text("1\n")
    assert main(["verify", "--input", c5_file, "--solution", str(sol),
                 "--k", "1"]) == 0
    assert "valid" in capsys.readouterr().out
    bad = tmp_path / "bad.txt"
    bad.write_text("")
    assert main(["verify", "--input", c5_file, "--solution", str(bad),
                 "--k", "1"]) == 1
    assert "invalid" in capsys.readouterr().out


def test_gen_random_roundtrips(tmp_path, capsys):
    out = tmp_path / "r.gr"
    assert main(["gen", "--kind", "random", "--n", "9", "--m", "14",
                 "--seed", "3", "--out", str(out)]) == 0
    g = parse_graph(out.read_text())
    assert len(g.vertices) == 9


def test_gen_planted_embeds_budget_and_witness(tmp_path, capsys):
    out = tmp_path / "p.gr"
    assert main(["gen", "--kind", "planted", "--n", "15", "--k", "3",
                 "--seed", "1", "--out", str(out)]) == 0
    text = out.read_text()
    g = parse_graph(text)
    k = int(graph_comment_value(text, "k"))
    witness = parse_solution(graph_comment_value(text, "witness"), len(g.vertices))
    assert k == 3
    assert check_solution(g, witness, k)


def test_gen_planted_without_budget_is_input_error(capsys):
    assert main(["gen", "--kind", "planted", "--n", "15", "--seed", "1"]) == 2


def test_gen_subdivided_and_base_case(tmp_path, capsys):
    sub = tmp_path / "s.gr"
    assert main(["gen", "--kind", "subdivided", "--n", "6", "--m", "9",
                 "--seed", "2", "--out", str(sub)]) == 0
    parse_graph(sub.read_text())
    base = tmp_path / "b.dis"
    assert main(["gen", "--kind", "base-case", "--seed", "4",
                 "--out", str(base)]) == 0
    parse_dis_instance(base.read_text())


@pytest.mark.parametrize("scenario", [1, 2, 3, 4])
def test_gen_gadgets_roundtrip(tmp_path, scenario, capsys):
    out = tmp_path / f"g{scenario}.dis"
    assert main(["gen", "--kind", "gadget", "--n", str(scenario),
                 "--out", str(out)]) == 0
    text = out.read_text()
    parse_dis_instance(text)
    assert graph_comment_value(text, "site") is not None


def test_gen_unknown_gadget_scenario(capsys):
    assert main(["gen", "--kind", "gadget", "--n", "99"]) == 2


def test_gen_writes_to_stdout_without_out(capsys):
    assert main(["gen", "--kind", "random", "--n", "5", "--m", "4",
                 "--seed", "0"]) == 0
    parse_graph(capsys.readouterr().out)


def test_bench_writes_expected_csv(tmp_path, capsys):
    suite = tmp_path / "suite"
    suite.mkdir()
    for seed in (0, 1):
        main(["gen", "--kind", "planted", "--n", "12", "--k", "2",
              "--seed", str(seed), "--out", str(suite / f"p{seed}.gr")])
    out = tmp_path / "bench.csv"
    assert main(["bench", "--suite", str(suite), "--out", str(out)]) == 0
    rows = list(csv.reader(out.read_text().splitlines()))
    assert rows[0] == [
        "instance", "n", "m", "k", "fvs_size", "mu0",
        "branch_nodes", "leaves", "fib_bound", "time_ms", "status",
    ]
    assert len(rows) == 3
    for row in rows[1:]:
        assert row[-1] in ("yes", "no")
        assert float(row[-2]) >= 0.0
        if row[5] != "" and row[7] != "":
            assert int(row[7]) <= int(row[8])


def test_bench_budget_fallback_flag(tmp_path, capsys):
    suite = tmp_path / "suite"
    suite.mkdir()
    (suite / "c5.gr").write_text(emit_graph(cycle(5)))
    assert main(["bench", "--suite", str(suite)]) == 2
    capsys.readouterr()
    assert main(["bench", "--suite", str(suite), "--k", "1"]) == 0
    rows = list(csv.reader(capsys.readouterr().out.splitlines()))
    assert rows[1][3] == "1" and rows[1][-1] == "yes"


def test_bench_empty_suite_is_input_error(tmp_path, capsys):
    suite = tmp_path / "empty"
    suite.mkdir()
    assert main(["bench", "--suite", str(suite)]) == 2
