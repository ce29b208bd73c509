import io
import json

import jsonschema
import pytest

from megset import gen_complete, gen_cycle, gen_grid, minimum_meg
from megset.cli import RESULT_SCHEMAS, format_graph_text, main, parse_graph_text


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, RESULT_SCHEMAS[doc["command"]])
    return code, doc


def write_graph(tmp_path, g, name="g.txt"):
    path = tmp_path / name
    path.write_text(format_graph_text(g))
    return str(path)


def test_parse_round_trip():
    g = gen_grid(3, 4)
    assert parse_graph_text(format_graph_text(g, "fixture")) == g


def test_parse_errors():
    with pytest.raises(Exception):
        parse_graph_text("")
    with pytest.raises(Exception):
        parse_graph_text("2 1\n0 1\n0 1\n")  # header promises 1 edge
    with pytest.raises(Exception):
        parse_graph_text("not a header\n")


def test_verify_c4_exit_one(tmp_path, capsys):
    path = write_graph(tmp_path, gen_cycle(4))
    code, doc = run_json(capsys, "verify", path, "--set", "0,1,2")
    assert code == 1
    assert doc["result"]["is_meg"] is False
    assert [0, 3] in doc["result"]["uncovered"]


def test_verify_p3_exit_zero(tmp_path, capsys):
    path = write_graph(tmp_path, parse_graph_text("3 2\n0 1\n1 2\n"))
    code, doc = run_json(capsys, "verify", path, "--set", "0,2")
    assert code == 0 and doc["result"]["is_meg"] is True


def test_verify_c5_construction(tmp_path, capsys):
    path = write_graph(tmp_path, gen_cycle(5))
    code, doc = run_json(capsys, "verify", path, "--set", "0,1,3")
    assert code == 0 and doc["result"]["is_meg"] is True


def test_solve_k4(tmp_path, capsys):
    path = write_graph(tmp_path, gen_complete(4))
    code, doc = run_json(capsys, "solve", path)
    assert code == 0
    assert doc["result"]["meg_number"] == 4
    assert doc["result"]["forced"] == [0, 1, 2, 3]


def test_solve_matches_library_bit_for_bit(tmp_path, capsys):
    g = gen_grid(3, 3)
    path = write_graph(tmp_path, g)
    code, doc = run_json(capsys, "solve", path, "--all")
    res = minimum_meg(g)
    assert doc["result"]["optimal_set"] == sorted(res.optimal_set)
    assert doc["result"]["meg_number"] == res.meg_number
    boundary = sorted(set(range(9)) - {4})
    assert doc["result"]["all_optimal"] == [boundary]


def test_solve_c7(tmp_path, capsys):
    path = write_graph(tmp_path, gen_cycle(7))
    code, doc = run_json(capsys, "solve", path)
    assert doc["result"]["meg_number"] == 3


def test_solve_cap_exit(tmp_path, capsys):
    path = write_graph(tmp_path, gen_cycle(8))
    code, _ = run_cli(capsys, "solve", path, "--cap", "5")
    assert code == 4


def test_construct_class_tree(tmp_path, capsys):
    path = write_graph(tmp_path, parse_graph_text("4 3\n0 1\n0 2\n0 3\n"))
    code, doc = run_json(capsys, "construct", path, "--method", "class")
    assert code == 0
    assert doc["result"]["theorem"] == "TREE"
    assert doc["result"]["set"] == [1, 2, 3]


def test_construct_class_c4(tmp_path, capsys):
    path = write_graph(tmp_path, gen_cycle(4))
    code, doc = run_json(capsys, "construct", path, "--method", "class")
    assert doc["result"]["set"] == [0, 1, 2, 3]


def test_construct_fes_theta(tmp_path, capsys):
    theta = parse_graph_text("5 6\n0 2\n1 2\n0 3\n1 3\n0 4\n1 4\n")
    path = write_graph(tmp_path, theta)
    code, doc = run_json(capsys, "construct", path, "--method", "fes")
    assert code == 0
    assert doc["result"]["size"] <= 10
    assert doc["result"]["verified"] is True


def test_construct_unrecognized_exit_five(tmp_path, capsys):
    lopsided = parse_graph_text("6 7\n0 2\n1 2\n0 3\n1 3\n0 4\n4 5\n1 5\n")
    path = write_graph(tmp_path, lopsided)
    code, _ = run_cli(capsys, "construct", path, "--method", "class")
    assert code == 5


def test_simulate_detected(tmp_path, capsys):
    path = write_graph(tmp_path, parse_graph_text("3 2\n0 1\n1 2\n"))
    code, doc = run_json(capsys, "simulate", path, "--set", "0,2", "--fail-edge", "0-1")
    assert code == 0
    assert doc["result"]["detected"] is True
    obs = doc["result"]["observations"][0]
    assert obs["pair"] == [0, 2]
    assert obs["old_distance"] == 2 and obs["new_distance"] is None


def test_simulate_undetected_exit_one(tmp_path, capsys):
    path = write_graph(tmp_path, gen_cycle(4))
    code, doc = run_json(capsys, "simulate", path, "--set", "0,1,2", "--fail-edge", "0,3")
    assert code == 1 and doc["result"]["detected"] is False


def test_simulate_missing_edge_exit_two(tmp_path, capsys):
    path = write_graph(tmp_path, gen_cycle(4))
    code, _ = run_cli(capsys, "simulate", path, "--set", "0,1", "--fail-edge", "0,2")
    assert code == 2


def test_generate_round_trip(capsys):
    for argv, n, m in [
        (("generate", "cycle", "7"), 7, 7),
        (("generate", "path", "6"), 6, 5),
        (("generate", "star", "4"), 5, 4),
        (("generate", "complete", "5"), 5, 10),
        (("generate", "hypercube", "3"), 8, 12),
        (("generate", "grid", "3", "4"), 12, 17),
        (("generate", "tightness", "2", "1"), 8, 9),
        (("generate", "multipartite", "2", "3"), 5, 6),
        (("generate", "tree", "9", "--seed", "4"), 9, 8),
        (("generate", "unicyclic", "9", "5", "--seed", "4"), 9, 9),
        (("generate", "connected", "10", "14", "--seed", "4"), 10, 14),
    ]:
        code, out = run_cli(capsys, *argv)
        assert code == 0
        g = parse_graph_text(out)
        assert (g.n, g.m) == (n, m)


def test_generate_deterministic(capsys):
    _, out1 = run_cli(capsys, "generate", "tree", "12", "--seed", "9")
    _, out2 = run_cli(capsys, "generate", "tree", "12", "--seed", "9")
    assert out1 == out2


def test_generate_bad_params_exit_two(capsys):
    code, _ = run_cli(capsys, "generate", "cycle", "2")
    assert code == 2
    code, _ = run_cli(capsys, "generate", "grid", "3")
    assert code == 2


def test_invariants_tree(tmp_path, capsys):
    path = write_graph(tmp_path, parse_graph_text("4 3\n0 1\n0 2\n0 3\n"))
    code, doc = run_json(capsys, "invariants", path)
    assert code == 0
    r = doc["result"]
    assert doc["input"]["fes"] == 0
    assert r["upper_bound"] == 3 and r["meg_number"] == 3


def test_invariants_c6_pendant(tmp_path, capsys):
    g = parse_graph_text("7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n0 6\n")
    path = write_graph(tmp_path, g)
    code, doc = run_json(capsys, "invariants", path)
    r = doc["result"]
    assert doc["input"]["fes"] == 1
    assert r["upper_bound"] == 5 and r["meg_number"] == 3


def test_invariants_theta(tmp_path, capsys):
    theta = parse_graph_text("5 6\n0 2\n1 2\n0 3\n1 3\n0 4\n1 4\n")
    path = write_graph(tmp_path, theta)
    code, doc = run_json(capsys, "invariants", path)
    r = doc["result"]
    assert r["upper_bound"] == 10
    assert r["meg_number"] == minimum_meg(theta).meg_number


def test_disconnected_exit_three(tmp_path, capsys):
    path = write_graph(tmp_path, parse_graph_text("4 2\n0 1\n2 3\n"))
    for argv in (
        ("verify", path, "--set", "0,1"),
        ("solve", path),
        ("invariants", path),
    ):
        code, _ = run_cli(capsys, *argv)
        assert code == 3


def test_parse_garbage_exit_two(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 zebra\n")
    code, _ = run_cli(capsys, "solve", str(path))
    assert code == 2


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(format_graph_text(gen_cycle(5))))
    code, doc = run_json(capsys, "solve", "-")
    assert code == 0 and doc["result"]["meg_number"] == 3


def test_quiet_headlines(tmp_path, capsys):
    path = write_graph(tmp_path, gen_complete(4))
    code, out = run_cli(capsys, "solve", path, "--quiet")
    assert out.strip() == "4"
    code, out = run_cli(capsys, "verify", path, "--set", "0,1,2,3", "--quiet")
    assert out.strip() == "true"
