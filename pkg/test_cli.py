"""End-to-end runs of the command line front end."""

import json

import pytest

from strategies import cycle, double_path, path
from twcut import cli
from twcut.decomposition.pace import read_td
from twcut.decomposition.tree import validate
from twcut.graph.colored import ColoredGraph
from twcut.graph.io import format_graph, parse_graph, read_graph
from twcut.utils.generators import gnm


@pytest.fixture
def write(tmp_path):
    def _write(name, content):
        target = tmp_path / name
        target.write_text(content if isinstance(content, str) else format_graph(content), encoding="utf-8")
        return str(target)

    return _write


def _run(capsys, *argv):
    code = cli.run([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith("{") else out


def test_mincut(capsys, write):
    code, result = _run(capsys, "mincut", "--graph", write("p.gr", path(3)), "--s", 1, "--t", 3, "--k", 1)
    assert code == 0
    assert result["status"] == "feasible"
    assert result["solution"] == [2]
    assert result["size"] == 1
    assert result["certificate"] == {"flow": 1}
    assert set(result["stats"]) == {"reduced_vertices", "decomposition_width", "dp_states", "wall_ms"}


def test_infeasible_is_not_an_error(capsys, write):
    g, s, t = double_path(3)
    code, result = _run(capsys, "stable-cut", "--graph", write("d.gr", g), "--s", s + 1, "--t", t + 1, "--k", 1)
    assert code == 0
    assert result["status"] == "infeasible"
    assert result["solution"] == []


def test_stable_cut_with_oracle(capsys, write):
    g, s, t = double_path(3)
    code, result = _run(
        capsys, "stable-cut", "--graph", write("d.gr", g), "--s", s + 1, "--t", t + 1, "--k", 2, "--oracle"
    )
    assert code == 0
    assert result["solution"] == [3, 6]
    assert result["certificate"]["oracle"] == [3, 6]


def test_parse_error_exit_code(capsys, write):
    code, result = _run(capsys, "mincut", "--graph", write("bad.gr", "p 2 1\ne 1 x\n"), "--s", 1, "--t", 2, "--k", 1)
    assert code == 2
    assert result["status"] == "error"
    assert "line 2" in result["error"]


def test_missing_graph_file(capsys, tmp_path):
    code, result = _run(capsys, "mincut", "--graph", tmp_path / "none.gr", "--s", 1, "--t", 2, "--k", 1)
    assert code == 2


@pytest.mark.parametrize(
    "extra",
    [["--s", 1, "--t", 3], ["--s", 2, "--t", 2, "--k", 1], ["--s", 1, "--t", 9, "--k", 1], ["--k", 1]],
    ids=["no-k", "same-terminals", "out-of-range", "no-terminals"],
)
def test_precondition_exit_code(capsys, write, extra):
    code, result = _run(capsys, "mincut", "--graph", write("p.gr", path(3)), *extra)
    assert code == 3
    assert result["status"] == "error"


def test_unknown_subcommand_exits_like_argparse(capsys):
    assert cli.run(["no-such-problem"]) == 2
    capsys.readouterr()


def test_verify_mismatch(capsys, write, monkeypatch):
    broken = cli.Problem(lambda args, g: cli.Outcome(None), cli.PROBLEMS["mincut"].oracle)
    monkeypatch.setitem(cli.PROBLEMS, "mincut", broken)
    code, result = _run(capsys, "verify", "mincut", "--graph", write("p.gr", path(3)), "--s", 1, "--t", 3, "--k", 1)
    assert code == 4
    assert "oracle" in result["error"]


def test_verify_refuses_large_instances(capsys, write):
    graph = write("big.gr", cycle(30))
    code, _ = _run(capsys, "verify", "mincut", "--graph", graph, "--s", 1, "--t", 16, "--k", 2)
    assert code == 3
    code, result = _run(capsys, "mincut", "--graph", graph, "--s", 1, "--t", 16, "--k", 2, "--oracle")
    assert code == 0
    assert result["certificate"]["oracle"] == "skipped"


def test_seed_picks_terminals_deterministically(capsys, write):
    graph = write("g.gr", gnm(10, 18, seed=4))
    first = _run(capsys, "hereditary-cut", "--graph", graph, "--k", 3, "--seed", 7, "--class", "clique")
    second = _run(capsys, "hereditary-cut", "--graph", graph, "--k", 3, "--seed", 7, "--class", "clique")
    assert first[0] == second[0] == 0
    for key in ("status", "solution", "certificate"):
        assert first[1][key] == second[1][key]


def test_torso_certificate(capsys, write):
    code, result = _run(capsys, "torso", "--graph", write("p.gr", path(4)), "--set", "1,4")
    assert code == 0
    assert result["solution"] == [1, 4]
    assert result["certificate"] == {"edges": [], "red_edges": [[1, 4]]}


def test_reduce_writes_graph_and_sidecar(capsys, write, tmp_path):
    g, s, t = double_path(3)
    output = tmp_path / "reduced.gr"
    code, result = _run(
        capsys, "reduce", "--graph", write("d.gr", g), "--s", s + 1, "--t", t + 1, "--k", 2, "--output", output
    )
    assert code == 0
    reduced = read_graph(output)
    sidecar = json.loads((tmp_path / "reduced.gr.json").read_text())
    assert sidecar["k"] == 2
    assert sidecar["cover"] == result["solution"]
    assert len(sidecar["origin"]) == reduced.n == result["certificate"]["reduced_vertices"]


def test_emit_td(capsys, write, tmp_path):
    td_path = tmp_path / "out.td"
    g = cycle(6)
    code, _ = _run(capsys, "bipartize", "--graph", write("c.gr", g), "--k", 1, "--emit-td", td_path)
    assert code == 0
    td, n = read_td(td_path)
    assert n == 6
    assert validate(g, td)


def test_multicut_pairs(capsys, write):
    star = "p 5 4\ne 1 2\ne 1 3\ne 1 4\ne 1 5\n"
    pairs = "cut 2 | 3\ncut 4 | 5\n"
    code, result = _run(capsys, "multicut", "--graph", write("s.gr", star), "--pairs", write("p.txt", pairs), "--k", 1)
    assert code == 0
    assert result["solution"] == [1]
    assert result["certificate"]["cut_pairs"] == 2


def test_hck_fifteen_cycle(capsys, write):
    target = {
        "H": {"vertices": list("abcde"), "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"], ["e", "a"]]},
        "C": ["c", "d", "e"],
        "K": {"c": 3, "d": 3, "e": 3},
    }
    code, result = _run(capsys, "hck", "--graph", write("c15.gr", cycle(15)), "--target", write("t.json", json.dumps(target)))
    assert code == 0
    assert result["status"] == "feasible"
    assert result["size"] >= 3
    assert len(result["certificate"]["coloring"]) == 15


def test_edge_bipartize_reports_edges(capsys, write):
    code, result = _run(capsys, "edge-bipartize", "--graph", write("k3.gr", cycle(3)), "--k", 1, "--class", "matching")
    assert code == 0
    assert result["size"] == 1
    assert len(result["solution"][0]) == 2


@pytest.mark.parametrize(
    "argv,n,m",
    [
        (["--kind", "cycle", "--n", 5], 5, 5),
        (["--kind", "hypercube", "--dim", 3], 8, 12),
        (["--kind", "star", "--n", 4], 5, 4),
        (["--kind", "grid", "--n", 3], 9, 12),
    ],
)
def test_gen(capsys, argv, n, m):
    assert cli.run(["gen"] + [str(a) for a in argv]) == 0
    g = parse_graph(capsys.readouterr().out)
    assert (g.n, g.m) == (n, m)


def test_gen_is_seeded(capsys):
    cli.run(["gen", "--n", "12", "--p", "0.4", "--seed", "3"])
    first = capsys.readouterr().out
    cli.run(["gen", "--n", "12", "--p", "0.4", "--seed", "3"])
    assert capsys.readouterr().out == first


@pytest.mark.parametrize("name", ["max-deficiency-1", "deficiency-1", "rank-1"])
def test_parametric_class_names(capsys, write, name):
    g, s, t = double_path(3)
    graph = write("d.gr", g)
    code, result = _run(
        capsys, "verify", "hereditary-cut", "--graph", graph, "--s", s + 1, "--t", t + 1, "--k", 2, "--class", name
    )
    assert code == 0
    assert result["status"] == "feasible"
    assert result["certificate"]["class"] == ("rank-1" if name == "rank-1" else "max-deficiency-1")


@pytest.mark.parametrize(
    "argv",
    [
        ["mincut", "--s", 1, "--t", 12, "--k", 4],
        ["stable-cut", "--s", 1, "--t", 12, "--k", 4],
        ["connected-cut", "--s", 1, "--t", 12, "--k", 4],
        ["bipartize", "--k", 3, "--threads", 4],
        ["contract-bipartite", "--k", 2],
        ["verify", "hereditary-cut", "--s", 1, "--t", 12, "--k", 3, "--class", "clique"],
    ],
)
def test_repeated_runs_agree(capsys, write, argv):
    # terminals 1 and 12 must stay non-adjacent
    edges = [e for e in gnm(12, 20, seed=9).edges() if e != (0, 11)]
    graph = write("g.gr", ColoredGraph.from_edges(12, edges))
    outputs = []
    for _ in range(3):
        code, result = _run(capsys, argv[0], *argv[1:], "--graph", graph)
        assert code == 0
        del result["stats"]["wall_ms"]
        outputs.append(result)
    assert outputs[0] == outputs[1] == outputs[2]
