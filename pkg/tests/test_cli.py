"""Command-line interface behaviour and determinism."""

import json

import pytest
from click.testing import CliRunner

from leafage.cli import main
from leafage.demo import DEMO_EDGE_LIST

FOUR_CYCLE = "e a b\ne b c\ne c d\ne d a\n"
PATH_GRAPH = "e a b\ne b c\ne c d\n"
K4 = "e a b\ne a c\ne a d\ne b c\ne b d\ne c d\n"
CLAUSES = "k 3\nv1 v2 v3\nv2 v3 v4\n"


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args, stdin=None):
    return runner.invoke(main, args, input=stdin, catch_exceptions=False)


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


class TestCheck:
    def test_chordal_exit_zero(self, runner, tmp_path):
        res = invoke(runner, ["check", write(tmp_path, "g.txt", DEMO_EDGE_LIST)])
        assert res.exit_code == 0
        assert res.output.startswith("chordal")

    def test_non_chordal_exit_one(self, runner, tmp_path):
        res = invoke(runner, ["check", write(tmp_path, "g.txt", FOUR_CYCLE)])
        assert res.exit_code == 1
        assert "not chordal" in res.output
        witness = res.output.strip().splitlines()[-1].split()
        assert sorted(witness) == ["a", "b", "c", "d"]

    def test_missing_file_exit_two(self, runner):
        res = runner.invoke(main, ["check", "no-such-file.txt"])
        assert res.exit_code == 2

    def test_format_error_exit_two(self, runner, tmp_path):
        res = invoke(runner, ["check", write(tmp_path, "g.txt", "e a a\n")])
        assert res.exit_code == 2
        assert "line 1" in res.output

    def test_stdin_dash(self, runner):
        res = invoke(runner, ["check", "-"], stdin=PATH_GRAPH)
        assert res.exit_code == 0


class TestLeafage:
    def test_demo_graph(self, runner, tmp_path):
        res = invoke(runner, ["leafage", write(tmp_path, "g.txt", DEMO_EDGE_LIST)])
        assert res.exit_code == 0
        data = json.loads(res.output)
        assert data["leafage"] == 3
        assert len(data["tree_edges"]) == 8
        assert all(r["leaves_before"] - r["leaves_after"] == 1 for r in data["iterations"])

    def test_complete_graph(self, runner, tmp_path):
        res = invoke(runner, ["leafage", write(tmp_path, "g.txt", K4)])
        assert json.loads(res.output)["leafage"] == 0

    def test_interval_graph(self, runner, tmp_path):
        res = invoke(runner, ["leafage", write(tmp_path, "g.txt", PATH_GRAPH)])
        assert json.loads(res.output)["leafage"] == 2

    def test_non_chordal_exit_one(self, runner, tmp_path):
        res = invoke(runner, ["leafage", write(tmp_path, "g.txt", FOUR_CYCLE)])
        assert res.exit_code == 1


class TestVertexLeafage:
    def test_demo_graph(self, runner, tmp_path):
        res = invoke(runner, ["vertex-leafage", write(tmp_path, "g.txt", DEMO_EDGE_LIST)])
        data = json.loads(res.output)
        assert data["vertex_leafage"] == 2
        assert data["leafage"] == 3
        assert data["per_vertex_leaves"]["a"] == 2
        assert list(data) == [
            "leafage", "vertex_leafage", "tree_edges",
            "per_vertex_leaves", "branch_edge_set",
        ]

    def test_complete_graph(self, runner, tmp_path):
        res = invoke(runner, ["vertex-leafage", write(tmp_path, "g.txt", K4)])
        assert json.loads(res.output)["vertex_leafage"] == 0

    def test_ell_bound_exit_one(self, runner, tmp_path):
        res = invoke(
            runner,
            ["vertex-leafage", "--ell", "2", write(tmp_path, "g.txt", DEMO_EDGE_LIST)],
        )
        assert res.exit_code == 1

    def test_paper_budget_failure_exit_one(self, runner, tmp_path):
        res = invoke(
            runner,
            [
                "vertex-leafage",
                "--budget-mode", "paper",
                write(tmp_path, "g.txt", DEMO_EDGE_LIST),
            ],
        )
        assert res.exit_code == 1
        assert "no branching set" in res.output


class TestModel:
    def test_interval_graph_json(self, runner, tmp_path):
        res = invoke(runner, ["model", write(tmp_path, "g.txt", PATH_GRAPH)])
        data = json.loads(res.output)
        assert data["leafage"] == 2
        assert data["vertex_leafage"] == 2

    def test_dot_output(self, runner, tmp_path):
        res = invoke(runner, ["model", "--dot", write(tmp_path, "g.txt", PATH_GRAPH)])
        assert res.output.startswith("graph model {")
        assert res.output.rstrip().endswith("}")
        assert '"n000" -- "n001";' in res.output


class TestGadget:
    def test_build(self, runner, tmp_path):
        res = invoke(runner, ["gadget", "build", write(tmp_path, "c.txt", CLAUSES)])
        assert res.exit_code == 0
        assert "e y1 z1" in res.output
        assert "e v4 y2" in res.output

    def test_build_bad_clause_file(self, runner, tmp_path):
        res = invoke(runner, ["gadget", "build", write(tmp_path, "c.txt", "a b\n")])
        assert res.exit_code == 2

    def test_verify(self, runner, tmp_path):
        res = invoke(runner, ["gadget", "verify", write(tmp_path, "c.txt", CLAUSES)])
        data = json.loads(res.output)
        assert data["solvable"] is True
        assert data["equivalence_ok"] is True

    def test_build_then_analyze(self, runner, tmp_path):
        built = invoke(runner, ["gadget", "build", write(tmp_path, "c.txt", CLAUSES)])
        res = invoke(runner, ["vertex-leafage", "-"], stdin=built.output)
        assert json.loads(res.output)["vertex_leafage"] <= 3


class TestOracleCommand:
    def test_demo_graph(self, runner, tmp_path):
        res = invoke(runner, ["oracle", write(tmp_path, "g.txt", DEMO_EDGE_LIST)])
        data = json.loads(res.output)
        assert data["leafage"] == 3
        assert data["vertex_leafage"] == 2
        assert data["tree_count"] == 180
        assert set(data["witness_trees"]) == {"min_leafage", "min_vertex_leafage", "joint"}

    def test_limit_exit_three(self, runner, tmp_path, monkeypatch):
        monkeypatch.setenv("LEAFAGE_ORACLE_LIMIT", "5")
        res = invoke(runner, ["oracle", write(tmp_path, "g.txt", DEMO_EDGE_LIST)])
        assert res.exit_code == 3

    def test_non_chordal_exit_one(self, runner, tmp_path):
        res = invoke(runner, ["oracle", write(tmp_path, "g.txt", FOUR_CYCLE)])
        assert res.exit_code == 1


class TestRepro:
    def test_trace_contents(self, runner):
        res = invoke(runner, ["repro"])
        assert res.exit_code == 0
        assert "host leaves: 5" in res.output
        assert "subtree leaves of vertex a: 3" in res.output
        assert "a,b,c -> a,g carrying {a}" in res.output
        assert "leaves 5 -> 4" in res.output
        assert "final host leaves: 3" in res.output
        assert "final subtree leaves of vertex a: 2" in res.output


class TestDeterminism:
    def test_byte_identical_runs(self, runner, tmp_path):
        path = write(tmp_path, "g.txt", DEMO_EDGE_LIST)
        for args in (
            ["leafage", path],
            ["vertex-leafage", path],
            ["model", path],
            ["oracle", path],
            ["repro"],
        ):
            first = invoke(runner, args)
            second = invoke(runner, args)
            assert first.output == second.output
