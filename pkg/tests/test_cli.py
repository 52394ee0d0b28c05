"""
Unit tests for the command-line front end.

Core claims:
    - every subcommand reports on the bundled graphs and exits 0
    - input errors exit 2, domain-level negatives exit 1
    - structured output is valid JSON
"""

import json

import pytest

from brauer_cli import main
from utils.graph_io import dump_graph
from brauer.presentation import make_star


# -- Helpers -----------------------------------------------------------------

def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestGraphCommands:

    def test_invariants(self, capsys, graph_path):
        code, out = _run(capsys, "invariants", graph_path("star_2_222.json"))
        assert code == 0
        assert "edges: 3" in out
        assert "growth: non_polynomial" in out

    def test_bare_name_uses_graphs_dir(self, capsys, monkeypatch):
        monkeypatch.delenv("BRAUER_GRAPHS_DIR", raising=False)
        code, out = _run(capsys, "invariants", "star_2_23.json")
        assert code == 0
        assert "exceptional_edges: ['1', '2']" in out

    def test_structured_invariants(self, capsys, graph_path):
        code, out = _run(capsys, "--format", "json-like", "invariants", graph_path("star_2_222.json"))
        data = json.loads(out)
        assert code == 0
        assert data["vertices"] == 4
        assert data["perimeters"] == [6]
        assert data["multiplicities"] == [2, 2, 2, 1]
        assert data["exceptional_edges"] == ["2"]

    def test_derived_equivalence(self, capsys, graph_path):
        code, out = _run(capsys, "derived-eq", graph_path("tree_2221.json"), graph_path("star_2_222.json"))
        assert code == 0
        assert out.startswith("equivalent: true")
        assert len(out.strip().splitlines()) == 7

    def test_not_equivalent(self, capsys, graph_path):
        code, _ = _run(capsys, "derived-eq", graph_path("star_2_222.json"), graph_path("star_2_223.json"))
        assert code == 1

    def test_star_reduce(self, capsys, graph_path, tmp_path):
        target = str(tmp_path / "star.json")
        code, out = _run(capsys, "star-reduce", graph_path("koszul_2_2_3.json"), "--output", target)
        assert code == 0
        assert "W_2,(2,3)" in out
        assert json.loads(open(target).read())["family"] == "star"

    def test_star_reduce_without_multiplicities(self, capsys, tmp_path):
        path = tmp_path / "path.json"
        path.write_text(json.dumps({"tree": {"edges": [["u", "c"], ["c", "v"]]}}))
        code, out = _run(capsys, "star-reduce", str(path))
        assert code == 0
        assert "W_1,()" in out

    def test_green_walks(self, capsys, graph_path):
        code, out = _run(capsys, "green-walks", graph_path("star_2_222.json"))
        assert code == 0
        assert "1 Green walk(s), 2 double-stepped walk(s)" in out

    def test_present(self, capsys, graph_path):
        code, out = _run(capsys, "present", graph_path("koszul_2_2_3.json"))
        assert code == 0
        assert "g: 2 -> 2" in out

    def test_malformed_pairing(self, capsys, tmp_path):
        data = dump_graph(make_star(1, (2, 2)))
        data["pairing"]["0"] = "0"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data))
        code, out = _run(capsys, "validate", str(path))
        assert code == 2
        assert "pairing has fixed point" in out

    def test_missing_file(self, capsys, tmp_path):
        code, out = _run(capsys, "invariants", str(tmp_path / "absent.json"))
        assert code == 2
        assert "Input error" in out


class TestModuleCommands:

    def test_module_dossier(self, capsys, graph_path):
        code, out = _run(capsys, "--format", "structured", "module", graph_path("star_2_222.json"),
                         "--string", "-d0 a0 -d1 a1")
        data = json.loads(out)
        assert code == 0
        assert data["dim"] == 5
        assert data["periodic"] is True
        assert data["address"]["d"] == 2
        assert data["stable_end_dim"] == 1
        assert data["ext1_dim"] == 1

    def test_bad_word(self, capsys, graph_path):
        code, out = _run(capsys, "module", graph_path("star_2_222.json"), "--string", "d0 a0")
        assert code == 2
        assert "Input error" in out

    def test_udr(self, capsys, graph_path):
        code, out = _run(capsys, "udr", graph_path("star_2_23.json"), "--string", "e0",
                         "--ladder", "-d0; -d0 -d0")
        assert code == 0
        assert "k[[x]]/(x^3)" in out
        assert "ladder: k[[x]]/(x^3) (proved)" in out

    def test_broken_ladder(self, capsys, graph_path):
        code, out = _run(capsys, "udr", graph_path("star_2_23.json"), "--string", "e0",
                         "--ladder", "-d0; e1")
        assert code == 1
        assert "HypothesisFailed" in out

    def test_component_dot(self, capsys, graph_path):
        code, out = _run(capsys, "--format", "dot", "component", graph_path("star_2_222.json"),
                         "--string", "e2", "--radius", "1")
        assert code == 0
        assert out.startswith("digraph component {")

    def test_tree_summary(self, capsys, graph_path):
        code, out = _run(capsys, "tree", graph_path("tree_2221.json"))
        assert code == 0
        assert "S(0) [simple]: k[[x]]/(x^2), k, k[[x]]" in out


class TestVerify:

    @pytest.mark.parametrize("suite", ["tubes", "case1", "section4"])
    def test_suites_pass(self, capsys, suite):
        code, out = _run(capsys, "verify", suite)
        assert code == 0
        assert "❌" not in out
