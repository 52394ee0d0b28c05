"""
Unit tests for run configuration and graph file I/O.

Core claims:
    - environment defaults are overridden by explicit values
    - non-positive bounds and unknown formats are rejected with the variable name
    - graph files reject duplicate keys and report syntax errors by position
    - the tree, star and Koszul shorthands expand to valid graphs
"""

import json

import pytest

from brauer.errors import BadMultiplicityVector, GraphFormatError
from brauer.presentation import make_star
from brauer.ribbon import is_tree, validate
from utils.config import load_run_config
from utils.graph_io import dump_graph, load_graph, load_presentation, parse_graph, save_graph
from utils.random_trees import random_corpus


# -- Helpers -----------------------------------------------------------------

def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestRunConfig:

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("BRAUER_MAX_WORD_LEN", raising=False)
        monkeypatch.delenv("BRAUER_OUTPUT_FORMAT", raising=False)
        config = load_run_config()
        assert config.max_word_len == 12
        assert config.output_format == "text"

    def test_environment_and_overrides(self, monkeypatch):
        monkeypatch.setenv("BRAUER_MAX_WORD_LEN", "7")
        monkeypatch.setenv("BRAUER_PROBE_DEPTH", "5")
        config = load_run_config(probe_depth=9, seed=None)
        assert config.max_word_len == 7
        assert config.probe_depth == 9

    @pytest.mark.parametrize("name,value", [
        ("BRAUER_MAX_WORD_LEN", "0"),
        ("BRAUER_PERIOD_BOUND", "-3"),
        ("BRAUER_PROBE_DEPTH", "many"),
    ])
    def test_bad_bounds(self, monkeypatch, name, value):
        monkeypatch.setenv(name, value)
        with pytest.raises(ValueError, match=name):
            load_run_config()

    def test_format_aliases(self):
        assert load_run_config(output_format="json-like").output_format == "structured"
        with pytest.raises(ValueError, match="BRAUER_OUTPUT_FORMAT"):
            load_run_config(output_format="yaml")


class TestGraphFiles:

    def test_duplicate_key(self, tmp_path):
        path = _write(tmp_path, "dup.json", '{"star": {"n": 2, "n": 3, "mbar": [2, 2]}}')
        with pytest.raises(GraphFormatError, match="duplicate key 'n'"):
            load_graph(path)

    def test_syntax_error_position(self, tmp_path):
        path = _write(tmp_path, "broken.json", '{\n  "star": {"n": 2,\n}')
        with pytest.raises(GraphFormatError, match="line 3"):
            load_graph(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(GraphFormatError, match="cannot read"):
            load_graph(str(tmp_path / "absent.json"))

    def test_missing_keys(self):
        with pytest.raises(GraphFormatError, match="missing keys"):
            parse_graph({"vertices": []})

    def test_tree_shorthand(self):
        graph = parse_graph({"tree": {"edges": [["a", "b"], ["b", "c"]],
                                      "multiplicities": {"b": 3},
                                      "rotation": {"b": [1, 0]}}}, "path")
        assert validate(graph).ok
        assert is_tree(graph)
        assert graph.cyclic_orders["b"] == ("1", "0'")
        assert graph.multiplicity("b") == 3

    def test_bad_rotation(self):
        with pytest.raises(GraphFormatError, match="rotation"):
            parse_graph({"tree": {"edges": [["a", "b"]], "rotation": {"a": [4]}}})

    def test_star_shorthand_validates_multiplicities(self):
        with pytest.raises(BadMultiplicityVector):
            parse_graph({"star": {"n": 2, "mbar": [3, 2]}})

    def test_save_and_load(self, tmp_path):
        path = str(tmp_path / "w222.json")
        save_graph(make_star(2, (2, 2, 2)), path)
        pres = load_presentation(path)
        assert sorted(pres.arrows) == ["a0", "a1", "a2", "d0", "d1"]
        assert pres.family == "star"
        assert json.loads(open(path).read())["params"]["mbar"] == [2, 2, 2]

    def test_dump_keeps_names(self):
        data = dump_graph(make_star(1, (2, 2)))
        assert data["arrow_names"]["0'"] == "d0"

    @pytest.mark.parametrize("name", ["star_2_222.json", "star_2_223.json", "star_2_23.json",
                                      "star_3_22.json", "koszul_2_2_3.json", "tree_2221.json"])
    def test_bundled_graphs(self, graph_path, name):
        assert validate(load_graph(graph_path(name))).ok


class TestRandomTrees:

    def test_corpus_is_seeded(self):
        first = [dump_graph(g) for g in random_corpus(3, size=5)]
        second = [dump_graph(g) for g in random_corpus(3, size=5)]
        assert first == second

    def test_corpus_trees(self):
        for tree in random_corpus(0, size=20):
            assert validate(tree).ok
            assert is_tree(tree)
            assert 2 <= tree.num_edges <= 8
            assert max(tree.multiplicities.values()) >= 2
