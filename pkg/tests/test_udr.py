"""
Unit tests for universal deformation ring classification.

Core claims:
    - the ring along a tube diagonal is k until the last position, then k[[x]]
    - the sections through non-periodic simples give k[[x]]/(x^2), k, k[[x]]
    - in the exceptional case S(0) has ring k[[x]]/(x^3)
    - the ring is invariant under Ω
    - on a tree the diagonal ends in k[[x]]/(x^m) for the larger multiplicity m
    - ladders reproduce these rings and broken ladders are rejected
"""

import pytest

from brauer.errors import GrowthClassUnsupported, HypothesisFailed, NotATree, ProjectiveInput
from brauer.families import koszul_diagonal_words
from brauer.homology import cosyzygy, ext1_dim, section_diagonals, stable_end_dim, syzygy
from brauer.presentation import make_star
from brauer.ribbon import BrauerGraph, Vertex
from brauer.strmod import StringModule, simple_module
from brauer.udr import Ladder, UDRClass, classify, classify_tree, tree_component_summary, verify_ladder
from utils.graph_io import expand_tree


# -- Helpers -----------------------------------------------------------------

Y0_X22 = "-d0 a0 -d1 a1"
D_N = "-d1 a1 a2"


def _triangle():
    return BrauerGraph(
        (Vertex("x", 2), Vertex("y", 1), Vertex("z", 1)),
        ("0", "0'", "1", "1'", "2", "2'"),
        {"0": "x", "0'": "y", "1": "y", "1'": "z", "2": "z", "2'": "x"},
        {"0": "0'", "0'": "0", "1": "1'", "1'": "1", "2": "2'", "2'": "2"},
        {"x": ("0", "2'"), "y": ("0'", "1"), "z": ("1'", "2")},
    )


def _tree():
    return expand_tree({"edges": [["u", "c"], ["c", "v"], ["c", "w"]],
                        "multiplicities": {"u": 2, "c": 2, "v": 2}}, "tree_2221")


class TestRingNames:

    @pytest.mark.parametrize("ring,text", [
        (UDRClass.base(), "k"),
        (UDRClass.power_series(), "k[[x]]"),
        (UDRClass.truncated(3), "k[[x]]/(x^3)"),
        (UDRClass.truncated(1), "k"),
    ])
    def test_str(self, ring, text):
        assert str(ring) == text

    def test_unknown(self):
        ring = UDRClass.unknown("outside classified cases")
        assert not ring.is_ring
        assert str(ring) == "unknown (outside classified cases)"


class TestClassify:

    @pytest.mark.parametrize("text,expected", [
        ("e2", "k"),
        ("-d1 a1", "k"),
        (Y0_X22, "k[[x]]"),
    ])
    def test_tube_diagonal(self, w222, text, expected):
        assert str(classify(StringModule.parse(w222, text)).udr) == expected

    def test_section_rings(self, w222):
        for section in section_diagonals(w222):
            rings = [str(classify(m).udr) for m in section.modules]
            assert rings == ["k[[x]]/(x^2)", "k", "k[[x]]"]

    def test_exceptional_case(self, w23):
        assert str(classify(simple_module(w23, "0")).udr) == "k[[x]]/(x^3)"
        m0 = section_diagonals(w23)[0].modules[0]
        assert str(classify(m0).udr) == "k[[x]]/(x^2)"

    @pytest.mark.parametrize("text", ["e0", "e2", Y0_X22, "-d0 a0 a1 a2 a0"])
    def test_omega_invariance(self, w222, text):
        module = StringModule.parse(w222, text)
        ring = str(classify(module).udr)
        assert str(classify(syzygy(module)).udr) == ring
        assert str(classify(cosyzygy(module)).udr) == ring

    @pytest.mark.parametrize("pres_name", ["w222", "w23"])
    def test_omega_invariance_on_sections(self, request, pres_name):
        pres = request.getfixturevalue(pres_name)
        for section in section_diagonals(pres):
            for module in section.modules:
                ring = str(classify(module).udr)
                assert str(classify(syzygy(module)).udr) == ring, module
                assert str(classify(cosyzygy(module)).udr) == ring, module

    def test_koszul_diagonal_is_omega_invariant(self, koszul):
        for word in koszul_diagonal_words(koszul):
            module = StringModule(koszul, word)
            assert str(classify(syzygy(module)).udr) == str(classify(module).udr), module

    def test_exceptional_tangent_space(self, w23):
        simple = simple_module(w23, "0")
        assert stable_end_dim(simple) == 1
        assert ext1_dim(simple) == 1
        assert [stable_end_dim(m) for m in section_diagonals(w23)[0].modules] == [1, 1, 1]

    def test_evidence_is_recorded(self, w222):
        result = classify(StringModule.parse(w222, Y0_X22))
        quantities = {e.quantity: e.value for e in result.evidence}
        assert quantities["dim stable End(M)"] == 1
        assert quantities["dim Ext^1(M, M)"] == 1
        assert quantities["d_M"] == 2
        assert result.export()["udr"] == "k[[x]]"

    def test_large_stable_end(self, w222):
        result = classify(StringModule.parse(w222, "a2 -d0 a0 -d1 a1"))
        assert not result.udr.is_ring

    def test_projective_rejected(self, w222):
        with pytest.raises(ProjectiveInput):
            classify(StringModule.parse(w222, "a2 a0 a1 a2 a0 a1"))


class TestLadders:

    def test_finite_ladder(self, w23):
        verdict = verify_ladder(simple_module(w23, "0"), Ladder(base="e0", words=["-d0", "-d0 -d0"]))
        assert str(verdict.udr) == "k[[x]]/(x^3)"
        assert verdict.proved
        assert verdict.depth == 2

    def test_broken_ladder(self, w23):
        with pytest.raises(HypothesisFailed) as exc:
            verify_ladder(simple_module(w23, "0"), Ladder(base="e0", words=["-d0", "e1"]))
        assert exc.value.condition == "epimorphism ε_l"
        assert exc.value.step == 2

    def test_template_ladder(self, w222):
        module = StringModule.parse(w222, Y0_X22)
        verdict = verify_ladder(module, Ladder(prefix=Y0_X22, block="a2 " + Y0_X22), depth=3)
        assert str(verdict.udr) == "k[[x]]"
        assert not verdict.proved
        assert verdict.label == "verified to depth 3"

    def test_template_ladder_after_the_section(self, w222):
        [section] = [s for s in section_diagonals(w222) if s.t == "0"]
        module = syzygy(section.modules[-1])
        assert module == StringModule.parse(w222, D_N)
        verdict = verify_ladder(module, Ladder(prefix=D_N, block="a0 " + D_N), depth=3)
        assert str(verdict.udr) == "k[[x]]"
        assert verdict.label == "verified to depth 3"

    def test_needs_one_dimensional_tangent_space(self, w222):
        with pytest.raises(HypothesisFailed) as exc:
            verify_ladder(simple_module(w222, "2"), Ladder(base="e2", words=["-d1 a1"]))
        assert exc.value.condition == "dim Ext^1(M, M) = 1"

    def test_base_must_be_the_module(self, w222):
        module = StringModule.parse(w222, Y0_X22)
        with pytest.raises(HypothesisFailed) as exc:
            verify_ladder(module, Ladder(base="e2", words=[]))
        assert exc.value.condition == "W_0 ≅ M"


class TestTrees:

    def test_classify_over_star(self):
        result = classify_tree(_tree(), Y0_X22)
        assert result.star == "W_2,(2,2,2)"
        assert str(result.classification.udr) == "k[[x]]"

    def test_component_summary(self):
        summary = tree_component_summary(_tree())
        assert summary["star"] == "W_2,(2,2,2)"
        assert [row["udr"] for row in summary["components"]] == [["k[[x]]/(x^2)", "k", "k[[x]]"]] * 2

    def test_exceptional_tree_ends_in_the_larger_multiplicity(self):
        tree = expand_tree({"edges": [["u", "c"], ["c", "v"], ["c", "w"]],
                            "multiplicities": {"u": 2, "v": 4}})
        summary = tree_component_summary(tree)
        assert summary["star"] == "W_2,(2,4)"
        [row] = summary["components"]
        assert row["case"] == "exceptional"
        assert row["udr"][-1] == "k[[x]]/(x^4)"

    def test_cycle_rejected(self):
        with pytest.raises(NotATree):
            classify_tree(_triangle(), "e0")

    def test_domestic_tree_rejected(self):
        with pytest.raises(GrowthClassUnsupported):
            classify_tree(make_star(3, (2, 2)), "e0")
