"""
Unit tests for quiver presentations of Brauer graph algebras.

Core claims:
    - one q-vertex per edge and one arrow per non-truncated half-edge
    - relations of Types I, II and III are listed completely
    - projectives are uniserial exactly at truncated edges
    - star and Koszul constructors reject inadmissible parameters
"""

import pytest

from brauer.errors import BadMultiplicityVector
from brauer.presentation import make_koszul, make_star, present, star_parameters
from brauer.strmod import check_relations, projective_rep


class TestStarPresentation:

    def test_quiver(self, w222):
        assert w222.q_vertices == ("0", "1", "2")
        assert sorted(w222.arrows) == ["a0", "a1", "a2", "d0", "d1"]
        assert (w222.source("a0"), w222.target("a0")) == ("0", "1")
        assert (w222.source("d1"), w222.target("d1")) == ("1", "1")

    def test_signs(self, w222):
        assert w222.sigma("a0") == 1
        assert w222.epsilon("a0") == -1
        assert w222.sigma("d0") == -1
        assert w222.epsilon("d0") == 1

    def test_next_arrow(self, w222):
        assert w222.next_arrow("a2") == "a0"
        assert w222.next_arrow("d0") == "d0"

    def test_special_cycle(self, w222):
        assert w222.special_cycles[("z0", "1")] == ("a1", "a2", "a0")

    def test_relation_counts(self, w222):
        relations = w222.relations
        assert len(relations["I"]) == 2
        assert len(relations["II"]) == 5
        assert sorted(relations["III"]) == [("a0", "d1"), ("a2", "d0"), ("d0", "a0"), ("d1", "a1")]

    def test_projectives(self, w222):
        assert w222.projective("2").is_uniserial
        assert w222.projective("2").dim == 7
        assert not w222.projective("0").is_uniserial
        assert w222.projective("0").dim == 8
        assert w222.algebra_dimension() == 23

    def test_nonzero_paths(self, w222):
        assert w222.is_nonzero_path(("a0", "a1", "a2", "a0", "a1"))
        assert not w222.is_nonzero_path(("a0", "a1", "a2", "a0", "a1", "a2"))
        assert w222.is_nonzero_path(("a0", "a1", "a2", "a0", "a1", "a2"), socle=False)
        assert not w222.is_nonzero_path(("a0", "d1"))

    @pytest.mark.parametrize("q", ["0", "1", "2"])
    def test_projective_rep_satisfies_relations(self, w222, q):
        rep, _ = projective_rep(w222, q)
        assert check_relations(w222, rep) == []

    def test_star_parameters(self, w222):
        assert star_parameters(w222) == (2, (2, 2, 2), 2)

    def test_export_lists_everything(self, w222):
        data = w222.export()
        assert data["name"] == "W_2,(2,2,2)"
        assert len(data["arrows"]) == 5
        assert set(data["relations"]) == {"I", "II", "III"}


class TestConstructors:

    @pytest.mark.parametrize("n,mbar", [
        (2, (3, 2)),
        (2, (1, 2)),
        (1, (2, 2, 2, 2)),
        (-1, (2,)),
    ])
    def test_bad_multiplicity_vector(self, n, mbar):
        with pytest.raises(BadMultiplicityVector):
            make_star(n, mbar)

    def test_star_without_multiplicities(self):
        graph = make_star(1, ())
        assert graph.multiplicities == {"z0": 1, "z1": 1, "z2": 1}
        assert graph.name == "W_1,()"

    def test_koszul_shape(self, koszul):
        assert koszul.q_vertices == ("0", "1", "2")
        assert sorted(koszul.arrows) == ["a1", "a2", "b1", "b2", "d", "g"]
        assert koszul.params["lambda"] == 1

    def test_koszul_rejects_small_parameters(self):
        with pytest.raises(BadMultiplicityVector):
            make_koszul(0, 2, 3)

    def test_truncated_vertices_carry_no_arrow(self):
        pres = present(make_star(1, (2,)))
        assert sorted(pres.arrows) == ["a0", "a1"]
