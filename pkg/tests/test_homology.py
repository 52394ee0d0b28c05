"""
Unit tests for syzygies, hooks and the stable AR components.

Core claims:
    - Ω(S(t)) is the radical of P(t) and Ω^-1 undoes Ω
    - syzygy dimensions agree with the kernel of the projective cover
    - stable Hom agrees with the oracle and stable End is Ω-invariant
    - the AR translate equals Ω² on every non-projective string
    - the diagonal through S(n) is built by adding hooks on the left
    - every half-edge gives one boundary module and Ω swaps the two tubes
    - modules on the diagonal sit at the expected distance from the mouth
    - components of the non-periodic simples carry n+1 modules with stable End = k
"""

import pytest

from brauer.errors import BandModule, GrowthClassUnsupported, PeriodicSimple, ProjectiveInput
from brauer.homology import (
    boundary_modules,
    cohooks,
    component_window,
    cosyzygy,
    diagonal,
    ext1_dim,
    find_on_section,
    hooks,
    is_periodic,
    locate,
    mouths,
    omega_power,
    omega_stable_simple_component,
    omega_swaps_tubes,
    section_diagonals,
    stable_end_dim,
    stable_hom_dim,
    syzygy,
    tau,
)
from brauer.presentation import make_star, present
from brauer.strmod import (
    StringModule,
    enumerate_words,
    oracle_stable_hom_dim,
    oracle_syzygy_dim,
    parse_word,
    simple_module,
)


# -- Helpers -----------------------------------------------------------------

def _module(pres, text):
    return StringModule.parse(pres, text)


Y0_X22 = "-d0 a0 -d1 a1"


# -- Syzygies ----------------------------------------------------------------

class TestSyzygy:

    def test_simple_of_uniserial_projective(self, w222):
        assert syzygy(simple_module(w222, "2")) == _module(w222, "a0 a1 a2 a0 a1")

    def test_cosyzygy_of_simple(self, w222):
        assert cosyzygy(simple_module(w222, "0")) == _module(w222, "-d0 a0 a1 a2 a0 a1")

    @pytest.mark.parametrize("text", ["e0", "e1", "a0 a1", Y0_X22, "-d1 a1 a2"])
    def test_inverse_identities(self, w222, text):
        module = _module(w222, text)
        assert cosyzygy(syzygy(module)) == module
        assert syzygy(cosyzygy(module)) == module

    @pytest.mark.parametrize("text", ["e0", "e2", "a0 a1", Y0_X22])
    def test_dimension_matches_cover_kernel(self, w222, text):
        module = _module(w222, text)
        assert syzygy(module).dim == oracle_syzygy_dim(module)

    def test_omega_power(self, w222):
        simple = simple_module(w222, "2")
        assert omega_power(simple, 2) == syzygy(syzygy(simple))
        assert omega_power(omega_power(simple, 3), -3) == simple

    def test_projective_rejected(self, w222):
        with pytest.raises(ProjectiveInput):
            syzygy(_module(w222, "a2 a0 a1 a2 a0 a1"))


class TestStableInvariants:

    def test_simple_at_the_mouth(self, w222):
        simple = simple_module(w222, "2")
        assert stable_end_dim(simple) == 1
        assert ext1_dim(simple) == 0

    def test_end_of_the_diagonal(self, w222):
        module = _module(w222, Y0_X22)
        assert stable_end_dim(module) == 1
        assert ext1_dim(module) == 1

    def test_boundary_modules_have_period_six(self, w222):
        assert is_periodic(simple_module(w222, "2")) == (True, 6)

    @pytest.mark.parametrize("pres_name", ["w222", "w23", "koszul"])
    def test_stable_hom_matches_oracle(self, request, pres_name):
        pres = request.getfixturevalue(pres_name)
        modules = [m for m in enumerate_words(pres, 2) if not m.is_projective]
        for M in modules:
            for N in modules:
                assert stable_hom_dim(M, N) == oracle_stable_hom_dim(M, N), (M, N)

    def test_stable_end_is_omega_invariant(self, w222):
        for module in enumerate_words(w222, 4):
            if module.is_projective:
                continue
            assert stable_end_dim(syzygy(module)) == stable_end_dim(module), module


# -- Hooks and diagonals -----------------------------------------------------

class TestHooks:

    def test_left_diagonal_from_simple(self, w222):
        sequence = diagonal(simple_module(w222, "2"), 4, side="left")
        expected = ["e2", "-d1 a1", Y0_X22, "a2 " + Y0_X22]
        assert sequence == [_module(w222, text) for text in expected]

    def test_translate_of_simple(self, w222):
        assert tau(simple_module(w222, "2")) == _module(w222, "d0")

    def test_translate_is_omega_squared_at_the_mouth(self, w222):
        for module in boundary_modules(w222):
            assert tau(module) == syzygy(syzygy(module))

    @pytest.mark.parametrize("text", ["d0", "d1", "a0 a1 a2 a0 a1", "a1 a2 a0 a1 a2"])
    def test_translate_of_direct_words(self, w222, text):
        module = _module(w222, text)
        assert tau(module) == syzygy(syzygy(module))

    def test_translate_is_omega_squared(self, w222):
        for module in enumerate_words(w222, 6):
            if module.is_projective:
                continue
            assert tau(module) == syzygy(syzygy(module)), module

    def test_hooks_and_cohooks_are_inverse(self, w222):
        module = _module(w222, "-d1 a1")
        for successor in hooks(module):
            assert module in cohooks(successor)


# -- Tubes -------------------------------------------------------------------

class TestTubes:

    def test_one_boundary_module_per_half_edge(self, w222):
        assert len(mouths(w222)) == 6
        assert len(set(boundary_modules(w222))) == 6
        assert {m.rank for m in mouths(w222)} == {3}

    def test_omega_walks_the_mouths(self, w222):
        by_half_edge = {m.half_edge: m for m in mouths(w222)}
        for mouth in mouths(w222):
            image = by_half_edge[w222.graph.step(mouth.half_edge)]
            assert syzygy(mouth.module) == image.module
            assert image.tube != mouth.tube

    def test_omega_swaps_tubes(self, w222, w23, koszul):
        for pres in (w222, w23, koszul):
            assert omega_swaps_tubes(pres).ok

    def test_presentation_tables_are_bounded(self):
        assert mouths.cache_info().maxsize == 16
        assert section_diagonals.cache_info().maxsize == 16

    def test_domestic_star_rejected(self):
        with pytest.raises(GrowthClassUnsupported):
            omega_swaps_tubes(present(make_star(3, (2, 2))))

    @pytest.mark.parametrize("text,d", [("e2", 0), ("-d1 a1", 1), (Y0_X22, 2)])
    def test_distance_to_mouth(self, w222, text, d):
        address = locate(_module(w222, text))
        assert address.kind == "exceptional_tube"
        assert address.rank == 3
        assert address.d == d

    def test_locate_rejects_bands(self, w222):
        with pytest.raises(BandModule):
            locate(parse_word("band: -d0 a0 -d1 a1 a2", w222))


# -- Components of non-periodic simples --------------------------------------

class TestSimpleComponents:

    def test_stable_components(self, w222, w23):
        assert omega_stable_simple_component(w222, 0)
        assert omega_stable_simple_component(w222, 1)
        assert omega_stable_simple_component(w23, 0)
        with pytest.raises(PeriodicSimple):
            omega_stable_simple_component(w222, 2)

    def test_section_of_s0(self, w222):
        sections = {s.t: s for s in section_diagonals(w222)}
        assert set(sections) == {"0", "1"}
        modules = sections["0"].modules
        assert len(modules) == 3
        assert modules[0] == cosyzygy(simple_module(w222, "0"))
        assert modules[1] == _module(w222, "-d0 a0 a1 a2 a0")
        assert modules[2] == _module(w222, "-d0 a0 a1 a2 a0 -d1 a1 a2 a0 a1 a2")
        assert syzygy(modules[2]) == _module(w222, "-d1 a1 a2")

    def test_section_invariants(self, w222):
        for section in section_diagonals(w222):
            assert [stable_end_dim(m) for m in section.modules] == [1, 1, 1]
            assert [ext1_dim(m) for m in section.modules] == [1, 0, 1]

    def test_find_on_section_through_omega(self, w222):
        section, j, k = find_on_section(simple_module(w222, "0"))
        assert (section.t, j, k) == ("0", 0, 1)

    def test_exceptional_section(self, w23):
        sections = section_diagonals(w23)
        assert [s.case for s in sections] == ["exceptional"]
        assert len(sections[0].modules) == 3

    def test_non_star_has_no_sections(self, koszul):
        assert section_diagonals(koszul) == []


class TestComponentWindow:

    def test_window_around_simple(self, w222):
        window = component_window(simple_module(w222, "2"), radius=1)
        assert window.centre == "e2"
        assert len(window.nodes) > 1
        for source, target in window.arrows:
            assert source in window.nodes
            assert target in window.nodes
        assert window.to_dot().startswith("digraph component {")
