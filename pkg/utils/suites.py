#!/usr/bin/env python3
"""
Verification suites run by `brauer_cli.py verify`. Every suite returns a list
of checks pairing an expected value with the computed one.
"""

import logging
from dataclasses import dataclass

from brauer.errors import GrowthClassUnsupported, HypothesisFailed
from brauer.families import StarStrings, koszul_diagonal_words
from brauer.homology import (
    cosyzygy,
    diagonal,
    ext1_dim,
    locate,
    mouths,
    omega_stable_simple_component,
    omega_swaps_tubes,
    section_diagonals,
    stable_end_dim,
    stable_hom_dim,
    syzygy,
)
from brauer.presentation import make_koszul, make_star, present, star_parameters
from brauer.ribbon import (
    derived_equivalent,
    double_stepped_walks,
    exceptional_edges,
    face_perimeters,
    faces,
    green_walks,
    is_bipartite,
    star_reduce,
)
from brauer.strmod import (
    StringModule,
    canonical_homs,
    enumerate_words,
    oracle_hom_dim,
    oracle_stable_hom_dim,
    oracle_syzygy_dim,
    radical_word,
    simple_module,
    string_rep,
)
from brauer.udr import Ladder, UDRClass, classify, classify_tree, verify_ladder
from utils.graph_io import expand_tree
from utils.random_trees import random_corpus

logger = logging.getLogger(__name__)


@dataclass
class Check:
    name: str
    expected: object
    computed: object

    @property
    def ok(self):
        return self.expected == self.computed


def _star(n, mbar):
    return present(make_star(n, mbar))


# -- walks ----------------------------------------------------------------------------


def suite_walks(config):
    checks = []
    for k, tree in enumerate(random_corpus(config.seed)):
        e = tree.num_edges
        walks = green_walks(tree)
        doubles = double_stepped_walks(tree)
        computed = (
            [len(w) for w in walks],
            sorted(len(w) for w in doubles),
            len(faces(tree)),
            face_perimeters(tree),
            is_bipartite(tree),
            derived_equivalent(tree, star_reduce(tree)).equivalent,
        )
        expected = ([2 * e], [e, e], 1, [2 * e], True, True)
        checks.append(Check(f"tree #{k} ({e} edges)", expected, computed))
    return checks


# -- canonical homs against the oracle ---------------------------------------------------


def suite_homs_oracle(config):
    checks = []
    for n, mbar in ((2, (2, 2, 2)), (2, (2, 3))):
        pres = _star(n, mbar)
        modules = enumerate_words(pres, config.max_word_len)
        reps = {m.label: string_rep(m) for m in modules}
        mismatches = 0
        for M in modules:
            for N in modules:
                if len(canonical_homs(M, N)) != oracle_hom_dim(reps[M.label], reps[N.label]):
                    mismatches += 1
                    logger.warning("Hom mismatch %s -> %s", M, N)
        checks.append(Check(f"{pres.name}: {len(modules)} modules, hom mismatches", 0, mismatches))

    for pres in (_star(2, (2, 2, 2)), _star(2, (2, 3)), make_koszul(2, 2, 3)):
        modules = [m for m in enumerate_words(pres, min(config.max_word_len, 3)) if not m.is_projective]
        mismatches = 0
        for M in modules:
            for N in modules:
                if stable_hom_dim(M, N) != oracle_stable_hom_dim(M, N):
                    mismatches += 1
                    logger.warning("Stable Hom mismatch %s -> %s", M, N)
        checks.append(Check(f"{pres.name}: {len(modules)} modules, stable hom mismatches", 0, mismatches))
    return checks


# -- syzygies ---------------------------------------------------------------------------------


def suite_syzygy(config):
    checks = []
    for n, mbar in ((2, (2, 2, 2)), (3, (2, 2, 2, 2))):
        pres = _star(n, mbar)
        strings = StarStrings(pres)
        _, _, i = star_parameters(pres)
        for l in range(i, n + 1):
            m0 = mbar[0]
            expected = StringModule(pres, strings.cat(strings.x(0, l), *[strings.A(l)] * (m0 - 1)))
            computed = syzygy(StringModule(pres, strings.x(l, n)))
            checks.append(Check(f"{pres.name}: Ω(x_{l},{n})", expected.label, computed.label))
        for q in pres.q_vertices:
            rad, _ = radical_word(pres, q)
            checks.append(Check(f"{pres.name}: Ω(S({q})) = rad P({q})",
                                StringModule(pres, rad).label, syzygy(simple_module(pres, q)).label))
    pres = _star(2, (2, 2, 2))
    bad = 0
    tested = 0
    for M in enumerate_words(pres, min(config.max_word_len, 6)):
        if M.is_projective:
            continue
        tested += 1
        omega = syzygy(M)
        if omega.dim != oracle_syzygy_dim(M) or cosyzygy(omega) != M or syzygy(cosyzygy(M)) != M:
            bad += 1
            logger.warning("Syzygy check failed for %s", M)
    checks.append(Check(f"{pres.name}: dimension and inverse identities on {tested} modules", 0, bad))
    return checks


# -- tubes -------------------------------------------------------------------------------------


def suite_tubes(config):
    checks = []
    algebras = [_star(2, (2, 2, 2)), _star(2, (2, 3)), make_koszul(2, 2, 3)]
    for pres in algebras:
        e = pres.graph.num_edges
        tubes = double_stepped_walks(pres.graph)
        checks.append(Check(f"{pres.name}: tube ranks", [e, e], sorted(len(t) for t in tubes)))
        checks.append(Check(f"{pres.name}: boundary modules", 2 * e, len({m.module for m in mouths(pres)})))
        checks.append(Check(f"{pres.name}: Ω swaps tubes", True, omega_swaps_tubes(pres).ok))
        if pres.family == "star":
            n, _, i = star_parameters(pres)
            checks.append(Check(f"{pres.name}: exceptional edges",
                                [str(k) for k in range(i, n + 1)], sorted(exceptional_edges(pres.graph), key=int)))
    try:
        omega_swaps_tubes(_star(3, (2, 2)))
        domestic = "accepted"
    except GrowthClassUnsupported:
        domestic = "rejected"
    checks.append(Check("W_3,(2,2): one-domestic algebra", "rejected", domestic))
    return checks


# -- tube diagonals ---------------------------------------------------------------------------


def _tube_table(pres, start, side):
    n, _, _ = star_parameters(pres)
    strings = StarStrings(pres)
    checks = []
    sequence = diagonal(start, n + 1, side=side)
    for d in range(n + 1):
        closed = StringModule(pres, strings.tube_diagonal(d))
        module = sequence[d] if d < len(sequence) else None
        checks.append(Check(f"{pres.name}: diagonal position {d}", closed.label,
                            module.label if module else None))
        checks.append(Check(f"{pres.name}: d of {closed.label}", d, locate(closed).d))
        checks.append(Check(f"{pres.name}: stable End of {closed.label}", 1, stable_end_dim(closed)))
        checks.append(Check(f"{pres.name}: Ext^1 of {closed.label}", int(d == n), ext1_dim(closed)))
        ring = UDRClass.power_series() if d == n else UDRClass.base()
        udr = classify(closed).udr
        checks.append(Check(f"{pres.name}: UDR of {closed.label}", str(ring), str(udr)))
        checks.append(Check(f"{pres.name}: UDR of Ω({closed.label})", str(udr),
                            str(classify(syzygy(closed)).udr)))
    for p in range(n + 1):
        beyond = StringModule(pres, strings.beyond_diagonal(p))
        checks.append(Check(f"{pres.name}: stable End of N_{p} at least 2", True, stable_end_dim(beyond) >= 2))
    return checks


def suite_case1(config):
    pres = _star(2, (2, 2, 2))
    n, _, _ = star_parameters(pres)
    return _tube_table(pres, simple_module(pres, str(n)), "left")


def suite_case2(config):
    pres = _star(1, (2, 2, 2))
    strings = StarStrings(pres)
    return _tube_table(pres, StringModule(pres, strings.z(strings.n)), "left")


# -- Koszul ----------------------------------------------------------------------------------------


def suite_koszul(config):
    pres = make_koszul(2, 2, 3)
    n = pres.params["n"]
    e = pres.graph.num_edges
    star = star_reduce(pres.graph)
    checks = [
        Check("Koszul(2,2,3): star reduction", "W_2,(2,3)", star.name),
        Check("Koszul(2,2,3): derived equivalent to its star", True, derived_equivalent(pres.graph, star).equivalent),
        Check("Koszul(2,2,3): tube ranks", [e, e], sorted(len(t) for t in double_stepped_walks(pres.graph))),
        Check("Koszul(2,2,3): Ω swaps tubes", True, omega_swaps_tubes(pres).ok),
    ]
    for d, word in enumerate(koszul_diagonal_words(pres)):
        module = StringModule(pres, word)
        checks.append(Check(f"Koszul(2,2,3): d of {module.label}", d, locate(module).d))
        ring = UDRClass.power_series() if d == n else UDRClass.base()
        checks.append(Check(f"Koszul(2,2,3): UDR of {module.label}", str(ring), str(classify(module).udr)))
        checks.append(Check(f"Koszul(2,2,3): UDR of Ω({module.label})", str(ring), str(classify(syzygy(module)).udr)))
    return checks


# -- components of non-periodic simples ------------------------------------------------------------


def suite_section4(config):
    checks = []
    pres = _star(2, (2, 2, 2))
    strings = StarStrings(pres)
    n = strings.n
    expected_rings = [str(UDRClass.truncated(2)), str(UDRClass.base()), str(UDRClass.power_series())]
    for section in section_diagonals(pres):
        t = int(section.t)
        checks.append(Check(f"{pres.name}: component of S({t}) Ω-stable", True,
                            omega_stable_simple_component(pres, t)))
        for j, module in enumerate(section.modules):
            closed = StringModule(pres, strings.simple_diagonal(t, j))
            checks.append(Check(f"{pres.name}: S({t}) diagonal position {j}", closed.label, module.label))
            checks.append(Check(f"{pres.name}: stable End at {j}", 1, stable_end_dim(module)))
            checks.append(Check(f"{pres.name}: Ext^1 at {j}", int(j in (0, n)), ext1_dim(module)))
            checks.append(Check(f"{pres.name}: UDR at {j}", expected_rings[j], str(classify(module).udr)))
            checks.append(Check(f"{pres.name}: UDR of Ω at {j}", expected_rings[j], str(classify(syzygy(module)).udr)))
        after = StringModule(pres, strings.simple_diagonal(t, n + 1))
        checks.append(Check(f"{pres.name}: stable End after the diagonal", True, stable_end_dim(after) >= 2))
        checks.append(Check(f"{pres.name}: Ω(M_0) = S({t})", simple_module(pres, str(t)).label,
                            syzygy(section.modules[0]).label))
        checks.append(Check(f"{pres.name}: Ω(M_n) = D_n",
                            StringModule(pres, strings.simple_syzygy_diagonal(t, n)).label,
                            syzygy(section.modules[n]).label))

    pres = _star(2, (2, 3))
    strings = StarStrings(pres)
    checks.append(Check(f"{pres.name}: component of S(0) Ω-stable", True, omega_stable_simple_component(pres, 0)))
    for section in section_diagonals(pres):
        for j, module in enumerate(section.modules):
            closed = StringModule(pres, strings.exceptional_diagonal(j))
            checks.append(Check(f"{pres.name}: diagonal position {j}", closed.label, module.label))
            ring = str(classify(module).udr)
            checks.append(Check(f"{pres.name}: UDR of Ω at {j}", ring, str(classify(syzygy(module)).udr)))
    checks.append(Check(f"{pres.name}: UDR of S(0)", "k[[x]]/(x^3)", str(classify(simple_module(pres, "0")).udr)))
    m0 = StringModule(pres, strings.x(1, 0))
    checks.append(Check(f"{pres.name}: UDR of M_0", "k[[x]]/(x^2)", str(classify(m0).udr)))
    return checks


# -- UDR tables ---------------------------------------------------------------------------------------


def suite_udr_tables(config):
    checks = []
    for suite in (suite_case1, suite_case2, suite_koszul):
        checks += [c for c in suite(config) if "UDR" in c.name]
    checks += [c for c in suite_section4(config) if "UDR" in c.name]

    pres = _star(2, (2, 3))
    s0 = simple_module(pres, "0")
    verdict = verify_ladder(s0, Ladder(base="e0", words=["-d0", "-d0 -d0"]))
    checks.append(Check("finite ladder for S(0) over W_2,(2,3)", "k[[x]]/(x^3)", str(verdict.udr)))
    try:
        verify_ladder(s0, Ladder(base="e0", words=["-d0", "e1"]))
        broken = "accepted"
    except HypothesisFailed as e:
        broken = e.condition
    checks.append(Check("broken ladder rejected", "epimorphism ε_l", broken))

    pres = _star(2, (2, 2, 2))
    word = "-d0 a0 -d1 a1"
    module = StringModule.parse(pres, word)
    verdict = verify_ladder(module, Ladder(prefix=word, block="a2 " + word), config.probe_depth)
    checks.append(Check("template ladder for y_0 x_2,2", "k[[x]]", str(verdict.udr)))

    tree = expand_tree({"edges": [["u", "c"], ["c", "v"], ["c", "w"]],
                        "multiplicities": {"u": 2, "v": 2, "c": 2}}, "tree_2221")
    result = classify_tree(tree, word)
    checks.append(Check("tree (2,2,2,1): module at d = |E| - 1", "k[[x]]", str(result.classification.udr)))
    result = classify_tree(tree, "e2")
    checks.append(Check("tree (2,2,2,1): boundary module", "k", str(result.classification.udr)))
    return checks


SUITES = {
    "walks": suite_walks,
    "homs-oracle": suite_homs_oracle,
    "syzygy": suite_syzygy,
    "tubes": suite_tubes,
    "case1": suite_case1,
    "case2": suite_case2,
    "koszul": suite_koszul,
    "section4": suite_section4,
    "udr-tables": suite_udr_tables,
}
