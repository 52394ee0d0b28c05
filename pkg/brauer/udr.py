"""
Universal deformation rings of string modules with stable End = k.

The classifier recomputes every quantity it relies on (stable End, Ext^1,
periodicity, tube distance, diagonal position) and records them in an
evidence trail before applying a ring table.
"""

import logging
from dataclasses import dataclass, field

from brauer.errors import GrowthClassUnsupported, HypothesisFailed, NotATree
from brauer.homology import (
    require_string,
    ext1_dim,
    find_on_section,
    is_periodic,
    locate,
    section_diagonals,
    stable_end_dim,
    stable_hom_dim,
    syzygy,
)
from brauer.presentation import present, star_parameters
from brauer.ribbon import GrowthClass, growth_class, is_tree, star_reduce
from brauer.strmod import StringModule, canonical_homs, compose, concat, make_word, parse_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UDRClass:
    """One of k, k[[x]], k[[x]]/(x^N) or unknown"""
    variant: str
    n: int = None
    reason: str = ""

    @classmethod
    def base(cls):
        return cls("base")

    @classmethod
    def power_series(cls):
        return cls("power_series")

    @classmethod
    def truncated(cls, n):
        if n < 1:
            raise ValueError(f"truncation order must be positive, got {n}")
        return cls.base() if n == 1 else cls("truncated", n)

    @classmethod
    def unknown(cls, reason):
        return cls("unknown", reason=reason)

    @property
    def is_ring(self):
        return self.variant != "unknown"

    def __str__(self):
        if self.variant == "base":
            return "k"
        if self.variant == "power_series":
            return "k[[x]]"
        if self.variant == "truncated":
            return f"k[[x]]/(x^{self.n})"
        return f"unknown ({self.reason})"


@dataclass(frozen=True)
class Evidence:
    rule: str
    quantity: str
    value: object


@dataclass
class Classification:
    module: str
    udr: UDRClass
    evidence: list = field(default_factory=list)
    address: object = None

    def note(self, rule, quantity, value):
        self.evidence.append(Evidence(rule, quantity, value))
        logger.debug("%s: %s = %s (%s)", self.module, quantity, value, rule)

    def export(self):
        return {
            "module": self.module,
            "udr": str(self.udr),
            "address": self.address.export() if self.address is not None else None,
            "evidence": [{"rule": e.rule, "quantity": e.quantity, "value": str(e.value)} for e in self.evidence],
        }


def _section_ring(section, j, n, mbar):
    if section.case == "simple":
        if j == 0:
            return UDRClass.truncated(2)
        return UDRClass.power_series() if j == n else UDRClass.base()
    if j == 0:
        return UDRClass.truncated(2)
    return UDRClass.truncated(mbar[1]) if j == n else UDRClass.base()


def classify(M, bound=None, depth=None):
    """UDR of a string module over a generalized Brauer tree algebra"""
    require_string(M)
    pres = M.presentation
    result = Classification(M.label, UDRClass.unknown("not classified"))

    end = stable_end_dim(M)
    result.note("stable End", "dim stable End(M)", end)
    if end != 1:
        result.udr = UDRClass.unknown("stable endomorphism ring not k")
        return result

    ext = ext1_dim(M)
    result.note("tangent space", "dim Ext^1(M, M)", ext)
    if ext == 0:
        result.udr = UDRClass.base()
        return result

    periodic, period = is_periodic(M, bound)
    result.note("periodicity", "Ω-period", period if periodic else "none")
    if periodic:
        if not is_tree(pres.graph):
            result.udr = UDRClass.unknown("periodic module over an algebra whose graph is not a tree")
            return result
        address = locate(M, bound)
        result.address = address
        edges = pres.graph.num_edges
        result.note("tube distance", "d_M", address.d)
        result.note("tube distance", "|E| - 1", edges - 1)
        if address.d is None or address.d > edges - 1:
            result.udr = UDRClass.unknown("no diagonal position in the tube")
        elif address.d == edges - 1:
            result.udr = UDRClass.power_series()
        else:
            result.udr = UDRClass.base()
        return result

    hit = find_on_section(M, depth)
    if hit is None:
        result.udr = UDRClass.unknown("outside classified cases")
        return result
    section, j, k = hit
    n, mbar, _ = star_parameters(pres)
    result.note("Ω-stable simple component", "simple", f"S({section.t}) [{section.case}]")
    result.note("Ω-stable simple component", "diagonal position", j)
    result.note("Ω-invariance", "Ω shift", k)
    result.udr = _section_ring(section, j, n, mbar)
    return result


# -- ladders ---------------------------------------------------------------------------


@dataclass
class Ladder:
    """
    Chain W_0 ⊂ W_1 ⊂ ... of string modules. Either a finite list of words
    after the base, or a template prefix·block^l.
    """
    base: str = None
    words: list = None
    prefix: str = None
    block: str = None

    @property
    def is_template(self):
        return self.block is not None

    def module(self, pres, l):
        if self.is_template:
            prefix = parse_word(self.prefix, pres)
            if l == 0:
                return StringModule(pres, prefix)
            block = parse_word(self.block, pres)
            return StringModule(pres, concat(pres, prefix, *[block] * l))
        text = self.base if l == 0 else self.words[l - 1]
        return StringModule(pres, parse_word(text, pres))


@dataclass
class LadderVerdict:
    udr: UDRClass
    depth: int
    proved: bool
    notes: list = field(default_factory=list)

    @property
    def label(self):
        return "proved" if self.proved else f"verified to depth {self.depth}"


def _interval_module(W, positions):
    """Submodule on a contiguous set of basis positions, or None"""
    if not positions:
        return None
    u, v = min(positions), max(positions)
    if len(positions) != v - u + 1:
        return None
    pres = W.presentation
    return StringModule(pres, make_word(pres, W.word.letters[u:v], W.vertices[u]))


def _power(sigma, l):
    result = sigma
    for _ in range(l - 1):
        result = compose(result, sigma)
    return result


def _ladder_step(M, lower, upper, l):
    """ι_l, ε_l with ker σ_l = M and Im σ_l^l = M, or HypothesisFailed"""
    epis = [h for h in canonical_homs(upper, lower) if h.rank == lower.dim]
    if not epis:
        raise HypothesisFailed("epimorphism ε_l", l, f"no canonical surjection {upper} -> {lower}")
    monos = [h for h in canonical_homs(lower, upper) if h.rank == lower.dim]
    if not monos:
        raise HypothesisFailed("monomorphism ι_l", l, f"no canonical injection {lower} -> {upper}")
    kernel_seen = False
    for eps in epis:
        for iota in monos:
            sigma = compose(eps.pairs, iota.pairs)
            kernel = set(range(upper.dim)) - {c for c, _ in sigma}
            if _interval_module(upper, kernel) != M:
                continue
            kernel_seen = True
            image = {d for _, d in _power(sigma, l)}
            if _interval_module(upper, image) == M:
                return eps, iota
    if not kernel_seen:
        raise HypothesisFailed("ker σ_l ≅ M", l)
    raise HypothesisFailed("Im σ_l^l ≅ M", l)


def verify_ladder(M, ladder, depth=None):
    """Check the ladder conditions and return the ring they imply"""
    pres = M.presentation
    ext = ext1_dim(M)
    if ext != 1:
        raise HypothesisFailed("dim Ext^1(M, M) = 1", None, f"got {ext}")
    if ladder.module(pres, 0) != M:
        raise HypothesisFailed("W_0 ≅ M", 0)
    if ladder.is_template:
        if depth is None:
            depth = 2 * pres.graph.num_edges + 2
        top = depth
    else:
        top = len(ladder.words)
    notes = ["maximality of the ladder is assumed, not checked"]
    lower = ladder.module(pres, 0)
    for l in range(1, top + 1):
        upper = ladder.module(pres, l)
        _ladder_step(M, lower, upper, l)
        logger.debug("Ladder step %d ok: %s -> %s", l, lower, upper)
        lower = upper
    if ladder.is_template:
        notes.append(f"template repeats its block; steps 1..{top} checked")
        return LadderVerdict(UDRClass.power_series(), top, False, notes)
    last = lower
    homs = len(canonical_homs(last, M))
    if homs != 1:
        raise HypothesisFailed("dim Hom(W_N, M) = 1", top, f"got {homs}")
    ext_last = stable_hom_dim(syzygy(last), M)
    if ext_last != 0:
        raise HypothesisFailed("Ext^1(W_N, M) = 0", top, f"got {ext_last}")
    return LadderVerdict(UDRClass.truncated(top + 1), top, True, notes)


# -- trees -----------------------------------------------------------------------------


@dataclass
class TreeClassification:
    classification: Classification
    star: str
    note: str


def _check_tree(graph):
    if not is_tree(graph):
        raise NotATree(f"graph {graph.name or '<unnamed>'} has a cycle")
    growth = growth_class(graph)
    if growth != GrowthClass.NON_POLYNOMIAL:
        raise GrowthClassUnsupported(f"growth class {growth.value} is not covered")


def classify_tree(graph, text, bound=None, depth=None):
    """Classify a module given by a word over the star of a generalized Brauer tree"""
    _check_tree(graph)
    star = present(star_reduce(graph))
    result = classify(StringModule.parse(star, text), bound, depth)
    note = (f"computed over {star.name}; the ring is the same for the tree algebra, "
            f"which is derived and hence stably Morita equivalent to it")
    return TreeClassification(result, star.name, note)


def tree_component_summary(graph, depth=None):
    """UDR pattern along the diagonal of every Ω-stable component of a non-periodic simple"""
    _check_tree(graph)
    star = present(star_reduce(graph))
    rows = []
    for section in section_diagonals(star):
        rings = [str(classify(module, depth=depth).udr) for module in section.modules]
        rows.append({"simple": section.t, "case": section.case, "orbits": len(section.modules), "udr": rings})
    return {"star": star.name, "components": rows}
