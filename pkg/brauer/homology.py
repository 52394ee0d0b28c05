"""
Syzygies, stable homomorphisms, hooks and cohooks, and addresses of string
modules in the stable Auslander-Reiten quiver.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from brauer.errors import (
    BandModule,
    BoundExceeded,
    ExceptionalEdgeArgument,
    GrowthClassUnsupported,
    PeriodicSimple,
    ProjectiveInput,
)
from brauer.families import StarStrings
from brauer.ribbon import (
    GrowthClass,
    double_stepped_walks,
    growth_class,
    simple_rad_same_component,
)
from brauer.presentation import star_parameters
from brauer.strmod import (
    Letter,
    StringModule,
    StringWord,
    canonical_homs,
    compose,
    deep_structure,
    letter_eps,
    letter_sigma,
    letter_source,
    letter_target,
    make_word,
    peak_structure,
    proj_canonical_homs,
    rank_of_rows,
)

logger = logging.getLogger(__name__)


# -- syzygies ------------------------------------------------------------------------


@dataclass
class SyzygyResult:
    """Ω(M) or Ω^-1(M) with the projective summands used to compute it"""
    input: StringWord
    cover: tuple
    summands: list

    @property
    def word(self):
        return self.summands[0]

    def module(self, presentation):
        return StringModule(presentation, self.word)


def require_string(M):
    if M.word.band:
        raise BandModule(f"band word {M.word} is not handled")
    if M.is_projective:
        raise ProjectiveInput(f"M[{M.word}] is projective")


def syzygy_word(M):
    """Kernel of the projective cover of M, read off as a string"""
    require_string(M)
    pres = M.presentation
    turns = peak_structure(M)
    letters = []
    previous_right = None
    for turn in turns:
        left = pres.branch(turn.left_half) if turn.left_half else ()
        right = pres.branch(turn.right_half) if turn.right_half else ()
        if previous_right is not None:
            branch, b = previous_right
            letters.append(Letter(branch[b], True))
            letters.append(Letter(left[turn.left]))
        letters += [Letter(a) for a in left[turn.left + 1:]]
        letters += [Letter(right[t], True) for t in range(len(right) - 1, turn.right, -1)]
        previous_right = (right, turn.right)
    cover = tuple(turn.vertex for turn in turns)
    if letters:
        word = make_word(pres, letters)
    else:
        word = make_word(pres, (), turns[0].vertex)
    logger.debug("Ω(%s) = %s over %s", M.word, word, cover)
    return SyzygyResult(M.word, cover, [word])


def cosyzygy_word(M):
    """Cokernel of the injective envelope of M, read off as a string"""
    require_string(M)
    pres = M.presentation
    turns = deep_structure(M)
    letters = []
    previous_right = None
    for turn in turns:
        left = pres.branch(turn.left_half) if turn.left_half else ()
        right = pres.branch(turn.right_half) if turn.right_half else ()
        if previous_right is not None:
            branch, b = previous_right
            letters.append(Letter(branch[len(branch) - b - 1]))
            letters.append(Letter(left[len(left) - turn.left - 1], True))
        letters += [Letter(left[t], True) for t in range(len(left) - turn.left - 2, -1, -1)]
        letters += [Letter(a) for a in right[:len(right) - turn.right - 1]]
        previous_right = (right, turn.right)
    envelope = tuple(turn.vertex for turn in turns)
    if letters:
        word = make_word(pres, letters)
    else:
        word = make_word(pres, (), turns[0].vertex)
    logger.debug("Ω^-1(%s) = %s inside %s", M.word, word, envelope)
    return SyzygyResult(M.word, envelope, [word])


def syzygy(M):
    return syzygy_word(M).module(M.presentation)


def cosyzygy(M):
    return cosyzygy_word(M).module(M.presentation)


def omega_power(M, k):
    """Ω^k(M); negative k applies Ω^-1"""
    for _ in range(abs(k)):
        M = syzygy(M) if k > 0 else cosyzygy(M)
    return M


# -- stable homomorphisms ---------------------------------------------------------------


def _factoring_rows(M, N):
    """Composites M -> P(i) -> N of canonical maps, as sparse coordinate rows"""
    rows = []
    for q in M.presentation.q_vertices:
        into = proj_canonical_homs(M, q).into
        if not into:
            continue
        out = proj_canonical_homs(N, q).out
        for phi in into:
            for psi in out:
                composite = compose(phi, psi)
                if composite:
                    rows.append({d * M.dim + c: 1 for c, d in composite})
    return rows


def stable_hom_dim(M, N):
    """dim of Hom(M, N) modulo maps factoring through projectives"""
    homs = canonical_homs(M, N)
    if not homs:
        return 0
    through = rank_of_rows(_factoring_rows(M, N), M.dim * N.dim)
    return len(homs) - through


def stable_end_dim(M):
    return stable_hom_dim(M, M)


def ext1_dim(M):
    """Ext^1(M, M) as stable Hom(Ω(M), M)"""
    return stable_hom_dim(syzygy(M), M)


def is_periodic(M, bound=None):
    """
    (True, period) when Ω^p(M) = M for some p <= bound, else (False, None).

    The default bound is 2|E|. BoundExceeded is raised when no iterate returns
    to M while the dimensions of the iterates repeat with a short period.
    """
    require_string(M)
    pres = M.presentation
    if bound is None:
        bound = 2 * pres.graph.num_edges
    current = M
    dims = []
    for p in range(1, bound + 1):
        current = syzygy(current)
        if current == M:
            logger.debug("%s has Ω-period %d", M, p)
            return True, p
        dims.append(current.dim)
    for period in range(1, bound // 2 + 1):
        if all(dims[k] == dims[k + period] for k in range(len(dims) - period)):
            raise BoundExceeded(f"{M} not periodic within {bound} steps but dimensions cycle with period {period}")
    return False, None


# -- hooks and cohooks --------------------------------------------------------------------


def _run_ok(pres, letters, x):
    run = 1
    for previous in reversed(letters):
        if previous.inverse != x.inverse:
            break
        run += 1
    return run <= pres.branch_length(x.arrow) - 1


def _extension(pres, word, letters, inverse):
    """The letter of the given direction that can be appended, if any"""
    if letters:
        vertex, eps = letter_target(pres, letters[-1]), letter_eps(pres, letters[-1])
    else:
        vertex, eps = word.vertex, word.side
    for name in pres.arrows:
        x = Letter(name, inverse)
        if letter_source(pres, x) != vertex or letter_sigma(pres, x) != -eps:
            continue
        if letters and letters[-1].arrow == name and letters[-1].inverse != inverse:
            continue
        if _run_ok(pres, letters, x):
            return x
    return None


def _truncate(pres, letters, cut):
    head = letters[:cut]
    if head:
        return make_word(pres, head)
    c = letters[cut]
    return make_word(pres, (), letter_source(pres, c), -letter_sigma(pres, c))


def _right_move(pres, word, inverse):
    """
    Add a hook (inverse=True) or a cohook at the right end; when none fits,
    delete a cohook (or a hook) instead.
    """
    letters = list(word.letters)
    x = _extension(pres, word, letters, inverse)
    if x is not None:
        letters.append(x)
        while (y := _extension(pres, word, letters, not inverse)) is not None:
            letters.append(y)
        return make_word(pres, letters)
    cuts = [k for k, c in enumerate(letters) if c.inverse != inverse]
    if not cuts:
        return None
    return _truncate(pres, letters, cuts[-1])


def _stable(pres, word):
    if word is None or word.projective:
        return None
    return StringModule(pres, word)


def _trivial_sides(M):
    if not M.is_trivial:
        return [M.word]
    return [StringWord((), M.word.vertex, s) for s in (M.word.side, -M.word.side)]


def right_hook(M):
    return _stable(M.presentation, _right_move(M.presentation, M.word, inverse=True))


def left_hook(M):
    word = _right_move(M.presentation, M.word.inverse(), inverse=True)
    return _stable(M.presentation, word.inverse() if word is not None else None)


def right_cohook(M):
    return _stable(M.presentation, _right_move(M.presentation, M.word, inverse=False))


def left_cohook(M):
    word = _right_move(M.presentation, M.word.inverse(), inverse=False)
    return _stable(M.presentation, word.inverse() if word is not None else None)


def _neighbours(M, moves):
    found = {}
    for word in _trivial_sides(M):
        side = StringModule(M.presentation, word)
        for move in moves:
            other = move(side)
            if other is not None:
                found.setdefault(other.label, other)
    return [found[k] for k in sorted(found)]


def hooks(M):
    """Targets of the irreducible maps starting at M"""
    return _neighbours(M, (right_hook, left_hook))


def cohooks(M):
    """Sources of the irreducible maps ending at M"""
    return _neighbours(M, (right_cohook, left_cohook))


def tau(M):
    """AR translate: cohooks removed or added on both ends"""
    for word in _trivial_sides(M):
        side = StringModule(M.presentation, word)
        for first, second in ((right_cohook, left_cohook), (left_cohook, right_cohook)):
            step = first(side)
            if step is not None:
                result = second(step)
                if result is not None:
                    return result
    return None


def diagonal(start, length, side="left"):
    """
    Sectional path start, start_h, (start_h)_h, ... of `length` modules, adding
    hooks on the given side. A trivial start takes the side marker that admits a hook.
    """
    move = left_hook if side == "left" else right_hook
    current = start
    if start.is_trivial:
        for word in _trivial_sides(start):
            candidate = StringModule(start.presentation, word)
            step = move(candidate)
            if step is not None and not step.is_trivial:
                current = candidate
                break
    sequence = [current]
    while len(sequence) < length:
        current = move(current)
        if current is None:
            break
        sequence.append(current)
    logger.debug("Diagonal from %s: %s", start, [m.label for m in sequence])
    return sequence


# -- exceptional tubes ---------------------------------------------------------------------


@dataclass(frozen=True)
class Mouth:
    """Boundary module of an exceptional tube, indexed by a half-edge"""
    half_edge: str
    module: StringModule
    tube: int
    rank: int


@lru_cache(maxsize=16)
def mouths(pres):
    walks = double_stepped_walks(pres.graph)
    result = []
    for h in pres.graph.half_edges:
        tube = next(k for k, walk in enumerate(walks, start=1) if h in walk)
        if h in pres.arrow_at:
            word = make_word(pres, [Letter(a) for a in pres.branch(h)[1:]])
        else:
            word = make_word(pres, (), pres.graph.edge_of(h))
        result.append(Mouth(h, StringModule(pres, word), tube, len(walks[tube - 1])))
    return result


def boundary_modules(pres):
    """Simple uniserial modules and maximal uniserial submodules of projectives"""
    return [m.module for m in mouths(pres)]


@dataclass(frozen=True)
class ComponentAddress:
    kind: str
    rank: int = None
    tube_id: int = None
    d: int = None
    boundary: str = None
    simple: str = None
    diagonal: int = None
    omega_shift: int = None

    def export(self):
        return {k: v for k, v in self.__dict__.items() if v is not None}

    def __str__(self):
        if self.kind == "exceptional_tube":
            return f"tube {self.tube_id} (rank {self.rank}), d={self.d}"
        if self.diagonal is not None:
            return f"ZA∞∞ of S({self.simple}), diagonal position {self.diagonal}, Ω^{self.omega_shift}"
        return "ZA∞∞"


def _distance_to_mouth(M, table):
    limit = M.dim + 2 * M.presentation.graph.num_edges
    best = None
    for move in (right_cohook, left_cohook):
        current, steps = M, 0
        while current is not None and steps <= limit:
            if current in table:
                if best is None or steps < best[0]:
                    best = (steps, table[current])
                break
            current = move(current)
            steps += 1
    return best


def locate(M, bound=None):
    """Tube and distance to the mouth, or the ZA∞∞ address of M"""
    if isinstance(M, StringWord):
        if M.band:
            raise BandModule(f"band word {M} has no address here")
        raise TypeError("locate expects a StringModule")
    require_string(M)
    pres = M.presentation
    periodic, _ = is_periodic(M, bound)
    if periodic:
        table = {}
        for mouth in mouths(pres):
            table.setdefault(mouth.module, mouth)
        found = _distance_to_mouth(M, table)
        if found is not None:
            d, mouth = found
            return ComponentAddress("exceptional_tube", rank=mouth.rank, tube_id=mouth.tube,
                                    d=d, boundary=mouth.module.label)
        logger.warning("Periodic %s has no boundary ancestor within bound", M)
        return ComponentAddress("exceptional_tube")
    hit = find_on_section(M)
    if hit is not None:
        section, j, k = hit
        return ComponentAddress("za_infinity_infinity", simple=section.t, diagonal=j, omega_shift=k)
    return ComponentAddress("za_infinity_infinity")


@dataclass
class SwapWitness:
    ok: bool
    rows: list = field(default_factory=list)


def omega_swaps_tubes(pres):
    """Whether Ω sends every boundary module into the other exceptional tube"""
    if growth_class(pres.graph) != GrowthClass.NON_POLYNOMIAL:
        raise GrowthClassUnsupported(f"{pres.name} is of {growth_class(pres.graph).value} growth")
    table = {}
    for mouth in mouths(pres):
        table.setdefault(mouth.module, mouth)
    rows = []
    for mouth in mouths(pres):
        image = syzygy(mouth.module)
        target = table.get(image)
        swapped = target is not None and target.tube != mouth.tube
        rows.append((mouth.module.label, mouth.tube, image.label, target.tube if target else None, swapped))
    return SwapWitness(all(row[-1] for row in rows), rows)


# -- components of non-periodic simples --------------------------------------------------


def omega_stable_simple_component(pres, t):
    """Whether Ω fixes the component of the non-periodic simple S(t) of a star"""
    n, mbar, i = star_parameters(pres)
    t = int(t)
    if t >= i:
        raise PeriodicSimple(f"S({t}) lies in an exceptional tube")
    stable = mbar[t + 1] == 2 or (i == 1 and t == 0 and mbar[0] == 2)
    try:
        walked = simple_rad_same_component(pres.graph, str(t), str(t))
        if walked != stable:
            logger.warning("Component test disagrees for S(%d) on %s: %s vs %s", t, pres.name, stable, walked)
    except ExceptionalEdgeArgument as e:
        logger.warning("Edge path test skipped: %s", e)
    return stable


@dataclass
class SectionDiagonal:
    """The n+1 modules with stable End = k on one Ω-stable simple component"""
    t: str
    case: str
    modules: list


@lru_cache(maxsize=16)
def section_diagonals(pres):
    if pres.family != "star":
        return []
    n, mbar, i = star_parameters(pres)
    strings = StarStrings(pres)
    result = []
    for t in range(i):
        if mbar[t + 1] == 2:
            start, case = strings.delta_mu(t), "simple"
        elif i == 1 and t == 0 and mbar[0] == 2:
            start, case = strings.x(1, 0), "exceptional"
        else:
            continue
        modules = diagonal(StringModule(pres, start), n + 1, side="right")
        result.append(SectionDiagonal(str(t), case, modules))
    return result


def find_on_section(M, depth=None):
    """(section, position, k) with Ω^k(M) on a section diagonal, if any"""
    pres = M.presentation
    sections = section_diagonals(pres)
    if not sections:
        return None
    if depth is None:
        depth = 2 * pres.graph.num_edges + 2
    index = {}
    for section in sections:
        for j, module in enumerate(section.modules):
            index.setdefault(module, (section, j))
    up, down = M, M
    for k in range(depth + 1):
        if up in index:
            return (*index[up], -k)
        if down in index:
            return (*index[down], k)
        up, down = syzygy(up), cosyzygy(down)
    return None


# -- component windows ----------------------------------------------------------------------


@dataclass
class ComponentWindow:
    centre: str
    nodes: dict
    arrows: list

    def to_dot(self):
        lines = ["digraph component {"]
        for label, info in self.nodes.items():
            lines.append(f'  "{label}" [label="{label}\\n{info}"];')
        for source, target in self.arrows:
            lines.append(f'  "{source}" -> "{target}";')
        lines.append("}")
        return "\n".join(lines)

    def export(self):
        return {"centre": self.centre, "nodes": dict(self.nodes),
                "arrows": [list(a) for a in self.arrows]}


def component_window(M, radius=2, annotate=True):
    """Modules within `radius` hook or cohook moves of M and the irreducible maps between them"""
    seen = {M.label: M}
    frontier = [M]
    arrows = set()
    for _ in range(radius):
        upcoming = []
        for current in frontier:
            for other in hooks(current):
                arrows.add((current.label, other.label))
                if other.label not in seen:
                    seen[other.label] = other
                    upcoming.append(other)
            for other in cohooks(current):
                arrows.add((other.label, current.label))
                if other.label not in seen:
                    seen[other.label] = other
                    upcoming.append(other)
        frontier = upcoming
    nodes = {}
    for label in sorted(seen):
        module = seen[label]
        if not annotate:
            nodes[label] = ""
            continue
        try:
            nodes[label] = str(locate(module))
        except BoundExceeded as e:
            nodes[label] = f"unresolved: {e}"
    arrows = sorted(a for a in arrows if a[0] in nodes and a[1] in nodes)
    return ComponentWindow(M.label, nodes, arrows)