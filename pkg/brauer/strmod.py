"""
String words and string modules over the socle quotient Λ_s, Krause's
canonical homomorphisms, and the matrix-representation oracle.

A word c_1 ... c_k presents the module with basis b_0 ... b_k. A direct letter a
at position p maps b_{p-1} to b_p, an inverse letter a^-1 means a maps b_p to
b_{p-1}. Every canonical homomorphism is a partial bijection between bases,
stored as (source position, target position) pairs.
"""

import logging
import re
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from brauer.errors import (
    BandModule,
    InverseCancellation,
    NonComposable,
    UnknownArrow,
    WordError,
    ZeroSubpath,
)

logger = logging.getLogger(__name__)

_POWER = re.compile(r"^(-?)([^\s^]+)\^(\d+)$")


@dataclass(frozen=True)
class Letter:
    arrow: str
    inverse: bool = False

    def inv(self):
        return Letter(self.arrow, not self.inverse)

    def __str__(self):
        return f"-{self.arrow}" if self.inverse else self.arrow


@dataclass(frozen=True)
class StringWord:
    """
    Letters of a string; a trivial word keeps its q-vertex and side marker.
    """
    letters: tuple = ()
    vertex: str = None
    side: int = 1
    band: bool = False
    projective: bool = False

    @property
    def is_trivial(self):
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def inverse(self):
        if self.is_trivial:
            return StringWord((), self.vertex, -self.side)
        return StringWord(tuple(x.inv() for x in reversed(self.letters)),
                          band=self.band, projective=self.projective)

    def __str__(self):
        if self.is_trivial:
            return f"e{self.vertex}" if self.side == 1 else f"e{self.vertex}-"
        text = " ".join(str(x) for x in self.letters)
        return f"band: {text}" if self.band else text


# -- letter geometry ------------------------------------------------------------


def letter_source(pres, x):
    return pres.target(x.arrow) if x.inverse else pres.source(x.arrow)


def letter_target(pres, x):
    return pres.source(x.arrow) if x.inverse else pres.target(x.arrow)


def letter_sigma(pres, x):
    return pres.epsilon(x.arrow) if x.inverse else pres.sigma(x.arrow)


def letter_eps(pres, x):
    return pres.sigma(x.arrow) if x.inverse else pres.epsilon(x.arrow)


def word_source(pres, w):
    return w.vertex if w.is_trivial else letter_source(pres, w.letters[0])


def word_target(pres, w):
    return w.vertex if w.is_trivial else letter_target(pres, w.letters[-1])


def word_sigma(pres, w):
    return -w.side if w.is_trivial else letter_sigma(pres, w.letters[0])


def word_eps(pres, w):
    return w.side if w.is_trivial else letter_eps(pres, w.letters[-1])


def word_vertices(pres, w):
    """q-vertex of every basis vector b_0 ... b_k"""
    return [word_source(pres, w)] + [letter_target(pres, x) for x in w.letters]


def runs(w):
    """Maximal same-direction runs as (start, length, inverse)"""
    found = []
    start = 0
    for k in range(1, len(w.letters) + 1):
        if k == len(w.letters) or w.letters[k].inverse != w.letters[start].inverse:
            found.append((start, k - start, w.letters[start].inverse))
            start = k
    return found


# -- validation and parsing -------------------------------------------------------


def _check_pair(pres, x, y, position):
    if x.arrow == y.arrow and x.inverse != y.inverse:
        raise InverseCancellation(f"{x} followed by {y}", position)
    if letter_target(pres, x) != letter_source(pres, y):
        raise NonComposable(f"{x} ends at {letter_target(pres, x)} but {y} starts at "
                            f"{letter_source(pres, y)}", position)
    if letter_eps(pres, x) != -letter_sigma(pres, y):
        if x.inverse == y.inverse:
            raise ZeroSubpath(f"{x} {y} is zero", position)
        raise NonComposable(f"{x} {y} does not form a string", position)


def check_word(pres, w):
    """Validate a word over Λ_s; returns the word with its projective flag set"""
    if w.is_trivial:
        if w.vertex not in pres.q_vertices:
            raise WordError(f"unknown vertex {w.vertex}")
        if w.side not in (1, -1):
            raise WordError(f"side marker must be +1 or -1, got {w.side}")
        return w
    for k, x in enumerate(w.letters):
        if x.arrow not in pres.arrows:
            raise UnknownArrow(f"unknown arrow {x.arrow}", k)
    for k in range(len(w.letters) - 1):
        _check_pair(pres, w.letters[k], w.letters[k + 1], k + 1)
    if w.band:
        _check_pair(pres, w.letters[-1], w.letters[0], len(w.letters))
        return w

    projective = False
    found = runs(w)
    for start, length, inverse in found:
        limit = pres.branch_length(w.letters[start].arrow)
        if length <= limit - 1:
            continue
        path = [x.arrow for x in w.letters[start:start + length]]
        if inverse:
            path.reverse()
        top = pres.source(path[0])
        if length == limit and len(found) == 1 and pres.projective(top).is_uniserial:
            projective = True
            continue
        raise ZeroSubpath(f"run {' '.join(path)} of length {length} is zero in the socle quotient", start)
    if projective != w.projective:
        w = StringWord(w.letters, projective=projective)
    return w


def make_word(pres, letters, vertex=None, side=1):
    letters = tuple(letters)
    if letters:
        return check_word(pres, StringWord(letters))
    return check_word(pres, StringWord((), vertex, side))


def concat(pres, *parts):
    """Concatenate words, skipping trivial pieces; the result is validated"""
    letters = []
    trivial = None
    for part in parts:
        if part.is_trivial:
            trivial = trivial or part
        letters.extend(part.letters)
    if not letters:
        return check_word(pres, trivial)
    return make_word(pres, letters)


def _parse_token(token):
    power = _POWER.match(token)
    if power:
        sign, arrow, count = power.groups()
        return [Letter(arrow, bool(sign))] * int(count)
    if token.startswith("-"):
        return [Letter(token[1:], True)]
    return [Letter(token)]


def parse_word(text, pres):
    """
    Read a word such as "a0 a1 -d1" or "d0^2"; "e2" is the trivial word at 2.

    A leading "band:" or a trailing "*" marks a band word.
    """
    body = text.strip()
    band = False
    if body.startswith("band:"):
        band, body = True, body[len("band:"):].strip()
    if body.endswith("*"):
        band, body = True, body[:-1].strip()
    tokens = body.split()
    if not tokens:
        raise WordError("empty word")
    if len(tokens) == 1 and not band:
        token = tokens[0]
        bare = token.lstrip("-").split("^")[0]
        if bare not in pres.arrows and token.startswith("e"):
            side = 1
            vertex = token[1:]
            if vertex.endswith(("+", "-")) and vertex[:-1] in pres.q_vertices:
                side = -1 if vertex.endswith("-") else 1
                vertex = vertex[:-1]
            if vertex in pres.q_vertices:
                return StringWord((), vertex, side)
    letters = []
    for token in tokens:
        letters.extend(_parse_token(token))
    word = check_word(pres, StringWord(tuple(letters), band=band))
    logger.debug("Parsed %r as %s", text, word)
    return word


def word_key(pres, w):
    return tuple(2 * pres.arrow_index[x.arrow] + int(x.inverse) for x in w.letters)


def canonical_form(pres, w):
    """Representative of {w, w^-1}; trivial words get side +1"""
    if w.is_trivial:
        return StringWord((), w.vertex, 1)
    if w.band:
        return w
    inv = w.inverse()
    return w if word_key(pres, w) <= word_key(pres, inv) else inv


# -- string modules -------------------------------------------------------------


class StringModule:
    """The module M[C] of a validated string word"""

    def __init__(self, presentation, word):
        if word.band:
            raise BandModule(f"band word {word} is not handled")
        self.presentation = presentation
        self.word = word

    @classmethod
    def parse(cls, presentation, text):
        return cls(presentation, parse_word(text, presentation))

    @cached_property
    def canonical(self):
        return canonical_form(self.presentation, self.word)

    @property
    def label(self):
        return str(self.canonical)

    @property
    def dim(self):
        return len(self.word) + 1

    @property
    def is_trivial(self):
        return self.word.is_trivial

    @property
    def is_projective(self):
        return self.word.projective

    @cached_property
    def vertices(self):
        return word_vertices(self.presentation, self.word)

    @cached_property
    def image_index(self):
        return image_index(self)

    @property
    def dimension_vector(self):
        return Counter(self.vertices)

    @property
    def tops(self):
        """Positions not hit by any arrow"""
        letters = self.word.letters
        return [p for p in range(len(letters) + 1)
                if (p == 0 or letters[p - 1].inverse) and (p == len(letters) or not letters[p].inverse)]

    @property
    def socles(self):
        """Positions killed by every arrow"""
        letters = self.word.letters
        return [p for p in range(len(letters) + 1)
                if (p == 0 or not letters[p - 1].inverse) and (p == len(letters) or letters[p].inverse)]

    def inverse(self):
        return StringModule(self.presentation, self.word.inverse())

    def __eq__(self, other):
        return (isinstance(other, StringModule)
                and self.presentation is other.presentation
                and self.canonical == other.canonical)

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"M[{self.label}]"


def simple_module(pres, q_vertex):
    return StringModule(pres, make_word(pres, (), q_vertex))


# -- peaks and deeps with their projective branches -------------------------------


@dataclass(frozen=True)
class Turn:
    """
    A top (or socle) position with the run lengths on either side and the
    half-edges whose branches of P(vertex) carry those runs; None marks a
    missing branch at a truncated vertex.
    """
    position: int
    vertex: str
    left: int
    right: int
    left_half: str
    right_half: str


def _fill_halves(pres, vertex, left_half, right_half):
    e = pres.graph.edge(vertex)
    halves = (e.plus, e.minus)
    if left_half is None and right_half is None:
        left_half, right_half = halves
    elif left_half is None:
        left_half = halves[1] if right_half == halves[0] else halves[0]
    elif right_half is None:
        right_half = halves[1] if left_half == halves[0] else halves[0]
    return (left_half if left_half in pres.arrow_at else None,
            right_half if right_half in pres.arrow_at else None)


def peak_structure(module):
    """Tops of M with the branch of the projective cover covering each side"""
    pres, letters, verts = module.presentation, module.word.letters, module.vertices
    result = []
    for p in module.tops:
        a = 0
        while p - a - 1 >= 0 and letters[p - a - 1].inverse:
            a += 1
        b = 0
        while p + b < len(letters) and not letters[p + b].inverse:
            b += 1
        left = pres.arrows[letters[p - 1].arrow].half_edge if a else None
        right = pres.arrows[letters[p].arrow].half_edge if b else None
        left, right = _fill_halves(pres, verts[p], left, right)
        result.append(Turn(p, verts[p], a, b, left, right))
    return result


def deep_structure(module):
    """Socle positions with the branch of the injective envelope on each side"""
    pres, letters, verts = module.presentation, module.word.letters, module.vertices
    graph = pres.graph
    result = []
    for q in module.socles:
        a = 0
        while q - a - 1 >= 0 and not letters[q - a - 1].inverse:
            a += 1
        b = 0
        while q + b < len(letters) and letters[q + b].inverse:
            b += 1
        left = graph.sigma(pres.arrows[letters[q - 1].arrow].half_edge) if a else None
        right = graph.sigma(pres.arrows[letters[q].arrow].half_edge) if b else None
        left, right = _fill_halves(pres, verts[q], left, right)
        result.append(Turn(q, verts[q], a, b, left, right))
    return result


# -- canonical homomorphisms ------------------------------------------------------


@dataclass(frozen=True)
class CanonicalHom:
    """M[C] ->> M[S] >-> M[D] as a partial bijection of bases"""
    source: StringWord
    target: StringWord
    substring: StringWord
    c_interval: tuple
    d_interval: tuple
    reversed: bool
    pairs: tuple

    @property
    def rank(self):
        return len(self.pairs)

    def export(self):
        return {"S": str(self.substring), "C": list(self.c_interval), "D": list(self.d_interval),
                "reversed": self.reversed}


def _factor_intervals(pres, w):
    """Intervals [i, j] of w that are factor strings (E ends inverse, B starts direct)"""
    letters = w.letters
    k = len(letters)
    for i in range(k + 1):
        if i > 0 and not letters[i - 1].inverse:
            continue
        for j in range(i, k + 1):
            if j < k and letters[j].inverse:
                continue
            yield i, j


def _image_intervals(w, length):
    """Intervals [p, q] of w of the given length that are image strings"""
    letters = w.letters
    k = len(letters)
    for p in range(k - length + 1):
        q = p + length
        if p > 0 and letters[p - 1].inverse:
            continue
        if q < k and not letters[q].inverse:
            continue
        yield p, q


def _interval_key(letters, vertex):
    return tuple(letters) if letters else vertex


def image_index(N):
    """Image strings of N in both orientations, keyed by their letters"""
    pres, d = N.presentation, N.word
    orientations = [(d, False, N.vertices)]
    if not d.is_trivial:
        d_inv = d.inverse()
        orientations.append((d_inv, True, word_vertices(pres, d_inv)))
    result = []
    for target, flipped, verts in orientations:
        index = defaultdict(list)
        for length in range(len(target.letters) + 1):
            for p, q in _image_intervals(target, length):
                index[_interval_key(target.letters[p:q], verts[p])].append((p, q))
        result.append((flipped, index))
    return result


def canonical_homs(M, N):
    """Canonical homomorphisms M -> N, a basis of Hom(M, N)"""
    pres = M.presentation
    c, d = M.word, N.word
    c_verts = M.vertices
    last = len(d.letters)
    seen = set()
    found = []
    for i, j in _factor_intervals(pres, c):
        sub = c.letters[i:j]
        key = _interval_key(sub, c_verts[i])
        for flipped, index in N.image_index:
            for p, q in index.get(key, ()):
                pairs = tuple(
                    (i + s, (last - (p + s)) if flipped else p + s) for s in range(j - i + 1)
                )
                mark = frozenset(pairs)
                if mark in seen:
                    continue
                seen.add(mark)
                substring = StringWord(sub) if sub else StringWord((), c_verts[i], 1)
                d_interval = (last - q, last - p) if flipped else (p, q)
                found.append(CanonicalHom(c, d, substring, (i, j), d_interval, flipped, pairs))
    return found


def hom_dim(M, N):
    return len(canonical_homs(M, N))


def hom_matrix(h, source_rep, target_rep):
    """0/1 matrix of a canonical homomorphism in the string bases"""
    matrix = sympy.zeros(target_rep.dim, source_rep.dim)
    for c, d in h.pairs:
        matrix[d, c] = 1
    return matrix


def compose(first, second):
    """Partial maps as pair sets: first then second"""
    lookup = dict(second)
    return frozenset((a, lookup[b]) for a, b in first if b in lookup)


# -- modules attached to projectives ------------------------------------------------


def radical_word(pres, q_vertex):
    """rad P(q) as a string, with the P-basis name of every position"""
    shape = pres.projective(q_vertex)
    first, h_first = shape.branches[0], shape.half_edges[0]
    letters = [Letter(a) for a in first[1:]]
    names = [(h_first, k) for k in range(1, len(first))] + ["soc"]
    if not shape.is_uniserial:
        second, h_second = shape.branches[1], shape.half_edges[1]
        for t in range(len(second) - 1, 0, -1):
            letters.append(Letter(second[t], True))
            names.append((h_second, t))
    return make_word(pres, letters), names


def socle_quotient_word(pres, q_vertex):
    """P(q)/soc as a string, with the P-basis name of every position"""
    shape = pres.projective(q_vertex)
    letters, names = [], []
    if not shape.is_uniserial:
        second, h_second = shape.branches[1], shape.half_edges[1]
        for t in range(len(second) - 2, -1, -1):
            letters.append(Letter(second[t], True))
            names.append((h_second, t + 1))
    names.append("top")
    first, h_first = shape.branches[0], shape.half_edges[0]
    for t in range(len(first) - 1):
        letters.append(Letter(first[t]))
        names.append((h_first, t + 1))
    return make_word(pres, letters, q_vertex), names


@dataclass
class ProjectiveMaps:
    """Canonical maps M -> P(i) and P(i) -> M in the basis of projective_rep"""
    q_vertex: str
    into: list
    out: list


def proj_canonical_homs(M, q_vertex):
    pres = M.presentation
    _, index = projective_rep(pres, q_vertex)
    rad, rad_names = radical_word(pres, q_vertex)
    top, top_names = socle_quotient_word(pres, q_vertex)
    into = [
        frozenset((c, index[rad_names[r]]) for c, r in h.pairs)
        for h in canonical_homs(M, StringModule(pres, rad))
    ]
    out = [
        frozenset((index[top_names[s]], d) for s, d in h.pairs)
        for h in canonical_homs(StringModule(pres, top), M)
    ]
    return ProjectiveMaps(q_vertex, into, out)


# -- matrix representations (oracle) --------------------------------------------------


@dataclass
class MatrixRep:
    """
    Representation with a global basis; `vertices[k]` is the q-vertex of basis
    vector k and `actions[a]` holds the nonzero entries {(row, col): value} of
    the right action of arrow a.
    """
    vertices: tuple
    actions: dict
    arrows: dict

    @property
    def dim(self):
        return len(self.vertices)

    @property
    def dims(self):
        return dict(Counter(self.vertices))

    @cached_property
    def positions(self):
        """Basis indices grouped by q-vertex"""
        grouped = defaultdict(list)
        for k, v in enumerate(self.vertices):
            grouped[v].append(k)
        return grouped

    def matrix(self, arrow):
        m = sympy.zeros(self.dim, self.dim)
        for (r, c), v in self.actions.get(arrow, {}).items():
            m[r, c] = v
        return m

    def block(self, arrow):
        """Matrix of conforming shape dim(target) x dim(source)"""
        source, target = self.arrows[arrow]
        rows = [k for k, v in enumerate(self.vertices) if v == target]
        cols = [k for k, v in enumerate(self.vertices) if v == source]
        return self.matrix(arrow).extract(rows, cols) if rows and cols else sympy.zeros(len(rows), len(cols))

    def path_matrix(self, path):
        m = sympy.eye(self.dim)
        for arrow in path:
            m = self.matrix(arrow) * m
        return m


def _arrow_ends(pres):
    return {a.name: (a.source, a.target) for a in pres.arrows.values()}


def string_rep(M):
    pres = M.presentation
    actions = defaultdict(dict)
    for p, x in enumerate(M.word.letters, start=1):
        if x.inverse:
            actions[x.arrow][(p - 1, p)] = 1
        else:
            actions[x.arrow][(p, p - 1)] = 1
    return MatrixRep(tuple(M.vertices), dict(actions), _arrow_ends(pres))


def projective_rep(pres, q_vertex):
    """P(q) with basis top, (h, k) along each branch h, soc"""
    shape = pres.projective(q_vertex)
    names = ["top"]
    for h, branch in zip(shape.half_edges, shape.branches):
        names += [(h, k) for k in range(1, len(branch))]
    names.append("soc")
    index = {name: k for k, name in enumerate(names)}
    vertices = [q_vertex]
    actions = defaultdict(dict)
    for h, branch in zip(shape.half_edges, shape.branches):
        for k in range(1, len(branch)):
            vertices.append(pres.target(branch[k - 1]))
        chain = ["top"] + [(h, k) for k in range(1, len(branch))] + ["soc"]
        for k, arrow in enumerate(branch):
            actions[arrow][(index[chain[k + 1]], index[chain[k]])] = 1
    vertices.append(q_vertex)
    return MatrixRep(tuple(vertices), dict(actions), _arrow_ends(pres)), index


def check_relations(pres, rep, socle=False):
    """Relations that fail on rep; an empty list means rep is a module"""
    failures = []
    for p, q in pres.relations["I"]:
        if socle:
            if not rep.path_matrix(p).is_zero_matrix:
                failures.append(f"socle {' '.join(p)}")
        elif rep.path_matrix(p) != rep.path_matrix(q):
            failures.append(f"I {' '.join(p)} = {' '.join(q)}")
    for path in pres.relations["II"]:
        if not rep.path_matrix(path).is_zero_matrix:
            failures.append(f"II {' '.join(path)}")
    for a, b in pres.relations["III"]:
        if not rep.path_matrix((a, b)).is_zero_matrix:
            failures.append(f"III {a} {b}")
    if socle:
        for path in pres.socle_relations:
            if not rep.path_matrix(path).is_zero_matrix and f"socle {' '.join(path)}" not in failures:
                failures.append(f"socle {' '.join(path)}")
    return failures


def rank_of_rows(rows, ncols):
    """Exact rank over QQ of sparse rows {col: value}"""
    rows = [{c: QQ.convert(v) for c, v in row.items() if v != 0} for row in rows]
    rows = [row for row in rows if row]
    if not rows or ncols == 0:
        return 0
    matrix = DomainMatrix({k: row for k, row in enumerate(rows)}, (len(rows), ncols), QQ)
    return matrix.rank()


def _intertwiner_system(M, N):
    """Unknowns F[r, c] (same q-vertex) and the rows of N_a F - F M_a = 0"""
    unknowns = {}
    for v, rows in N.positions.items():
        for r in rows:
            for c in M.positions.get(v, ()):
                unknowns[(r, c)] = len(unknowns)
    by_vertex_m, by_vertex_n = M.positions, N.positions
    equations = defaultdict(lambda: defaultdict(int))
    for arrow in set(M.actions) | set(N.actions):
        source, target = M.arrows[arrow]
        for (r, k), v in N.actions.get(arrow, {}).items():
            for c in by_vertex_m.get(source, ()):
                equations[(arrow, r, c)][unknowns[(k, c)]] += v
        for (k, c), v in M.actions.get(arrow, {}).items():
            for r in by_vertex_n.get(target, ()):
                equations[(arrow, r, c)][unknowns[(r, k)]] -= v
    return unknowns, list(equations.values())


def oracle_hom_dim(M, N):
    """dim Hom(M, N) from the intertwiner equations, by exact elimination"""
    unknowns, rows = _intertwiner_system(M, N)
    return len(unknowns) - rank_of_rows(rows, len(unknowns))


def oracle_hom_basis(M, N):
    """Basis of Hom(M, N) as sympy matrices dim N x dim M"""
    unknowns, rows = _intertwiner_system(M, N)
    if not unknowns:
        return []
    system = sympy.zeros(max(len(rows), 1), len(unknowns))
    for k, row in enumerate(rows):
        for col, v in row.items():
            system[k, col] = v
    basis = []
    for vector in system.nullspace():
        f = sympy.zeros(N.dim, M.dim)
        for (r, c), col in unknowns.items():
            f[r, c] = vector[col]
        basis.append(f)
    return basis


def is_intertwiner(f, M, N):
    return all(
        (N.matrix(a) * f - f * M.matrix(a)).is_zero_matrix
        for a in set(M.actions) | set(N.actions)
    )


def matrix_rank(m):
    rows = [{c: m[r, c] for c in range(m.cols) if m[r, c] != 0} for r in range(m.rows)]
    return rank_of_rows(rows, m.cols)


def projective_cover_rep(M):
    """Projective cover of M as a direct sum of P(top) and the cover matrix"""
    pres = M.presentation
    vertices, actions, offsets = [], defaultdict(dict), []
    cover = sympy.zeros(M.dim, 0)
    for turn in peak_structure(M):
        rep, index = projective_rep(pres, turn.vertex)
        base = len(vertices)
        vertices.extend(rep.vertices)
        for arrow, entries in rep.actions.items():
            for (r, c), v in entries.items():
                actions[arrow][(r + base, c + base)] = v
        block = sympy.zeros(M.dim, rep.dim)
        block[turn.position, index["top"]] = 1
        for k in range(1, turn.left + 1):
            block[turn.position - k, index[(turn.left_half, k)]] = 1
        for k in range(1, turn.right + 1):
            block[turn.position + k, index[(turn.right_half, k)]] = 1
        cover = cover.row_join(block)
        offsets.append(base)
    return MatrixRep(tuple(vertices), dict(actions), _arrow_ends(pres)), cover


def oracle_syzygy_dim(M):
    """Kernel dimension of the projective cover map"""
    rep, cover = projective_cover_rep(M)
    return rep.dim - matrix_rank(cover)


def oracle_stable_hom_dim(M, N):
    """
    dim Hom(M, N) minus the maps factoring through the projective cover of N,
    both computed from intertwiner nullspaces.
    """
    m_rep, n_rep = string_rep(M), string_rep(N)
    cover_rep, cover = projective_cover_rep(N)
    hom = oracle_hom_dim(m_rep, n_rep)
    through = [cover * f for f in oracle_hom_basis(m_rep, cover_rep)]
    rows = [{k: f[k // f.cols, k % f.cols] for k in range(f.rows * f.cols) if f[k // f.cols, k % f.cols] != 0}
            for f in through]
    return hom - rank_of_rows(rows, N.dim * M.dim)


def enumerate_words(pres, max_len):
    """All string modules with at most max_len letters, one word per module"""
    found = {}
    frontier = []
    for q in pres.q_vertices:
        module = StringModule(pres, make_word(pres, (), q))
        found[module.canonical] = module
    for name in pres.arrows:
        for inverse in (False, True):
            frontier.append((Letter(name, inverse),))
    length = 1
    while frontier and length <= max_len:
        upcoming = []
        for letters in frontier:
            try:
                word = make_word(pres, letters)
            except WordError:
                continue
            module = StringModule(pres, word)
            found.setdefault(module.canonical, module)
            if word.projective:
                continue
            for name in pres.arrows:
                for inverse in (False, True):
                    upcoming.append(letters + (Letter(name, inverse),))
        frontier = upcoming
        length += 1
    return sorted(found.values(), key=lambda m: (m.dim, m.label))
