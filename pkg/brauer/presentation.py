"""
Bound quiver presentation of a Brauer graph algebra.

Quiver vertices are the edges of the Brauer graph. Every half-edge h at a
non-truncated vertex v starts one arrow, from edge(h) to edge(sigma(h)). The
branch of h is the special cycle power read from h: m(v)·val(v) arrows whose
full product spans the socle of P(edge h). Paths are read left to right.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from brauer.errors import BadMultiplicityVector, GraphFormatError
from brauer.ribbon import BrauerGraph, Vertex, natural_key, validate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    half_edge: str
    vertex: str
    position: int


@dataclass(frozen=True)
class ProjectiveShape:
    """Branches of P(i); a single branch means P(i) is uniserial"""
    q_vertex: str
    branches: tuple
    half_edges: tuple

    @property
    def is_uniserial(self):
        return len(self.branches) == 1

    @property
    def dim(self):
        if self.is_uniserial:
            return len(self.branches[0]) + 1
        return len(self.branches[0]) + len(self.branches[1])


class Presentation:
    """Quiver, special cycles and relation data of Λ_G and its socle quotient"""

    def __init__(self, graph):
        report = validate(graph)
        if not report.ok:
            raise GraphFormatError("; ".join(report.violations))
        self.graph = graph
        self.name = graph.name
        self.family = graph.family
        self.params = dict(graph.params)
        self.q_vertices = graph.edge_names
        self.arrows = {}
        self.arrow_at = {}
        for vertex in sorted(graph.cyclic_orders, key=natural_key):
            if graph.is_truncated(vertex):
                continue
            for position, h in enumerate(graph.cyclic_orders[vertex]):
                name = graph.arrow_names.get(h, f"v{vertex}p{position}")
                if name in self.arrows:
                    raise GraphFormatError(f"duplicate arrow name {name}")
                self.arrows[name] = Arrow(
                    name, graph.edge_of(h), graph.edge_of(graph.sigma(h)), h, vertex, position
                )
                self.arrow_at[h] = name
        for e in graph.edges:
            if e.plus not in self.arrow_at and e.minus not in self.arrow_at:
                raise GraphFormatError(f"edge {e.name} has two truncated ends")
        self.arrow_index = {name: k for k, name in enumerate(self.arrows)}
        logger.debug("Presented %s: %d q-vertices, %d arrows",
                     self.name, len(self.q_vertices), len(self.arrows))

    def __repr__(self):
        return f"Presentation({self.name or 'graph'}, {len(self.q_vertices)} vertices, {len(self.arrows)} arrows)"

    # -- arrow data ----------------------------------------------------------

    def source(self, arrow):
        return self.arrows[arrow].source

    def target(self, arrow):
        return self.arrows[arrow].target

    def sigma(self, arrow):
        """Sign of the half-edge the arrow leaves from"""
        return self.graph.sign(self.arrows[arrow].half_edge)

    def epsilon(self, arrow):
        """Minus the sign of the half-edge the arrow arrives at"""
        return -self.graph.sign(self.graph.sigma(self.arrows[arrow].half_edge))

    def next_arrow(self, arrow):
        """Unique arrow b with arrow·b nonzero"""
        return self.arrow_at[self.graph.sigma(self.arrows[arrow].half_edge)]

    def branch_length(self, arrow):
        return self.graph.branch_length(self.arrows[arrow].half_edge)

    def outgoing(self, q_vertex):
        return [a for a in self.arrows.values() if a.source == q_vertex]

    def incoming(self, q_vertex):
        return [a for a in self.arrows.values() if a.target == q_vertex]

    def branch(self, h):
        """Arrows of the maximal path of P(edge h) starting along h, or () if truncated"""
        if h not in self.arrow_at:
            return ()
        path = []
        current = h
        for _ in range(self.graph.branch_length(h)):
            path.append(self.arrow_at[current])
            current = self.graph.sigma(current)
        return tuple(path)

    @cached_property
    def special_cycles(self):
        """(vertex, half-edge) -> the special cycle A_{v,h}, one turn"""
        cycles = {}
        for arrow in self.arrows.values():
            order = self.graph.cyclic_orders[arrow.vertex]
            k = order.index(arrow.half_edge)
            rotated = order[k:] + order[:k]
            cycles[(arrow.vertex, arrow.half_edge)] = tuple(self.arrow_at[h] for h in rotated)
        return cycles

    def projective(self, q_vertex):
        e = self.graph.edge(q_vertex)
        halves = tuple(h for h in (e.plus, e.minus) if h in self.arrow_at)
        return ProjectiveShape(q_vertex, tuple(self.branch(h) for h in halves), halves)

    # -- relations -----------------------------------------------------------

    @cached_property
    def relations(self):
        """Type I commutativity pairs, Type II zero paths, Type III zero compositions"""
        type_one, type_two, type_three = [], [], []
        for e in self.graph.edges:
            if e.plus in self.arrow_at and e.minus in self.arrow_at:
                type_one.append((self.branch(e.plus), self.branch(e.minus)))
        for h in self.arrow_at:
            path = self.branch(h)
            type_two.append(path + (path[0],))
        for a in self.arrows.values():
            for b in self.outgoing(a.target):
                if b.name != self.next_arrow(a.name):
                    type_three.append((a.name, b.name))
        return {"I": type_one, "II": type_two, "III": type_three}

    @property
    def socle_relations(self):
        """Full branches vanish in Λ_s"""
        return [self.branch(h) for h in self.arrow_at]

    def is_nonzero_path(self, arrows, socle=True):
        """Whether a direct path survives in Λ (socle=False) or Λ_s"""
        if not arrows:
            return True
        for a, b in zip(arrows, arrows[1:]):
            if self.next_arrow(a) != b:
                return False
        limit = self.branch_length(arrows[0])
        return len(arrows) <= (limit - 1 if socle else limit)

    def algebra_dimension(self):
        """dim Λ as the number of nonzero path normal forms"""
        return sum(self.projective(q).dim for q in self.q_vertices)

    def export(self):
        """Structured description for reports"""
        return {
            "name": self.name,
            "family": self.family,
            "q_vertices": list(self.q_vertices),
            "arrows": [
                {"id": a.name, "source": a.source, "target": a.target,
                 "vertex": a.vertex, "position": a.position}
                for a in self.arrows.values()
            ],
            "special_cycles": {
                f"{v}:{h}": list(cycle) for (v, h), cycle in self.special_cycles.items()
            },
            "relations": {
                "I": [[list(p), list(q)] for p, q in self.relations["I"]],
                "II": [list(p) for p in self.relations["II"]],
                "III": [list(p) for p in self.relations["III"]],
            },
        }


def present(graph):
    return Presentation(graph)


# -- named families --------------------------------------------------------------


def star_parameters(presentation):
    """(n, mbar, i) of a star presentation"""
    if presentation.family != "star":
        raise ValueError(f"{presentation.name} is not a star algebra")
    n = presentation.params["n"]
    mbar = tuple(presentation.params["mbar"])
    return n, mbar, len(mbar) - 1


def make_star(n, mbar):
    """
    The star W_{n,mbar}: centre z0, edge j joining z0 and z{j+1}.

    Half-edge "j" sits at the centre and "j'" at the outer end; arrows are
    a{j} around the centre and loops d{j} at outer vertices of multiplicity > 1.
    An empty mbar gives the star of a Brauer tree with all multiplicities 1.
    """
    mbar = tuple(int(m) for m in mbar)
    if n < 0:
        raise BadMultiplicityVector(f"n must be non-negative, got {n}")
    if any(m < 2 for m in mbar):
        raise BadMultiplicityVector(f"entries must be at least 2: {mbar}")
    if list(mbar) != sorted(mbar):
        raise BadMultiplicityVector(f"multiplicities must be non-decreasing: {mbar}")
    if len(mbar) > n + 2:
        raise BadMultiplicityVector(f"at most {n + 2} multiplicities for n={n}: {mbar}")

    i = len(mbar) - 1
    vertices = [Vertex("z0", mbar[0] if mbar else 1)]
    for j in range(n + 1):
        vertices.append(Vertex(f"z{j + 1}", mbar[j + 1] if j + 1 <= i else 1))
    half_edges, attach, pairing, orders, names = [], {}, {}, {}, {}
    orders["z0"] = tuple(str(j) for j in range(n + 1))
    for j in range(n + 1):
        inner, outer = str(j), f"{j}'"
        half_edges += [inner, outer]
        attach[inner], attach[outer] = "z0", f"z{j + 1}"
        pairing[inner], pairing[outer] = outer, inner
        orders[f"z{j + 1}"] = (outer,)
        names[inner] = f"a{j}"
        if j < i:
            names[outer] = f"d{j}"
    label = ",".join(str(m) for m in mbar)
    return BrauerGraph(
        tuple(vertices), tuple(half_edges), attach, pairing, orders, names,
        name=f"W_{n},({label})", family="star", params={"n": n, "mbar": mbar},
    )


def make_koszul(n, l, m, lam=1):
    """
    Standard Koszul presentation as the Brauer graph algebra of a path.

    Edge k joins z{k} and z{k+1}; z0 carries multiplicity l, z{n+1} carries m.
    Arrows a{j}: j-1 -> j and b{j}: j -> j-1, loops d at 0 and g at n.
    The scalar lam is normalized to 1 and kept in the parameters only.
    """
    if n < 1 or l < 2 or m < 2:
        raise BadMultiplicityVector(f"need n >= 1, l >= 2, m >= 2; got n={n}, l={l}, m={m}")
    if lam == 0:
        raise ValueError("lambda must be non-zero")
    vertices = [Vertex("z0", l)] + [Vertex(f"z{k}", 1) for k in range(1, n + 1)] + [Vertex(f"z{n + 1}", m)]
    half_edges, attach, pairing, orders, names = [], {}, {}, {}, {}
    for k in range(n + 1):
        left, right = str(k), f"{k}'"
        half_edges += [left, right]
        attach[left], attach[right] = f"z{k}", f"z{k + 1}"
        pairing[left], pairing[right] = right, left
    orders["z0"] = ("0",)
    for k in range(1, n + 1):
        orders[f"z{k}"] = (f"{k - 1}'", str(k))
        names[f"{k - 1}'"] = f"a{k}"
        names[str(k)] = f"b{k}"
    orders[f"z{n + 1}"] = (f"{n}'",)
    names["0"] = "d"
    names[f"{n}'"] = "g"
    graph = BrauerGraph(
        tuple(vertices), tuple(half_edges), attach, pairing, orders, names,
        name=f"Koszul_{n},{l},{m}", family="koszul",
        params={"n": n, "l": l, "m": m, "lambda": lam},
    )
    return Presentation(graph)
