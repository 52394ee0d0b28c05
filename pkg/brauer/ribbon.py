"""
Brauer graph data model: ribbon graphs with multiplicities, Green walks, faces,
derived-equivalence invariants, growth classes, exceptional edges and the
reduction of generalized Brauer trees to stars.
"""

import logging
import re
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import networkx as nx

from brauer.errors import ExceptionalEdgeArgument, NotATree

logger = logging.getLogger(__name__)

_CHUNK = re.compile(r"(\d+)")


def natural_key(token):
    """Sort key comparing digit runs numerically ("2" < "10" < "10'")"""
    key = []
    for chunk in _CHUNK.split(str(token)):
        if not chunk:
            continue
        key.append((0, int(chunk), "") if chunk.isdigit() else (1, 0, chunk))
    return tuple(key)


@dataclass(frozen=True)
class Vertex:
    id: str
    multiplicity: int


@dataclass(frozen=True)
class Edge:
    """Edge named after its least half-edge; `plus` is that half-edge"""
    name: str
    plus: str
    minus: str


@dataclass(frozen=True, eq=False)
class BrauerGraph:
    """
    Ribbon graph with multiplicities.

    `cyclic_orders[v]` lists the half-edges at v; sigma(h) is the next entry.
    `arrow_names` optionally renames the arrow starting at a half-edge;
    `family` and `params` record the named family a graph was built from.
    Instances are treated as immutable values.
    """
    vertices: tuple
    half_edges: tuple
    attach: dict
    pairing: dict
    cyclic_orders: dict
    arrow_names: dict = field(default_factory=dict)
    name: str = ""
    family: str = "graph"
    params: dict = field(default_factory=dict)

    # -- local structure -----------------------------------------------------

    @cached_property
    def multiplicities(self):
        return {v.id: v.multiplicity for v in self.vertices}

    @cached_property
    def _sigma(self):
        perm = {}
        for order in self.cyclic_orders.values():
            for k, h in enumerate(order):
                perm[h] = order[(k + 1) % len(order)]
        return perm

    def sigma(self, h):
        return self._sigma[h]

    def iota(self, h):
        return self.pairing[h]

    def step(self, h):
        """Green-walk step h -> iota(sigma(h))"""
        return self.pairing[self._sigma[h]]

    def vertex_of(self, h):
        return self.attach[h]

    def multiplicity(self, v):
        return self.multiplicities[v]

    def valency(self, v):
        return len(self.cyclic_orders[v])

    def is_truncated(self, v):
        return self.valency(v) * self.multiplicity(v) == 1

    def branch_length(self, h):
        """Length m(v)·val(v) of the special cycle power through h"""
        v = self.attach[h]
        return self.multiplicity(v) * self.valency(v)

    # -- edges ---------------------------------------------------------------

    def edge_of(self, h):
        return min(h, self.pairing[h], key=natural_key)

    def sign(self, h):
        """+1 on the half-edge naming its edge, -1 on the other one"""
        return 1 if self.edge_of(h) == h else -1

    @cached_property
    def edges(self):
        found = {}
        for h in self.half_edges:
            name = self.edge_of(h)
            if name not in found:
                found[name] = Edge(name, name, self.pairing[name])
        return tuple(found[k] for k in sorted(found, key=natural_key))

    @cached_property
    def edge_names(self):
        return tuple(e.name for e in self.edges)

    def edge(self, name):
        for e in self.edges:
            if e.name == name:
                return e
        raise KeyError(f"Unknown edge {name}")

    def endpoints(self, name):
        e = self.edge(name)
        return self.attach[e.plus], self.attach[e.minus]

    def is_loop(self, name):
        u, v = self.endpoints(name)
        return u == v

    @cached_property
    def multigraph(self):
        """Underlying graph as a networkx MultiGraph keyed by edge name"""
        g = nx.MultiGraph()
        g.add_nodes_from(v.id for v in self.vertices)
        for e in self.edges:
            g.add_edge(self.attach[e.plus], self.attach[e.minus], key=e.name)
        return g

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)


# -- validation ---------------------------------------------------------------


@dataclass
class ValidationReport:
    violations: list

    @property
    def ok(self):
        return not self.violations


def validate(graph):
    """Check every Brauer graph axiom; violations are returned, not raised"""
    violations = []
    vertex_ids = [v.id for v in graph.vertices]
    for vid, count in Counter(vertex_ids).items():
        if count > 1:
            violations.append(f"duplicate vertex {vid}")
    for v in graph.vertices:
        if not isinstance(v.multiplicity, int) or v.multiplicity < 1:
            violations.append(f"vertex {v.id} has multiplicity {v.multiplicity}")
    for h, count in Counter(graph.half_edges).items():
        if count > 1:
            violations.append(f"duplicate half-edge {h}")
    if not graph.half_edges:
        violations.append("graph has no edges")

    known = set(graph.half_edges)
    for h in graph.half_edges:
        if h not in graph.attach:
            violations.append(f"half-edge {h} is not attached")
        elif graph.attach[h] not in vertex_ids:
            violations.append(f"half-edge {h} attached to unknown vertex {graph.attach[h]}")
        if h not in graph.pairing:
            violations.append(f"half-edge {h} is not paired")
            continue
        partner = graph.pairing[h]
        if partner == h:
            violations.append(f"pairing has fixed point {h}")
        elif partner not in known:
            violations.append(f"half-edge {h} paired with unknown half-edge {partner}")
        elif graph.pairing.get(partner) != h:
            violations.append(f"pairing is not an involution at {h}")

    for vid in vertex_ids:
        order = list(graph.cyclic_orders.get(vid, []))
        expected = sorted((h for h in graph.half_edges if graph.attach.get(h) == vid), key=natural_key)
        if sorted(order, key=natural_key) != expected:
            violations.append(f"cyclic order at {vid} is not a permutation of its half-edges")
    for vid in graph.cyclic_orders:
        if vid not in vertex_ids:
            violations.append(f"cyclic order given for unknown vertex {vid}")

    if not violations:
        g = nx.MultiGraph()
        g.add_nodes_from(vertex_ids)
        for h in graph.half_edges:
            g.add_edge(graph.attach[h], graph.attach[graph.pairing[h]])
        if not nx.is_connected(g):
            violations.append("graph not connected")

    if violations:
        logger.debug("Graph %s failed validation: %s", graph.name, violations)
    return ValidationReport(violations)


# -- walks and faces ----------------------------------------------------------


@dataclass(frozen=True)
class GreenWalk:
    steps: tuple

    def __len__(self):
        return len(self.steps)

    def __contains__(self, h):
        return h in self.steps


@dataclass(frozen=True)
class Face:
    boundary: tuple

    @property
    def perimeter(self):
        return len(self.boundary) // 2


def _orbits(perm, elements):
    """Cycles of a permutation, each rotated to start at its least element"""
    seen = set()
    cycles = []
    for start in sorted(elements, key=natural_key):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        h = perm(start)
        while h != start:
            cycle.append(h)
            seen.add(h)
            h = perm(h)
        cycles.append(tuple(cycle))
    return cycles


def green_walks(graph):
    return [GreenWalk(c) for c in _orbits(graph.step, graph.half_edges)]


def double_stepped_walks(graph):
    return [GreenWalk(c) for c in _orbits(lambda h: graph.step(graph.step(h)), graph.half_edges)]


def faces(graph):
    """Faces h0, sigma(h0), iota(sigma(h0)), ... one per Green walk"""
    result = []
    for walk in green_walks(graph):
        boundary = []
        for h in walk.steps:
            boundary.extend([h, graph.sigma(h)])
        result.append(Face(tuple(boundary)))
    return result


def face_perimeters(graph):
    return sorted(f.perimeter for f in faces(graph))


# -- global invariants --------------------------------------------------------


def is_bipartite(graph):
    return nx.is_bipartite(graph.multigraph)


def is_tree(graph):
    g = graph.multigraph
    return nx.is_connected(g) and g.number_of_edges() == g.number_of_nodes() - 1


def _core_edge_count(graph):
    """Edges left after repeatedly stripping leaves"""
    core = nx.MultiGraph(graph.multigraph)
    leaves = [v for v, d in core.degree() if d <= 1]
    while leaves:
        core.remove_nodes_from(leaves)
        leaves = [v for v, d in core.degree() if d <= 1]
    return core.number_of_edges()


def multiplicity_multiset(graph):
    return sorted((v.multiplicity for v in graph.vertices), reverse=True)


@dataclass
class DerivedEquivalence:
    equivalent: bool
    criteria: dict


def derived_equivalent(g1, g2):
    """Compare the complete derived-equivalence invariants of two Brauer graphs"""
    pairs = {
        "vertices": (g1.num_vertices, g2.num_vertices),
        "edges": (g1.num_edges, g2.num_edges),
        "faces": (len(faces(g1)), len(faces(g2))),
        "multiplicities": (multiplicity_multiset(g1), multiplicity_multiset(g2)),
        "perimeters": (face_perimeters(g1), face_perimeters(g2)),
        "bipartite": (is_bipartite(g1), is_bipartite(g2)),
    }
    criteria = {name: (a, b, a == b) for name, (a, b) in pairs.items()}
    return DerivedEquivalence(all(ok for _, _, ok in criteria.values()), criteria)


class GrowthClass(str, Enum):
    FINITE = "finite"
    ONE_DOMESTIC = "one_domestic"
    TWO_DOMESTIC = "two_domestic"
    NON_POLYNOMIAL = "non_polynomial"


def growth_class(graph):
    mults = [v.multiplicity for v in graph.vertices]
    if is_tree(graph):
        big = [m for m in mults if m > 1]
        if len(big) <= 1:
            return GrowthClass.FINITE
        if big == [2, 2]:
            return GrowthClass.ONE_DOMESTIC
        return GrowthClass.NON_POLYNOMIAL
    if graph.num_edges == graph.num_vertices and all(m == 1 for m in mults):
        if _core_edge_count(graph) % 2:
            return GrowthClass.ONE_DOMESTIC
        return GrowthClass.TWO_DOMESTIC
    return GrowthClass.NON_POLYNOMIAL


# -- exceptional edges ----------------------------------------------------------


def exceptional_edges(graph):
    """
    Edges lying in an exceptional subtree: a bridge one of whose sides is a
    tree carrying multiplicity 1 everywhere.
    """
    result = set()
    for e in graph.edges:
        u, v = graph.attach[e.plus], graph.attach[e.minus]
        if u == v:
            continue
        rest = nx.MultiGraph(graph.multigraph)
        rest.remove_edge(u, v, key=e.name)
        if nx.is_connected(rest):
            continue
        for end in (u, v):
            side = rest.subgraph(nx.node_connected_component(rest, end))
            acyclic = side.number_of_edges() == side.number_of_nodes() - 1
            if acyclic and all(graph.multiplicity(w) == 1 for w in side.nodes):
                result.add(e.name)
                break
    return frozenset(result)


def _other_end(graph, edge_name, vertex):
    u, v = graph.endpoints(edge_name)
    return v if u == vertex else u


def simple_rad_same_component(graph, i, j):
    """
    Whether S(i) and rad P(j) share a stable AR component.

    Follows the unique admissible edge path from either end of i: at a vertex of
    multiplicity 2 whose only non-exceptional edge is the current one the path
    turns back along it, at a multiplicity-1 vertex with exactly two
    non-exceptional edges it continues along the other one, anything else ends it.
    """
    exceptional = exceptional_edges(graph)
    for name in (i, j):
        if name in exceptional:
            raise ExceptionalEdgeArgument(f"edge {name} is exceptional")
    if growth_class(graph) == GrowthClass.ONE_DOMESTIC:
        return True
    if graph.is_loop(i):
        return False

    def admissible_at(vertex):
        names = {graph.edge_of(h) for h in graph.cyclic_orders[vertex]}
        return {n for n in names if n not in exceptional and not graph.is_loop(n)}

    for start in dict.fromkeys(graph.endpoints(i)):
        current, vertex, length = i, start, 1
        seen = set()
        while (current, vertex, length % 2) not in seen:
            seen.add((current, vertex, length % 2))
            incident = admissible_at(vertex)
            m = graph.multiplicity(vertex)
            if m == 2 and incident == {current}:
                nxt = current
            elif m == 1 and len(incident) == 2 and current in incident:
                nxt = next(n for n in incident if n != current)
            else:
                break
            length += 1
            if nxt == j and length % 2 == 0:
                logger.debug("Edge path %s -> %s of length %d found", i, j, length)
                return True
            current, vertex = nxt, _other_end(graph, nxt, vertex)
    return False


# -- star reduction -------------------------------------------------------------


def star_reduce(graph):
    """Star W_{n,m} derived equivalent to a generalized Brauer tree"""
    from brauer.presentation import make_star

    if not is_tree(graph):
        raise NotATree(f"graph {graph.name or '<unnamed>'} has a cycle")
    n = graph.num_vertices - 2
    mbar = sorted(m for m in graph.multiplicities.values() if m > 1)
    return make_star(max(n, 0), tuple(mbar))
