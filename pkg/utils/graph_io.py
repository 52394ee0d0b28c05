#!/usr/bin/env python3
"""
Read and write Brauer graph files.

A file holds either the full form ("vertices", "half_edges", "attach",
"pairing", "cyclic_orders") or one of the shorthands "tree", "star" and
"koszul". Duplicate keys are rejected.
"""

import os
import json

from brauer.errors import GraphFormatError
from brauer.presentation import Presentation, make_koszul, make_star
from brauer.ribbon import BrauerGraph, Vertex

REQUIRED_KEYS = ("vertices", "half_edges", "attach", "pairing", "cyclic_orders")


def _reject_duplicates(pairs):
    data = {}
    for key, value in pairs:
        if key in data:
            raise GraphFormatError(f"duplicate key {key!r}")
        data[key] = value
    return data


def read_json(path):
    """Load a JSON file, reporting syntax errors with line and column"""
    try:
        with open(path, 'r') as f:
            return json.load(f, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"{path}: line {e.lineno}, column {e.colno}: {e.msg}")
    except OSError as e:
        raise GraphFormatError(f"cannot read {path}: {e}")


def expand_tree(shorthand, name=""):
    """
    Tree shorthand: "edges" as [u, v] pairs, optional "multiplicities" and
    "rotation" (vertex -> edge indices). Edge k gets half-edges "k" at u and
    "k'" at v.
    """
    edges = shorthand.get("edges")
    if not edges:
        raise GraphFormatError("tree shorthand needs a non-empty 'edges' list")
    mults = shorthand.get("multiplicities", {})
    rotation = shorthand.get("rotation", {})
    vertex_ids = []
    half_edges, attach, pairing = [], {}, {}
    incident = {}
    for k, pair in enumerate(edges):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise GraphFormatError(f"edge {k} must be a [u, v] pair, got {pair!r}")
        u, v = (str(x) for x in pair)
        for w in (u, v):
            if w not in vertex_ids:
                vertex_ids.append(w)
        inner, outer = str(k), f"{k}'"
        half_edges += [inner, outer]
        attach[inner], attach[outer] = u, v
        pairing[inner], pairing[outer] = outer, inner
        incident.setdefault(u, []).append((k, inner))
        incident.setdefault(v, []).append((k, outer))
    orders = {}
    for w in vertex_ids:
        if w in rotation:
            by_edge = {k: h for k, h in incident[w]}
            try:
                orders[w] = tuple(by_edge[int(k)] for k in rotation[w])
            except (KeyError, ValueError):
                raise GraphFormatError(f"rotation at {w} names an edge not incident to it")
        else:
            orders[w] = tuple(h for _, h in incident[w])
    vertices = tuple(Vertex(w, int(mults.get(w, 1))) for w in vertex_ids)
    return BrauerGraph(vertices, tuple(half_edges), attach, pairing, orders, name=name, family="tree")


def parse_graph(data, name=""):
    """Build a BrauerGraph from decoded JSON"""
    if not isinstance(data, dict):
        raise GraphFormatError("top level must be an object")
    name = data.get("name", name)
    if "star" in data:
        shorthand = data["star"]
        return make_star(int(shorthand["n"]), tuple(shorthand["mbar"]))
    if "koszul" in data:
        shorthand = data["koszul"]
        return make_koszul(int(shorthand["n"]), int(shorthand["l"]), int(shorthand["m"]), shorthand.get("lambda", 1)).graph
    if "tree" in data:
        return expand_tree(data["tree"], name)
    missing = [k for k in REQUIRED_KEYS if k not in data]
    if missing:
        raise GraphFormatError(f"missing keys: {', '.join(missing)}")
    try:
        vertices = tuple(Vertex(str(v["id"]), v["multiplicity"]) for v in data["vertices"])
    except (KeyError, TypeError):
        raise GraphFormatError("every vertex needs 'id' and 'multiplicity'")
    return BrauerGraph(
        vertices,
        tuple(str(h) for h in data["half_edges"]),
        {str(k): str(v) for k, v in data["attach"].items()},
        {str(k): str(v) for k, v in data["pairing"].items()},
        {str(k): tuple(str(h) for h in v) for k, v in data["cyclic_orders"].items()},
        {str(k): str(v) for k, v in data.get("arrow_names", {}).items()},
        name=name,
        family=data.get("family", "graph"),
        params=data.get("params", {}),
    )


def load_graph(path):
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_graph(read_json(path), name)


def load_presentation(path):
    """Load and present a graph; invalid graphs raise GraphFormatError"""
    return Presentation(load_graph(path))


def dump_graph(graph):
    """Full-form dictionary of a graph"""
    data = {
        "name": graph.name,
        "vertices": [{"id": v.id, "multiplicity": v.multiplicity} for v in graph.vertices],
        "half_edges": list(graph.half_edges),
        "attach": dict(graph.attach),
        "pairing": dict(graph.pairing),
        "cyclic_orders": {v: list(order) for v, order in graph.cyclic_orders.items()},
    }
    if graph.arrow_names:
        data["arrow_names"] = dict(graph.arrow_names)
    if graph.family != "graph":
        data["family"] = graph.family
        data["params"] = {k: list(v) if isinstance(v, tuple) else v for k, v in graph.params.items()}
    return data


def save_graph(graph, path):
    with open(path, 'w') as f:
        json.dump(dump_graph(graph), f, indent=2)
