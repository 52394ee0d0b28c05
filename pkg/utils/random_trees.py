#!/usr/bin/env python3
"""
Seeded random generalized Brauer trees for the walk and reduction suites.
"""

import random

from brauer.ribbon import BrauerGraph, Vertex


def random_tree(rng, edges, max_multiplicity=4, big_vertices=1):
    """
    Random tree with `edges` edges, shuffled rotations and at least
    `big_vertices` vertices of multiplicity > 1.
    """
    count = edges + 1
    ids = [f"v{k}" for k in range(count)]
    half_edges, attach, pairing = [], {}, {}
    incident = {v: [] for v in ids}
    for k in range(1, count):
        parent = ids[rng.randrange(k)]
        inner, outer = str(k - 1), f"{k - 1}'"
        half_edges += [inner, outer]
        attach[inner], attach[outer] = parent, ids[k]
        pairing[inner], pairing[outer] = outer, inner
        incident[parent].append(inner)
        incident[ids[k]].append(outer)
    orders = {}
    for v in ids:
        order = list(incident[v])
        rng.shuffle(order)
        orders[v] = tuple(order)

    mults = [rng.randint(1, max_multiplicity) for _ in ids]
    big = [k for k, m in enumerate(mults) if m > 1]
    for k in rng.sample([k for k in range(count) if k not in big], max(0, big_vertices - len(big))):
        mults[k] = rng.randint(2, max(2, max_multiplicity))
    vertices = tuple(Vertex(v, m) for v, m in zip(ids, mults))
    return BrauerGraph(vertices, tuple(half_edges), attach, pairing, orders,
                       name=f"tree_{edges}", family="tree")


def random_corpus(seed, size=200, min_edges=2, max_edges=8):
    rng = random.Random(seed)
    return [random_tree(rng, rng.randint(min_edges, max_edges)) for _ in range(size)]
