#!/usr/bin/env python3
"""
Command-line front end for Brauer graph algebras: graph invariants, string
modules, syzygies, AR components, universal deformation rings and the
verification suites.

Exit codes: 0 success, 1 negative result (violations, failed checks,
unsupported input), 2 input error (unreadable file, bad graph, bad word).
"""

import os
import sys
import json
import argparse

# Add parent directory to path
sys.path.append(os.path.abspath(os.path.dirname(__file__)))

from brauer.errors import BadMultiplicityVector, BrauerError, GraphFormatError, WordError
from brauer.homology import (
    component_window,
    cosyzygy,
    ext1_dim,
    is_periodic,
    locate,
    stable_end_dim,
    syzygy,
)
from brauer.ribbon import (
    derived_equivalent,
    double_stepped_walks,
    exceptional_edges,
    face_perimeters,
    faces,
    green_walks,
    growth_class,
    is_bipartite,
    is_tree,
    multiplicity_multiset,
    star_reduce,
    validate,
)
from brauer.strmod import StringModule
from brauer.udr import Ladder, classify, classify_tree, tree_component_summary, verify_ladder
from utils.config import load_run_config, setup_logging
from utils.graph_io import dump_graph, load_graph, load_presentation, save_graph
from utils.suites import SUITES

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2

INPUT_ERRORS = (GraphFormatError, WordError, BadMultiplicityVector)
FORMAT_VIOLATIONS = ("pairing", "half-edge", "duplicate", "cyclic order")


def emit(config, data, text_lines):
    """Print a report as structured JSON or as text lines"""
    if config.output_format == "structured":
        print(json.dumps(data, indent=2, sort_keys=True, default=str))
    else:
        for line in text_lines:
            print(line)


def resolve_path(path, config):
    """Bare names fall back to the bundled graphs directory"""
    if os.path.exists(path) or os.path.isabs(path):
        return path
    bundled = os.path.join(config.graphs_dir, path)
    return bundled if os.path.exists(bundled) else path


def banner(title):
    print("=" * 50)
    print(title)
    print("=" * 50)


# -- graph commands ---------------------------------------------------------------


def cmd_validate(args, config):
    graph = load_graph(args.graph)
    report = validate(graph)
    if report.ok:
        emit(config, {"graph": graph.name, "valid": True}, [f"✅ {graph.name}: valid Brauer graph"])
        return EXIT_OK
    emit(config, {"graph": graph.name, "valid": False, "violations": report.violations},
         [f"❌ {graph.name}: {len(report.violations)} violation(s)"] + [f"   {v}" for v in report.violations])
    if any(v.startswith(prefix) for v in report.violations for prefix in FORMAT_VIOLATIONS):
        return EXIT_INPUT
    return EXIT_NEGATIVE


def cmd_invariants(args, config):
    pres = load_presentation(args.graph)
    graph = pres.graph
    data = {
        "graph": graph.name,
        "vertices": graph.num_vertices,
        "edges": graph.num_edges,
        "faces": len(faces(graph)),
        "perimeters": face_perimeters(graph),
        "multiplicities": multiplicity_multiset(graph),
        "bipartite": is_bipartite(graph),
        "tree": is_tree(graph),
        "growth": growth_class(graph).value,
        "exceptional_edges": sorted(exceptional_edges(graph)),
        "algebra_dimension": pres.algebra_dimension(),
    }
    emit(config, data, [f"📊 Invariants of {graph.name}"] + [f"   {k}: {v}" for k, v in data.items() if k != "graph"])
    return EXIT_OK


def cmd_derived_eq(args, config):
    g1, g2 = load_graph(args.first), load_graph(args.second)
    result = derived_equivalent(g1, g2)
    lines = [f"equivalent: {str(result.equivalent).lower()}"]
    for name, (a, b, ok) in result.criteria.items():
        lines.append(f"   {'✅' if ok else '❌'} {name}: {a} vs {b}")
    data = {"equivalent": result.equivalent,
            "criteria": {k: {"first": a, "second": b, "match": ok} for k, (a, b, ok) in result.criteria.items()}}
    emit(config, data, lines)
    return EXIT_OK if result.equivalent else EXIT_NEGATIVE


def cmd_star_reduce(args, config):
    graph = load_graph(args.graph)
    star = star_reduce(graph)
    if args.output:
        save_graph(star, args.output)
    emit(config, dump_graph(star), [f"🔄 {graph.name} reduces to {star.name}"] +
         ([f"   saved to {args.output}"] if args.output else []))
    return EXIT_OK


def cmd_green_walks(args, config):
    graph = load_graph(args.graph)
    walks = [list(w.steps) for w in green_walks(graph)]
    doubles = [list(w.steps) for w in double_stepped_walks(graph)]
    lines = [f"📊 {len(walks)} Green walk(s), {len(doubles)} double-stepped walk(s)"]
    lines += [f"   walk: {' '.join(w)}" for w in walks]
    lines += [f"   double-stepped: {' '.join(w)}" for w in doubles]
    emit(config, {"green_walks": walks, "double_stepped_walks": doubles}, lines)
    return EXIT_OK


def cmd_present(args, config):
    pres = load_presentation(args.graph)
    data = pres.export()
    lines = [f"📊 {pres}"]
    lines += [f"   {a['id']}: {a['source']} -> {a['target']}" for a in data["arrows"]]
    lines += [f"   relations I: {len(data['relations']['I'])}, II: {len(data['relations']['II'])}, "
              f"III: {len(data['relations']['III'])}"]
    emit(config, data, lines)
    return EXIT_OK


# -- module commands ----------------------------------------------------------------


def cmd_module(args, config):
    pres = load_presentation(args.graph)
    M = StringModule.parse(pres, args.string)
    data = {"word": str(M.word), "canonical": M.label, "dim": M.dim,
            "top": [M.vertices[p] for p in M.tops], "socle": [M.vertices[p] for p in M.socles],
            "projective": M.is_projective}
    if not M.is_projective:
        periodic, period = is_periodic(M, config.period_bound)
        data.update({
            "periodic": periodic,
            "period": period,
            "address": locate(M, config.period_bound).export(),
            "stable_end_dim": stable_end_dim(M),
            "ext1_dim": ext1_dim(M),
            "syzygy": syzygy(M).label,
            "cosyzygy": cosyzygy(M).label,
        })
    emit(config, data, [f"📊 Module M[{M.label}] over {pres.name}"] + [f"   {k}: {v}" for k, v in data.items()])
    return EXIT_OK


def cmd_udr(args, config):
    pres = load_presentation(args.graph)
    M = StringModule.parse(pres, args.string)
    result = classify(M, config.period_bound, config.probe_depth)
    data = result.export()
    lines = [f"📊 UDR of M[{M.label}] over {pres.name}", f"   {result.udr}"]
    lines += [f"   {e.rule}: {e.quantity} = {e.value}" for e in result.evidence]
    if args.ladder or args.block:
        if args.block:
            ladder = Ladder(prefix=args.string, block=args.block)
        else:
            ladder = Ladder(base=args.string, words=[w.strip() for w in args.ladder.split(";")])
        verdict = verify_ladder(M, ladder, config.probe_depth)
        data["ladder"] = {"udr": str(verdict.udr), "status": verdict.label, "notes": verdict.notes}
        lines += [f"   ladder: {verdict.udr} ({verdict.label})"] + [f"   note: {n}" for n in verdict.notes]
    emit(config, data, lines)
    return EXIT_OK if result.udr.is_ring else EXIT_NEGATIVE


def cmd_tree(args, config):
    graph = load_graph(args.graph)
    if args.string:
        result = classify_tree(graph, args.string, config.period_bound, config.probe_depth)
        data = {"star": result.star, "note": result.note, **result.classification.export()}
        emit(config, data, [f"📊 UDR over {result.star}", f"   {result.classification.udr}", f"   {result.note}"])
        return EXIT_OK if result.classification.udr.is_ring else EXIT_NEGATIVE
    summary = tree_component_summary(graph, config.probe_depth)
    lines = [f"📊 {graph.name} reduces to {summary['star']}"]
    for row in summary["components"]:
        lines.append(f"   S({row['simple']}) [{row['case']}]: {', '.join(row['udr'])}")
    emit(config, summary, lines)
    return EXIT_OK


def cmd_component(args, config):
    pres = load_presentation(args.graph)
    M = StringModule.parse(pres, args.string)
    window = component_window(M, args.radius)
    if config.output_format == "structured":
        print(json.dumps(window.export(), indent=2, sort_keys=True))
    elif config.output_format == "dot" or args.dot:
        print(window.to_dot())
    else:
        print(f"📊 {len(window.nodes)} modules within {args.radius} moves of M[{M.label}]")
        for label, info in window.nodes.items():
            print(f"   {label}: {info}")
        for source, target in window.arrows:
            print(f"   {source} -> {target}")
    return EXIT_OK


def cmd_verify(args, config):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        banner(f"🔄 Suite {name}")
        for check in SUITES[name](config):
            mark = "✅" if check.ok else "❌"
            print(f"{mark} {check.name}")
            if not check.ok:
                failed += 1
                print(f"   expected: {check.expected}")
                print(f"   computed: {check.computed}")
    if failed:
        print(f"\n❌ {failed} check(s) failed")
        return EXIT_NEGATIVE
    print("\n🎉 All checks passed")
    return EXIT_OK


# -- entry point ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(description="Brauer graph algebra toolkit")
    parser.add_argument("--format", dest="output_format", choices=["text", "structured", "json", "json-like", "dot"])
    parser.add_argument("--max-len", dest="max_word_len", type=int)
    parser.add_argument("--probe-depth", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--bound", dest="period_bound", type=int)
    parser.add_argument("--log-level")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, handler in (("validate", cmd_validate), ("invariants", cmd_invariants),
                          ("green-walks", cmd_green_walks), ("present", cmd_present)):
        p = sub.add_parser(name)
        p.add_argument("graph")
        p.set_defaults(handler=handler)

    p = sub.add_parser("derived-eq")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_derived_eq)

    p = sub.add_parser("star-reduce")
    p.add_argument("graph")
    p.add_argument("--output")
    p.set_defaults(handler=cmd_star_reduce)

    p = sub.add_parser("module")
    p.add_argument("graph")
    p.add_argument("--string", required=True)
    p.set_defaults(handler=cmd_module)

    p = sub.add_parser("udr")
    p.add_argument("graph")
    p.add_argument("--string", required=True)
    p.add_argument("--ladder", help="words W_1; W_2; ... of a finite ladder over --string")
    p.add_argument("--block", help="repeating block of a template ladder with prefix --string")
    p.set_defaults(handler=cmd_udr)

    p = sub.add_parser("tree")
    p.add_argument("graph")
    p.add_argument("--string", help="word over the star reduction; omit for the component summary")
    p.set_defaults(handler=cmd_tree)

    p = sub.add_parser("component")
    p.add_argument("graph")
    p.add_argument("--string", required=True)
    p.add_argument("--radius", type=int, default=2)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(handler=cmd_component)

    p = sub.add_parser("verify")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = load_run_config(
            max_word_len=args.max_word_len,
            period_bound=args.period_bound,
            probe_depth=args.probe_depth,
            output_format=args.output_format,
            seed=args.seed,
            log_level=args.log_level,
        )
    except ValueError as e:
        print(f"❌ Configuration error: {e}")
        return EXIT_INPUT
    setup_logging(config.log_level)
    for name in ("graph", "first", "second"):
        if getattr(args, name, None):
            setattr(args, name, resolve_path(getattr(args, name), config))

    try:
        return args.handler(args, config)
    except INPUT_ERRORS as e:
        print(f"❌ Input error: {e}")
        return EXIT_INPUT
    except BrauerError as e:
        print(f"❌ {type(e).__name__}: {e}")
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
