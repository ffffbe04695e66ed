"""
hurwitz-lab - Graphs API
Bundle counts on enhanced graphs and their surface-group presentations
"""
import argparse
from pathlib import Path
from typing import Dict, Optional, Tuple

from ..services.class_algebra import surface_correlator
from ..services.graph_count import (
    EnhancedGraph,
    boundary_from_labels,
    boundary_holonomies,
    count_boundary,
    count_homs_presentation,
    count_homs_surface,
    graph_from_document,
    presentation,
    standard_graph,
)
from ..services.hurwitz_engine import HurwitzContext
from ..services.utils.storage import rational_to_str
from .common import CommandResult, UsageError, load_context, read_input, resolve_class


def _load_graph(args: argparse.Namespace, leaves: Optional[int]) -> Tuple[EnhancedGraph, Dict[int, str]]:
    """``--graph FILE`` (with its own boundary) or the standard graph for ``--genus``."""
    if args.graph is not None:
        if args.genus is not None or args.boundary:
            raise UsageError("--graph cannot be combined with --genus or --boundary")
        return graph_from_document(read_input("--graph", args.graph))
    if args.genus is None:
        raise UsageError("either --graph or --genus is required")
    labels = args.boundary or []
    graph = standard_graph(args.genus, len(labels) if leaves is None else leaves)
    return graph, dict(zip(graph.leaf_edges, labels))


def _boundary(ctx: HurwitzContext, graph: EnhancedGraph, labels: Dict[int, str]):
    return boundary_from_labels(graph, labels, lambda label: resolve_class(ctx, "--boundary", label))


def get_graph_count(args: argparse.Namespace) -> CommandResult:
    """Bundle count with prescribed leaf classes; ``--oracle`` adds two independent counts."""
    ctx = load_context(args)
    graph, labels = _load_graph(args, None)
    boundary = _boundary(ctx, graph, labels)
    count = count_boundary(graph, boundary, ctx.sc, work_cap=args.work_cap)

    payload = {
        "genus": graph.genus,
        "leaves": len(graph.leaf_edges),
        "boundary": [ctx.classes[boundary.classes[e]].label for e in graph.leaf_edges],
        "count": rational_to_str(count),
    }
    lines = [f"genus {graph.genus}, boundary ({', '.join(payload['boundary'])}): {payload['count']}"]

    if args.oracle:
        holonomies = boundary_holonomies(graph, boundary, ctx.sc)
        p = presentation(graph)
        constraints = {p.leaf_generators[e]: c for e, c in boundary.classes.items()}
        payload["correlator"] = rational_to_str(surface_correlator(graph.genus, holonomies, ctx.sc))
        payload["surface"] = count_homs_surface(graph.genus, holonomies, ctx.group, ctx.classes, args.work_cap)
        payload["presentation"] = count_homs_presentation(p, constraints, ctx.group, ctx.classes, args.work_cap)
        agree = payload["count"] == payload["correlator"] == str(payload["surface"]) == str(payload["presentation"])
        payload["agree"] = agree
        lines += [
            f"correlator:   {payload['correlator']}",
            f"surface:      {payload['surface']}",
            f"presentation: {payload['presentation']}",
            "agree" if agree else "DISAGREE",
        ]
        return CommandResult(payload=payload, text="\n".join(lines), exit_code=0 if agree else 1)
    return CommandResult(payload=payload, text="\n".join(lines))


def get_presentation(args: argparse.Namespace) -> CommandResult:
    """The presentation of the graph's fundamental group and its homomorphism counts."""
    ctx = load_context(args)
    graph, labels = _load_graph(args, args.leaves if not args.boundary else None)
    p = presentation(graph)
    payload = p.to_dict()
    payload["genus"] = graph.genus
    payload["homomorphisms"] = count_homs_presentation(p, {}, ctx.group, ctx.classes, args.work_cap)
    lines = [
        p.to_text(),
        f"{len(p.generators)} generators, {len(p.relators)} relators",
        f"homomorphisms: {payload['homomorphisms']}",
    ]
    if labels:
        boundary = _boundary(ctx, graph, labels)
        constraints = {p.leaf_generators[e]: c for e, c in boundary.classes.items()}
        payload["with_boundary"] = count_homs_presentation(p, constraints, ctx.group, ctx.classes, args.work_cap)
        lines.append(f"with boundary: {payload['with_boundary']}")
    return CommandResult(payload=payload, text="\n".join(lines))


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", type=Path, metavar="FILE", help="graph JSON file (carries its own boundary)")
    p.add_argument("--genus", type=int, help="use the standard graph of this genus")
    p.add_argument("--boundary", action="append", metavar="LABEL", help="class of the next leaf (repeat per leaf)")


def register(subparsers, group_parents, output_parents) -> None:
    p = subparsers.add_parser("graph-count", parents=group_parents + output_parents, help="count bundles on a graph")
    _add_graph_source(p)
    p.add_argument("--oracle", action="store_true", help="also count via the surface relation and the presentation")
    p.set_defaults(handler=get_graph_count)

    p = subparsers.add_parser("present", parents=group_parents + output_parents, help="print a graph's presentation")
    _add_graph_source(p)
    p.add_argument("--leaves", type=int, default=0, help="leaf count for --genus without --boundary")
    p.set_defaults(handler=get_presentation)
