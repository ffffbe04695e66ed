"""
hurwitz-lab - Groups API
Conjugacy classes, structure constants and the matrix A = D - beta B
"""
import argparse

from ..services.hurwitz_engine import build_A, inverse_A
from ..services.ratfunc import matrix_to_json, matrix_to_latex, matrix_to_text
from .common import CommandResult, load_context, resolve_tau


def get_classes(args: argparse.Namespace) -> CommandResult:
    """List the classes of the group, optionally with the structure constants."""
    ctx = load_context(args)
    classes = ctx.classes
    rows = [
        {
            "id": c.id,
            "label": c.label,
            "size": c.size,
            "inverse": classes[c.inverse_class_id].label,
            "representative": ctx.group.label(c.representative),
        }
        for c in classes
    ]
    payload = {"order": ctx.order, "classes": rows}
    if args.constants:
        payload["structure_constants"] = ctx.sc.table

    width = max(len(c.label) for c in classes)
    lines = [f"|G| = {ctx.order}, {len(classes)} classes"]
    lines += [
        f"{row['id']:>3}  {row['label']:<{width}}  size {row['size']:>5}  inverse {row['inverse']}"
        for row in rows
    ]
    if args.constants:
        for mu in range(ctx.n):
            for nu in range(ctx.n):
                lines.append(f"f_{classes[mu].label} f_{classes[nu].label} = {ctx.sc.table[mu][nu]}")
    return CommandResult(payload=payload, text="\n".join(lines))


def get_matrix(args: argparse.Namespace) -> CommandResult:
    """The matrix A for a branch class, or its inverse."""
    ctx = load_context(args)
    tau = resolve_tau(ctx, args.tau)
    m = inverse_A(ctx, tau) if args.inverse else build_A(ctx, tau)[2]
    payload = {
        "tau": ctx.classes[tau].label,
        "labels": list(ctx.classes.labels),
        "inverse": args.inverse,
        "matrix": matrix_to_json(m),
    }
    return CommandResult(payload=payload, text=matrix_to_text(m), latex=matrix_to_latex(m))


def register(subparsers, group_parents, output_parents) -> None:
    parents = group_parents + output_parents
    p = subparsers.add_parser("classes", parents=parents, help="list conjugacy classes")
    p.add_argument("--constants", action="store_true", help="also dump the structure constants")
    p.set_defaults(handler=get_classes)

    p = subparsers.add_parser("matrix", parents=parents, help="print A = D - beta B")
    p.add_argument("--tau", help="branch class (default: transpositions of S_d)")
    p.add_argument("--inverse", action="store_true", help="print A^-1 instead")
    p.set_defaults(handler=get_matrix)
