"""
hurwitz-lab - Hurwitz API
Generating functions h_tau(mu, nu) and the one-part formula
"""
import argparse

from ..app.config import settings
from ..services.hurwitz_engine import HurwitzContext, hurwitz_series, one_part_coeffs
from ..services.ratfunc import ratfunc_to_json, ratfunc_to_latex, ratfunc_to_text, series_to_json
from ..services.utils.storage import rational_to_str
from .common import CommandResult, UsageError, load_context, resolve_class, resolve_tau


def get_hurwitz(args: argparse.Namespace) -> CommandResult:
    """Closed form, series and raw tuple counts for one pair of classes."""
    ctx = load_context(args)
    mu = resolve_class(ctx, "--mu", args.mu)
    nu = resolve_class(ctx, "--nu", args.nu)
    tau = resolve_tau(ctx, args.tau)
    result = hurwitz_series(ctx, mu, nu, tau, args.order)

    labels = ctx.classes.labels
    payload = {
        "mu": labels[mu],
        "nu": labels[nu],
        "tau": labels[tau],
        "gf": ratfunc_to_json(result.gf),
        "coeffs": series_to_json(result.coeffs),
        "counts": list(result.raw_counts),
    }
    text = "\n".join([
        f"h_{labels[tau]}({labels[mu]}, {labels[nu]}) = {ratfunc_to_text(result.gf)}",
        "coeffs: " + " ".join(payload["coeffs"]),
        "counts: " + " ".join(str(c) for c in result.raw_counts),
    ])
    return CommandResult(payload=payload, text=text, latex=ratfunc_to_latex(result.gf))


def get_one_part(args: argparse.Namespace) -> CommandResult:
    """One-part numbers from the closed formula, optionally beside the engine series."""
    if args.degree < 1:
        raise UsageError(f"--degree must be positive, got {args.degree}")
    order = settings.DEFAULT_SERIES_ORDER if args.order is None else args.order
    if order < 0:
        raise UsageError(f"--order must be nonnegative, got {order}")
    coeffs = [rational_to_str(c) for c in one_part_coeffs(args.degree, order)]
    payload = {"degree": args.degree, "coeffs": coeffs}
    lines = ["formula: " + " ".join(coeffs)]

    if args.compare:
        if args.degree < 2:
            raise UsageError("--compare needs --degree of at least 2")
        ctx = HurwitzContext.symmetric(args.degree)
        full = ctx.full_cycle_class()
        engine = series_to_json(hurwitz_series(ctx, full, full, ctx.transposition_class(), order).coeffs)
        payload["engine"] = engine
        payload["agree"] = engine == coeffs
        lines += ["engine:  " + " ".join(engine), "agree" if payload["agree"] else "DISAGREE"]
    return CommandResult(payload=payload, text="\n".join(lines), exit_code=0 if payload.get("agree", True) else 1)


def register(subparsers, group_parents, output_parents) -> None:
    p = subparsers.add_parser("hurwitz", parents=group_parents + output_parents, help="generating function h_tau(mu, nu)")
    p.add_argument("--mu", help="first class label, e.g. 4 or 1,1,2")
    p.add_argument("--nu", help="second class label")
    p.add_argument("--tau", help="branch class (default: transpositions of S_d)")
    p.add_argument("--order", type=int, default=None, help="series order (default from settings)")
    p.set_defaults(handler=get_hurwitz)

    p = subparsers.add_parser("one-part", parents=output_parents, help="one-part double Hurwitz numbers")
    p.add_argument("--degree", type=int, required=True, help="degree d of the full cycle")
    p.add_argument("--order", type=int, default=None, help="highest r (default from settings)")
    p.add_argument("--compare", action="store_true", help="also expand the engine's generating function")
    p.set_defaults(handler=get_one_part)
