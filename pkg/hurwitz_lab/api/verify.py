"""
hurwitz-lab - Verification API
Run the invariant suites and report
"""
import argparse

from ..services.hurwitz_engine import verify_suite
from .common import CommandResult, UsageError, load_context, resolve_tau, seed_of


def run_verification(args: argparse.Namespace) -> CommandResult:
    """Exit status 1 when any check fails."""
    if args.max_r < 0:
        raise UsageError(f"--max-r must be nonnegative, got {args.max_r}")
    ctx = load_context(args)
    tau = resolve_tau(ctx, args.tau)
    seed = seed_of(args)
    report = verify_suite(ctx, tau, max_r=args.max_r, seed=seed, work_cap=args.work_cap)

    payload = {"order": ctx.order, "tau": ctx.classes[tau].label, "max_r": args.max_r}
    payload.update(report.to_dict())
    payload["summary"] = report.summary()

    lines = [f"seed {seed}: {report.summary()}"]
    lines += [repr(issue) for issue in report.errors + report.warnings + report.info]
    lines.append("all checks passed" if report.is_valid() else "verification FAILED")
    return CommandResult(payload=payload, text="\n".join(lines), exit_code=0 if report.is_valid() else 1)


def register(subparsers, group_parents, output_parents) -> None:
    p = subparsers.add_parser("verify", parents=group_parents + output_parents, help="run every invariant check")
    p.add_argument("--tau", help="branch class (default: transpositions of S_d)")
    p.add_argument("--max-r", type=int, default=4, help="highest coefficient compared with the tuple oracle")
    p.set_defaults(handler=run_verification)
