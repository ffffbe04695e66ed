"""
hurwitz-lab - Shared command plumbing
Common flags, group loading, class-label resolution and output rendering.
"""
import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

from ..app.config import settings
from ..services.errors import InvalidInput
from ..services.finite_group import group_from_document
from ..services.hurwitz_engine import HurwitzContext
from ..services.utils.logging_config import LEVELS as LOG_LEVELS
from ..services.utils.storage import dumps, read_json

FORMATS = ("json", "text", "latex")


class UsageError(Exception):
    """Bad flags or unknown class labels; exit status 2."""
    pass


@dataclass
class CommandResult:
    """What a command prints: a JSON payload and its text/LaTeX renderings."""

    payload: Dict[str, Any]
    text: str
    latex: Optional[str] = None
    exit_code: int = 0


def output_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=FORMATS, default="json", help="output format (default: json)")
    parent.add_argument("--seed", type=int, default=None, help=f"random seed (default: {settings.DEFAULT_SEED})")
    parent.add_argument("--work-cap", type=int, default=None, help="cap on brute-force enumeration steps")
    parent.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=None,
        help="logging level; logs go to stderr (default from settings)",
    )
    return parent


def group_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    source = parent.add_mutually_exclusive_group(required=True)
    source.add_argument("--sym", type=int, metavar="D", help="use the symmetric group S_D")
    source.add_argument("--group", type=Path, metavar="FILE", help="JSON file with generators or a Cayley table")
    return parent


def read_input(flag: str, path: Path) -> Any:
    """
    Read the JSON file named by ``flag``.

    Raises:
        UsageError: If the file does not exist
    """
    if not Path(path).is_file():
        raise UsageError(f"{flag}: file not found: {path}")
    return read_json(path)


def load_context(args: argparse.Namespace) -> HurwitzContext:
    if args.sym is not None:
        if args.sym < 1:
            raise UsageError(f"--sym must be positive, got {args.sym}")
        return HurwitzContext.symmetric(args.sym)
    group, classes = group_from_document(read_input("--group", args.group))
    return HurwitzContext.from_group(group, classes)


def resolve_class(ctx: HurwitzContext, flag: str, label: Optional[str]) -> int:
    """
    Raises:
        UsageError: If the flag is missing or the label names no class
    """
    if label is None:
        raise UsageError(f"{flag} is required")
    try:
        return ctx.class_id(label)
    except InvalidInput as e:
        raise UsageError(f"{flag}: {e}") from e


def resolve_tau(ctx: HurwitzContext, label: Optional[str]) -> int:
    """``--tau`` defaults to the transpositions of S_d."""
    if label is None and ctx.degree is not None and ctx.degree >= 2:
        return ctx.transposition_class()
    return resolve_class(ctx, "--tau", label)


def seed_of(args: argparse.Namespace) -> int:
    return settings.DEFAULT_SEED if args.seed is None else args.seed


def emit(result: CommandResult, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(dumps(result.payload).decode() + "\n")
    elif fmt == "latex" and result.latex is not None:
        stream.write(result.latex + "\n")
    else:
        stream.write(result.text + "\n")
