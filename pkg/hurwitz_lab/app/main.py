"""
hurwitz-lab - Main Application
Command-line front end combining:
- Groups (conjugacy classes, structure constants, the matrix A)
- Hurwitz (generating functions, one-part formula)
- Verification (invariant suites against the oracles)
- Graphs (bundle counts on enhanced graphs, presentations)
"""
import argparse
import sys
from typing import List, Optional

from ..api import graphs, groups, hurwitz, verify
from ..api.common import UsageError, emit, group_parent, output_parent
from ..services.errors import LabError
from ..services.utils.logging_config import get_logger, setup_logging
from .config import settings

logger = get_logger(__name__)


# ============================================================================
# Parser
# ============================================================================
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz_lab",
        description="Exact double Hurwitz generating functions and G-bundle counts.",
    )
    parser.add_argument("--version", action="version", version=f"{settings.APP_NAME} {settings.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    group_parents = [group_parent()]
    output_parents = [output_parent()]
    for module in (groups, hurwitz, verify, graphs):
        module.register(subparsers, group_parents, output_parents)
    return parser


# ============================================================================
# Entry Point
# ============================================================================
def run(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    """
    Parse ``argv``, run the command and print its result.

    Returns:
        0 on success, 1 on a computational error or failed check, 2 on a usage error
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        setup_logging(args.log_level or settings.LOG_LEVEL, settings.LOG_FILE, command=args.command, stream=stderr)
        logger.info(f"{settings.APP_NAME} {settings.APP_VERSION}: {args.command}")
        result = args.handler(args)
    except UsageError as e:
        stderr.write(f"{parser.prog} {args.command}: error: {e}\n")
        return 2
    except LabError as e:
        logger.error(f"{type(e).__name__}: {e}")
        stderr.write(f"{parser.prog} {args.command}: {type(e).__name__}: {e}\n")
        return 1

    emit(result, args.format, stdout)
    return result.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
