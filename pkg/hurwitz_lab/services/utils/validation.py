"""Check reports shared by the verification suites."""
from typing import Any, Dict, List

from .logging_config import get_logger

logger = get_logger(__name__)


class CheckIssue:
    """One finding of a verification run."""

    def __init__(self, severity: str, location: str, message: str):
        self.severity = severity  # 'error', 'warning', 'info'
        self.location = location
        self.message = message

    def to_dict(self) -> Dict[str, str]:
        return {"severity": self.severity, "location": self.location, "message": self.message}

    def __repr__(self):
        return f"[{self.severity.upper()}] {self.location}: {self.message}"


class VerificationReport:
    """Collects errors, warnings and info messages from a group of checks."""

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.errors: List[CheckIssue] = []
        self.warnings: List[CheckIssue] = []
        self.info: List[CheckIssue] = []
        self.checks_run = 0

    def add_error(self, location: str, message: str):
        """Add an error to the report."""
        logger.error(f"{location}: {message}")
        self.errors.append(CheckIssue("error", location, message))

    def add_warning(self, location: str, message: str):
        """Add a warning to the report."""
        logger.warning(f"{location}: {message}")
        self.warnings.append(CheckIssue("warning", location, message))

    def add_info(self, location: str, message: str):
        """Add an info message to the report."""
        self.info.append(CheckIssue("info", location, message))

    def record(self, passed: bool, location: str, message: str):
        """Count one check and file an error when it failed."""
        self.checks_run += 1
        if not passed:
            self.add_error(location, message)

    def merge(self, other: "VerificationReport"):
        """Fold another report's findings into this one."""
        self.errors.extend(other.errors)
        self.warnings.extend(other.warnings)
        self.info.extend(other.info)
        self.checks_run += other.checks_run

    def is_valid(self) -> bool:
        """Check if verification passed (no errors)."""
        return len(self.errors) == 0

    def summary(self) -> str:
        """Get a summary of verification results."""
        return (
            f"Checks: {self.checks_run}, "
            f"Errors: {len(self.errors)}, "
            f"Warnings: {len(self.warnings)}, "
            f"Info: {len(self.info)}"
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "passed": self.is_valid(),
            "checks_run": self.checks_run,
            "errors": [issue.to_dict() for issue in self.errors],
            "warnings": [issue.to_dict() for issue in self.warnings],
            "info": [issue.to_dict() for issue in self.info],
        }
