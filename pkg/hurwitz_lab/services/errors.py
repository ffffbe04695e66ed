"""Exception hierarchy shared by the engines.

Every computational failure derives from :class:`LabError`; the command line
front end turns it into exit status 1.
"""
from typing import Any, Optional


class LabError(Exception):
    """Base exception for hurwitz-lab failures."""
    pass


class InvalidInput(LabError, ValueError):
    """Raised when an argument or input file does not describe a valid object."""
    pass


class OrderCapExceeded(LabError):
    """Raised when a group closure grows past the configured order cap."""

    def __init__(self, cap: int, message: Optional[str] = None):
        self.cap = cap
        super().__init__(message or f"Group order exceeds the configured cap of {cap}")


class NotAGroup(LabError):
    """Raised when a Cayley table violates a group axiom."""

    def __init__(self, axiom: str, witness: Any, message: str = ""):
        self.axiom = axiom
        self.witness = witness
        detail = f": {message}" if message else ""
        super().__init__(f"Not a group, {axiom} fails at {witness}{detail}")


class WorkCapExceeded(LabError):
    """Raised when a brute-force enumeration would exceed the work cap."""

    def __init__(self, estimate: int, cap: int, what: str = "enumeration"):
        self.estimate = estimate
        self.cap = cap
        super().__init__(f"{what} needs about {estimate} steps, work cap is {cap}")


class DivisionByZeroFunction(LabError, ZeroDivisionError):
    """Raised when a rational function is divided by zero."""
    pass


class SingularMatrix(LabError):
    """Raised when a rational-function matrix has zero determinant."""
    pass


class SingularDiagonal(LabError):
    """Raised when the diagonal part of a Neumann series has a zero entry."""
    pass


class PoleAtOrigin(LabError):
    """Raised when a Taylor expansion at zero is requested for a function with a pole there."""
    pass


class IntegralityViolation(LabError):
    """Raised when a count that must be a nonnegative integer is not."""
    pass


class InvalidGraph(LabError):
    """Raised when enhanced-graph data breaks a structural invariant."""
    pass


class Disconnected(InvalidGraph):
    """Raised when a graph is not connected."""
    pass


class MoveNotApplicable(LabError):
    """Raised when a graph transformation cannot be applied."""
    pass
