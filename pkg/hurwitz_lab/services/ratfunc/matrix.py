"""Matrices of rational functions and their exact inverses.

``mat_inverse`` clears denominators row by row, then runs fraction-free
Gauss-Jordan elimination over Q[beta] on ``[P | I]``: every update
``a_ij <- (a_kk a_ij - a_ik a_kj) / previous_pivot`` divides exactly, and the
left block ends as ``det(P) * I``.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, List, Optional, Sequence, Tuple, Union

from ...app.config import resolve_cap, settings
from ..errors import InvalidInput, SingularDiagonal, SingularMatrix
from ..utils.logging_config import get_logger
from .poly import Poly, poly_lcm
from .ratfunc import RatFunc
from .series import PowerSeries

logger = get_logger(__name__)

Entry = Union[RatFunc, Poly, int, Fraction]


@dataclass(frozen=True, eq=False)
class RatMatrix:
    """A rectangular grid of rational functions."""

    entries: Tuple[Tuple[RatFunc, ...], ...]

    def __post_init__(self):
        grid = tuple(tuple(RatFunc.lift(x) for x in row) for row in self.entries)
        if any(x is NotImplemented for row in grid for x in row):
            raise InvalidInput("Matrix entries must be rational functions, polynomials or rationals")
        if not grid or not grid[0]:
            raise InvalidInput("A matrix needs at least one row and one column")
        if any(len(row) != len(grid[0]) for row in grid):
            raise InvalidInput("Matrix rows differ in length")
        object.__setattr__(self, "entries", grid)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]]) -> "RatMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> RatFunc:
        i, j = index
        return self.entries[i][j]

    def map(self, fn: Callable[[RatFunc], RatFunc]) -> "RatMatrix":
        return RatMatrix(tuple(tuple(fn(x) for x in row) for row in self.entries))

    def transpose(self) -> "RatMatrix":
        return RatMatrix(tuple(zip(*self.entries)))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def scale(self, factor: Entry) -> "RatMatrix":
        return self.map(lambda x: x * factor)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise InvalidInput(f"Cannot multiply {self.shape} by {other.shape}")
        columns = list(zip(*other.entries))
        return RatMatrix(tuple(
            tuple(
                reduce(lambda acc, pair: acc + pair[0] * pair[1], zip(row, col), RatFunc.const(0))
                for col in columns
            )
            for row in self.entries
        ))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s)
        )

    def __hash__(self):
        return hash(self.entries)

    def _same_shape(self, other: "RatMatrix"):
        if self.shape != other.shape:
            raise InvalidInput(f"Shapes {self.shape} and {other.shape} differ")

    def evaluate(self, x) -> List[List[Fraction]]:
        return [[f(x) for f in row] for row in self.entries]


def _polynomial_rows(m: RatMatrix) -> Tuple[List[List[Poly]], List[Poly]]:
    """Scale each row by the lcm of its denominators: ``m = diag(1/L) P``."""
    rows, scales = [], []
    for row in m.entries:
        scale = reduce(poly_lcm, (f.den for f in row), Poly.const(1))
        rows.append([f.num * scale.exact_div(f.den) for f in row])
        scales.append(scale)
    return rows, scales


def _bareiss(grid: List[List[Poly]], n: int, gauss_jordan: bool) -> Tuple[List[List[Poly]], Poly, int]:
    """
    Fraction-free elimination on the first ``n`` columns, in place.

    Returns the grid, the last pivot and the sign of the row permutation.

    Raises:
        SingularMatrix: If some column has no nonzero pivot
    """
    previous = Poly.const(1)
    sign = 1
    width = len(grid[0])
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if grid[i][k]), None)
        if pivot_row is None:
            raise SingularMatrix(f"Determinant is zero (no pivot in column {k})")
        if pivot_row != k:
            grid[k], grid[pivot_row] = grid[pivot_row], grid[k]
            sign = -sign
        pivot = grid[k][k]
        targets = [i for i in range(n) if i != k] if gauss_jordan else range(k + 1, n)
        first = 0 if gauss_jordan else k + 1
        for i in targets:
            factor = grid[i][k]
            row = grid[i]
            for j in range(first, width):
                if j == k:
                    continue
                row[j] = (pivot * row[j] - factor * grid[k][j]).exact_div(previous)
            row[k] = Poly()
        previous = pivot
    return grid, previous, sign


def determinant(m: RatMatrix) -> RatFunc:
    """Bareiss determinant; the zero function for singular matrices."""
    if not m.is_square():
        raise InvalidInput(f"Determinant of a non-square {m.shape} matrix")
    rows, scales = _polynomial_rows(m)
    try:
        _, det, sign = _bareiss(rows, m.rows, gauss_jordan=False)
    except SingularMatrix:
        return RatFunc.const(0)
    return RatFunc(det * sign, reduce(lambda a, b: a * b, scales, Poly.const(1)))


def determinant_by_minors(m: RatMatrix) -> RatFunc:
    """Leibniz sum organised over column subsets; exponential, for small checks."""
    if not m.is_square():
        raise InvalidInput(f"Determinant of a non-square {m.shape} matrix")
    n = m.rows
    partial = {0: RatFunc.const(1)}
    for i in range(n):
        nxt = {}
        for mask, value in partial.items():
            for j in range(n):
                if mask >> j & 1 or not m[i, j]:
                    continue
                # columns already used to the right of j are inversions
                term = value * m[i, j]
                if bin(mask >> (j + 1)).count("1") % 2:
                    term = -term
                key = mask | 1 << j
                nxt[key] = nxt[key] + term if key in nxt else term
        partial = nxt
    return partial.get((1 << n) - 1, RatFunc.const(0))


def _minor(m: RatMatrix, skip_row: int, skip_col: int) -> RatMatrix:
    return RatMatrix(tuple(
        tuple(x for j, x in enumerate(row) if j != skip_col)
        for i, row in enumerate(m.entries) if i != skip_row
    ))


def adjugate_inverse(m: RatMatrix, max_dimension: Optional[int] = None) -> RatMatrix:
    """
    Inverse as adjugate over determinant, with cofactors by minors.

    Raises:
        InvalidInput: Above ``max_dimension`` (settings.ADJUGATE_MAX_DIMENSION)
        SingularMatrix: If the determinant vanishes
    """
    cap = resolve_cap(max_dimension, settings.ADJUGATE_MAX_DIMENSION)
    n = m.rows
    if not m.is_square():
        raise InvalidInput(f"Inverse of a non-square {m.shape} matrix")
    if n > cap:
        raise InvalidInput(f"Adjugate inverse limited to dimension {cap}, got {n}")
    det = determinant_by_minors(m)
    if det.is_zero():
        raise SingularMatrix("Determinant is the zero function")
    if n == 1:
        return RatMatrix(((1 / det,),))
    return RatMatrix(tuple(
        tuple(
            determinant_by_minors(_minor(m, j, i)) * (-1 if (i + j) % 2 else 1) / det
            for j in range(n)
        )
        for i in range(n)
    ))


def mat_inverse(m: RatMatrix, cross_check: Optional[bool] = None) -> RatMatrix:
    """
    Exact inverse by fraction-free Gauss-Jordan elimination.

    Args:
        m: Square matrix
        cross_check: Also invert through the adjugate and compare
            (defaults to settings.DEBUG; skipped above ADJUGATE_MAX_DIMENSION)

    Raises:
        InvalidInput: If m is not square
        SingularMatrix: If the determinant is the zero polynomial
    """
    if not m.is_square():
        raise InvalidInput(f"Inverse of a non-square {m.shape} matrix")
    n = m.rows
    rows, scales = _polynomial_rows(m)
    grid = [row + [Poly.const(1 if i == j else 0) for j in range(n)] for i, row in enumerate(rows)]
    grid, det_p, _ = _bareiss(grid, n, gauss_jordan=True)

    # left block is now det_p * I; m^-1 = P^-1 diag(L)
    inverse = RatMatrix(tuple(
        tuple(RatFunc(grid[i][n + j] * scales[j], det_p) for j in range(n))
        for i in range(n)
    ))
    logger.debug(f"Inverted a {n}x{n} matrix, det(P) of degree {det_p.degree}")

    check = settings.DEBUG if cross_check is None else cross_check
    if check and n <= settings.ADJUGATE_MAX_DIMENSION:
        if adjugate_inverse(m) != inverse:
            raise AssertionError("Bareiss and adjugate inverses disagree")
    return inverse


def split_linear(m: RatMatrix) -> Tuple[List[List[Fraction]], List[List[Fraction]]]:
    """
    Write a matrix with entries of degree <= 1 in beta as ``D - beta B``.

    Raises:
        InvalidInput: If an entry is not a polynomial of degree at most one
    """
    d, b = [], []
    for row in m.entries:
        d_row, b_row = [], []
        for f in row:
            if not f.is_polynomial() or f.num.degree > 1:
                raise InvalidInput(f"Entry {f} is not linear in beta")
            d_row.append(f.num[0] / f.den.lead)
            b_row.append(-f.num[1] / f.den.lead)
        d.append(d_row)
        b.append(b_row)
    return d, b


def neumann_inverse(
    d: Sequence[Sequence[Fraction]],
    b: Sequence[Sequence[Fraction]],
    order: int,
) -> List[List[PowerSeries]]:
    """
    ``(D - beta B)^-1 = sum_k beta^k (D^-1 B)^k D^-1``, truncated at ``order``.

    Args:
        d: Diagonal matrix (off-diagonal entries must be zero)
        b: Square matrix of the same size
        order: Last power of beta kept

    Raises:
        SingularDiagonal: If a diagonal entry of D is zero
        InvalidInput: If D is not diagonal or shapes differ
    """
    n = len(d)
    if any(len(row) != n for row in d) or len(b) != n or any(len(row) != n for row in b):
        raise InvalidInput("D and B must be square of the same size")
    for i in range(n):
        for j in range(n):
            if i != j and d[i][j]:
                raise InvalidInput(f"D is not diagonal at ({i}, {j})")
        if d[i][i] == 0:
            raise SingularDiagonal(f"D has a zero diagonal entry at {i}")

    d_inv = [Fraction(1) / Fraction(d[i][i]) for i in range(n)]
    q = [[d_inv[i] * Fraction(b[i][j]) for j in range(n)] for i in range(n)]
    term = [[d_inv[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    coeffs = [[[term[i][j]] for j in range(n)] for i in range(n)]
    for _ in range(order):
        term = [[sum((q[i][k] * term[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                coeffs[i][j].append(term[i][j])
    return [[PowerSeries(tuple(coeffs[i][j]), order) for j in range(n)] for i in range(n)]
