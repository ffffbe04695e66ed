"""The center of the group algebra in the class-sum basis.

``f_mu`` is the indicator function of class ``mu``. Products expand as
``f_mu f_nu = sum_lambda c[mu][nu][lambda] f_lambda`` with nonnegative
integer structure constants; the trace reads off the identity coefficient.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ...app.config import resolve_cap, settings
from ..errors import InvalidInput, WorkCapExceeded
from ..finite_group import ClassTable, FiniteGroup
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class ClassVector:
    """An element of the class algebra, one exact coefficient per class."""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def zero(cls, n: int) -> "ClassVector":
        return cls((Fraction(0),) * n)

    @classmethod
    def basis(cls, class_id: int, n: int) -> "ClassVector":
        coeffs = [Fraction(0)] * n
        coeffs[class_id] = Fraction(1)
        return cls(tuple(coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, class_id: int) -> Fraction:
        return self.coeffs[class_id]

    def _check(self, other: "ClassVector"):
        if len(other) != len(self):
            raise InvalidInput(f"Class vectors of length {len(self)} and {len(other)} do not match")

    def __add__(self, other: "ClassVector") -> "ClassVector":
        self._check(other)
        return ClassVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ClassVector") -> "ClassVector":
        self._check(other)
        return ClassVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, factor: Scalar) -> "ClassVector":
        return ClassVector(tuple(c * factor for c in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> List[int]:
        return [i for i, c in enumerate(self.coeffs) if c]


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """``c[mu, nu, lam]`` plus the class data the formulas need."""

    c: np.ndarray
    identity_class: int
    inverse: Tuple[int, ...]
    sizes: Tuple[int, ...]
    order: int

    def __post_init__(self):
        self.c.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.sizes)

    @cached_property
    def table(self) -> List[List[List[int]]]:
        """Python ints, so products of many factors never overflow."""
        return self.c.tolist()

    def basis(self, class_id: int) -> ClassVector:
        return ClassVector.basis(class_id, self.n)

    def unit(self) -> ClassVector:
        return self.basis(self.identity_class)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return (
            self.identity_class == other.identity_class
            and self.inverse == other.inverse
            and self.sizes == other.sizes
            and np.array_equal(self.c, other.c)
        )


def _class_data(table: ClassTable) -> dict:
    return {
        "identity_class": table.identity_class,
        "inverse": table.inverse,
        "sizes": table.sizes,
    }


def structure_constants(group: FiniteGroup, table: ClassTable) -> StructureConstants:
    """
    Count factorizations of one representative per target class.

    ``c[mu][nu][lam] = #{a in mu : a^-1 r in nu}`` for a fixed ``r`` in
    ``lam``. Every class with more than one member is recounted from a second
    representative.

    Args:
        group: The group
        table: Its conjugacy classes

    Returns:
        StructureConstants with an int64 table of shape (k, k, k)
    """
    k = len(table)
    c = np.zeros((k, k, k), dtype=np.int64)
    class_of = table.class_of
    members = [np.array(cls.members) for cls in table]
    inverse_members = [group.inv[m] for m in members]

    def count_into(r: int) -> np.ndarray:
        block = np.empty((k, k), dtype=np.int64)
        for mu in range(k):
            quotients = group.mul[inverse_members[mu], r]
            block[mu] = np.bincount(class_of[quotients], minlength=k)
        return block

    for lam, cls in enumerate(table):
        c[:, :, lam] = count_into(cls.representative)
        if cls.size > 1:
            again = count_into(cls.members[1])
            if not np.array_equal(again, c[:, :, lam]):
                raise AssertionError(f"structure constants for class {cls.label} depend on the representative")

    logger.info(f"Computed structure constants for {k} classes")
    return StructureConstants(c=c, order=group.order, **_class_data(table))


def structure_constants_by_convolution(
    group: FiniteGroup,
    table: ClassTable,
    max_order: Optional[int] = None,
) -> StructureConstants:
    """
    Recompute structure constants by convolving full class indicators.

    Quadratic in the group order; refused above ``max_order``
    (settings.ORACLE_MAX_ORDER).
    """
    cap = resolve_cap(max_order, settings.ORACLE_MAX_ORDER)
    if group.order > cap:
        raise WorkCapExceeded(group.order, cap, "full convolution oracle (group order)")

    k = len(table)
    c = np.zeros((k, k, k), dtype=np.int64)
    representatives = np.array([cls.representative for cls in table])
    for mu, a in enumerate(table):
        for nu, b in enumerate(table):
            products = group.mul[np.ix_(np.array(a.members), np.array(b.members))].ravel()
            counts = np.bincount(products, minlength=group.order)
            c[mu, nu] = counts[representatives]
    return StructureConstants(c=c, order=group.order, **_class_data(table))


def convolve(u: ClassVector, v: ClassVector, sc: StructureConstants) -> ClassVector:
    """Multiply two class vectors."""
    if len(u) != sc.n or len(v) != sc.n:
        raise InvalidInput(f"Expected class vectors of length {sc.n}")
    out = [Fraction(0)] * sc.n
    rows = sc.table
    for mu in u.support():
        for nu in v.support():
            weight = u[mu] * v[nu]
            for lam, count in enumerate(rows[mu][nu]):
                if count:
                    out[lam] += weight * count
    return ClassVector(tuple(out))


def multiply_basis(vector: Sequence[int], class_id: int, sc: StructureConstants) -> List[int]:
    """Integer vector times ``f_class_id``; stays in exact Python ints."""
    out = [0] * sc.n
    rows = sc.table
    for mu, a in enumerate(vector):
        if a:
            for lam, count in enumerate(rows[mu][class_id]):
                if count:
                    out[lam] += a * count
    return out


def trace(v: ClassVector, sc: StructureConstants) -> Fraction:
    """Value of the function at the identity: its identity-class coefficient."""
    return v[sc.identity_class]


def basis_product(classes: Iterable[int], sc: StructureConstants) -> List[int]:
    """Integer coordinates of ``f_c1 f_c2 ... f_ck``; the unit for an empty list."""
    vector = [0] * sc.n
    vector[sc.identity_class] = 1
    for class_id in classes:
        vector = multiply_basis(vector, class_id, sc)
    return vector


def trace_product(classes: Sequence[int], sc: StructureConstants) -> int:
    """
    Trace of a product of basis vectors.

    This is the number of tuples ``(a_1..a_k)``, ``a_j`` in the listed classes,
    with ``a_1 ... a_k = 1``.

    Raises:
        InvalidInput: If the list is empty
    """
    if not classes:
        raise InvalidInput("trace_product needs at least one class")
    return basis_product(classes, sc)[sc.identity_class]


def handle_element(sc: StructureConstants) -> ClassVector:
    """``K = sum_nu f_nu f_{nu^-1} / size(nu)``, the genus-adding element."""
    total = ClassVector.zero(sc.n)
    for nu in range(sc.n):
        row = sc.table[nu][sc.inverse[nu]]
        total = total + ClassVector(tuple(Fraction(x, sc.sizes[nu]) for x in row))
    return total


def surface_correlator(genus: int, classes: Sequence[int], sc: StructureConstants) -> Fraction:
    """
    ``|G|^g tr(f_c1 ... f_cn K^g)``: homomorphisms from a genus-g surface
    group with n boundary circles whose holonomies lie in the given classes.
    """
    if genus < 0:
        raise InvalidInput(f"Genus must be nonnegative, got {genus}")
    vector = ClassVector(tuple(basis_product(classes, sc)))
    handle = handle_element(sc)
    for _ in range(genus):
        vector = convolve(vector, handle, sc)
    return Fraction(sc.order) ** genus * trace(vector, sc)
