"""Finite groups with full multiplication and inverse tables.

Elements are integer indices. ``mul[a, b]`` is the index of ``a * b``;
for permutation groups ``a * b`` acts as ``x -> a(b(x))``.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ...app.config import resolve_cap, settings
from ..errors import InvalidInput, NotAGroup, OrderCapExceeded
from ..utils.logging_config import get_logger
from .permutation import Permutation

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its Cayley table on element indices."""

    mul: np.ndarray
    inv: np.ndarray
    identity: int
    element_labels: Optional[Tuple[str, ...]] = None
    permutations: Optional[Tuple[Permutation, ...]] = field(default=None, repr=False)

    def __post_init__(self):
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)

    @property
    def order(self) -> int:
        return int(self.mul.shape[0])

    @cached_property
    def rows(self) -> List[List[int]]:
        """The table as nested lists, for tight pure-Python loops."""
        return self.mul.tolist()

    @cached_property
    def inverses(self) -> List[int]:
        return self.inv.tolist()

    def product(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def product_of(self, elements: Sequence[int]) -> int:
        result = self.identity
        rows = self.rows
        for x in elements:
            result = rows[result][x]
        return result

    def conjugate(self, x: int, g: int) -> int:
        """Return ``g x g^-1``."""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def label(self, x: int) -> str:
        if self.element_labels is not None:
            return self.element_labels[x]
        return str(x)

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, identity={self.identity})"


def _image_keys(images: np.ndarray, degree: int) -> Optional[np.ndarray]:
    """Encode permutation rows as base-``degree`` integers when they fit in int64."""
    if degree ** degree >= 2 ** 62:
        return None
    powers = degree ** np.arange(degree, dtype=np.int64)
    return images.astype(np.int64) @ powers


def _multiplication_table(images: np.ndarray) -> np.ndarray:
    order, degree = images.shape
    mul = np.empty((order, order), dtype=np.int32)
    keys = _image_keys(images, degree)
    if keys is not None:
        sorter = np.argsort(keys)
        sorted_keys = keys[sorter]
        for a in range(order):
            # row a: (a * b)(x) = a(b(x)) for every b at once
            composed = images[a][images]
            mul[a] = sorter[np.searchsorted(sorted_keys, _image_keys(composed, degree))]
    else:
        index = {row.tobytes(): i for i, row in enumerate(images)}
        for a in range(order):
            composed = images[a][images]
            mul[a] = [index[row.tobytes()] for row in composed]
    return mul


def _inverse_table(mul: np.ndarray, identity: int) -> np.ndarray:
    rows, cols = np.nonzero(mul == identity)
    inv = np.empty(mul.shape[0], dtype=np.int32)
    inv[rows] = cols
    return inv


def enumerate_group(
    generators: Sequence[Permutation],
    order_cap: Optional[int] = None,
) -> FiniteGroup:
    """
    Close a set of permutations under multiplication.

    Elements are numbered identity first, then breadth-first by word length,
    each new layer sorted lexicographically by image array.

    Args:
        generators: Nonempty list of permutations of equal degree
        order_cap: Maximum group order (defaults to settings.ORDER_CAP)

    Returns:
        FiniteGroup with permutation elements and cycle-notation labels

    Raises:
        InvalidInput: If the generator list is empty or mixes degrees
        OrderCapExceeded: If the closure grows past the cap
    """
    cap = resolve_cap(order_cap, settings.ORDER_CAP)
    if not generators:
        raise InvalidInput("At least one generator is required")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise InvalidInput("All generators must have the same degree")

    identity = Permutation.identity(degree)
    elements = [identity]
    seen = {identity.images}
    frontier = [identity]
    while frontier:
        layer = set()
        for x in frontier:
            for g in generators:
                y = x.compose(g)
                if y.images not in seen and y.images not in layer:
                    layer.add(y.images)
        ordered = [Permutation(images) for images in sorted(layer)]
        elements.extend(ordered)
        seen.update(layer)
        if len(elements) > cap:
            logger.warning(f"Closure passed {cap} elements, aborting")
            raise OrderCapExceeded(cap)
        frontier = ordered

    images = np.array([p.images for p in elements], dtype=np.int32)
    mul = _multiplication_table(images)
    group = FiniteGroup(
        mul=mul,
        inv=_inverse_table(mul, 0),
        identity=0,
        element_labels=tuple(p.cycle_notation() for p in elements),
        permutations=tuple(elements),
    )
    logger.info(f"Enumerated permutation group of degree {degree}, order {group.order}")
    return group


def generating_set(mul: np.ndarray, identity: int) -> List[int]:
    """Greedy generating set: add the least element not yet generated."""
    order = mul.shape[0]
    generated = np.zeros(order, dtype=bool)
    generated[identity] = True
    gens: List[int] = []
    for x in range(order):
        if generated[x]:
            continue
        gens.append(x)
        # close the generated set under right multiplication by every generator
        frontier = np.nonzero(generated)[0]
        while frontier.size:
            products = mul[np.ix_(frontier, gens)].ravel()
            fresh = np.unique(products[~generated[products]])
            generated[fresh] = True
            frontier = fresh
    return gens


def _check_associativity(table: np.ndarray, identity: int, seed: int) -> None:
    order = table.shape[0]
    if order <= settings.FULL_ASSOCIATIVITY_MAX_ORDER:
        for a in range(order):
            left = table[table[a, :], :]   # (a*b)*c indexed [b, c]
            right = table[a, table]        # a*(b*c)
            bad = np.argwhere(left != right)
            if bad.size:
                b, c = (int(v) for v in bad[0])
                raise NotAGroup("associativity", (a, b, c))
        return

    # Light's test: a generating set in the middle position decides associativity.
    for g in generating_set(table, identity):
        left = table[table[:, g], :]      # (a*g)*c indexed [a, c]
        right = table[:, table[g, :]]     # a*(g*c)
        bad = np.argwhere(left != right)
        if bad.size:
            a, c = (int(v) for v in bad[0])
            raise NotAGroup("associativity", (a, g, c))

    rng = np.random.default_rng(seed)
    samples = settings.ASSOCIATIVITY_SAMPLE_FACTOR * order
    a, b, c = rng.integers(0, order, size=(3, samples))
    bad = np.nonzero(table[table[a, b], c] != table[a, table[b, c]])[0]
    if bad.size:
        i = int(bad[0])
        raise NotAGroup("associativity", (int(a[i]), int(b[i]), int(c[i])))


def load_cayley_table(table: Sequence[Sequence[int]], seed: Optional[int] = None) -> FiniteGroup:
    """
    Validate a Cayley table and wrap it as a FiniteGroup.

    Associativity is checked on every triple up to
    settings.FULL_ASSOCIATIVITY_MAX_ORDER; above that, on all triples with a
    generator in the middle plus ASSOCIATIVITY_SAMPLE_FACTOR * order seeded
    random triples.

    Raises:
        NotAGroup: Naming the violated axiom and a witness
    """
    try:
        grid = np.array(table, dtype=np.int64)
    except (ValueError, TypeError):
        raise NotAGroup("closure", None, "table is not a rectangular integer grid")
    if grid.ndim != 2 or grid.shape[0] != grid.shape[1] or grid.shape[0] == 0:
        raise NotAGroup("closure", getattr(grid, "shape", None), "table must be a nonempty square")
    order = grid.shape[0]
    out_of_range = np.argwhere((grid < 0) | (grid >= order))
    if out_of_range.size:
        a, b = (int(v) for v in out_of_range[0])
        raise NotAGroup("closure", (a, b), f"entry {int(grid[a, b])} is not an element index")

    expected = np.arange(order)
    for a in range(order):
        if not np.array_equal(np.sort(grid[a, :]), expected):
            raise NotAGroup("latin square (rows)", (a,), "row repeats an element")
        if not np.array_equal(np.sort(grid[:, a]), expected):
            raise NotAGroup("latin square (columns)", (a,), "column repeats an element")

    candidates = [
        e for e in range(order)
        if np.array_equal(grid[e, :], expected) and np.array_equal(grid[:, e], expected)
    ]
    if not candidates:
        raise NotAGroup("identity", None, "no two-sided identity")
    identity = candidates[0]

    mul = grid.astype(np.int32)
    inv = _inverse_table(mul, identity)
    mismatch = np.nonzero(mul[inv, np.arange(order)] != identity)[0]
    if mismatch.size:
        raise NotAGroup("inverses", (int(mismatch[0]),), "right inverse is not a left inverse")

    _check_associativity(mul, identity, settings.DEFAULT_SEED if seed is None else seed)
    logger.info(f"Loaded Cayley table of order {order}")
    return FiniteGroup(mul=mul, inv=inv, identity=identity)
