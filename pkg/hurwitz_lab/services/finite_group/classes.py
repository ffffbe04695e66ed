"""Conjugacy classes and the symmetric groups S_d."""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ...app.config import resolve_cap, settings
from ..errors import InvalidInput, OrderCapExceeded
from ..utils.logging_config import get_logger
from .group import FiniteGroup, enumerate_group
from .permutation import Partition, Permutation

logger = get_logger(__name__)


@dataclass(frozen=True)
class ConjugacyClass:
    """One conjugacy class; ``members`` sorted, representative = least member."""

    id: int
    members: Tuple[int, ...]
    inverse_class_id: int
    label: str
    partition: Optional[Partition] = None

    @property
    def representative(self) -> int:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_self_inverse(self) -> bool:
        return self.inverse_class_id == self.id


@dataclass(frozen=True, eq=False)
class ClassTable:
    """The classes of a group in a fixed order, plus the element-to-class map."""

    classes: Tuple[ConjugacyClass, ...]
    class_of: np.ndarray
    identity_class: int

    def __post_init__(self):
        self.class_of.setflags(write=False)

    def __len__(self) -> int:
        return len(self.classes)

    def __getitem__(self, class_id: int) -> ConjugacyClass:
        return self.classes[class_id]

    def __iter__(self):
        return iter(self.classes)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(c.label for c in self.classes)

    @property
    def inverse(self) -> Tuple[int, ...]:
        return tuple(c.inverse_class_id for c in self.classes)

    @property
    def all_self_inverse(self) -> bool:
        return all(c.is_self_inverse for c in self.classes)

    def by_label(self, label: str) -> int:
        """
        Resolve a class label to its id.

        Partition labels are matched after sorting their parts, so "2,1,1"
        finds the class labelled "1,1,2". Groups without partition labels use
        "c<id>" labels; a bare id is accepted too.

        Raises:
            InvalidInput: Listing the valid labels
        """
        text = label.strip()
        for c in self.classes:
            if c.label == text:
                return c.id
        if self.classes[0].partition is not None:
            try:
                wanted = Partition.parse(text).label
            except InvalidInput:
                wanted = None
            for c in self.classes:
                if c.label == wanted:
                    return c.id
        elif text.isdigit() and int(text) < len(self.classes):
            return int(text)
        raise InvalidInput(
            f"Unknown class {label!r}; valid labels: {', '.join(self.labels)}"
        )


def conjugacy_classes(group: FiniteGroup) -> ClassTable:
    """
    Partition a group into conjugacy classes.

    Classes are numbered by their least element index, so for groups built
    by enumerate_group the identity class comes first.
    """
    order = group.order
    class_of = np.full(order, -1, dtype=np.int32)
    orbits: List[np.ndarray] = []
    everyone = np.arange(order)
    for x in range(order):
        if class_of[x] >= 0:
            continue
        # g x g^-1 for every g at once
        orbit = np.unique(group.mul[group.mul[everyone, x], group.inv])
        class_of[orbit] = len(orbits)
        orbits.append(orbit)

    classes = tuple(
        ConjugacyClass(
            id=i,
            members=tuple(int(m) for m in orbit),
            inverse_class_id=int(class_of[group.inv[orbit[0]]]),
            label=f"c{i}",
        )
        for i, orbit in enumerate(orbits)
    )
    logger.info(f"Found {len(classes)} conjugacy classes in a group of order {order}")
    return ClassTable(classes=classes, class_of=class_of, identity_class=int(class_of[group.identity]))


def reorder_classes(table: ClassTable, order: Sequence[int], partitions: Sequence[Partition]) -> ClassTable:
    """Renumber classes so that new id ``i`` is old id ``order[i]``, labelled by partitions."""
    new_id = {old: new for new, old in enumerate(order)}
    classes = tuple(
        ConjugacyClass(
            id=new,
            members=table[old].members,
            inverse_class_id=new_id[table[old].inverse_class_id],
            label=partitions[new].label,
            partition=partitions[new],
        )
        for new, old in enumerate(order)
    )
    remap = np.array([new_id[old] for old in range(len(table))], dtype=np.int32)
    return ClassTable(
        classes=classes,
        class_of=remap[table.class_of],
        identity_class=new_id[table.identity_class],
    )


def symmetric_generators(d: int) -> List[Permutation]:
    """The full cycle (0 1 ... d-1) and the transposition (0 1)."""
    if d == 1:
        return [Permutation.identity(1)]
    transposition = Permutation.from_cycles([(0, 1)], d)
    if d == 2:
        return [transposition]
    return [Permutation.from_cycles([tuple(range(d))], d), transposition]


def symmetric_group(
    d: int,
    order_cap: Optional[int] = None,
    max_degree: Optional[int] = None,
) -> Tuple[FiniteGroup, ClassTable]:
    """
    Build S_d with classes labelled by cycle type.

    Classes are ordered by number of parts descending, then with larger
    parts later: (1,1),(2); (1,1,1),(1,2),(3); (1,1,1,1),(1,1,2),(2,2),(1,3),(4).

    Raises:
        InvalidInput: If d < 1
        OrderCapExceeded: If d exceeds the configured degree or order cap
    """
    limit = resolve_cap(max_degree, settings.MAX_SYMMETRIC_DEGREE)
    if d < 1:
        raise InvalidInput(f"Degree must be positive, got {d}")
    if d > limit:
        raise OrderCapExceeded(limit, f"S_{d} exceeds the maximum symmetric degree {limit}")

    group = enumerate_group(symmetric_generators(d), order_cap=order_cap)
    table = conjugacy_classes(group)
    found = [group.permutations[c.representative].cycle_type() for c in table]
    order = sorted(range(len(table)), key=lambda i: found[i].sort_key())
    partitions = [found[i] for i in order]
    table = reorder_classes(table, order, partitions)

    for c in table:
        if c.size != c.partition.class_size():
            raise AssertionError(f"class {c.label} has {c.size} members, expected {c.partition.class_size()}")
    logger.info(f"S_{d}: classes {', '.join(str(c.partition) for c in table)}")
    return group, table
