"""Permutations on {0..n-1} and integer partitions (cycle types)."""
from dataclasses import dataclass
from math import factorial
from typing import Iterable, List, Sequence, Tuple

from ..errors import InvalidInput


@dataclass(frozen=True)
class Permutation:
    """A permutation stored as its image array: ``x -> images[x]``."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidInput(f"Not a permutation of 0..{len(images) - 1}: {list(images)}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build a permutation from disjoint cycles, e.g. ``[(0, 1, 2)]``."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for i, point in enumerate(cycle):
                if point in seen or not 0 <= point < degree:
                    raise InvalidInput(f"Bad cycle {tuple(cycle)} for degree {degree}")
                seen.add(point)
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    def compose(self, other: "Permutation") -> "Permutation":
        """Return ``self * other``, acting as ``x -> self(other(x))``."""
        if other.degree != self.degree:
            raise InvalidInput("Cannot compose permutations of different degree")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def cycles(self, singletons: bool = True) -> List[Tuple[int, ...]]:
        """Disjoint cycles, each starting at its least point, ordered by that point."""
        seen = [False] * self.degree
        result = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self.images[x]
            if singletons or len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def cycle_type(self) -> "Partition":
        return Partition(tuple(len(c) for c in self.cycles()))

    def cycle_notation(self) -> str:
        cycles = self.cycles(singletons=False)
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)

    def __str__(self):
        return self.cycle_notation()


@dataclass(frozen=True)
class Partition:
    """A partition of d, parts kept sorted ascending."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(int(p) for p in self.parts))
        if not parts or parts[0] < 1:
            raise InvalidInput(f"A partition needs positive parts, got {list(self.parts)}")
        object.__setattr__(self, "parts", parts)

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def label(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a comma list such as ``"1,1,2"``."""
        try:
            parts = tuple(int(p) for p in text.replace(" ", "").split(",") if p)
        except ValueError as e:
            raise InvalidInput(f"Not a partition: {text!r}") from e
        return cls(parts)

    def sort_key(self) -> Tuple:
        """Class ordering for S_d: more parts first, then larger parts later."""
        return (-len(self.parts), tuple(sorted(self.parts, reverse=True)))

    def multiplicities(self) -> dict:
        counts: dict = {}
        for p in self.parts:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def class_size(self) -> int:
        """Number of permutations of this cycle type: d!/prod(i^m_i * m_i!)."""
        denominator = 1
        for part, m in self.multiplicities().items():
            denominator *= part ** m * factorial(m)
        return factorial(self.d) // denominator

    def canonical_permutation(self) -> Permutation:
        """Cycles filled with consecutive points, parts in ascending order."""
        cycles = []
        start = 0
        for part in self.parts:
            cycles.append(tuple(range(start, start + part)))
            start += part
        return Permutation.from_cycles(cycles, self.d)

    def __str__(self):
        return "(" + self.label + ")"
