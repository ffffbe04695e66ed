"""Fundamental-group presentations of enhanced graphs and homomorphism counts.

Generators are ``p_e`` for every edge (in edge order) followed by ``g_e`` for
every edge outside the spanning tree. Each inner vertex gives one relator:
walk its darts in cyclic order, starting from the dart on the tree edge to
the parent (the least dart at the basepoint). A source dart contributes
``p_e``; a sink dart contributes ``p_e^-1`` on a tree edge and
``g_e^-1 p_e^-1 g_e`` otherwise.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ...app.config import resolve_cap, settings
from ..errors import InvalidInput, WorkCapExceeded
from ..finite_group import ClassTable, FiniteGroup
from ..utils.logging_config import get_logger
from .graph import EnhancedGraph

logger = get_logger(__name__)

Letter = Tuple[int, int]  # (generator index, +1 or -1)


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[str, ...]
    relators: Tuple[Tuple[Letter, ...], ...]
    leaf_generators: Dict[int, int]  # leaf edge -> index of its p_e

    def __hash__(self):
        return hash((self.generators, self.relators))

    def word_to_text(self, word: Sequence[Letter]) -> str:
        return " ".join(self.generators[g] + ("" if s == 1 else "^-1") for g, s in word)

    def to_text(self) -> str:
        rels = ", ".join(self.word_to_text(w) for w in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [self.word_to_text(w) for w in self.relators],
            "leaf_generators": {str(e): self.generators[g] for e, g in sorted(self.leaf_generators.items())},
        }


def presentation(graph: EnhancedGraph) -> Presentation:
    """Emit the presentation with ``4g - 3 + 2n`` generators and ``2g - 2 + n`` relators."""
    names = [f"p_{graph.edge_name(e)}" for e in range(graph.num_edges)]
    conjugator: Dict[int, int] = {}
    for e in range(graph.num_edges):
        if e not in graph.tree_edges:
            conjugator[e] = len(names)
            names.append(f"g_{graph.edge_name(e)}")

    relators = []
    parent = graph.tree_parent_dart
    for v in graph.inner_vertices:
        cycle = graph.darts_at[v]
        start = parent.get(v, min(cycle))
        i = cycle.index(start)
        word: List[Letter] = []
        for d in cycle[i:] + cycle[:i]:
            e = graph.edge_of[d]
            if graph.is_source(d):
                word.append((e, 1))
            elif e in graph.tree_edges:
                word.append((e, -1))
            else:
                g = conjugator[e]
                word.extend([(g, -1), (e, -1), (g, 1)])
        relators.append(tuple(word))

    result = Presentation(
        generators=tuple(names),
        relators=tuple(relators),
        leaf_generators={e: e for e in graph.leaf_edges},
    )
    logger.debug(f"Presentation with {len(names)} generators and {len(relators)} relators")
    return result


@dataclass(frozen=True)
class _Step:
    generator: int
    forced_by: Optional[int]      # relator solved for the generator, or None to branch
    checks: Tuple[int, ...]       # relators fully assigned after this step


def _plan(p: Presentation, domain_sizes: Sequence[int]) -> List[_Step]:
    """Order generators so each is either branched over or solved from a relator."""
    m = len(p.generators)
    assigned = [False] * m
    done_relators = set()
    steps: List[_Step] = []

    def occurrences(word, g):
        return sum(1 for h, _ in word if h == g)

    def free_in(word):
        return {g for g, _ in word if not assigned[g]}

    while len(steps) < m:
        forced = None
        for r, word in enumerate(p.relators):
            if r in done_relators:
                continue
            free = free_in(word)
            if len(free) == 1:
                g = next(iter(free))
                if occurrences(word, g) == 1:
                    forced = (g, r)
                    break
        if forced is not None:
            g, by = forced
        else:
            usage = [0] * m
            for r, word in enumerate(p.relators):
                if r not in done_relators:
                    for h in free_in(word):
                        usage[h] += 1
            g = min(
                (h for h in range(m) if not assigned[h]),
                key=lambda h: (-usage[h], domain_sizes[h], h),
            )
            by = None
        assigned[g] = True
        checks = []
        for r, word in enumerate(p.relators):
            if r not in done_relators and not free_in(word):
                done_relators.add(r)
                if r != by:
                    checks.append(r)
        if by is not None:
            done_relators.add(by)
        steps.append(_Step(generator=g, forced_by=by, checks=tuple(checks)))
    return steps


def count_homs_presentation(
    p: Presentation,
    leaf_constraints: Dict[int, int],
    group: FiniteGroup,
    table: ClassTable,
    work_cap: Optional[int] = None,
) -> int:
    """
    Count assignments of group elements to generators that satisfy every
    relator, with constrained generators restricted to their class.

    Args:
        p: Presentation
        leaf_constraints: generator index -> class id
        group: Target group
        table: Its classes
        work_cap: Cap on the product of branched domain sizes

    Raises:
        WorkCapExceeded: If the branching exceeds the cap
    """
    m = len(p.generators)
    domains: List[List[int]] = [list(range(group.order))] * m
    for g, c in leaf_constraints.items():
        if not 0 <= g < m or not 0 <= c < len(table):
            raise InvalidInput(f"bad constraint generator {g} -> class {c}")
        domains[g] = list(table[c].members)
    allowed = [set(d) for d in domains]

    steps = _plan(p, [len(d) for d in domains])
    estimate = 1
    for step in steps:
        if step.forced_by is None:
            estimate *= len(domains[step.generator])
    cap = resolve_cap(work_cap, settings.WORK_CAP)
    if estimate > cap:
        logger.warning(f"Presentation count needs {estimate} branches, cap {cap}")
        raise WorkCapExceeded(estimate, cap, "homomorphism enumeration")

    rows, inverses, identity = group.rows, group.inverses, group.identity
    values: List[Optional[int]] = [None] * m

    def evaluate(word: Sequence[Letter]) -> int:
        x = identity
        for g, s in word:
            y = values[g]
            x = rows[x][y if s == 1 else inverses[y]]
        return x

    def solve(word: Sequence[Letter], g: int) -> int:
        i = next(k for k, (h, _) in enumerate(word) if h == g)
        before = evaluate(word[:i])
        after = evaluate(word[i + 1:])
        # before * x^s * after = 1
        x = rows[inverses[before]][inverses[after]]
        return x if word[i][1] == 1 else inverses[x]

    def walk(k: int) -> int:
        if k == len(steps):
            return 1
        step = steps[k]
        g = step.generator
        if step.forced_by is not None:
            x = solve(p.relators[step.forced_by], g)
            if x not in allowed[g]:
                return 0
            candidates = [x]
        else:
            candidates = domains[g]
        total = 0
        for x in candidates:
            values[g] = x
            if all(evaluate(p.relators[r]) == identity for r in step.checks):
                total += walk(k + 1)
        values[g] = None
        return total

    return walk(0)


def count_homs_surface(
    genus: int,
    classes: Sequence[int],
    group: FiniteGroup,
    table: ClassTable,
    work_cap: Optional[int] = None,
) -> int:
    """
    ``#{(a_1, b_1, .., a_g, b_g, c_1, .., c_n) : prod [a_i, b_i] prod c_j = 1, c_j in class_j}``.

    Built by convolving the distribution of commutators ``g`` times with the
    class indicators.

    Raises:
        WorkCapExceeded: If ``|G|^(2g) * prod |class_j|`` exceeds the cap
    """
    if genus < 0:
        raise InvalidInput(f"Genus must be nonnegative, got {genus}")
    cap = resolve_cap(work_cap, settings.WORK_CAP)
    order = group.order
    estimate = order ** (2 * genus)
    for c in classes:
        estimate *= table[c].size
    if estimate > cap:
        raise WorkCapExceeded(estimate, cap, "surface relation enumeration")

    mul, inv = group.mul, group.inv
    dist = np.zeros(order, dtype=np.int64)
    dist[group.identity] = 1

    def convolve(weights: np.ndarray) -> np.ndarray:
        out = np.zeros(order, dtype=np.int64)
        for y in np.nonzero(weights)[0]:
            out[mul[:, y]] += dist * weights[y]
        return out

    if genus:
        a = np.repeat(np.arange(order), order)
        b = np.tile(np.arange(order), order)
        commutators = mul[mul[a, b], mul[inv[a], inv[b]]]
        handle = np.bincount(commutators, minlength=order).astype(np.int64)
        for _ in range(genus):
            dist = convolve(handle)
    for c in classes:
        indicator = np.zeros(order, dtype=np.int64)
        indicator[list(table[c].members)] = 1
        dist = convolve(indicator)
    return int(dist[group.identity])
