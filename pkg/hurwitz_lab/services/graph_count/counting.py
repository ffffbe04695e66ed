"""Counting principal bundles on a pair-of-pants decomposition.

For a coloring ``c`` of the edges by conjugacy classes,

    #N(c) = |G|^g * prod_{inner v} tr(prod_{darts at v} f_cbar) * prod_{inner e} 1 / size(c(e))

where ``cbar`` is ``c(e)`` on the source dart of ``e`` and its inverse class
on the sink dart. Summing over colorings of the inner edges that extend a
boundary condition gives the bundle count with prescribed leaf holonomy.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ...app.config import resolve_cap, settings
from ..class_algebra import StructureConstants, trace_product
from ..errors import InvalidInput, WorkCapExceeded
from ..utils.logging_config import get_logger
from .graph import EnhancedGraph, check_boundary_keys

logger = get_logger(__name__)


@dataclass(frozen=True)
class Coloring:
    """A class id for every edge, indexed by edge id."""

    classes: Tuple[int, ...]


@dataclass(frozen=True)
class BoundaryCondition:
    """A class id for every leaf edge."""

    classes: Dict[int, int]

    def __hash__(self):
        return hash(tuple(sorted(self.classes.items())))

    @classmethod
    def from_sequence(cls, graph: EnhancedGraph, classes: Sequence[int]) -> "BoundaryCondition":
        """Assign classes to the leaf edges in edge-id order."""
        if len(classes) != len(graph.leaf_edges):
            raise InvalidInput(f"graph has {len(graph.leaf_edges)} leaves, got {len(classes)} classes")
        return cls(dict(zip(graph.leaf_edges, classes)))


def _dart_class(graph: EnhancedGraph, sc: StructureConstants, dart: int, edge_class: int) -> int:
    return edge_class if graph.is_source(dart) else sc.inverse[edge_class]


class _VertexTraces:
    """Memoized ``tr(f_a f_b f_c)`` keyed by the ordered class triple."""

    def __init__(self, sc: StructureConstants):
        self.sc = sc
        self.cache: Dict[Tuple[int, ...], int] = {}

    def __call__(self, classes: Tuple[int, ...]) -> int:
        value = self.cache.get(classes)
        if value is None:
            value = trace_product(list(classes), self.sc)
            self.cache[classes] = value
        return value


def count_colored(graph: EnhancedGraph, coloring: Coloring, sc: StructureConstants) -> Fraction:
    """Evaluate the bundle count of a single coloring."""
    if len(coloring.classes) != graph.num_edges:
        raise InvalidInput(f"coloring needs {graph.num_edges} classes, got {len(coloring.classes)}")
    for c in coloring.classes:
        if not 0 <= c < sc.n:
            raise InvalidInput(f"class id {c} out of range")
    total = Fraction(sc.order) ** graph.genus
    for v in graph.inner_vertices:
        classes = [
            _dart_class(graph, sc, d, coloring.classes[graph.edge_of[d]])
            for d in graph.darts_at[v]
        ]
        factor = trace_product(classes, sc)
        if factor == 0:
            return Fraction(0)
        total *= factor
    for e in graph.inner_edges:
        total /= sc.sizes[coloring.classes[e]]
    return total


def count_boundary(
    graph: EnhancedGraph,
    boundary: BoundaryCondition,
    sc: StructureConstants,
    work_cap: Optional[int] = None,
) -> Fraction:
    """
    Sum ``count_colored`` over every coloring extending the boundary condition.

    Inner edges are colored in breadth-first order from the basepoint; a
    branch is cut as soon as some vertex with all its edges colored has a zero
    trace.

    Raises:
        InvalidInput: If the boundary does not cover exactly the leaves
        WorkCapExceeded: If ``classes ** inner_edges`` exceeds the cap
    """
    check_boundary_keys(graph, boundary.classes)
    cap = resolve_cap(work_cap, settings.WORK_CAP)
    inner = _bfs_edge_order(graph)
    estimate = sc.n ** len(inner)
    if estimate > cap:
        logger.warning(f"{len(inner)} inner edges over {sc.n} classes exceeds the cap {cap}")
        raise WorkCapExceeded(estimate, cap, "coloring enumeration")

    colors: List[Optional[int]] = [None] * graph.num_edges
    for e, c in boundary.classes.items():
        if not 0 <= c < sc.n:
            raise InvalidInput(f"class id {c} out of range")
        colors[e] = c

    # vertices whose darts are all colored once edge inner[i] is
    closing: List[List[int]] = [[] for _ in inner]
    position = {e: i for i, e in enumerate(inner)}
    for v in graph.inner_vertices:
        last = max((position[graph.edge_of[d]] for d in graph.darts_at[v] if graph.edge_of[d] in position), default=-1)
        if last >= 0:
            closing[last].append(v)
    traces = _VertexTraces(sc)

    def vertex_trace(v: int) -> int:
        return traces(tuple(_dart_class(graph, sc, d, colors[graph.edge_of[d]]) for d in graph.darts_at[v]))

    # vertices touching only leaves (the tripod) close before any choice
    base = Fraction(1)
    for v in graph.inner_vertices:
        if all(graph.edge_of[d] not in position for d in graph.darts_at[v]):
            base *= vertex_trace(v)
    if base == 0:
        return Fraction(0)

    def extend(i: int, weight: Fraction) -> Fraction:
        if i == len(inner):
            return weight
        e = inner[i]
        total = Fraction(0)
        for c in range(sc.n):
            colors[e] = c
            factor = Fraction(1, sc.sizes[c])
            for v in closing[i]:
                t = vertex_trace(v)
                if t == 0:
                    factor = Fraction(0)
                    break
                factor *= t
            if factor:
                total += extend(i + 1, weight * factor)
        colors[e] = None
        return total

    result = Fraction(sc.order) ** graph.genus * extend(0, base)
    logger.debug(f"count_boundary: {len(inner)} inner edges, {len(traces.cache)} distinct vertex traces")
    return result


def _bfs_edge_order(graph: EnhancedGraph) -> List[int]:
    """Inner edges in the order a breadth-first walk from the basepoint meets them."""
    inner = set(graph.inner_edges)
    order: List[int] = []
    seen_vertices = {graph.basepoint}
    queue = [graph.basepoint]
    while queue:
        v = queue.pop(0)
        for d in graph.darts_at[v]:
            e = graph.edge_of[d]
            if e in inner and e not in order:
                order.append(e)
            w = graph.vertex_of[graph.pairing[d]]
            if w not in seen_vertices:
                seen_vertices.add(w)
                queue.append(w)
    return order


def boundary_from_labels(graph: EnhancedGraph, labels: Mapping[int, str], resolve) -> BoundaryCondition:
    """Turn ``{leaf edge: class label}`` into a BoundaryCondition using ``resolve(label) -> id``."""
    return BoundaryCondition({int(e): resolve(label) for e, label in labels.items()})


def boundary_holonomies(graph: EnhancedGraph, boundary: BoundaryCondition, sc: StructureConstants) -> List[int]:
    """Class of each leaf loop as seen from its inner vertex, in leaf-edge order."""
    return [
        _dart_class(graph, sc, graph.pairing[graph.leaf_end_dart(e)], boundary.classes[e])
        for e in graph.leaf_edges
    ]
