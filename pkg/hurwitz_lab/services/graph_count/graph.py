"""Enhanced 1-3-valent graphs on half-edges (darts).

Every edge is a pair of darts swapped by ``pairing``. Edge ids follow the
least dart of each pair. ``next_dart`` cycles through the darts at a vertex
and fixes the cyclic order there; ``source_dart[e]`` orients edge ``e``.
Ends are the 1-valent vertices, leaves the edges that touch an end.
"""
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..errors import Disconnected, InvalidGraph, InvalidInput


@dataclass(frozen=True, eq=False)
class EnhancedGraph:
    """A connected 1-3-valent graph with orientations, cyclic orders, a spanning tree and a basepoint."""

    pairing: Tuple[int, ...]
    vertex_of: Tuple[int, ...]
    next_dart: Tuple[int, ...]
    source_dart: Tuple[int, ...]
    tree_edges: FrozenSet[int]
    basepoint: int
    edge_names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        for name in ("pairing", "vertex_of", "next_dart", "source_dart"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        object.__setattr__(self, "tree_edges", frozenset(int(e) for e in self.tree_edges))
        if self.edge_names is not None:
            object.__setattr__(self, "edge_names", tuple(self.edge_names))
        self._validate()

    # -------- structure --------
    @property
    def num_darts(self) -> int:
        return len(self.pairing)

    @cached_property
    def num_vertices(self) -> int:
        return max(self.vertex_of) + 1

    @cached_property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        """Dart pairs ``(d, pairing[d])`` with ``d`` the smaller, in edge-id order."""
        return tuple((d, p) for d, p in enumerate(self.pairing) if d < p)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_of(self) -> Tuple[int, ...]:
        out = [0] * self.num_darts
        for e, (d0, d1) in enumerate(self.edges):
            out[d0] = out[d1] = e
        return tuple(out)

    @cached_property
    def darts_at(self) -> Tuple[Tuple[int, ...], ...]:
        """Darts at each vertex in cyclic order, starting from the least."""
        result = []
        for v in range(self.num_vertices):
            start = min(d for d in range(self.num_darts) if self.vertex_of[d] == v)
            cycle = [start]
            d = self.next_dart[start]
            while d != start:
                cycle.append(d)
                d = self.next_dart[d]
            result.append(tuple(cycle))
        return tuple(result)

    def valence(self, v: int) -> int:
        return len(self.darts_at[v])

    @cached_property
    def ends(self) -> Tuple[int, ...]:
        return tuple(v for v in range(self.num_vertices) if self.valence(v) == 1)

    @cached_property
    def inner_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v in range(self.num_vertices) if self.valence(v) == 3)

    @cached_property
    def leaf_edges(self) -> Tuple[int, ...]:
        ends = set(self.ends)
        return tuple(
            e for e, (d0, d1) in enumerate(self.edges)
            if self.vertex_of[d0] in ends or self.vertex_of[d1] in ends
        )

    @cached_property
    def inner_edges(self) -> Tuple[int, ...]:
        leaves = set(self.leaf_edges)
        return tuple(e for e in range(self.num_edges) if e not in leaves)

    @property
    def genus(self) -> int:
        """First Betti number ``|E| - |V| + 1``."""
        return self.num_edges - self.num_vertices + 1

    def is_source(self, dart: int) -> bool:
        return self.source_dart[self.edge_of[dart]] == dart

    def sink_dart(self, edge: int) -> int:
        return self.pairing[self.source_dart[edge]]

    def endpoints(self, edge: int) -> Tuple[int, int]:
        """``(source vertex, sink vertex)``."""
        return self.vertex_of[self.source_dart[edge]], self.vertex_of[self.sink_dart(edge)]

    def leaf_end_dart(self, edge: int) -> int:
        """The dart of a leaf edge that sits at the end."""
        d0, d1 = self.edges[edge]
        return d0 if self.valence(self.vertex_of[d0]) == 1 else d1

    def edge_name(self, edge: int) -> str:
        if self.edge_names is not None:
            return self.edge_names[edge]
        return f"e{edge}"

    @cached_property
    def tree_parent_dart(self) -> Dict[int, int]:
        """For each vertex but the basepoint, its dart on the tree edge towards the basepoint."""
        parent: Dict[int, int] = {}
        seen = {self.basepoint}
        queue = deque([self.basepoint])
        while queue:
            v = queue.popleft()
            for d in self.darts_at[v]:
                e = self.edge_of[d]
                w = self.vertex_of[self.pairing[d]]
                if e in self.tree_edges and w not in seen:
                    seen.add(w)
                    parent[w] = self.pairing[d]
                    queue.append(w)
        return parent

    def replace(self, **changes) -> "EnhancedGraph":
        fields = {
            "pairing": self.pairing,
            "vertex_of": self.vertex_of,
            "next_dart": self.next_dart,
            "source_dart": self.source_dart,
            "tree_edges": self.tree_edges,
            "basepoint": self.basepoint,
            "edge_names": self.edge_names,
        }
        fields.update(changes)
        return EnhancedGraph(**fields)

    def signature(self) -> Tuple:
        return (
            self.pairing, self.vertex_of, self.next_dart, self.source_dart,
            tuple(sorted(self.tree_edges)), self.basepoint,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, EnhancedGraph):
            return NotImplemented
        return self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        return (
            f"EnhancedGraph(genus={self.genus}, vertices={self.num_vertices}, "
            f"edges={self.num_edges}, leaves={len(self.leaf_edges)})"
        )

    # -------- validation --------
    def _validate(self):
        n = self.num_darts
        if n == 0:
            raise InvalidGraph("A graph needs at least one edge")
        if len(self.vertex_of) != n or len(self.next_dart) != n:
            raise InvalidGraph("pairing, vertex and next must all have one entry per dart")
        for d, p in enumerate(self.pairing):
            if not 0 <= p < n or p == d or self.pairing[p] != d:
                raise InvalidGraph(f"pairing is not a fixed-point-free involution at dart {d}")
        if min(self.vertex_of) < 0 or set(self.vertex_of) != set(range(max(self.vertex_of) + 1)):
            raise InvalidGraph("vertices must be numbered 0..V-1 with every vertex used")
        if sorted(self.next_dart) != list(range(n)):
            raise InvalidGraph("next is not a permutation of the darts")
        for d in range(n):
            if self.vertex_of[self.next_dart[d]] != self.vertex_of[d]:
                raise InvalidGraph(f"next moves dart {d} to another vertex")
        counted = sum(len(cycle) for cycle in self.darts_at)
        if counted != n:
            raise InvalidGraph("the darts at some vertex do not form a single cycle")

        for v in range(self.num_vertices):
            if self.valence(v) not in (1, 3):
                raise InvalidGraph(f"vertex {v} has valence {self.valence(v)}, expected 1 or 3")
        if not self.inner_vertices:
            raise InvalidGraph("a graph needs at least one 3-valent vertex")
        ends = set(self.ends)
        for d0, d1 in self.edges:
            if self.vertex_of[d0] in ends and self.vertex_of[d1] in ends:
                raise InvalidGraph(f"edge ({d0}, {d1}) joins two ends")

        self._check_connected()

        if len(self.source_dart) != self.num_edges:
            raise InvalidGraph(f"expected {self.num_edges} source darts, got {len(self.source_dart)}")
        for e, d in enumerate(self.source_dart):
            if d not in self.edges[e]:
                raise InvalidGraph(f"source dart {d} does not belong to edge {e}")
        if self.edge_names is not None and len(self.edge_names) != self.num_edges:
            raise InvalidGraph("edge_names must name every edge")
        if not 0 <= self.basepoint < self.num_vertices:
            raise InvalidGraph(f"basepoint {self.basepoint} is not a vertex")
        check_spanning_tree(self, self.tree_edges)

    def _check_connected(self):
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for d in self.darts_at[v]:
                w = self.vertex_of[self.pairing[d]]
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != self.num_vertices:
            raise Disconnected(f"graph has {self.num_vertices} vertices but only {len(seen)} are reachable")


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def check_spanning_tree(graph: EnhancedGraph, tree: Iterable[int]) -> None:
    """
    Raises:
        InvalidGraph: Unless ``tree`` is a set of |V|-1 edges without cycles
    """
    tree = set(tree)
    if any(not 0 <= e < graph.num_edges for e in tree):
        raise InvalidGraph(f"tree names an edge outside 0..{graph.num_edges - 1}")
    if len(tree) != graph.num_vertices - 1:
        raise InvalidGraph(f"a spanning tree has {graph.num_vertices - 1} edges, got {len(tree)}")
    uf = _UnionFind(graph.num_vertices)
    for e in sorted(tree):
        u, v = (graph.vertex_of[d] for d in graph.edges[e])
        if not uf.union(u, v):
            raise InvalidGraph(f"tree edges contain a cycle through edge {e}")


def kruskal_tree(num_vertices: int, edge_ends: Sequence[Tuple[int, int]], order: Iterable[int]) -> FrozenSet[int]:
    """Spanning forest taking edges greedily in ``order``."""
    uf = _UnionFind(num_vertices)
    return frozenset(e for e in order if uf.union(*edge_ends[e]))


def from_edges(
    edges: Sequence[Tuple[int, int]],
    tree: Optional[Iterable[int]] = None,
    basepoint: Optional[int] = None,
    rotations: Optional[Dict[int, Sequence[int]]] = None,
    edge_names: Optional[Sequence[str]] = None,
) -> EnhancedGraph:
    """
    Build a graph from an edge list; edge ``i = (u, v)`` is oriented ``u -> v``.

    Dart ``2i`` sits at ``u`` and is the source, dart ``2i+1`` sits at ``v``.

    Args:
        edges: Vertex pairs; loops are ``(v, v)``
        tree: Spanning tree edge ids (default: first spanning tree in edge order)
        basepoint: Default is the least 3-valent vertex
        rotations: Cyclic dart order per vertex (default: ascending darts)
        edge_names: Optional display names

    Raises:
        InvalidGraph: If the result breaks a graph invariant
    """
    if not edges:
        raise InvalidGraph("A graph needs at least one edge")
    vertex_of = []
    for u, v in edges:
        vertex_of.extend([u, v])
    num_darts = len(vertex_of)
    pairing = [d ^ 1 for d in range(num_darts)]

    at: Dict[int, List[int]] = {}
    for d, v in enumerate(vertex_of):
        at.setdefault(v, []).append(d)
    rotations = dict(rotations or {})
    next_dart = [0] * num_darts
    for v, darts in at.items():
        cycle = list(rotations.get(v, darts))
        if sorted(cycle) != sorted(darts):
            raise InvalidGraph(f"rotation at vertex {v} must list darts {sorted(darts)}")
        for i, d in enumerate(cycle):
            next_dart[d] = cycle[(i + 1) % len(cycle)]

    if basepoint is None:
        inner = sorted(v for v, darts in at.items() if len(darts) == 3)
        basepoint = inner[0] if inner else 0
    if tree is None:
        num_vertices = max(vertex_of) + 1
        tree = kruskal_tree(num_vertices, list(edges), range(len(edges)))

    return EnhancedGraph(
        pairing=tuple(pairing),
        vertex_of=tuple(vertex_of),
        next_dart=tuple(next_dart),
        source_dart=tuple(2 * i for i in range(len(edges))),
        tree_edges=frozenset(tree),
        basepoint=basepoint,
        edge_names=tuple(edge_names) if edge_names is not None else None,
    )


def genus(graph: EnhancedGraph) -> int:
    return graph.genus


def edge_ends(graph: EnhancedGraph) -> List[Tuple[int, int]]:
    return [(graph.vertex_of[d0], graph.vertex_of[d1]) for d0, d1 in graph.edges]


def check_boundary_keys(graph: EnhancedGraph, keys: Iterable[int]) -> None:
    """
    Raises:
        InvalidInput: Unless ``keys`` are exactly the leaf edges
    """
    keys = set(keys)
    if keys != set(graph.leaf_edges):
        raise InvalidInput(f"boundary must assign exactly the leaf edges {list(graph.leaf_edges)}, got {sorted(keys)}")
