"""Standard enhanced graphs and random ones."""
import random
from typing import List, Tuple

from ..errors import InvalidGraph, InvalidInput
from ..utils.logging_config import get_logger
from .graph import EnhancedGraph, edge_ends, from_edges, kruskal_tree

logger = get_logger(__name__)

MAX_RANDOM_ATTEMPTS = 1000


def tripod() -> EnhancedGraph:
    """One 3-valent vertex with three leaves pointing outward."""
    return from_edges([(0, 1), (0, 2), (0, 3)], edge_names=["a", "b", "c"])


def theta_with_leaf() -> EnhancedGraph:
    """
    Genus 2 with one leaf: a theta graph (vertices 0, 1, 2 joined by b, c, d, e)
    with leaf ``a`` from end 3 into vertex 0. Tree ``{a, b, c}``, basepoint 0.
    """
    edges = [(3, 0), (0, 1), (0, 2), (1, 2), (2, 1)]
    return from_edges(
        edges,
        tree=[0, 1, 2],
        basepoint=0,
        rotations={1: [3, 9, 6]},
        edge_names=["a", "b", "c", "d", "e"],
    )


def _caterpillar(legs: List[str]) -> EnhancedGraph:
    """
    A path of 3-valent vertices carrying the given legs in order; a leg is
    ``"leaf"`` (an edge to an end) or ``"loop"`` (an edge to a vertex with a loop).
    The first and last spine vertices carry two legs each.
    """
    spine = len(legs) - 2
    slots = [0] + [i for i in range(spine)] + [spine - 1]
    edges: List[Tuple[int, int]] = []
    loops: List[Tuple[int, int]] = []
    next_vertex = spine
    for kind, host in zip(legs, slots):
        edges.append((host, next_vertex))
        if kind == "loop":
            loops.append((next_vertex, next_vertex))
        next_vertex += 1
    edges += [(i, i + 1) for i in range(spine - 1)]
    return from_edges(edges + loops)


def chain_graph(n: int) -> EnhancedGraph:
    """
    Genus 0 with ``n >= 3`` leaves on a path of ``n - 2`` vertices.

    Leaf edges come first and in path order, so a boundary ``(mu, tau, ..., tau, nu)``
    in leaf order puts mu and nu at the two far ends.
    """
    if n < 3:
        raise InvalidInput(f"A chain needs at least 3 leaves, got {n}")
    return _caterpillar(["leaf"] * n)


def standard_graph(genus: int, leaves: int) -> EnhancedGraph:
    """
    A graph of the given genus and leaf count: leaves and loop-lollipops on a path.

    Raises:
        InvalidInput: If ``2g - 2 + n <= 0``
    """
    if genus < 0 or leaves < 0 or 2 * genus - 2 + leaves <= 0:
        raise InvalidInput(f"No 1-3-valent graph has genus {genus} and {leaves} leaves")
    legs = ["leaf"] * leaves + ["loop"] * genus
    if len(legs) >= 3:
        return _caterpillar(legs)
    if genus == 2:
        # two loops joined by a bar
        return from_edges([(0, 1), (0, 0), (1, 1)])
    # genus 1, one leaf: a loop with a tail
    return from_edges([(0, 1), (0, 0)])


def random_enhanced_graph(genus: int, leaves: int, rng: random.Random) -> EnhancedGraph:
    """
    Pair darts at random until the result is a valid connected graph, then
    pick random cyclic orders, inner-edge orientations, spanning tree and basepoint.
    Leaf edges point from the inner vertex to the end.

    Raises:
        InvalidInput: If ``2g - 2 + n <= 0`` or no valid pairing turns up
    """
    inner = 2 * genus - 2 + leaves
    if genus < 0 or leaves < 0 or inner <= 0:
        raise InvalidInput(f"No 1-3-valent graph has genus {genus} and {leaves} leaves")
    # vertices 0..inner-1 are 3-valent, then the ends
    slots = [v for v in range(inner) for _ in range(3)] + list(range(inner, inner + leaves))

    for attempt in range(MAX_RANDOM_ATTEMPTS):
        darts = list(range(len(slots)))
        rng.shuffle(darts)
        pairs = [(darts[i], darts[i + 1]) for i in range(0, len(darts), 2)]
        edges = []
        for x, y in pairs:
            u, v = slots[x], slots[y]
            if u >= inner and v >= inner:
                break
            if v >= inner or (u < inner and rng.random() < 0.5):
                edges.append((u, v))
            else:
                edges.append((v, u))
        else:
            rotations = {}
            for v in range(inner):
                at = [2 * i + k for i, e in enumerate(edges) for k in (0, 1) if e[k] == v]
                rng.shuffle(at)
                rotations[v] = at
            try:
                graph = from_edges(edges, rotations=rotations, basepoint=rng.randrange(inner))
            except InvalidGraph:
                continue
            order = list(range(graph.num_edges))
            rng.shuffle(order)
            graph = graph.replace(tree_edges=kruskal_tree(graph.num_vertices, edge_ends(graph), order))
            logger.debug(f"Random graph of genus {genus} with {leaves} leaves after {attempt + 1} attempts")
            return graph
    raise InvalidInput(f"No valid graph found in {MAX_RANDOM_ATTEMPTS} attempts")
