"""Moves between enhanced graphs that leave boundary counts unchanged."""
import random
from dataclasses import dataclass
from typing import Iterable, List, Optional

from ..errors import InvalidGraph, MoveNotApplicable
from ..utils.logging_config import get_logger
from .graph import EnhancedGraph, check_spanning_tree, edge_ends, kruskal_tree

logger = get_logger(__name__)

MOVE_KINDS = ("flip", "rotate", "retree", "ihx")


@dataclass(frozen=True)
class Move:
    """``kind`` is one of MOVE_KINDS; ``target`` an edge or vertex id; ``variant`` picks the ihx resolution."""

    kind: str
    target: Optional[int] = None
    variant: int = 1
    seed: Optional[int] = None


def flip_orientation(graph: EnhancedGraph, edge: int) -> EnhancedGraph:
    if not 0 <= edge < graph.num_edges:
        raise MoveNotApplicable(f"no edge {edge}")
    source = list(graph.source_dart)
    source[edge] = graph.pairing[source[edge]]
    return graph.replace(source_dart=tuple(source))


def reverse_rotation(graph: EnhancedGraph, vertex: int) -> EnhancedGraph:
    """Reverse the cyclic order of the darts at a vertex."""
    if not 0 <= vertex < graph.num_vertices:
        raise MoveNotApplicable(f"no vertex {vertex}")
    nxt = list(graph.next_dart)
    for d in graph.darts_at[vertex]:
        nxt[graph.next_dart[d]] = d
    return graph.replace(next_dart=tuple(nxt))


def random_spanning_tree(graph: EnhancedGraph, rng: random.Random) -> frozenset:
    order = list(range(graph.num_edges))
    rng.shuffle(order)
    return kruskal_tree(graph.num_vertices, edge_ends(graph), order)


def retree(graph: EnhancedGraph, tree: Optional[Iterable[int]] = None, rng: Optional[random.Random] = None) -> EnhancedGraph:
    """Swap in another spanning tree: the one given, or a random one."""
    if tree is None:
        tree = random_spanning_tree(graph, rng or random.Random(0))
    tree = frozenset(tree)
    try:
        check_spanning_tree(graph, tree)
    except InvalidGraph as e:
        raise MoveNotApplicable(f"not a spanning tree: {e}") from e
    return graph.replace(tree_edges=tree)


def ihx_applicable(graph: EnhancedGraph, edge: int) -> bool:
    if not 0 <= edge < graph.num_edges:
        return False
    d0, d1 = graph.edges[edge]
    u, v = graph.vertex_of[d0], graph.vertex_of[d1]
    return u != v and graph.valence(u) == 3 and graph.valence(v) == 3


def ihx(graph: EnhancedGraph, edge: int, variant: int = 1) -> EnhancedGraph:
    """
    Contract an inner edge and split the 4-valent vertex the other way.

    With ``a1, a2`` the other darts at one end and ``b1, b2`` at the other
    (cyclic order after the edge), variant 1 regroups them as
    ``{a2, b1 | b2, a1}`` and variant 2 as ``{a1, b1 | a2, b2}``. The spanning
    tree is repaired keeping as many old tree edges as possible.

    Raises:
        MoveNotApplicable: Unless the edge joins two distinct 3-valent vertices
    """
    if variant not in (1, 2):
        raise MoveNotApplicable(f"ihx variant must be 1 or 2, got {variant}")
    if not ihx_applicable(graph, edge):
        raise MoveNotApplicable(f"edge {edge} does not join two distinct 3-valent vertices")
    eu, ev = graph.edges[edge]
    u, v = graph.vertex_of[eu], graph.vertex_of[ev]
    nxt = graph.next_dart
    a1, a2 = nxt[eu], nxt[nxt[eu]]
    b1, b2 = nxt[ev], nxt[nxt[ev]]
    if variant == 1:
        at_u, at_v = (a2, b1), (b2, a1)
    else:
        at_u, at_v = (a1, b1), (a2, b2)

    vertex_of = list(graph.vertex_of)
    next_dart = list(nxt)
    for anchor, vertex, (x, y) in ((eu, u, at_u), (ev, v, at_v)):
        vertex_of[x] = vertex_of[y] = vertex
        next_dart[anchor], next_dart[x], next_dart[y] = x, y, anchor

    # keep old tree edges first, then the rest
    order = sorted(graph.tree_edges) + [e for e in range(graph.num_edges) if e not in graph.tree_edges]
    ends = [(vertex_of[d0], vertex_of[d1]) for d0, d1 in graph.edges]
    tree = kruskal_tree(graph.num_vertices, ends, order)
    logger.debug(f"ihx on edge {edge} (variant {variant}), tree changed by {len(tree ^ graph.tree_edges)} edges")
    return graph.replace(vertex_of=tuple(vertex_of), next_dart=tuple(next_dart), tree_edges=tree)


def applicable_moves(graph: EnhancedGraph) -> List[Move]:
    moves = [Move("flip", e) for e in range(graph.num_edges)]
    moves += [Move("rotate", v) for v in graph.inner_vertices]
    moves.append(Move("retree"))
    for e in graph.inner_edges:
        if ihx_applicable(graph, e):
            moves += [Move("ihx", e, 1), Move("ihx", e, 2)]
    return moves


def apply_move(graph: EnhancedGraph, move: Move) -> EnhancedGraph:
    """
    Raises:
        MoveNotApplicable: For unknown kinds or inapplicable targets
    """
    if move.kind == "flip":
        return flip_orientation(graph, move.target)
    if move.kind == "rotate":
        return reverse_rotation(graph, move.target)
    if move.kind == "retree":
        return retree(graph, rng=random.Random(move.seed))
    if move.kind == "ihx":
        return ihx(graph, move.target, move.variant)
    raise MoveNotApplicable(f"unknown move {move.kind!r}; expected one of {', '.join(MOVE_KINDS)}")


def random_move(graph: EnhancedGraph, rng: random.Random) -> Move:
    move = rng.choice(applicable_moves(graph))
    if move.kind == "retree":
        move = Move("retree", seed=rng.randrange(2 ** 32))
    return move
