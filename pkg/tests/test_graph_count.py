import itertools
import random
from fractions import Fraction

import pytest

from hurwitz_lab.services.class_algebra import surface_correlator
from hurwitz_lab.services.errors import (
    Disconnected,
    InvalidGraph,
    InvalidInput,
    MoveNotApplicable,
    WorkCapExceeded,
)
from hurwitz_lab.services.graph_count import (
    BoundaryCondition,
    Coloring,
    GraphFile,
    Move,
    applicable_moves,
    apply_move,
    boundary_holonomies,
    chain_graph,
    count_boundary,
    count_colored,
    count_homs_presentation,
    count_homs_surface,
    flip_orientation,
    from_edges,
    graph_from_document,
    graph_to_document,
    ihx,
    presentation,
    random_enhanced_graph,
    random_move,
    retree,
    reverse_rotation,
    standard_graph,
    theta_with_leaf,
    tripod,
)

# S_3 classes: 0 identity, 1 transpositions, 2 three-cycles
E, T, C = 0, 1, 2


def constrained_homs(graph, boundary, ctx):
    p = presentation(graph)
    constraints = {p.leaf_generators[e]: c for e, c in boundary.classes.items()}
    return count_homs_presentation(p, constraints, ctx.group, ctx.classes)


# ============================================================================
# Graphs
# ============================================================================
@pytest.mark.parametrize("genus,leaves", [(0, 3), (0, 5), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (3, 0)])
def test_standard_graph_shape(genus, leaves):
    graph = standard_graph(genus, leaves)
    assert graph.genus == genus
    assert len(graph.leaf_edges) == leaves
    assert len(graph.inner_vertices) == 2 * genus - 2 + leaves


def test_standard_graph_rejects_unstable():
    with pytest.raises(InvalidInput):
        standard_graph(0, 2)
    with pytest.raises(InvalidInput):
        standard_graph(1, 0)
    with pytest.raises(InvalidInput):
        chain_graph(2)


def test_disconnected_graph():
    with pytest.raises(Disconnected):
        from_edges([(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)])


@pytest.mark.parametrize(
    "edges,kwargs",
    [
        ([(0, 1), (0, 2)], {}),
        ([(0, 1), (0, 2), (0, 3)], {"tree": [0, 1]}),
        ([(0, 1), (0, 2), (0, 3)], {"basepoint": 9}),
        ([(0, 1), (0, 2), (0, 3)], {"rotations": {0: [0, 2]}}),
    ],
)
def test_invalid_graphs(edges, kwargs):
    with pytest.raises(InvalidGraph):
        from_edges(edges, **kwargs)


def test_random_graphs_are_valid():
    rng = random.Random(11)
    for genus, leaves in [(0, 4), (1, 2), (2, 1)]:
        graph = random_enhanced_graph(genus, leaves, rng)
        assert graph.genus == genus
        assert len(graph.leaf_edges) == leaves


def test_graph_file_round_trip():
    graph = theta_with_leaf()
    doc = graph_to_document(graph, {0: "2"})
    again, boundary = graph_from_document(doc)
    assert again == graph
    assert boundary == {0: "2"}
    assert GraphFile(**doc).to_graph().edge_names == ("a", "b", "c", "d", "e")


@pytest.mark.parametrize(
    "doc",
    [
        {"darts": 2, "pairing": [1], "vertex": [0, 1], "next": [0, 1], "source_dart": [0], "tree": [0]},
        {"darts": 0},
        {"darts": 6, "pairing": [1, 0, 3, 2, 5, 4], "vertex": [0, 1, 0, 2, 0, 3], "next": [2, 1, 4, 3, 0, 5],
         "source_dart": [0, 2, 4], "tree": [0, 1, 2], "boundary": {"x": "2"}},
    ],
)
def test_bad_graph_documents(doc):
    with pytest.raises(InvalidInput):
        graph_from_document(doc)


# ============================================================================
# Counting
# ============================================================================
def test_tripod_counts_triples(s3):
    graph = tripod()
    assert count_boundary(graph, BoundaryCondition.from_sequence(graph, [T, T, C]), s3.sc) == 6
    assert count_boundary(graph, BoundaryCondition.from_sequence(graph, [T, T, T]), s3.sc) == 0


def test_chain_graph(s3):
    graph = chain_graph(4)
    boundary = BoundaryCondition.from_sequence(graph, [C, T, T, C])
    assert count_boundary(graph, boundary, s3.sc) == 12


@pytest.mark.parametrize(
    "genus,classes,expected",
    [(2, [1, 1], 16), (2, [0, 0, 1], 0), (2, [1], 0), (1, [1, 1], 4), (3, [], 64)],
)
def test_abelian_counts(s2, genus, classes, expected):
    graph = standard_graph(genus, len(classes))
    boundary = BoundaryCondition.from_sequence(graph, classes)
    assert count_boundary(graph, boundary, s2.sc) == expected


@pytest.mark.parametrize(
    "genus,classes",
    [(0, [T, T, C, C]), (1, [T, T]), (1, [C]), (2, [C]), (1, [T, T, C])],
)
def test_count_agrees_with_presentation_and_surface(s3, genus, classes):
    graph = standard_graph(genus, len(classes))
    boundary = BoundaryCondition.from_sequence(graph, classes)
    count = count_boundary(graph, boundary, s3.sc)
    holonomies = boundary_holonomies(graph, boundary, s3.sc)
    assert count == constrained_homs(graph, boundary, s3)
    assert count == count_homs_surface(genus, holonomies, s3.group, s3.classes)
    assert count == surface_correlator(genus, holonomies, s3.sc)


def test_cyclic_group_sees_leaf_orientation(z3):
    # leaves of the tripod point outward, so the inner vertex sees their classes unchanged
    graph = tripod()
    boundary = BoundaryCondition.from_sequence(graph, [1, 1, 1])
    assert count_boundary(graph, boundary, z3.sc) == 1
    flipped = flip_orientation(graph, 0)
    assert boundary_holonomies(flipped, boundary, z3.sc) == [2, 1, 1]
    assert count_boundary(flipped, boundary, z3.sc) == 0
    assert count_boundary(flipped, boundary, z3.sc) == constrained_homs(flipped, boundary, z3)


def test_count_colored(s3):
    graph = chain_graph(4)
    inner = graph.inner_edges[0]
    total = Fraction(0)
    for c in (E, T, C):
        classes = [C, T, T, C]
        classes.insert(inner, c)
        total += count_colored(graph, Coloring(tuple(classes)), s3.sc)
    assert total == 12
    with pytest.raises(InvalidInput):
        count_colored(graph, Coloring((E, E)), s3.sc)


def test_boundary_errors(s3):
    graph = tripod()
    with pytest.raises(InvalidInput):
        count_boundary(graph, BoundaryCondition({0: T, 1: T}), s3.sc)
    with pytest.raises(InvalidInput):
        count_boundary(graph, BoundaryCondition({0: T, 1: T, 2: 9}), s3.sc)
    with pytest.raises(InvalidInput):
        BoundaryCondition.from_sequence(graph, [T])


def test_count_work_cap(s3):
    graph = standard_graph(2, 2)
    boundary = BoundaryCondition.from_sequence(graph, [T, T])
    with pytest.raises(WorkCapExceeded):
        count_boundary(graph, boundary, s3.sc, work_cap=2)


# ============================================================================
# Presentations
# ============================================================================
def test_theta_presentation():
    p = presentation(theta_with_leaf())
    assert p.generators == ("p_a", "p_b", "p_c", "p_d", "p_e", "g_d", "g_e")
    assert len(p.relators) == 3
    assert p.word_to_text(p.relators[0]) == "p_a^-1 p_b p_c"
    assert p.to_dict()["leaf_generators"] == {"0": "p_a"}


@pytest.mark.parametrize("genus,leaves", [(0, 3), (1, 1), (1, 2), (2, 0), (2, 1), (0, 4)])
def test_presentation_size(genus, leaves):
    p = presentation(standard_graph(genus, leaves))
    assert len(p.generators) == 4 * genus - 3 + 2 * leaves
    assert len(p.relators) == 2 * genus - 2 + leaves


@pytest.mark.parametrize("genus,leaves", [(0, 3), (1, 1), (1, 2), (2, 1)])
def test_unconstrained_homs_in_s2(s2, genus, leaves):
    p = presentation(standard_graph(genus, leaves))
    assert count_homs_presentation(p, {}, s2.group, s2.classes) == 2 ** (2 * genus + leaves - 1)


def test_unconstrained_homs_in_s3(s3):
    assert count_homs_presentation(presentation(standard_graph(1, 1)), {}, s3.group, s3.classes) == 36
    assert count_homs_presentation(presentation(tripod()), {}, s3.group, s3.classes) == 36


def test_presentation_work_cap(s3):
    p = presentation(standard_graph(2, 1))
    with pytest.raises(WorkCapExceeded):
        count_homs_presentation(p, {}, s3.group, s3.classes, work_cap=5)


# ============================================================================
# Moves
# ============================================================================
def test_individual_moves(s3):
    graph = standard_graph(1, 2)
    boundary = BoundaryCondition.from_sequence(graph, [T, T])
    expected = count_boundary(graph, boundary, s3.sc)
    assert expected > 0
    for moved in (
        flip_orientation(graph, graph.inner_edges[0]),
        reverse_rotation(graph, graph.inner_vertices[0]),
        retree(graph, rng=random.Random(1)),
    ):
        assert count_boundary(moved, boundary, s3.sc) == expected


def test_ihx_preserves_counts(s3):
    graph = chain_graph(4)
    boundary = BoundaryCondition.from_sequence(graph, [C, T, T, C])
    inner = graph.inner_edges[0]
    for variant in (1, 2):
        moved = ihx(graph, inner, variant)
        assert moved.genus == 0
        assert count_boundary(moved, boundary, s3.sc) == 12


def test_inapplicable_moves():
    graph = standard_graph(1, 1)
    loop = next(e for e in graph.inner_edges if len(set(graph.endpoints(e))) == 1)
    with pytest.raises(MoveNotApplicable):
        ihx(graph, loop)
    with pytest.raises(MoveNotApplicable):
        ihx(graph, graph.leaf_edges[0])
    with pytest.raises(MoveNotApplicable):
        retree(graph, tree=[])
    with pytest.raises(MoveNotApplicable):
        apply_move(graph, Move("twist", 0))


@pytest.mark.parametrize("genus,classes", [(0, [C, T, T, C]), (1, [T, T]), (2, [C])])
def test_random_moves_preserve_counts(s3, genus, classes):
    rng = random.Random(5)
    graph = standard_graph(genus, len(classes))
    boundary = BoundaryCondition.from_sequence(graph, classes)
    expected = count_boundary(graph, boundary, s3.sc)
    for _ in range(25):
        graph = apply_move(graph, random_move(graph, rng))
        assert count_boundary(graph, boundary, s3.sc) == expected


# ============================================================================
# Seeded sweeps
# ============================================================================
SHAPES = [(0, 3), (1, 1), (1, 2), (2, 0), (2, 1), (0, 4), (1, 3)]


@pytest.mark.parametrize("name", ["s2", "s3"])
def test_every_move_on_random_graphs(name, request):
    ctx = request.getfixturevalue(name)
    rng = random.Random(2024)
    for _ in range(25):
        genus, leaves = rng.choice(SHAPES)
        graph = random_enhanced_graph(genus, leaves, rng)
        boundary = BoundaryCondition.from_sequence(graph, [rng.randrange(ctx.n) for _ in range(leaves)])
        expected = count_boundary(graph, boundary, ctx.sc)
        for k, move in enumerate(applicable_moves(graph)):
            if move.kind == "retree":
                move = Move("retree", seed=k)
            assert count_boundary(apply_move(graph, move), boundary, ctx.sc) == expected, move


@pytest.mark.parametrize("name", ["s2", "s3"])
@pytest.mark.parametrize("genus,leaves", [(0, 3), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (2, 2), (2, 3)])
def test_counts_match_surface_relation(name, genus, leaves, request):
    ctx = request.getfixturevalue(name)
    graph = standard_graph(genus, leaves)
    for classes in itertools.product(range(ctx.n), repeat=leaves):
        boundary = BoundaryCondition.from_sequence(graph, list(classes))
        assert count_boundary(graph, boundary, ctx.sc) == count_homs_surface(genus, list(classes), ctx.group, ctx.classes)


def test_random_presentations(s2):
    rng = random.Random(99)
    for _ in range(20):
        genus, leaves = rng.choice([(0, 3), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)])
        p = presentation(random_enhanced_graph(genus, leaves, rng))
        assert len(p.generators) == 4 * genus - 3 + 2 * leaves
        assert len(p.relators) == 2 * genus - 2 + leaves
        if leaves:
            # free of rank 2g + n - 1
            expected = 2 ** (2 * genus + leaves - 1)
        else:
            # abelian target: every pair commutes
            expected = 2 ** (2 * genus)
        assert count_homs_presentation(p, {}, s2.group, s2.classes) == expected


def test_closed_surface_homs_into_s3(s3):
    graph = random_enhanced_graph(2, 0, random.Random(5))
    # |G| * sum over irreducibles of (|G| / dim)^(2g - 2) = 6 * (36 + 36 + 9)
    assert count_homs_presentation(presentation(graph), {}, s3.group, s3.classes) == 486
    assert count_homs_surface(2, [], s3.group, s3.classes) == 486
