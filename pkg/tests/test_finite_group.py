import pytest

from hurwitz_lab.app.config import settings
from hurwitz_lab.services.errors import InvalidInput, NotAGroup, OrderCapExceeded
from hurwitz_lab.services.finite_group import (
    Partition,
    Permutation,
    conjugacy_classes,
    enumerate_group,
    generating_set,
    group_from_document,
    load_cayley_table,
    symmetric_group,
)

# identity 0, latin, every element its own inverse, (1*2)*4 != 1*(2*4)
LOOP_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


# ============================================================================
# Permutations and partitions
# ============================================================================
def test_compose_applies_right_factor_first():
    a = Permutation.from_cycles([(0, 1)], 3)
    b = Permutation.from_cycles([(1, 2)], 3)
    assert a.compose(b).images == (1, 2, 0)
    assert a.compose(b).cycle_notation() == "(0 1 2)"


def test_inverse_and_identity():
    p = Permutation((2, 0, 3, 1))
    assert p.compose(p.inverse()) == Permutation.identity(4)
    assert Permutation.identity(4).cycle_notation() == "()"


def test_invalid_permutation():
    with pytest.raises(InvalidInput):
        Permutation((0, 0, 1))
    with pytest.raises(InvalidInput):
        Permutation.from_cycles([(0, 1), (1, 2)], 3)


def test_cycle_type():
    p = Permutation.from_cycles([(0, 3), (1, 4, 2)], 6)
    assert p.cycle_type().label == "1,2,3"


@pytest.mark.parametrize(
    "label,size",
    [("1,1,1,1", 1), ("1,1,2", 6), ("2,2", 3), ("1,3", 8), ("4", 6), ("1,1,1,2,3", 1120)],
)
def test_class_sizes(label, size):
    assert Partition.parse(label).class_size() == size


def test_partition_parse_normalizes():
    assert Partition.parse("2,1,1").label == "1,1,2"
    assert Partition.parse("2, 1 ,1") == Partition((1, 1, 2))
    with pytest.raises(InvalidInput):
        Partition.parse("1,x")
    with pytest.raises(InvalidInput):
        Partition((0, 2))


def test_canonical_permutation_has_its_cycle_type():
    for label in ("1,1,2", "2,2", "1,3", "4"):
        partition = Partition.parse(label)
        assert partition.canonical_permutation().cycle_type() == partition


# ============================================================================
# Groups
# ============================================================================
@pytest.mark.parametrize("d,order,classes", [(1, 1, 1), (2, 2, 2), (3, 6, 3), (4, 24, 5), (5, 120, 7)])
def test_symmetric_group_orders(d, order, classes):
    group, table = symmetric_group(d)
    assert group.order == order
    assert len(table) == classes
    assert sum(table.sizes) == order


def test_s4_class_order():
    group, table = symmetric_group(4)
    assert table.labels == ("1,1,1,1", "1,1,2", "2,2", "1,3", "4")
    assert table.sizes == (1, 6, 3, 8, 6)
    assert table.identity_class == 0
    assert table.all_self_inverse


def test_identity_is_element_zero():
    group, _ = symmetric_group(3)
    assert group.identity == 0
    assert group.label(0) == "()"
    for x in range(group.order):
        assert group.product(x, group.inverses[x]) == 0


def test_symmetric_group_limits():
    with pytest.raises(InvalidInput):
        symmetric_group(0)
    with pytest.raises(OrderCapExceeded):
        symmetric_group(8)
    with pytest.raises(OrderCapExceeded):
        symmetric_group(4, order_cap=10)


def test_enumerate_group_rejects_mixed_degrees():
    with pytest.raises(InvalidInput):
        enumerate_group([Permutation((1, 0)), Permutation((1, 2, 0))])
    with pytest.raises(InvalidInput):
        enumerate_group([])


def test_generating_set_generates():
    group, _ = symmetric_group(4)
    gens = generating_set(group.mul, group.identity)
    reached = {group.identity}
    frontier = [group.identity]
    while frontier:
        frontier = [group.product(x, g) for x in frontier for g in gens if group.product(x, g) not in reached]
        reached.update(frontier)
    assert len(reached) == 24


def test_by_label():
    _, table = symmetric_group(4)
    assert table.by_label("2,1,1") == 1
    assert table.by_label("4") == 4
    with pytest.raises(InvalidInput, match="valid labels"):
        table.by_label("5")


# ============================================================================
# Cayley tables
# ============================================================================
def test_cyclic_cayley_table():
    group = load_cayley_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    table = conjugacy_classes(group)
    assert group.order == 3
    assert table.labels == ("c0", "c1", "c2")
    assert table.inverse == (0, 2, 1)
    assert not table.all_self_inverse
    assert table.by_label("2") == 2


@pytest.mark.parametrize(
    "cayley,axiom",
    [
        ([[0, 0], [1, 1]], "latin square (rows)"),
        ([[0, 5], [1, 0]], "closure"),
        ([[0, 2, 1], [2, 1, 0], [1, 0, 2]], "identity"),
        (LOOP_5, "associativity"),
    ],
)
def test_not_a_group(cayley, axiom):
    with pytest.raises(NotAGroup) as info:
        load_cayley_table(cayley)
    assert info.value.axiom == axiom


def test_sampled_associativity_check(monkeypatch):
    monkeypatch.setattr(settings, "FULL_ASSOCIATIVITY_MAX_ORDER", 1)
    with pytest.raises(NotAGroup) as info:
        load_cayley_table(LOOP_5)
    assert info.value.axiom == "associativity"
    a, b, c = info.value.witness
    assert LOOP_5[LOOP_5[a][b]][c] != LOOP_5[a][LOOP_5[b][c]]

    z4 = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    assert load_cayley_table(z4, seed=11).order == 4


def test_group_document():
    group, table = group_from_document({"generators": [[1, 0, 2], [0, 2, 1]]})
    assert group.order == 6
    assert len(table) == 3


def test_cayley_document_respects_order_cap():
    z4 = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    with pytest.raises(OrderCapExceeded):
        group_from_document({"cayley": z4}, order_cap=3)
    group, table = group_from_document({"cayley": z4}, order_cap=4)
    assert group.order == 4
    assert len(table) == 4


@pytest.mark.parametrize(
    "doc",
    [{}, {"generators": [[1, 0]], "cayley": [[0]]}, {"generators": "abc"}],
)
def test_bad_group_documents(doc):
    with pytest.raises(InvalidInput):
        group_from_document(doc)
