import numpy as np
import pytest

from catalog import GroupSpecError, build_group, get_atoms_description
from groups import (
    FiniteGroup,
    GroupError,
    conjugacy_classes,
    direct_product,
    element_order,
    exponent,
    group_center,
)

CATALOG = [
    "c1", "c2", "c3", "c4", "c8", "c9", "c16",
    "elem2e1", "elem2e2", "elem2e3", "elem2e4", "elem3e1", "elem3e2",
    "q8", "d4", "d8", "d16",
    "c4xc2", "c3xc3", "c8xc2", "q8xc2", "d8xc2", "c4xc2xc2",
]

Q8_LABELS = ("1", "a", "a^2", "a^3", "b", "a*b", "a^2*b", "a^3*b")


# ---------------------------------------------------------
# Axioms for every catalog group
# ---------------------------------------------------------

@pytest.mark.parametrize("spec", CATALOG)
def test_catalog_group_axioms(spec):
    G = build_group(spec)
    T = G.cayley
    n = G.order
    idx = np.arange(n)
    assert np.array_equal(T[0], idx) and np.array_equal(T[:, 0], idx)
    assert all(T[i, G.inverse[i]] == 0 for i in range(n))
    for i in range(n):
        assert sorted(T[i]) == list(range(n))
        assert sorted(T[:, i]) == list(range(n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert T[T[i, j], k] == T[i, T[j, k]]
    assert G.generated_by(G.generators) == frozenset(range(n))


@pytest.mark.parametrize("spec", CATALOG)
def test_center_and_classes_are_consistent(spec):
    G = build_group(spec)
    Z = group_center(G)
    classes = conjugacy_classes(G)
    assert G.order % len(Z) == 0
    assert all(G.mul(x, y) in Z for x in Z for y in Z)
    assert all(G.inv(z) in Z for z in Z)
    assert sum(classes.sizes) == G.order
    assert sorted(i for cls in classes.classes for i in cls) == list(range(G.order))
    assert {cls[0] for cls in classes.classes if len(cls) == 1} == Z
    mins = [cls[0] for cls in classes.classes]
    assert mins == sorted(mins)


@pytest.mark.parametrize("spec", CATALOG)
def test_labels_are_deterministic(spec):
    assert build_group(spec).labels == build_group(spec).labels
    assert build_group(spec).labels[0] == "1"


# ---------------------------------------------------------
# Quaternion and dihedral groups
# ---------------------------------------------------------

def test_q8_presentation():
    G = build_group("q8")
    a, b = G.index_of("a"), G.index_of("b")
    a2 = G.mul(a, a)
    assert G.order == 8
    assert G.labels == Q8_LABELS
    assert G.mul(b, b) == a2
    assert G.mul(a2, a2) == 0
    assert G.conjugate(a, b) == G.index_of("a^3")
    assert G.generators == (a, b)
    assert not G.is_abelian


def test_q8_center_and_classes():
    G = build_group("q8")
    assert group_center(G) == {0, 2}
    assert conjugacy_classes(G).classes == ((0,), (1, 3), (2,), (4, 6), (5, 7))
    partition = conjugacy_classes(G)
    assert [partition.class_of(i) for i in range(8)] == [0, 1, 2, 1, 3, 4, 3, 4]
    with pytest.raises(IndexError):
        partition.class_of(8)


def test_d8_center_and_classes():
    G = build_group("d8")
    assert group_center(G) == {0, G.index_of("r^2")}
    assert sorted(conjugacy_classes(G).sizes) == [1, 1, 2, 2, 2]
    s = G.index_of("s")
    assert G.mul(s, s) == 0


def test_trivial_group_has_one_class():
    G = build_group("c1")
    assert G.order == 1
    assert conjugacy_classes(G).classes == ((0,),)


def test_c2():
    G = build_group("c2")
    assert G.labels == ("1", "g")
    assert G.mul(1, 1) == 0


def test_c4xc2_is_abelian_of_exponent_4():
    G = build_group("c4xc2")
    assert G.order == 8
    assert G.is_abelian
    assert exponent(G) == 4
    assert group_center(G) == frozenset(range(8))
    assert G.labels == Q8_LABELS


def test_element_orders_in_q8():
    G = build_group("q8")
    assert [element_order(G, i) for i in range(8)] == [1, 4, 2, 4, 4, 4, 4, 4]


def test_elementary_abelian_exponent():
    G = build_group("elem3e2")
    assert G.order == 9
    assert exponent(G) == 3


# ---------------------------------------------------------
# Direct products
# ---------------------------------------------------------

@pytest.mark.parametrize("left, right", [("q8", "c2"), ("d8", "c2"), ("c4", "c4"), ("c3", "c3")])
def test_direct_product_order_and_center(left, right):
    A, B = build_group(left), build_group(right)
    P = build_group(f"{left}x{right}")
    assert P.order == A.order * B.order
    expected = {a + A.order * b for a in group_center(A) for b in group_center(B)}
    assert group_center(P) == expected


def test_direct_product_joins_distinct_labels():
    A = build_group("c4")
    B = build_group("q8")
    P = direct_product(A, B)
    assert P.order == 32
    assert P.labels[1] == "g"
    assert P.labels[4 * 5 + 2] == "g^2*a*b"
    with pytest.raises(GroupError):
        direct_product(A, A)


def test_spec_is_case_insensitive():
    assert build_group("Q8").name == "q8"
    assert build_group("C4xC2").cayley.tolist() == build_group("c4xc2").cayley.tolist()


# ---------------------------------------------------------
# Errors
# ---------------------------------------------------------

@pytest.mark.parametrize("spec", ["", "z5", "c6", "c2xc3", "c4x", "xc2", "d6", "elem4e2", "q8xq8xq8", "elem2e7"])
def test_bad_specs_are_rejected(spec):
    with pytest.raises(GroupSpecError):
        build_group(spec)


def test_table_without_inverses_is_rejected():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [1, 1]], [1], ["1", "g"])


def test_non_generating_generators_are_rejected():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [1, 0]], [], ["1", "g"])


def test_non_associative_loop_is_rejected():
    # Latin square with identity 0 that is not associative (smallest such loop has order 5)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupError, match="associative"):
        FiniteGroup(table, [1, 2], ["1", "u", "v", "w", "z"])


def test_atoms_description_lists_every_atom():
    text = get_atoms_description()
    for name in ("q8", "d{n}", "c{m}", "elem{p}e{k}"):
        assert name in text


@pytest.mark.parametrize("spec", ["c65536", "d1048576", "elem2e1000000", "c8xc8xc2", "c2" + "xc2" * 40])
def test_oversized_specs_are_rejected_before_building(spec):
    with pytest.raises(GroupSpecError, match="exceeds the limit"):
        build_group(spec)
