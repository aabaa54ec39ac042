"""Group construction, validation, subgroups, and automorphisms."""

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from cdhg import (
    AUT_GROUP_ORDER_CUTOFF,
    CutoffExceeded,
    FiniteGroup,
    census_corpus,
    direct_product,
    element_order,
    generating_set,
    group_automorphisms,
    inner_automorphisms,
    is_subgroup,
    load_group,
    make_cyclic,
    make_dihedral,
    serialize_group,
    subgroup_generated,
    subgroup_index,
)

# order-6 dihedral table with rotations at 0..2, flips at 3..5; checked
# against the flip*rot^k normal form by hand before freezing
D3_TABLE = (
    (0, 1, 2, 3, 4, 5),
    (1, 2, 0, 4, 5, 3),
    (2, 0, 1, 5, 3, 4),
    (3, 5, 4, 0, 2, 1),
    (4, 3, 5, 1, 0, 2),
    (5, 4, 3, 2, 1, 0),
)

# Latin square with identity 0 that breaks associativity at (1,1,2)
LOOP5_TABLE = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]

CORPUS8 = census_corpus(8)
CORPUS12 = census_corpus(12)


def is_abelian(g):
    return all(g.mul(a, b) == g.mul(b, a) for a in g.elements() for b in g.elements())


def test_make_cyclic_products():
    z7 = make_cyclic(7)
    assert z7.order == 7
    assert z7.table[1][3] == 4
    assert z7.mul(5, 4) == 2


def test_make_cyclic_inverse():
    z4 = make_cyclic(4)
    assert z4.inv(1) == 3
    assert z4.inv(0) == 0


def test_make_cyclic_trivial():
    z1 = make_cyclic(1)
    assert z1.order == 1
    assert z1.identity == 0
    assert z1.table == ((0,),)


def test_make_cyclic_rejects_nonpositive():
    with pytest.raises(ValueError):
        make_cyclic(0)


def test_make_dihedral_order_6_is_nonabelian():
    d3 = make_dihedral(3)
    assert d3.order == 6
    assert not is_abelian(d3)
    assert d3.table == D3_TABLE


def test_make_dihedral_order_4_is_abelian():
    d2 = make_dihedral(2)
    assert d2.order == 4
    assert is_abelian(d2)


def test_direct_product_z2_z3():
    g = direct_product(make_cyclic(2), make_cyclic(3))
    assert g.order == 6
    assert g.name == "Z2xZ3"
    assert is_abelian(g)
    assert max(element_order(g, a) for a in g.elements()) == 6


def test_from_table_rejects_missing_identity():
    with pytest.raises(ValueError, match="no identity element"):
        FiniteGroup.from_table("bad", [[1, 1], [1, 1]])


def test_from_table_hints_at_renumbering():
    # 1 is a two-sided identity, 0 is not
    with pytest.raises(ValueError, match="identity is element 1.*renumber"):
        FiniteGroup.from_table("swapped", [[1, 0], [0, 1]])


def test_from_table_rejects_missing_inverse():
    with pytest.raises(ValueError, match="no inverse for element 1"):
        FiniteGroup.from_table("monoid", [[0, 1], [1, 1]])


def test_from_table_rejects_nonassociative_latin_square():
    with pytest.raises(ValueError, match=r"associativity fails at \(1,1,2\)"):
        FiniteGroup.from_table("loop", LOOP5_TABLE)


def test_from_table_rejects_ragged_rows():
    with pytest.raises(ValueError, match="row 1 has 1 entries"):
        FiniteGroup.from_table("ragged", [[0, 1], [1]])


def test_from_table_rejects_out_of_range_entries():
    with pytest.raises(ValueError, match="out of range"):
        FiniteGroup.from_table("oob", [[0, 1], [1, 2]])


def test_load_group_round_trip():
    for g in CORPUS8:
        assert load_group(serialize_group(g)) == g


def test_load_group_tolerates_comments_and_blanks():
    text = "# cyclic of order 2\ngroup Z2\n\norder 2  # two elements\ntable\n0 1\n1 0\n"
    g = load_group(text)
    assert g == make_cyclic(2)


def test_load_group_rejects_short_files():
    with pytest.raises(ValueError, match="too short"):
        load_group("group Z2\norder 2\n")


def test_load_group_rejects_wrong_row_count():
    with pytest.raises(ValueError, match="expected 2 table rows"):
        load_group("group Z2\norder 2\ntable\n0 1\n")


def test_subgroup_generated_full_group():
    z7 = make_cyclic(7)
    assert subgroup_generated(z7, {1, 3}) == frozenset(range(7))


def test_subgroup_generated_empty_seed():
    z7 = make_cyclic(7)
    assert subgroup_generated(z7, set()) == frozenset({0})


def test_subgroup_generated_proper():
    z4 = make_cyclic(4)
    assert subgroup_generated(z4, {2}) == frozenset({0, 2})


def test_is_subgroup():
    z6 = make_cyclic(6)
    z7 = make_cyclic(7)
    assert is_subgroup(z6, {0, 3})
    assert not is_subgroup(z7, {0, 1, 3})
    assert is_subgroup(z6, {0, 2, 4})


def test_subgroup_index():
    z6 = make_cyclic(6)
    assert subgroup_index(z6, {0, 3}) == 3
    assert subgroup_index(z6, {0, 2, 4}) == 2
    assert subgroup_index(z6, range(6)) == 1


def test_subgroup_index_rejects_non_subgroup():
    with pytest.raises(ValueError):
        subgroup_index(make_cyclic(6), {0, 1})


def test_generating_set_generates():
    for g in CORPUS8:
        gens = generating_set(g)
        assert subgroup_generated(g, gens) == frozenset(g.elements())


def test_element_order_identity():
    assert element_order(make_cyclic(5), 0) == 1
    assert element_order(make_cyclic(5), 1) == 5
    assert element_order(make_dihedral(3), 3) == 2


def test_group_automorphisms_cyclic_7():
    assert len(group_automorphisms(make_cyclic(7))) == 6


def test_group_automorphisms_cyclic_2():
    assert len(group_automorphisms(make_cyclic(2))) == 1


def test_group_automorphisms_klein_four():
    klein = direct_product(make_cyclic(2), make_cyclic(2))
    assert len(group_automorphisms(klein)) == 6


@pytest.mark.parametrize("g", CORPUS8, ids=lambda g: g.name)
def test_group_automorphisms_match_brute_force(g):
    got = {a.map for a in group_automorphisms(g)}
    want = set(oracles.brute_group_automorphisms(g.table))
    assert got == want


@pytest.mark.parametrize("g", CORPUS8, ids=lambda g: g.name)
def test_group_automorphisms_closed_under_composition(g):
    auts = group_automorphisms(g)
    maps = {a.map for a in auts}
    for a in auts:
        # homomorphism property at every pair of elements
        assert all(
            a(g.mul(i, j)) == g.mul(a(i), a(j))
            for i in g.elements()
            for j in g.elements()
        )
        assert tuple(g.inverse[a(g.inv(i))] for i in g.elements()) == a.map
    for a in auts:
        for b in auts:
            assert tuple(b(a(i)) for i in g.elements()) in maps


def test_group_automorphisms_refuses_large_orders():
    with pytest.raises(CutoffExceeded):
        group_automorphisms(make_cyclic(AUT_GROUP_ORDER_CUTOFF + 1))


def test_inner_automorphisms_abelian_trivial():
    assert len(inner_automorphisms(make_cyclic(7))) == 1
    assert len(inner_automorphisms(direct_product(make_cyclic(2), make_cyclic(3)))) == 1


def test_inner_automorphisms_dihedral_6():
    assert len(inner_automorphisms(make_dihedral(3))) == 6


@pytest.mark.parametrize("g", CORPUS8, ids=lambda g: g.name)
def test_inner_automorphism_count_is_order_over_center(g):
    center = oracles.brute_center(g.table)
    assert len(inner_automorphisms(g)) == g.order // len(center)
    inner = {a.map for a in inner_automorphisms(g)}
    assert inner <= {a.map for a in group_automorphisms(g)}


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_subgroup_generated_is_minimal(data):
    g = data.draw(st.sampled_from(CORPUS12))
    seed = data.draw(st.sets(st.integers(0, g.order - 1), max_size=3))
    h = subgroup_generated(g, seed)
    assert is_subgroup(g, h)
    assert set(seed) <= h
    # no strictly smaller subgroup contains the seed
    for s in oracles.all_subgroups_up_to(g.table, g.order):
        if set(seed) <= s:
            assert h <= s
