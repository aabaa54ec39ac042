"""Hypersets: validation, translate closure, equivalence, preserving maps."""

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from cdhg import (
    are_cayley_equivalent,
    aut_g_x,
    cayley_closure,
    cayley_equivalence_classes,
    census_corpus,
    group_automorphisms,
    inn_g_x,
    inner_automorphisms,
    is_cayley_closed,
    is_subgroup,
    load_hyperset,
    make_cyclic,
    make_dihedral,
    non_cayley_equivalent_representatives,
    right_translate,
    single_cayley_closure,
    validate_hyperset,
)
from conftest import FANO_MEMBERS

CORPUS8 = census_corpus(8)


@st.composite
def instances(draw, max_members=3, max_size=3):
    """A census-scale (group, hyperset) pair."""
    g = draw(st.sampled_from(CORPUS8))
    raw = []
    for _ in range(draw(st.integers(1, max_members))):
        extra = draw(st.sets(st.integers(0, g.order - 1), max_size=max_size - 1))
        raw.append({0} | extra)
    return g, validate_hyperset(g, raw)


def test_validate_fano():
    x = validate_hyperset(make_cyclic(7), FANO_MEMBERS)
    assert len(x) == 3
    assert x.members == ((0, 1, 3), (0, 2, 6), (0, 4, 5))


def test_validate_rejects_member_without_identity():
    with pytest.raises(ValueError, match="does not contain the identity 0"):
        validate_hyperset(make_cyclic(5), [[1, 2]])


def test_validate_rejects_empty_member():
    with pytest.raises(ValueError, match="empty member"):
        validate_hyperset(make_cyclic(5), [[]])


def test_validate_rejects_out_of_range():
    with pytest.raises(ValueError):
        validate_hyperset(make_cyclic(5), [[0, 5]])


def test_validate_deduplicates():
    x = validate_hyperset(make_cyclic(5), [[0, 1], [1, 0], [0, 1]])
    assert x.members == ((0, 1),)


def test_load_hyperset():
    text = "# the running example\n0 1 3\n0 4 5\n\n0 2 6  # third member\n"
    x = load_hyperset(text, make_cyclic(7))
    assert x == validate_hyperset(make_cyclic(7), FANO_MEMBERS)


def test_load_hyperset_rejects_non_integers():
    with pytest.raises(ValueError, match="line 2"):
        load_hyperset("0 1\n0 x\n", make_cyclic(5))


def test_right_translate():
    z7 = make_cyclic(7)
    assert right_translate(z7, (0, 1, 3), 2) == (2, 3, 5)
    assert right_translate(z7, (0, 1, 3), 0) == (0, 1, 3)


def test_single_closure_of_fano_seed():
    x = single_cayley_closure(make_cyclic(7), {0, 1, 3})
    assert x.members == ((0, 1, 3), (0, 2, 6), (0, 4, 5))


def test_single_closure_of_identity_singleton():
    x = single_cayley_closure(make_cyclic(5), {0})
    assert x.members == ((0,),)


def test_single_closure_of_subgroup_is_itself():
    x = single_cayley_closure(make_cyclic(6), {0, 3})
    assert x.members == ((0, 3),)


def test_single_closure_of_interval_seed():
    x = single_cayley_closure(make_cyclic(7), {0, 1, 2})
    assert x.members == ((0, 1, 2), (0, 1, 6), (0, 5, 6))


def test_equivalent_seeds_share_a_closure():
    z7 = make_cyclic(7)
    assert single_cayley_closure(z7, {0, 2, 6}) == single_cayley_closure(z7, {0, 1, 3})


def test_is_cayley_closed():
    z7 = make_cyclic(7)
    z5 = make_cyclic(5)
    assert is_cayley_closed(z7, validate_hyperset(z7, FANO_MEMBERS))
    assert not is_cayley_closed(z5, validate_hyperset(z5, [[0, 1]]))
    z6 = make_cyclic(6)
    assert is_cayley_closed(z6, validate_hyperset(z6, [[0, 3], [0, 2, 4]]))


def test_are_cayley_equivalent_examples():
    z7 = make_cyclic(7)
    assert are_cayley_equivalent(z7, {0, 1, 3}, {0, 2, 6})
    assert are_cayley_equivalent(z7, {0, 1, 3}, {0, 1, 3})
    assert not are_cayley_equivalent(z7, {0, 1, 3}, {0, 1, 2})


def test_equivalence_classes_fano():
    z7 = make_cyclic(7)
    x = validate_hyperset(z7, FANO_MEMBERS)
    classes = cayley_equivalence_classes(z7, x)
    assert len(classes) == 1
    assert set(classes[0]) == set(x.members)


def test_equivalence_classes_mixed_sizes():
    z6 = make_cyclic(6)
    x = validate_hyperset(z6, [[0, 3], [0, 2, 4]])
    classes = cayley_equivalence_classes(z6, x)
    assert len(classes) == 2


def test_representatives_fano():
    z7 = make_cyclic(7)
    x = validate_hyperset(z7, FANO_MEMBERS)
    y = non_cayley_equivalent_representatives(z7, x)
    assert y.members == ((0, 1, 3),)


def test_representatives_keep_inequivalent_members():
    z6 = make_cyclic(6)
    x = validate_hyperset(z6, [[0, 3], [0, 2, 4]])
    y = non_cayley_equivalent_representatives(z6, x)
    assert y.members == ((0, 2, 4), (0, 3))


def test_representatives_of_singleton():
    z5 = make_cyclic(5)
    x = validate_hyperset(z5, [[0]])
    assert non_cayley_equivalent_representatives(z5, x).members == ((0,),)


def test_aut_g_x_fano():
    z7 = make_cyclic(7)
    x = validate_hyperset(z7, FANO_MEMBERS)
    preserving = aut_g_x(z7, x)
    assert len(preserving) == 3
    doubling = tuple(2 * i % 7 for i in range(7))
    assert doubling in {a.map for a in preserving}


def test_aut_g_x_of_all_pairs_is_everything():
    z5 = make_cyclic(5)
    x = validate_hyperset(z5, [[0, s] for s in range(1, 5)])
    assert {a.map for a in aut_g_x(z5, x)} == {a.map for a in group_automorphisms(z5)}


def test_inn_g_x_abelian_is_trivial():
    z7 = make_cyclic(7)
    x = validate_hyperset(z7, FANO_MEMBERS)
    assert len(inn_g_x(z7, x)) == 1


def test_inn_g_x_dihedral():
    d3 = make_dihedral(3)
    rotations = validate_hyperset(d3, [[0, 1, 2]])
    assert len(inn_g_x(d3, rotations)) == 6
    one_flip = validate_hyperset(d3, [[0, 3]])
    assert len(inn_g_x(d3, one_flip)) == 2


@settings(max_examples=100, deadline=None)
@given(inst=instances())
def test_closure_contains_and_is_idempotent(inst):
    g, x = inst
    closed = cayley_closure(g, x)
    assert set(x.members) <= set(closed.members)
    assert cayley_closure(g, closed) == closed
    assert is_cayley_closed(g, closed)


@settings(max_examples=100, deadline=None)
@given(inst=instances(max_members=1))
def test_single_closure_matches_family_closure(inst):
    g, x = inst
    single = single_cayley_closure(g, x.members[0])
    assert single == cayley_closure(g, x)
    assert is_cayley_closed(g, single)
    # oracle recomputes the translate set straight from the definition
    assert set(single.members) == oracles.brute_single_closure(g.table, x.members[0])


@settings(max_examples=100, deadline=None)
@given(inst=instances())
def test_representatives_satisfy_their_contract(inst):
    g, x = inst
    classes = cayley_equivalence_classes(g, x)
    y = non_cayley_equivalent_representatives(g, x)
    # one representative per class, each the least member of its class
    assert len(y.members) == len(classes)
    for rep, cls in zip(y.members, classes):
        assert rep == min(cls)
    for i, a in enumerate(y.members):
        for b in y.members[i + 1:]:
            assert not are_cayley_equivalent(g, a, b)
    assert cayley_closure(g, y) == cayley_closure(g, x)


@settings(max_examples=100, deadline=None)
@given(inst=instances(max_members=2))
def test_equivalence_agrees_with_translate_classes(inst):
    g, x = inst
    a = x.members[0]
    b = x.members[-1]
    assert are_cayley_equivalent(g, a, b) == (
        tuple(b) in oracles.brute_single_closure(g.table, a)
    )
    assert are_cayley_equivalent(g, a, a)
    assert are_cayley_equivalent(g, a, b) == are_cayley_equivalent(g, b, a)


@settings(max_examples=60, deadline=None)
@given(inst=instances())
def test_preserving_automorphisms_form_subgroups(inst):
    g, x = inst
    outer = {a.map for a in aut_g_x(g, x)}
    inner = {a.map for a in inn_g_x(g, x)}
    assert inner <= outer
    assert outer <= {a.map for a in group_automorphisms(g)}
    assert inner <= {a.map for a in inner_automorphisms(g)}
    assert tuple(g.elements()) in outer
    for a in outer:
        for b in outer:
            assert tuple(b[v] for v in a) in outer


def test_members_must_be_subgroup_closed_when_subgroups():
    # subgroup members are fixed by their own translates
    z6 = make_cyclic(6)
    for members in ([[0, 3]], [[0, 2, 4]], [[0, 3], [0, 2, 4]]):
        x = validate_hyperset(z6, members)
        assert all(is_subgroup(z6, m) for m in x.members)
        assert is_cayley_closed(z6, x)
