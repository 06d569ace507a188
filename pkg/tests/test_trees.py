"""Tree construction, validation, enumeration, and symmetry tests."""

from __future__ import annotations

import math
from itertools import permutations as all_perms

import pytest
from hypothesis import given
from hypothesis import strategies as st

import cobinary as cb
from cobinary.serialize import binary_tree_to_obj

from conftest import (
    FAN_EDGES,
    FAN_PERMS,
    MUT_C_ROWS,
    MUT_EDGES,
    MUT_EPS,
    all_epsilons,
)

# ---------------------------------------------------------------------------
# catalan
# ---------------------------------------------------------------------------


def test_catalan_known_values():
    assert [cb.catalan(n) for n in range(9)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_catalan_matches_binomial_formula():
    for n in range(40):
        assert cb.catalan(n) * (n + 1) == math.comb(2 * n, n)


def test_catalan_rejects_negative():
    with pytest.raises(ValueError):
        cb.catalan(-1)


def test_catalan_is_exact_for_large_n():
    # Arbitrary-precision integers: no wrap-around at any size.
    value = cb.catalan(200)
    assert value == math.comb(400, 200) // 201
    assert value.bit_length() > 380


# ---------------------------------------------------------------------------
# make_tree
# ---------------------------------------------------------------------------


def test_staircase_tree_is_valid_for_every_sign_sequence():
    for n in range(1, 6):
        for eps in all_epsilons(n):
            tree = cb.make_tree(eps, [(i, i + 1, 1) for i in range(1, n)])
            assert tree == cb.initial_tree(eps)
            assert cb.c_matrix(tree).rows == tuple(
                tuple(int(i == j) for j in range(n - 1)) for i in range(n - 1)
            )


def test_two_left_children_is_an_arity_violation():
    with pytest.raises(cb.ArityViolation):
        cb.make_tree((1, 1, 1), [(1, 3, 1), (2, 3, 1)])


def test_mutation_demo_tree_is_valid_with_pinned_c_matrix(mutation_demo_tree):
    assert cb.c_matrix(mutation_demo_tree).rows == MUT_C_ROWS


def test_cycle_raises_not_a_tree():
    with pytest.raises(cb.NotATree):
        cb.make_tree((1, 1, 1, 1), [(1, 2, 1), (2, 3, 1), (1, 3, 1)])


def test_wrong_edge_count_raises_not_a_tree():
    with pytest.raises(cb.NotATree):
        cb.make_tree((1, 1, 1, 1), [(1, 2, 1)])


def test_embeddable_arity_but_wall_crossing_raises():
    # Node 1 sits above node 2 and below node 3, so the edge from 1 to 3
    # would cross the vertical wall rising from node 2.
    with pytest.raises(cb.WallViolation):
        cb.make_tree((-1, -1, 1), [(1, 2, -1), (1, 3, 1)])


def test_make_tree_keeps_caller_edge_labels():
    edges = [
        cb.SignedEdge(2, 1, 2, 1),
        cb.SignedEdge(1, 2, 3, 1),
    ]
    tree = cb.make_tree((-1, -1, 1), edges)
    assert tree.edge(1).triple == (2, 3, 1)
    assert tree.edge(2).triple == (1, 2, 1)


def test_make_tree_valid_full_example():
    tree = cb.make_tree(MUT_EPS, MUT_EDGES)
    assert set(tree.triples) == set(MUT_EDGES)


# ---------------------------------------------------------------------------
# tree_from_permutation
# ---------------------------------------------------------------------------


def test_identity_permutation_gives_staircase():
    for n in range(1, 6):
        for eps in all_epsilons(n):
            sigma = tuple(range(1, n + 1))
            assert cb.tree_from_permutation(sigma, eps) == cb.initial_tree(eps)


def test_five_node_reconstruction_golden():
    tree = cb.tree_from_permutation((2, 1, 5, 4, 3), (-1, 1, -1, 1, 1))
    assert set(tree.triples) == {(1, 4, 1), (3, 4, -1), (1, 2, -1), (4, 5, -1)}
    # The tied rank vector resolves either way to the same tree.
    assert tree == cb.tree_from_permutation((3, 1, 5, 4, 2), (-1, 1, -1, 1, 1))


def test_single_node():
    tree = cb.tree_from_permutation((1,), (1,))
    assert tree.n == 1 and tree.edges == ()
    assert cb.permutations_of(tree) == {(1,)}


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        cb.tree_from_permutation((1, 2), (1, 1, 1))


@given(
    st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.tuples(
            st.permutations(list(range(1, n + 1))),
            st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n),
        )
    )
)
def test_every_permutation_realizes_its_tree(case):
    sigma, eps = case
    tree = cb.tree_from_permutation(sigma, eps)
    assert tuple(sigma) in cb.permutations_of(tree)
    # Validation agrees that the produced edge set is embeddable.
    assert cb.make_tree(eps, tree.edges) == tree


# ---------------------------------------------------------------------------
# permutations_of
# ---------------------------------------------------------------------------


def test_known_four_node_fan(fan_tree):
    assert cb.permutations_of(fan_tree) == FAN_PERMS


def test_fan_is_independent_of_the_sign_choice():
    accepted = 0
    for eps in all_epsilons(4):
        try:
            tree = cb.make_tree(eps, FAN_EDGES)
        except cb.CobinaryError:
            continue
        accepted += 1
        assert cb.permutations_of(tree) == FAN_PERMS
    assert accepted > 0


def test_staircase_fan_is_identity_only():
    for eps in all_epsilons(4):
        assert cb.permutations_of(cb.initial_tree(eps)) == {(1, 2, 3, 4)}


def test_round_trip_through_every_realizing_permutation():
    for eps in all_epsilons(4):
        for tree in cb.enumerate_trees(eps):
            for sigma in cb.permutations_of(tree):
                assert cb.tree_from_permutation(sigma, eps) == tree


# ---------------------------------------------------------------------------
# enumerate_trees
# ---------------------------------------------------------------------------


def test_three_node_enumeration_golden():
    trees = cb.enumerate_trees((-1, -1, 1))
    assert len(trees) == 5
    assert [t.triples for t in trees] == [
        ((1, 2, -1), (2, 3, -1)),
        ((1, 2, -1), (2, 3, 1)),
        ((1, 2, 1), (1, 3, -1)),
        ((1, 2, 1), (2, 3, 1)),
        ((1, 3, 1), (2, 3, -1)),
    ]


def test_single_sign_enumeration():
    assert len(cb.enumerate_trees((1,))) == 1
    assert len(cb.enumerate_trees((-1,))) == 1


def test_four_node_count_agrees_with_symmetric_group_oracle():
    eps = (1, 1, 1, 1)
    via_perms = {
        cb.tree_from_permutation(sigma, eps)
        for sigma in all_perms(range(1, 5))
    }
    trees = cb.enumerate_trees(eps)
    assert len(trees) == 14
    assert set(trees) == via_perms


def test_counts_match_catalan_for_all_small_sign_sequences():
    for n in range(1, 6):
        for eps in all_epsilons(n):
            trees = cb.enumerate_trees(eps)
            assert len(trees) == cb.catalan(n)
            assert len(set(trees)) == len(trees)


def test_enumeration_is_canonically_ordered_and_deterministic():
    eps = (-1, 1, 1, -1, 1)
    first = cb.enumerate_trees(eps)
    second = cb.enumerate_trees(eps)
    assert first == second
    assert [t.triples for t in first] == sorted(t.triples for t in first)
    for tree in first:
        assert [e.triple for e in tree.edges] == sorted(e.triple for e in tree.edges)


# ---------------------------------------------------------------------------
# flip and reverse
# ---------------------------------------------------------------------------


def test_flip_single_node_types():
    down = cb.tree_from_permutation((1,), (-1,))
    up = cb.flip_horizontal(down)
    assert up.epsilon == (1,)
    assert cb.flip_horizontal(up) == down


def test_flip_is_an_involution_and_a_bijection():
    for n in range(1, 5):
        for eps in all_epsilons(n):
            flipped_eps = tuple(-s for s in eps)
            trees = cb.enumerate_trees(eps)
            images = {cb.flip_horizontal(t) for t in trees}
            assert images == set(cb.enumerate_trees(flipped_eps))
            for t in trees:
                assert cb.flip_horizontal(cb.flip_horizontal(t)) == t


def test_reverse_of_staircase():
    rev = cb.reverse_tree(cb.initial_tree((-1, -1, 1)))
    assert rev.epsilon == (1, -1, -1)
    assert rev.triples == ((1, 2, -1), (2, 3, -1))


def test_reverse_is_an_involution():
    for n in range(1, 5):
        for eps in all_epsilons(n):
            for t in cb.enumerate_trees(eps):
                assert cb.reverse_tree(cb.reverse_tree(t)) == t


def test_reverse_commutes_with_mutation():
    for n in range(2, 6):
        for eps in all_epsilons(n):
            for t in cb.enumerate_trees(eps):
                for k in range(1, n):
                    left = cb.reverse_tree(cb.mutate(t, k))
                    right = cb.mutate(cb.reverse_tree(t), k)
                    assert left == right


# ---------------------------------------------------------------------------
# gravity
# ---------------------------------------------------------------------------

GRAVITY_ORDER = [
    {(1, 2, -1), (2, 3, -1)},
    {(1, 2, 1), (1, 3, -1)},
    {(1, 3, 1), (2, 3, -1)},
    {(1, 2, 1), (2, 3, 1)},
    {(1, 2, -1), (2, 3, 1)},
]
GRAVITY_SHAPES = [
    [[None, [None, None]], None],
    [[[None, None], None], None],
    [[None, None], [None, None]],
    [None, [None, [None, None]]],
    [None, [[None, None], None]],
]


def test_gravity_golden_shapes():
    for edge_set, shape in zip(GRAVITY_ORDER, GRAVITY_SHAPES):
        tree = cb.make_tree((-1, -1, 1), sorted(edge_set))
        assert binary_tree_to_obj(cb.gravity_map(tree)) == shape


def test_gravity_single_node():
    bt = cb.gravity_map(cb.tree_from_permutation((1,), (-1,)))
    assert bt == cb.BinaryTree(None, None)
    assert bt.internal_count() == 1


def test_gravity_is_a_bijection_for_each_sign_sequence():
    for n in range(1, 6):
        all_shapes = {str(binary_tree_to_obj(bt)) for bt in cb.binary_trees(n)}
        for eps in all_epsilons(n):
            images = {
                str(binary_tree_to_obj(cb.gravity_map(t)))
                for t in cb.enumerate_trees(eps)
            }
            assert images == all_shapes


def test_binary_tree_catalog_counts():
    for n in range(6):
        assert len(cb.binary_trees(n)) == cb.catalan(n)


# ---------------------------------------------------------------------------
# equality semantics
# ---------------------------------------------------------------------------


def test_equality_ignores_edge_labels():
    a = cb.make_tree(
        (-1, -1, 1), [cb.SignedEdge(1, 1, 2, 1), cb.SignedEdge(2, 2, 3, 1)]
    )
    b = cb.make_tree(
        (-1, -1, 1), [cb.SignedEdge(2, 1, 2, 1), cb.SignedEdge(1, 2, 3, 1)]
    )
    assert a == b and hash(a) == hash(b)


def test_equality_distinguishes_sign_sequences():
    a = cb.initial_tree((1, 1))
    b = cb.initial_tree((1, -1))
    assert a != b
