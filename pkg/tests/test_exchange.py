"""Euler matrix, exchange matrix, and matrix-mutation tests."""

from __future__ import annotations

import random

import pytest

import cobinary as cb
from cobinary import linalg

from conftest import (
    CLU_E,
    CLU_E_INV,
    CLU_EPS,
    MUT_C_ROWS,
    MUT_CSTAR_ROWS,
    MUT_K,
    all_epsilons,
)

# ---------------------------------------------------------------------------
# Euler and X matrices
# ---------------------------------------------------------------------------


def test_euler_matrix_five_node_golden():
    assert cb.euler_matrix((-1, 1, -1, -1, 1)) == (
        (1, 0, 0, 0),
        (-1, 1, -1, 0),
        (0, 0, 1, -1),
        (0, 0, 0, 1),
    )


def test_euler_matrix_cluster_demo_and_inverse():
    assert cb.euler_matrix(CLU_EPS) == CLU_E
    assert cb.euler_inverse(CLU_EPS) == CLU_E_INV
    assert linalg.mat_mul(CLU_E, CLU_E_INV) == linalg.identity(4)


def test_euler_matrix_two_nodes_is_identity():
    for eps in all_epsilons(2):
        assert cb.euler_matrix(eps) == ((1,),)


def test_euler_matrix_ignores_boundary_signs():
    for a in (1, -1):
        for b in (1, -1):
            assert cb.euler_matrix((a, 1, -1, b)) == cb.euler_matrix((1, 1, -1, 1))


def test_euler_matrix_needs_two_nodes():
    with pytest.raises(ValueError):
        cb.euler_matrix((1,))
    with pytest.raises(ValueError):
        cb.x_matrix((-1,))


def test_euler_inverse_is_nonnegative_everywhere():
    for n in range(2, 7):
        for eps in all_epsilons(n):
            inv = cb.euler_inverse(eps)
            assert all(x >= 0 for row in inv for x in row)
            assert linalg.mat_mul(cb.euler_matrix(eps), inv) == linalg.identity(n - 1)


def test_x_matrix_superdiagonal_pattern():
    x = cb.x_matrix((-1, 1, -1, -1, 1))
    assert tuple(x[i][i + 1] for i in range(3)) == (1, -1, -1)
    for n in range(2, 7):
        for eps in all_epsilons(n):
            xm = cb.x_matrix(eps)
            assert linalg.is_skew_symmetric(xm)
            assert tuple(xm[i][i + 1] for i in range(n - 2)) == eps[1 : n - 1]


def test_x_matrix_is_e_minus_e_transpose():
    x = cb.x_matrix(CLU_EPS)
    assert x == linalg.mat_sub(CLU_E, linalg.transpose(CLU_E))


# ---------------------------------------------------------------------------
# exchange matrices
# ---------------------------------------------------------------------------


def test_staircase_exchange_is_x_over_identity():
    for n in range(2, 6):
        for eps in all_epsilons(n):
            ex = cb.exchange_matrix(cb.initial_tree(eps))
            assert ex.b_rows == cb.x_matrix(eps)
            assert ex.c_rows == linalg.identity(n - 1)


def test_two_node_trees_have_zero_principal_part():
    for eps in all_epsilons(2):
        for tree in cb.enumerate_trees(eps):
            ex = cb.exchange_matrix(tree)
            assert ex.b_rows == ((0,),)
            assert ex.c_rows in (((1,),), ((-1,),))


def test_single_node_exchange_is_empty():
    ex = cb.exchange_matrix(cb.tree_from_permutation((1,), (1,)))
    assert ex.b_rows == () and ex.c_rows == ()


def test_demo_exchange_bottom_block(mutation_demo_tree):
    ex = cb.exchange_matrix(mutation_demo_tree)
    assert ex.c_rows == MUT_C_ROWS
    assert linalg.is_skew_symmetric(ex.b_rows)
    assert all(abs(x) <= 1 for row in ex.b_rows for x in row)


def test_principal_entries_never_exceed_one():
    for n in range(2, 6):
        for eps in all_epsilons(n):
            for tree in cb.enumerate_trees(eps):
                b = cb.exchange_matrix(tree).b_rows
                assert all(abs(x) <= 1 for row in b for x in row)


# ---------------------------------------------------------------------------
# Fomin-Zelevinsky mutation
# ---------------------------------------------------------------------------


def test_fz_mutation_is_an_involution():
    for n in range(2, 5):
        for eps in all_epsilons(n):
            for tree in cb.enumerate_trees(eps):
                ex = cb.exchange_matrix(tree)
                for k in range(1, n):
                    assert cb.fz_mutate(cb.fz_mutate(ex, k), k) == ex


def test_fz_mutation_demo_matches_column_operations(mutation_demo_tree):
    ex = cb.exchange_matrix(mutation_demo_tree)
    mutated = cb.fz_mutate(ex, MUT_K)
    assert mutated.c_rows == MUT_CSTAR_ROWS
    # Independent route: add column 3 to columns 2 and 4, negate column 3.
    cols = list(linalg.transpose(MUT_C_ROWS))
    c3 = cols[2]
    cols[1] = tuple(a + b for a, b in zip(cols[1], c3))
    cols[3] = tuple(a + b for a, b in zip(cols[3], c3))
    cols[2] = tuple(-a for a in c3)
    assert linalg.transpose(tuple(cols)) == mutated.c_rows
    # The same operations return the mutated matrix to the original.
    back = cb.fz_mutate(mutated, MUT_K)
    assert back.c_rows == MUT_C_ROWS


def test_fz_three_node_hand_computation():
    eps = (-1, -1, 1)
    ex = cb.exchange_matrix(cb.initial_tree(eps))
    mutated = cb.fz_mutate(ex, 1)
    assert linalg.transpose(mutated.c_rows) == ((-1, 0), (0, 1))
    assert mutated.b_rows == ((0, 1), (-1, 0))


def test_fz_preserves_skew_symmetry():
    rng = random.Random(7)
    for n in (4, 5, 6):
        eps = tuple(rng.choice((1, -1)) for _ in range(n))
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        ex = cb.exchange_matrix(cb.tree_from_permutation(tuple(sigma), eps))
        for _ in range(10):
            k = rng.randint(1, n - 1)
            ex = cb.fz_mutate(ex, k)
            assert linalg.is_skew_symmetric(ex.b_rows)


def test_fz_direction_out_of_range(mutation_demo_tree):
    ex = cb.exchange_matrix(mutation_demo_tree)
    with pytest.raises(IndexError):
        cb.fz_mutate(ex, 0)
    with pytest.raises(IndexError):
        cb.fz_mutate(ex, 5)


def test_exchange_matrix_requires_skew_principal_part():
    with pytest.raises(ValueError):
        cb.ExchangeMatrix(((0, 1), (1, 0)), ((1, 0), (0, 1)))


def test_tree_and_matrix_mutation_agree_exhaustively_small():
    for n in range(2, 5):
        for eps in all_epsilons(n):
            for tree in cb.enumerate_trees(eps):
                ex = cb.exchange_matrix(tree)
                for k in range(1, n):
                    assert cb.exchange_matrix(cb.mutate(tree, k)) == cb.fz_mutate(
                        ex, k
                    )


def test_tree_and_matrix_mutation_agree_sampled_larger():
    rng = random.Random(99)
    for _ in range(60):
        n = rng.choice((6, 7))
        eps = tuple(rng.choice((1, -1)) for _ in range(n))
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        tree = cb.tree_from_permutation(tuple(sigma), eps)
        k = rng.randint(1, n - 1)
        assert cb.exchange_matrix(cb.mutate(tree, k)) == cb.fz_mutate(
            cb.exchange_matrix(tree), k
        )


# ---------------------------------------------------------------------------
# structural sign laws of the principal part
# ---------------------------------------------------------------------------


def _gamma(p: int, n: int) -> tuple[int, ...]:
    return cb.interval_vector(p, n, n)


def test_gamma_pairing_table():
    for n in range(2, 6):
        for eps in all_epsilons(n):
            x = cb.x_matrix(eps)
            for p in range(1, n + 1):
                for q in range(1, n + 1):
                    actual = linalg.dot(linalg.vec_mat(_gamma(p, n), x), _gamma(q, n))
                    if p == q or n in (p, q):
                        expected = 0
                    elif p < q:
                        expected = eps[q - 1]
                    else:
                        expected = -eps[p - 1]
                    assert actual == expected, (eps, p, q)


def test_gamma_pairing_reduces_to_shared_right_endpoint():
    for eps in all_epsilons(5):
        x = cb.x_matrix(eps)
        n = 5
        for r in range(2, n + 1):
            for p in range(1, r):
                for q in range(1, r):
                    lhs = linalg.dot(
                        linalg.vec_mat(cb.interval_vector(p, r, n), x),
                        cb.interval_vector(q, r, n),
                    )
                    rhs = linalg.dot(linalg.vec_mat(_gamma(p, n), x), _gamma(q, n))
                    assert lhs == rhs


def test_principal_part_sign_laws():
    for n in range(2, 6):
        for eps in all_epsilons(n):
            for tree in cb.enumerate_trees(eps):
                b = cb.exchange_matrix(tree).b_rows
                for k in range(1, n):
                    ek = tree.edge(k)
                    for j in range(1, n):
                        if j == k:
                            assert b[k - 1][j - 1] == 0
                            continue
                        ej = tree.edge(j)
                        entry = b[k - 1][j - 1]
                        shared = {ek.p, ek.q} & {ej.p, ej.q}
                        if not shared:
                            assert entry == 0
                        elif ek.p == ej.p or ek.q == ej.q:
                            assert entry == ek.slope
                        elif ek.q == ej.p:
                            assert entry == eps[ek.q - 1] * ej.slope * ek.slope
                        else:
                            assert ek.p == ej.q
                            assert entry == -eps[ek.p - 1] * ej.slope * ek.slope
