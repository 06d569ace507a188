"""Euler matrices, exchange matrices, and Fomin-Zelevinsky matrix mutation.

The sign sequence orients an A_{n-1} quiver on vertices 1..n-1: the arrow
between i and i+1 points left when the (i+1)-th sign is +1 and right when
it is -1 (the first and last signs are ignored).  Its Euler matrix E has
unit diagonal and a -1 in entry (i, j) per arrow i -> j; the bilinear form
a^t E b computes dim Hom - dim Ext on dimension vectors.

A tree's exchange matrix stacks B = C^t X C on top of its c-matrix C,
where X = E - E^t.  Mutating the tree at edge k and mutating the stacked
matrix in direction k by the Fomin-Zelevinsky rules give the same result.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import linalg
from .regions import CMatrix, c_matrix
from .trees import MixedCobinaryTree, as_sign_sequence


@dataclass(frozen=True)
class ExchangeMatrix:
    """Stacked 2m x m integer matrix; the top block must be skew-symmetric."""

    b_rows: linalg.IntMatrix
    c_rows: linalg.IntMatrix

    def __post_init__(self) -> None:
        b = linalg.as_matrix(self.b_rows)
        c = linalg.as_matrix(self.c_rows)
        object.__setattr__(self, "b_rows", b)
        object.__setattr__(self, "c_rows", c)
        if not linalg.is_skew_symmetric(b):
            raise ValueError("principal part must be skew-symmetric")
        if len(c) != len(b) or (b and len(c[0]) != len(b)):
            raise ValueError("bottom block must be square of the same size")

    @property
    def size(self) -> int:
        return len(self.b_rows)

    @property
    def c_columns(self) -> tuple[tuple[int, ...], ...]:
        return linalg.transpose(self.c_rows)


@lru_cache(maxsize=None)
def _euler_cached(eps: tuple[int, ...]) -> linalg.IntMatrix:
    n = len(eps)
    rows = [[int(i == j) for j in range(n - 1)] for i in range(n - 1)]
    for a in range(1, n - 1):
        # Arrow between vertices a and a+1, oriented by the sign at node a+1.
        if eps[a] == 1:
            rows[a][a - 1] = -1
        else:
            rows[a - 1][a] = -1
    return linalg.as_matrix(rows)


def euler_matrix(epsilon: Sequence[int]) -> linalg.IntMatrix:
    """Euler matrix of the quiver oriented by the inner signs of epsilon."""
    eps = as_sign_sequence(epsilon)
    if len(eps) < 2:
        raise ValueError("the quiver needs n >= 2")
    return _euler_cached(eps)


@lru_cache(maxsize=None)
def _euler_inverse_cached(eps: tuple[int, ...]) -> linalg.IntMatrix:
    return linalg.inverse_integer(_euler_cached(eps))


def euler_inverse(epsilon: Sequence[int]) -> linalg.IntMatrix:
    """Exact integer inverse of the Euler matrix (it is unipotent)."""
    eps = as_sign_sequence(epsilon)
    if len(eps) < 2:
        raise ValueError("the quiver needs n >= 2")
    return _euler_inverse_cached(eps)


def x_matrix(epsilon: Sequence[int]) -> linalg.IntMatrix:
    """E - E^t: skew-symmetric with the inner signs on the superdiagonal."""
    e = euler_matrix(epsilon)
    return linalg.mat_sub(e, linalg.transpose(e))


def exchange_matrix(tree: MixedCobinaryTree) -> ExchangeMatrix:
    """[C^t X C ; C] for the tree's c-matrix C.  Empty for a single node."""
    if tree.n == 1:
        return ExchangeMatrix((), ())
    cmat = c_matrix(tree)
    c_rows = cmat.rows
    x = x_matrix(tree.epsilon)
    b = linalg.mat_mul(linalg.mat_mul(linalg.transpose(c_rows), x), c_rows)
    return ExchangeMatrix(b, c_rows)


def fz_mutate(btilde: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Fomin-Zelevinsky mutation of the stacked matrix in direction k.

    Entries in row or column k flip sign; entry (i, j) elsewhere gains
    b_ik * |b_kj| when b_ik and b_kj share a sign, with b_kj read from the
    principal part.  Rows of the bottom block never act as pivot rows.
    """
    m = btilde.size
    if not 1 <= k <= m:
        raise IndexError(f"direction {k} out of range 1..{m}")
    stacked = [list(row) for row in btilde.b_rows + btilde.c_rows]
    pivot_row = btilde.b_rows[k - 1]
    out = []
    for i, row in enumerate(stacked):
        new_row = []
        for j in range(m):
            if i == k - 1 or j == k - 1:
                new_row.append(-row[j])
            elif row[k - 1] * pivot_row[j] > 0:
                new_row.append(row[j] + row[k - 1] * abs(pivot_row[j]))
            else:
                new_row.append(row[j])
        out.append(tuple(new_row))
    return ExchangeMatrix(tuple(out[:m]), tuple(out[m:]))


def exchange_from_c(cmat: CMatrix, epsilon: Sequence[int]) -> ExchangeMatrix:
    """Stack C^t X C over a given c-matrix."""
    c_rows = cmat.rows
    if not c_rows:
        return ExchangeMatrix((), ())
    x = x_matrix(epsilon)
    b = linalg.mat_mul(linalg.mat_mul(linalg.transpose(c_rows), x), c_rows)
    return ExchangeMatrix(b, c_rows)
