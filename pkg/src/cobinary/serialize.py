"""JSON interchange formats.

Trees serialize as {"n", "epsilon", "edges": [{"i", "p", "q", "slope"}]}
with edges in label order; c-matrices and cluster matrices as arrays of
columns; exchange matrices as {"B": rows, "C": rows}; exact rational
points as arrays of "numerator/denominator" strings.  Output key order is
fixed so identical values serialize to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .clusters import ClusterMatrix
from .errors import CobinaryError
from .exchange import ExchangeMatrix
from .regions import CMatrix, RegionPoint
from .trees import BinaryTree, MixedCobinaryTree, SignedEdge, make_tree


def tree_to_obj(tree: MixedCobinaryTree) -> dict[str, Any]:
    return {
        "n": tree.n,
        "epsilon": list(tree.epsilon),
        "edges": [
            {"i": e.index, "p": e.p, "q": e.q, "slope": e.slope}
            for e in tree.edges
        ],
    }


def tree_from_obj(obj: dict[str, Any]) -> MixedCobinaryTree:
    try:
        epsilon = obj["epsilon"]
        edges = [
            SignedEdge(int(e["i"]), int(e["p"]), int(e["q"]), int(e["slope"]))
            for e in obj["edges"]
        ]
    except (KeyError, TypeError) as exc:
        raise CobinaryError(f"malformed tree object: {exc}") from exc
    tree = make_tree(epsilon, edges)
    if "n" in obj and int(obj["n"]) != tree.n:
        raise CobinaryError(f"tree object claims n={obj['n']} but has {tree.n} nodes")
    return tree


def cmatrix_to_obj(cmat: CMatrix) -> list[list[int]]:
    return [list(col) for col in cmat.columns]


def cmatrix_from_obj(obj: Sequence[Sequence[int]]) -> CMatrix:
    return CMatrix(tuple(tuple(int(x) for x in col) for col in obj))


def cluster_to_obj(cluster: ClusterMatrix) -> list[list[int]]:
    return [list(col) for col in cluster.columns]


def cluster_from_obj(obj: Sequence[Sequence[int]]) -> ClusterMatrix:
    return ClusterMatrix(tuple(tuple(int(x) for x in col) for col in obj))


def exchange_to_obj(ex: ExchangeMatrix) -> dict[str, list[list[int]]]:
    return {
        "B": [list(row) for row in ex.b_rows],
        "C": [list(row) for row in ex.c_rows],
    }


def exchange_from_obj(obj: dict[str, Any]) -> ExchangeMatrix:
    try:
        return ExchangeMatrix(
            tuple(tuple(int(x) for x in row) for row in obj["B"]),
            tuple(tuple(int(x) for x in row) for row in obj["C"]),
        )
    except (KeyError, TypeError) as exc:
        raise CobinaryError(f"malformed exchange matrix object: {exc}") from exc


def point_to_obj(x: Sequence) -> list[str]:
    fracs = [Fraction(c) for c in x]
    return [f"{c.numerator}/{c.denominator}" for c in fracs]


def point_from_obj(obj: Sequence) -> RegionPoint:
    out = []
    for item in obj:
        if isinstance(item, str) or isinstance(item, int):
            out.append(Fraction(item))
        else:
            # Floats are rejected: coordinates must stay exact.
            raise CobinaryError(f"cannot read exact rational coordinate {item!r}")
    return tuple(out)


def binary_tree_to_obj(bt: BinaryTree | None) -> list | None:
    if bt is None:
        return None
    return [binary_tree_to_obj(bt.left), binary_tree_to_obj(bt.right)]


def dumps(obj: Any) -> str:
    """Canonical compact JSON: fixed key order, no whitespace padding."""
    return json.dumps(obj, separators=(",", ":"))
