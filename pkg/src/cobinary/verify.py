"""Self-verification suites for one sign sequence.

Each suite re-checks one of the structural facts the library rests on:
Catalan counts, the partition of the symmetric group, agreement of tree
mutation with matrix mutation, cluster counts, the tree-cluster bijection,
the tiling of space by tree regions, wall stability, and the sign laws of
the principal exchange-matrix entries.  Everything is exact; sampling is
used only where the exhaustive sweep would not fit the requested bound,
and is driven by an explicit seed so reports are byte-reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from . import linalg
from .clusters import enumerate_clusters
from .correspondence import (
    tree_to_cluster,
    cluster_to_tree,
    verify_pairing_identity,
    wall_stability_point,
)
from .exchange import exchange_matrix, fz_mutate, x_matrix
from .regions import c_matrix, locate_tree, mutate, region_contains
from .roots import interval_vector
from .trees import (
    MixedCobinaryTree,
    as_sign_sequence,
    catalan,
    enumerate_trees,
    initial_tree,
    permutations_of,
    tree_from_permutation,
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"suite {self.name}: {status} ({self.detail})"


def _rng(seed: int, suite: str) -> random.Random:
    return random.Random(f"{seed}:{suite}")


def _random_permutation(rng: random.Random, n: int) -> tuple[int, ...]:
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return tuple(values)


def suite_trees(eps, n_max, samples, seed) -> SuiteResult:
    trees = enumerate_trees(eps)
    expected = catalan(len(eps))
    ok = len(trees) == expected and len(set(trees)) == expected
    return SuiteResult("trees", ok, f"trees={len(trees)} expected={expected}")


def suite_perm_partition(eps, n_max, samples, seed) -> SuiteResult:
    n = len(eps)
    if n <= max(n_max, 1) and factorial(n) <= 50000:
        trees = enumerate_trees(eps)
        total = 0
        ok = True
        for tree in trees:
            fans = permutations_of(tree)
            total += len(fans)
            ok = ok and all(
                tree_from_permutation(sigma, eps) == tree for sigma in fans
            )
        ok = ok and total == factorial(n)
        return SuiteResult(
            "perm-partition", ok, f"mode=exhaustive permutations={total}"
        )
    rng = _rng(seed, "perm-partition")
    ok = True
    for _ in range(samples):
        sigma = _random_permutation(rng, n)
        tree = tree_from_permutation(sigma, eps)
        ok = ok and sigma in permutations_of(tree)
    return SuiteResult("perm-partition", ok, f"mode=sampled samples={samples}")


def _theorem2_holds(tree: MixedCobinaryTree, k: int) -> bool:
    left = exchange_matrix(mutate(tree, k))
    right = fz_mutate(exchange_matrix(tree), k)
    return left == right


def suite_theorem2(eps, n_max, samples, seed) -> SuiteResult:
    n = len(eps)
    if n == 1:
        return SuiteResult("theorem2", True, "checked=0 (no edges)")
    if n <= n_max:
        checked = 0
        ok = True
        for tree in enumerate_trees(eps):
            for k in range(1, n):
                ok = ok and _theorem2_holds(tree, k)
                checked += 1
        return SuiteResult("theorem2", ok, f"mode=exhaustive checked={checked}")
    rng = _rng(seed, "theorem2")
    ok = True
    for _ in range(samples):
        tree = tree_from_permutation(_random_permutation(rng, n), eps)
        k = rng.randint(1, n - 1)
        ok = ok and _theorem2_holds(tree, k)
    return SuiteResult("theorem2", ok, f"mode=sampled checked={samples}")


def suite_clusters(eps, n_max, samples, seed) -> SuiteResult:
    clusters = enumerate_clusters(eps)
    expected = catalan(len(eps))
    keys = {c.key() for c in clusters}
    ok = len(clusters) == expected and len(keys) == expected
    return SuiteResult(
        "clusters", ok, f"clusters={len(clusters)} expected={expected}"
    )


def suite_bijection(eps, n_max, samples, seed) -> SuiteResult:
    trees = set(enumerate_trees(eps))
    clusters = enumerate_clusters(eps)
    ok = len(trees) == len(clusters)
    mapped = set()
    for cluster in clusters:
        tree = cluster_to_tree(cluster, eps)
        back = tree_to_cluster(tree)
        ok = ok and back.key() == cluster.key()
        ok = ok and verify_pairing_identity(tree, back)
        mapped.add(tree)
    ok = ok and mapped == trees
    return SuiteResult("bijection", ok, f"pairs={len(clusters)}")


def suite_region_partition(eps, n_max, samples, seed) -> SuiteResult:
    n = len(eps)
    trees = enumerate_trees(eps)
    rng = _rng(seed, "region-partition")
    ok = True
    tested = 0
    while tested < samples:
        x = tuple(
            Fraction(rng.randint(-(10**6), 10**6), rng.randint(1, 1000))
            for _ in range(n)
        )
        if len(set(x)) < n:
            continue
        tested += 1
        inside = [t for t in trees if region_contains(t, x, strict=True)]
        ok = ok and len(inside) == 1 and locate_tree(x, eps) == inside[0]
    return SuiteResult(
        "region-partition", ok, f"samples={samples} seed={seed}"
    )


def suite_wall_stability(eps, n_max, samples, seed) -> SuiteResult:
    n = len(eps)
    if n == 1:
        return SuiteResult("wall-stability", True, "checked=0 (no walls)")
    checked = 0
    ok = True
    if n <= n_max:
        pool = [(t, k) for t in enumerate_trees(eps) for k in range(1, n)]
    else:
        rng = _rng(seed, "wall-stability")
        pool = [
            (tree_from_permutation(_random_permutation(rng, n), eps),
             rng.randint(1, n - 1))
            for _ in range(samples)
        ]
    for tree, k in pool:
        _, stable = wall_stability_point(tree, k)
        ok = ok and stable
        checked += 1
    return SuiteResult("wall-stability", ok, f"checked={checked}")


def _gamma_table_holds(eps) -> bool:
    n = len(eps)
    if n < 2:
        return True
    x = x_matrix(eps)
    for p in range(1, n + 1):
        gp = interval_vector(p, n, n)
        for q in range(1, n + 1):
            gq = interval_vector(q, n, n)
            actual = linalg.dot(linalg.vec_mat(gp, x), gq)
            if p == q or n in (p, q):
                expected = 0
            elif p < q:
                expected = eps[q - 1]
            else:
                expected = -eps[p - 1]
            if actual != expected:
                return False
    return True


def _sign_cases_hold(tree: MixedCobinaryTree) -> bool:
    """Entry (k, j) of the principal part obeys the shared-endpoint laws."""
    if tree.n == 1:
        return True
    b = exchange_matrix(tree).b_rows
    for k in range(1, tree.n):
        ek = tree.edge(k)
        for j in range(1, tree.n):
            if j == k:
                continue
            ej = tree.edge(j)
            entry = b[k - 1][j - 1]
            shared = {ek.p, ek.q} & {ej.p, ej.q}
            if not shared:
                if entry != 0:
                    return False
                continue
            sk, sj = ek.slope, ej.slope
            if ek.p == ej.p or ek.q == ej.q:
                expected_sign = sk
            elif ek.q == ej.p:
                expected_sign = tree.epsilon[ek.q - 1] * sj * sk
            else:  # ek.p == ej.q
                expected_sign = -tree.epsilon[ek.p - 1] * sj * sk
            if entry != expected_sign or abs(entry) != 1:
                return False
    return True


def suite_properties(eps, n_max, samples, seed) -> SuiteResult:
    n = len(eps)
    parts = []
    trees = enumerate_trees(eps) if n <= n_max else None
    if trees is None:
        rng = _rng(seed, "properties")
        trees = [
            tree_from_permutation(_random_permutation(rng, n), eps)
            for _ in range(min(samples, 200))
        ]
    involution = all(
        mutate(mutate(t, k), k) == t for t in trees for k in range(1, n)
    )
    parts.append(("involution", involution))
    parts.append(("det", all(c_matrix(t).det() in (1, -1) for t in trees)))
    parts.append(("gamma-table", _gamma_table_holds(eps)))
    parts.append(("sign-cases", all(_sign_cases_hold(t) for t in trees)))
    if n <= n_max:
        start = initial_tree(eps)
        seen = {start}
        frontier = [start]
        while frontier:
            tree = frontier.pop()
            for k in range(1, n):
                nxt = mutate(tree, k)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        parts.append(("connectivity", len(seen) == catalan(n)))
    detail = " ".join(f"{name}={'ok' if good else 'FAIL'}" for name, good in parts)
    return SuiteResult("properties", all(good for _, good in parts), detail)


_SUITES: tuple[Callable, ...] = (
    suite_trees,
    suite_perm_partition,
    suite_theorem2,
    suite_clusters,
    suite_bijection,
    suite_region_partition,
    suite_wall_stability,
    suite_properties,
)


def run_all(
    epsilon: Sequence[int],
    n_max: int = 6,
    samples: int = 1000,
    seed: int = 0,
) -> tuple[list[SuiteResult], str]:
    """Run every suite; returns the results and a one-line summary."""
    eps = as_sign_sequence(epsilon)
    results = [suite(eps, n_max, samples, seed) for suite in _SUITES]
    by_name = {r.name: r for r in results}
    trees_count = by_name["trees"].detail.split()[0].split("=")[1]
    clusters_count = by_name["clusters"].detail.split()[0].split("=")[1]
    summary = (
        f"clusters={clusters_count} trees={trees_count} "
        f"bijection={'ok' if by_name['bijection'].passed else 'FAIL'} "
        f"theorem2={'ok' if by_name['theorem2'].passed else 'FAIL'}"
    )
    return results, summary
