"""Mixed cobinary trees: validation, reconstruction, and enumeration.

A mixed cobinary tree has n internal nodes at x-positions 1..n.  Node i is
either a fork-down node (two children, one parent; sign +1) or a fork-up
node (one child, two parents; sign -1), recorded in the sign sequence
epsilon.  The n-1 internal edges carry a stable label 1..n-1, store their
endpoints p < q, and a slope sign: +1 means node p sits below node q.

Two facts drive everything in this module:

* The edge slopes order the nodes by height, and every linear extension of
  that order realizes the tree.  Conversely each permutation of heights is
  realized by exactly one tree, and the reconstruction is effective: peel
  off the highest node and recurse, tracking where the open parent slots
  sit relative to the vertical walls rising from the fork-up nodes.

* For a fixed sign sequence there are Catalan-many trees, generated by a
  recursion on the rightmost node: its removal splits the tree into an
  "upper" and a "lower" part whose vertex sets are forced once their sizes
  are chosen, and reassembly is unique.

Trees compare equal when they have the same sign sequence and the same set
of (p, q, slope) triples; edge labels and embeddings are not part of the
identity.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import ArityViolation, CyclicHeights, NotATree, WallViolation

SignSequence = tuple[int, ...]
Permutation = tuple[int, ...]
EdgeTriple = tuple[int, int, int]  # (p, q, slope)


def as_sign_sequence(entries: Sequence[int]) -> SignSequence:
    eps = tuple(int(x) for x in entries)
    if len(eps) < 1:
        raise ValueError("sign sequence must have length at least 1")
    if any(x not in (1, -1) for x in eps):
        raise ValueError(f"sign sequence entries must be +-1, got {eps}")
    return eps


def as_permutation(values: Sequence[int]) -> Permutation:
    sigma = tuple(int(x) for x in values)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return sigma


@dataclass(frozen=True, order=True)
class SignedEdge:
    """Internal edge with stable label `index`, endpoints p < q, and slope."""

    index: int
    p: int
    q: int
    slope: int

    def __post_init__(self) -> None:
        if not 1 <= self.p < self.q:
            raise ValueError(f"need 1 <= p < q, got ({self.p}, {self.q})")
        if self.slope not in (1, -1):
            raise ValueError(f"slope must be +-1, got {self.slope}")

    @property
    def triple(self) -> EdgeTriple:
        return (self.p, self.q, self.slope)

    @property
    def lower(self) -> int:
        """Endpoint that lies below the other."""
        return self.p if self.slope == 1 else self.q

    @property
    def upper(self) -> int:
        return self.q if self.slope == 1 else self.p


@dataclass(frozen=True)
class MixedCobinaryTree:
    """n signed nodes plus n-1 labelled signed edges, stored in label order.

    Construction performs only cheap structural checks; full validity (the
    wall conditions) is enforced by :func:`make_tree`.
    """

    n: int
    epsilon: SignSequence
    edges: tuple[SignedEdge, ...]

    def __post_init__(self) -> None:
        eps = as_sign_sequence(self.epsilon)
        object.__setattr__(self, "epsilon", eps)
        if self.n != len(eps):
            raise ValueError(f"n={self.n} but sign sequence has length {len(eps)}")
        edges = tuple(sorted(self.edges, key=lambda e: e.index))
        object.__setattr__(self, "edges", edges)
        if sorted(e.index for e in edges) != list(range(1, self.n)):
            raise ValueError("edge labels must be exactly 1..n-1")
        if any(e.q > self.n for e in edges):
            raise ValueError("edge endpoint out of range")
        pairs = {(e.p, e.q) for e in edges}
        if len(pairs) != len(edges):
            raise NotATree("duplicate edge between the same pair of nodes")

    def edge(self, k: int) -> SignedEdge:
        if not 1 <= k <= self.n - 1:
            raise IndexError(f"edge label {k} out of range 1..{self.n - 1}")
        return self.edges[k - 1]

    @property
    def triples(self) -> tuple[EdgeTriple, ...]:
        """Edge triples sorted by (p, q); the canonical identity of the tree."""
        return tuple(sorted(e.triple for e in self.edges))

    @property
    def canonical_key(self) -> tuple:
        return (self.n, self.epsilon, self.triples)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedCobinaryTree):
            return NotImplemented
        return self.canonical_key == other.canonical_key

    def __hash__(self) -> int:
        return hash(self.canonical_key)

    def __lt__(self, other: "MixedCobinaryTree") -> bool:
        return self.canonical_key < other.canonical_key

    def relabelled(self, triples: Sequence[EdgeTriple]) -> "MixedCobinaryTree":
        """Same tree with edge i carrying the i-th triple of `triples`."""
        if sorted(triples) != list(self.triples):
            raise ValueError("relabelling must preserve the edge set")
        return MixedCobinaryTree(
            self.n,
            self.epsilon,
            tuple(SignedEdge(i + 1, p, q, s) for i, (p, q, s) in enumerate(triples)),
        )


@dataclass(frozen=True)
class BinaryTree:
    """Internal node of an ordinary full binary tree; a leaf is None."""

    left: "BinaryTree | None" = None
    right: "BinaryTree | None" = None

    def internal_count(self) -> int:
        count = 1
        for child in (self.left, self.right):
            if child is not None:
                count += child.internal_count()
        return count


def catalan(n: int) -> int:
    """The n-th Catalan number, exactly.  C_0 = 1 by convention.

    Python integers are arbitrary precision, so the result can never wrap;
    there is no overflow to detect.
    """
    if n < 0:
        raise ValueError(f"catalan number undefined for n={n}")
    return comb(2 * n, n) // (n + 1)


def _tree_from_triples(
    epsilon: Sequence[int], triples: Iterable[EdgeTriple]
) -> MixedCobinaryTree:
    """Build a tree assigning canonical labels: edges sorted by (p, q)."""
    eps = as_sign_sequence(epsilon)
    ordered = sorted(triples)
    edges = tuple(SignedEdge(i + 1, p, q, s) for i, (p, q, s) in enumerate(ordered))
    return MixedCobinaryTree(len(eps), eps, edges)


# ---------------------------------------------------------------------------
# Reconstruction from a height order
# ---------------------------------------------------------------------------


def tree_from_permutation(
    sigma: Sequence[int], epsilon: Sequence[int]
) -> MixedCobinaryTree:
    """The unique tree realized by placing node i at height sigma(i).

    Recurses on the highest node k.  If k is a fork-down node the remaining
    nodes split at k into left and right subtrees; k's children attach to
    the rightmost open parent slot on the left and the leftmost on the
    right.  If k is a fork-up node, the reduced tree has exactly one open
    parent slot between the walls bracketing position k, and k's child edge
    attaches there.  The recursion threads, per subtree, the left-to-right
    list of open parent slots (by owning node) and the wall positions.
    """
    eps = as_sign_sequence(epsilon)
    perm = as_permutation(sigma)
    if len(perm) != len(eps):
        raise ValueError("permutation and sign sequence must have equal length")
    height = {i + 1: perm[i] for i in range(len(perm))}
    triples: list[EdgeTriple] = []

    def build(nodes: list[int]) -> tuple[list[int], list[int]]:
        """Returns (parent-slot owners left to right, wall positions)."""
        if not nodes:
            return [], []
        k = max(nodes, key=height.__getitem__)
        if eps[k - 1] == 1:
            left = [v for v in nodes if v < k]
            right = [v for v in nodes if v > k]
            slots_l, walls_l = build(left)
            slots_r, walls_r = build(right)
            if left:
                triples.append((slots_l.pop(), k, 1))
            if right:
                triples.append((k, slots_r.pop(0), -1))
            return slots_l + [k] + slots_r, walls_l + walls_r
        rest = [v for v in nodes if v != k]
        slots, walls = build(rest)
        if rest:
            at = bisect_left(walls, k)
            owner = slots[at]
            triples.append((owner, k, 1) if owner < k else (k, owner, -1))
            slots[at : at + 1] = [k, k]
        else:
            slots = [k, k]
        insort(walls, k)
        return slots, walls

    build(list(range(1, len(perm) + 1)))
    return _tree_from_triples(eps, triples)


def _slope_order_successors(tree: MixedCobinaryTree) -> dict[int, list[int]]:
    below_to_above: dict[int, list[int]] = {v: [] for v in range(1, tree.n + 1)}
    for e in tree.edges:
        below_to_above[e.lower].append(e.upper)
    return below_to_above


def linear_extension(tree: MixedCobinaryTree) -> Permutation:
    """One permutation realizing the tree (smallest-node-first extension)."""
    succ = _slope_order_successors(tree)
    indegree = {v: 0 for v in range(1, tree.n + 1)}
    for ups in succ.values():
        for u in ups:
            indegree[u] += 1
    ready = sorted(v for v, d in indegree.items() if d == 0)
    sigma = [0] * tree.n
    rank = 0
    while ready:
        v = ready.pop(0)
        rank += 1
        sigma[v - 1] = rank
        for u in succ[v]:
            indegree[u] -= 1
            if indegree[u] == 0:
                insort(ready, u)
    if rank != tree.n:
        raise CyclicHeights("edge slopes admit no linear extension")
    return tuple(sigma)


def permutations_of(tree: MixedCobinaryTree) -> set[Permutation]:
    """All height permutations realizing the tree: the linear extensions of
    the slope order, with sigma(p) < sigma(q) on every upward edge."""
    succ = _slope_order_successors(tree)
    indegree = {v: 0 for v in range(1, tree.n + 1)}
    for ups in succ.values():
        for u in ups:
            indegree[u] += 1
    sigma = [0] * tree.n
    found: set[Permutation] = set()

    def extend(rank: int, ready: list[int]) -> None:
        if rank > tree.n:
            found.add(tuple(sigma))
            return
        for i, v in enumerate(ready):
            sigma[v - 1] = rank
            opened = []
            for u in succ[v]:
                indegree[u] -= 1
                if indegree[u] == 0:
                    opened.append(u)
            extend(rank + 1, ready[:i] + ready[i + 1 :] + opened)
            for u in succ[v]:
                indegree[u] += 1

    extend(1, [v for v, d in indegree.items() if d == 0])
    return found


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _check_spanning_tree(n: int, edges: Sequence[SignedEdge]) -> None:
    if len(edges) != n - 1:
        raise NotATree(f"need {n - 1} edges for {n} nodes, got {len(edges)}")
    parent = list(range(n + 1))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edges:
        a, b = find(e.p), find(e.q)
        if a == b:
            raise NotATree(f"edge ({e.p}, {e.q}) closes a cycle")
        parent[a] = b


def _check_arity(tree: MixedCobinaryTree) -> None:
    # Slot budget per node: a fork-down node may hold one parent edge and
    # one child per side; a fork-up node one child edge and one parent per
    # side.  Two occupants of a side slot could not be separated by the
    # node's vertical wall.
    for v in range(1, tree.n + 1):
        up_left = up_right = down_left = down_right = 0
        for e in tree.edges:
            if v not in (e.p, e.q):
                continue
            other = e.q if v == e.p else e.p
            if e.upper == other:
                if other < v:
                    up_left += 1
                else:
                    up_right += 1
            else:
                if other < v:
                    down_left += 1
                else:
                    down_right += 1
        if tree.epsilon[v - 1] == 1:
            bounds = {
                "parent": up_left + up_right,
                "left child": down_left,
                "right child": down_right,
            }
        else:
            bounds = {
                "child": down_left + down_right,
                "left parent": up_left,
                "right parent": up_right,
            }
        for slot, used in bounds.items():
            if used > 1:
                raise ArityViolation(
                    f"node {v} (sign {tree.epsilon[v - 1]:+d}) has {used} "
                    f"edges in its {slot} slot"
                )


def make_tree(
    epsilon: Sequence[int],
    edges: Iterable[SignedEdge | EdgeTriple],
) -> MixedCobinaryTree:
    """Validate and build a tree from a sign sequence and signed edges.

    Edges may be SignedEdge values (their labels are kept) or bare
    (p, q, slope) triples (labels are assigned in (p, q) order).  Validity
    is checked operationally: the edge set must reproduce itself when the
    tree is rebuilt from any one linear extension of its slope order.
    """
    eps = as_sign_sequence(epsilon)
    edge_list = list(edges)
    if edge_list and not isinstance(edge_list[0], SignedEdge):
        ordered = sorted(tuple(e) for e in edge_list)  # type: ignore[arg-type]
        edge_list = [SignedEdge(i + 1, p, q, s) for i, (p, q, s) in enumerate(ordered)]
    _check_spanning_tree(len(eps), edge_list)  # type: ignore[arg-type]
    tree = MixedCobinaryTree(len(eps), eps, tuple(edge_list))  # type: ignore[arg-type]
    _check_arity(tree)
    sigma = linear_extension(tree)
    rebuilt = tree_from_permutation(sigma, eps)
    if rebuilt.triples != tree.triples:
        raise WallViolation(
            "edge set admits no planar embedding: height order "
            f"{sigma} reconstructs {rebuilt.triples} instead"
        )
    return tree


def initial_tree(epsilon: Sequence[int]) -> MixedCobinaryTree:
    """The staircase tree realized only by the identity height order."""
    eps = as_sign_sequence(epsilon)
    return _tree_from_triples(eps, [(i, i + 1, 1) for i in range(1, len(eps))])


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

# State of a partially built tree: edge triples, plus the owners of the open
# parent slots (left to right) and of the open child slots (left to right).
_EnumState = tuple[tuple[EdgeTriple, ...], tuple[int, ...], tuple[int, ...]]


def _enumerate_states(
    nodes: tuple[int, ...],
    eps: SignSequence,
    memo: dict[tuple[int, ...], tuple[_EnumState, ...]],
) -> tuple[_EnumState, ...]:
    if nodes in memo:
        return memo[nodes]
    if not nodes:
        memo[nodes] = (((), (), ()),)
        return memo[nodes]

    m = nodes[-1]
    rest = nodes[:-1]
    forks_down = [v for v in rest if eps[v - 1] == 1]
    forks_up = [v for v in rest if eps[v - 1] == -1]
    # Order in which the remaining nodes are forced into the part reached
    # through node m's rightward slot, as its size grows.
    if eps[m - 1] == 1:
        chain = list(reversed(forks_up)) + forks_down
    else:
        chain = list(reversed(forks_down)) + forks_up

    out: list[_EnumState] = []
    for i in range(len(rest) + 1):
        upper_set = frozenset(chain[:i])
        upper = tuple(sorted(upper_set))
        lower = tuple(v for v in rest if v not in upper_set)
        for e_u, up_u, down_u in _enumerate_states(upper, eps, memo):
            for e_d, up_d, down_d in _enumerate_states(lower, eps, memo):
                edges = e_u + e_d
                if eps[m - 1] == 1:
                    # m is a fork-down node: its parent hangs from the
                    # rightmost open child slot of the upper part, its left
                    # child takes the rightmost open parent slot of the
                    # lower part; its right child is always a leaf.
                    if upper:
                        edges += ((down_u[-1], m, -1),)
                    if lower:
                        edges += ((up_d[-1], m, 1),)
                    up = (up_d[:-1] if lower else ()) + (up_u if upper else (m,))
                    down = (down_u[:-1] if upper else ()) + (
                        down_d + (m,) if lower else (m, m)
                    )
                else:
                    if upper:
                        edges += ((up_u[-1], m, 1),)
                    if lower:
                        edges += ((down_d[-1], m, -1),)
                    down = (down_d[:-1] if lower else ()) + (
                        down_u if upper else (m,)
                    )
                    up = (up_u[:-1] if upper else ()) + (
                        up_d + (m,) if lower else (m, m)
                    )
                out.append((edges, up, down))
    memo[nodes] = tuple(out)
    return memo[nodes]


def enumerate_trees(epsilon: Sequence[int]) -> list[MixedCobinaryTree]:
    """All trees with the given sign sequence, in canonical order.

    The count is always the Catalan number of the length of `epsilon`.
    """
    eps = as_sign_sequence(epsilon)
    memo: dict[tuple[int, ...], tuple[_EnumState, ...]] = {}
    states = _enumerate_states(tuple(range(1, len(eps) + 1)), eps, memo)
    trees = [_tree_from_triples(eps, edges) for edges, _, _ in states]
    trees.sort()
    return trees


def sign_sequences(n: int) -> Iterator[SignSequence]:
    """All 2^n sign sequences of length n, in lexicographic (-1 first) order."""
    if n == 0:
        yield ()
        return
    for rest in sign_sequences(n - 1):
        yield (-1,) + rest
        yield (1,) + rest


# ---------------------------------------------------------------------------
# Symmetries
# ---------------------------------------------------------------------------


def flip_horizontal(tree: MixedCobinaryTree) -> MixedCobinaryTree:
    """Mirror through a horizontal axis: all signs and slopes negate."""
    return MixedCobinaryTree(
        tree.n,
        tuple(-s for s in tree.epsilon),
        tuple(SignedEdge(e.index, e.p, e.q, -e.slope) for e in tree.edges),
    )


def reverse_tree(tree: MixedCobinaryTree) -> MixedCobinaryTree:
    """Mirror through a vertical axis: node i goes to n+1-i, slopes negate.

    Edge labels travel with their edges.
    """
    n = tree.n
    return MixedCobinaryTree(
        n,
        tuple(reversed(tree.epsilon)),
        tuple(
            SignedEdge(e.index, n + 1 - e.q, n + 1 - e.p, -e.slope)
            for e in tree.edges
        ),
    )


# ---------------------------------------------------------------------------
# The gravity bijection onto ordinary binary trees
# ---------------------------------------------------------------------------

_DOWN_SLOTS = ("parent", "left_child", "right_child")  # counterclockwise
_UP_SLOTS = ("left_parent", "child", "right_parent")  # counterclockwise


def _slot_of(tree: MixedCobinaryTree, v: int, other: int, other_above: bool) -> str:
    if tree.epsilon[v - 1] == 1:
        if other_above:
            return "parent"
        return "left_child" if other < v else "right_child"
    if other_above:
        return "left_parent" if other < v else "right_parent"
    return "child"


def _slot_map(tree: MixedCobinaryTree) -> dict[int, dict[str, int | None]]:
    slots: dict[int, dict[str, int | None]] = {}
    for v in range(1, tree.n + 1):
        names = _DOWN_SLOTS if tree.epsilon[v - 1] == 1 else _UP_SLOTS
        slots[v] = {name: None for name in names}
    for e in tree.edges:
        for v, other in ((e.p, e.q), (e.q, e.p)):
            slot = _slot_of(tree, v, other, other_above=(e.upper == other))
            if slots[v][slot] is not None:
                raise ArityViolation(f"node {v} has two edges in its {slot} slot")
            slots[v][slot] = other
    return slots


def gravity_map(tree: MixedCobinaryTree) -> BinaryTree:
    """Re-hang the tree from the rightmost leaf of the rightmost node.

    Every edge is re-oriented away from that leaf while the counterclockwise
    order of the three slots around each node is preserved, which turns the
    tree into an ordinary full binary tree.  For a fixed sign sequence this
    map is a bijection onto binary trees with n internal nodes.
    """
    slots = _slot_map(tree)

    def hang(v: int, entered: str) -> BinaryTree:
        names = _DOWN_SLOTS if tree.epsilon[v - 1] == 1 else _UP_SLOTS
        at = names.index(entered)
        children = []
        for step in (1, 2):
            slot = names[(at + step) % 3]
            occupant = slots[v][slot]
            if occupant is None:
                children.append(None)
            else:
                enter = _slot_of(
                    tree, occupant, v, other_above=_is_above(tree, occupant, v)
                )
                children.append(hang(occupant, enter))
        return BinaryTree(children[0], children[1])

    root = tree.n
    tack = "right_child" if tree.epsilon[root - 1] == 1 else "right_parent"
    return hang(root, tack)


def _is_above(tree: MixedCobinaryTree, v: int, other: int) -> bool:
    """True when node `other` lies above node `v` (they must be adjacent)."""
    for e in tree.edges:
        if {e.p, e.q} == {v, other}:
            return e.upper == other
    raise ValueError(f"nodes {v} and {other} are not adjacent")


def binary_trees(n: int) -> list[BinaryTree | None]:
    """All full binary trees with n internal nodes (None is a single leaf)."""
    if n == 0:
        return [None]
    out: list[BinaryTree | None] = []
    for i in range(n):
        for left in binary_trees(i):
            for right in binary_trees(n - 1 - i):
                out.append(BinaryTree(left, right))
    return out

