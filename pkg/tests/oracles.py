"""Independent oracles used only by the test suite.

The labeled-tree universe comes from Prufer sequences, decoded by the
linear pointer method (validated against the obvious smallest-leaf
decoder for small n).  Isomorphism-class sets are obtained by
canonicalizing every decoded tree and deduplicating; brute-force
bijection search provides the ground truth for the canonicalizer itself.
The enumerator is never consulted here.
"""

from __future__ import annotations

import itertools
import random

from grmtrees.canonical import canonical_code_of_adjacency
from grmtrees.trees import Tree, build_tree


def prufer_decode(seq, n: int) -> list[list[int]]:
    """Adjacency lists of the labeled tree with the given Prufer sequence."""
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    adj: list[list[int]] = [[] for _ in range(n)]
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        adj[leaf].append(x)
        adj[x].append(leaf)
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    adj[leaf].append(n - 1)
    adj[n - 1].append(leaf)
    return adj


def prufer_decode_naive(seq, n: int) -> list[list[int]]:
    """Textbook decoder: repeatedly join the smallest remaining leaf."""
    remaining = list(seq)
    deg = [1] * n
    for x in remaining:
        deg[x] += 1
    alive = set(range(n))
    adj: list[list[int]] = [[] for _ in range(n)]
    for x in remaining:
        leaf = min(v for v in alive if deg[v] == 1)
        adj[leaf].append(x)
        adj[x].append(leaf)
        alive.remove(leaf)
        deg[x] -= 1
    u, v = sorted(alive)
    adj[u].append(v)
    adj[v].append(u)
    return adj


def prufer_tree(seq, n: int) -> Tree:
    adj = prufer_decode(seq, n)
    return build_tree([(u, v) for u in range(n) for v in adj[u] if u < v])


def random_prufer_tree(rng: random.Random, n: int) -> Tree:
    if n == 1:
        return build_tree([], order=1)
    if n == 2:
        return build_tree([(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return prufer_tree(seq, n)


def prufer_iso_codes(n: int) -> set[str]:
    """Canonical codes of every unlabeled tree of order n, derived from the
    full labeled universe (n^(n-2) sequences).  Exponential; for oracle use."""
    if n == 1:
        return {canonical_code_of_adjacency([[]])}
    if n == 2:
        return {canonical_code_of_adjacency([[1], [0]])}
    codes: set[str] = set()
    decode = prufer_decode
    canon = canonical_code_of_adjacency
    for seq in itertools.product(range(n), repeat=n - 2):
        codes.add(canon(decode(seq, n)))
    return codes


def brute_force_isomorphic(a: Tree, b: Tree) -> bool:
    """Decide isomorphism by scanning all vertex bijections."""
    if a.order != b.order:
        return False
    n = a.order
    if n == 1:
        return True
    edges_a = list(a.edges())
    edges_b = set(b.edges())
    if len(edges_a) != len(edges_b):
        return False
    for perm in itertools.permutations(range(n)):
        for u, v in edges_a:
            x, y = perm[u], perm[v]
            if (x, y) not in edges_b and (y, x) not in edges_b:
                break
        else:
            return True
    return False
