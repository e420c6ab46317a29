"""Canonical forms and isomorphism testing for free trees.

The code of a tree is the AHU parenthesis string of the tree rooted at
its center; when the center is an edge, both rootings are encoded and
the lexicographically smaller string wins.  Equal codes characterize
isomorphic trees, and the string total order doubles as the on-disk
identity of an isomorphism class in reports.
"""

from __future__ import annotations

import sys
from typing import Sequence

from .trees import Tree

CanonicalCode = str


def tree_centers(adjacency: Sequence[Sequence[int]]) -> list[int]:
    """The one or two middle vertices of every longest path (leaf stripping)."""
    n = len(adjacency)
    if n <= 2:
        return list(range(n))
    deg = [len(nbrs) for nbrs in adjacency]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in adjacency[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def rooted_code(adjacency: Sequence[Sequence[int]], root: int) -> CanonicalCode:
    """AHU code of the rooted tree: '(' + sorted child codes + ')'."""
    n = len(adjacency)
    if n > 500:
        # recursion depth is bounded by tree height
        sys.setrecursionlimit(max(sys.getrecursionlimit(), n + 100))

    def code(u: int, parent: int) -> str:
        subs = [code(v, u) for v in adjacency[u] if v != parent]
        if not subs:
            return "()"
        subs.sort()
        return "(" + "".join(subs) + ")"

    return code(root, -1)


def canonical_code_of_adjacency(adjacency: Sequence[Sequence[int]]) -> CanonicalCode:
    """Label-invariant code of a free tree given as raw adjacency lists."""
    centers = tree_centers(adjacency)
    if len(centers) == 1:
        return rooted_code(adjacency, centers[0])
    a = rooted_code(adjacency, centers[0])
    b = rooted_code(adjacency, centers[1])
    return a if a <= b else b


def canonical_code(t: Tree) -> CanonicalCode:
    """Label-invariant code; equal codes iff isomorphic trees."""
    return canonical_code_of_adjacency(t.adjacency)


def isomorphic(a: Tree, b: Tree) -> bool:
    if a.order != b.order:
        return False
    return canonical_code(a) == canonical_code(b)
