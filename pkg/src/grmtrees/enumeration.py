"""Exhaustive generation of unlabeled free trees with a degree cap.

Each isomorphism class is produced exactly once by orderly generation of
canonical rooted forms: a free tree is rooted at its centroid (or split
across the central edge when the centroid is a pair), and a canonical
rooted tree is a root plus a multiset of canonical child subtrees kept
in non-increasing code order.  Degree caps prune child multisets while
they are being composed rather than filtering finished trees, so the
bounded-degree spaces that the verification suites sweep never pay for
the full tree universe.

The emitted stream is sorted by canonical code; that order, and the
preorder labeling of each emitted tree, are part of the public contract
(reports and golden files rely on them).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .canonical import canonical_code
from .errors import DomainViolation, LimitExceeded
from .trees import Tree, build_tree

DEFAULT_ORDER_GUARD = 26

# rooted subtree codes are nested tuples: () is a single vertex, and a
# code's entries are its child codes in non-increasing tuple order
Code = tuple


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate: order, optional degree cap, exact-degree flag."""

    n: int
    max_degree: int | None = None
    exact_degree: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise DomainViolation("order must be >= 1")
        cap = self.max_degree
        if cap is not None and cap < 1:
            raise DomainViolation("degree cap must be >= 1")
        if self.n >= 3 and cap is not None and cap < 2:
            raise DomainViolation("trees on >= 3 vertices need degree cap >= 2")
        if self.exact_degree and cap is None:
            raise DomainViolation("exact_degree needs max_degree")


@lru_cache(maxsize=None)
def _subtree_pool(size: int, child_cap: int) -> tuple[tuple[Code, int], ...]:
    """All canonical rooted trees usable as child subtrees, paired with the
    max degree they contribute once attached (root counts its parent edge).

    Every vertex of a pooled subtree, including its root, has at most
    ``child_cap`` children; sorted by code descending.
    """
    if size == 1:
        return (((), 1),)
    out: list[tuple[Code, int]] = []
    for children, inner in _child_multisets(size - 1, child_cap, child_cap):
        out.append((children, max(inner, len(children) + 1)))
    out.sort(key=lambda item: item[0], reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def _pool_upto(max_size: int, child_cap: int) -> tuple[tuple[Code, int, int], ...]:
    """(code, size, attached max degree) for all pool subtrees of size <= max_size,
    sorted by code descending so multiset composition can walk it monotonically."""
    entries: list[tuple[Code, int, int]] = []
    for size in range(1, max_size + 1):
        for code, attached_max in _subtree_pool(size, child_cap):
            entries.append((code, size, attached_max))
    entries.sort(key=lambda item: item[0], reverse=True)
    return tuple(entries)


@lru_cache(maxsize=None)
def _pool_suffix_max_size(max_size: int, child_cap: int) -> tuple[int, ...]:
    """suffix_max[i] = largest subtree size among pool entries i..end.

    Code order does not sort by size, so pruning needs this table."""
    pool = _pool_upto(max_size, child_cap)
    suffix = [0] * (len(pool) + 1)
    for i in range(len(pool) - 1, -1, -1):
        suffix[i] = max(pool[i][1], suffix[i + 1])
    return tuple(suffix)


def _child_multisets(total: int, slots: int, child_cap: int, max_child_size: int | None = None):
    """Yield (children, inner_max_degree) for every multiset of pool subtrees
    with sizes summing to ``total``, at most ``slots`` members, each of size
    at most ``max_child_size``; children come out in non-increasing code order.
    """
    if max_child_size is None:
        max_child_size = total
    bound = min(total, max_child_size)
    pool = _pool_upto(bound, child_cap)
    suffix_max = _pool_suffix_max_size(bound, child_cap)

    def rec(start: int, remaining: int, slots_left: int):
        if remaining == 0:
            yield (), 1
            return
        if slots_left == 0 or suffix_max[start] * slots_left < remaining:
            return
        for idx in range(start, len(pool)):
            code, size, attached_max = pool[idx]
            if size > remaining:
                continue
            if suffix_max[idx] * slots_left < remaining:
                break
            for rest, rest_max in rec(idx, remaining - size, slots_left - 1):
                yield (code,) + rest, max(attached_max, rest_max)

    yield from rec(0, total, slots)


def _free_tree_codes(n: int, degree_cap: int) -> Iterator[tuple[Code, int]]:
    """(canonical rooted structure, max degree) per free-tree class of order n.

    Unicentroidal trees are rooted at the centroid: every child subtree
    has at most floor((n-1)/2) vertices.  Bicentroidal trees (even n)
    are an unordered pair of half-trees joined at their roots, encoded
    as a 2-tuple wrapper with the larger code first.
    """
    if n == 1:
        yield (), 0
        return
    if n == 2:
        yield ("edge", (), ()), 1
        return
    half = (n - 1) // 2
    root_slots = min(degree_cap, n - 1)
    for children, inner in _child_multisets(n - 1, root_slots, degree_cap - 1, half):
        yield children, max(inner, len(children))
    if n % 2 == 0:
        halves = _subtree_pool(n // 2, degree_cap - 1)
        for i in range(len(halves)):
            code_a, max_a = halves[i]
            deg_a = len(code_a) + 1
            for j in range(i, len(halves)):
                code_b, max_b = halves[j]
                deg_b = len(code_b) + 1
                yield ("edge", code_a, code_b), max(max_a, max_b, deg_a, deg_b)


def _tree_from_code(code: Code) -> Tree:
    """Materialize a generated structure with deterministic preorder ids."""
    edges: list[tuple[int, int]] = []
    counter = [0]

    def emit(children: Code, parent: int | None):
        me = counter[0]
        counter[0] += 1
        if parent is not None:
            edges.append((parent, me))
        for child in children:
            emit(child, me)

    if code == ():
        return build_tree([], order=1)
    if code and code[0] == "edge":
        emit(code[1], None)
        root_b = counter[0]
        emit(code[2], None)
        edges.append((0, root_b))
    else:
        emit(code, None)
    return build_tree(sorted(edges))


_TREE_CACHE: dict[tuple[int, int], tuple[tuple[str, Tree], ...]] = {}


def trees_of_order(n: int, degree_cap: int | None = None) -> tuple[tuple[str, Tree], ...]:
    """All (canonical code, tree) pairs of order n with max degree <= cap,
    sorted by code ascending.  Results are cached and safe to share."""
    cap = n - 1 if n >= 2 else 1
    if degree_cap is not None:
        cap = min(cap, degree_cap)
    cap = max(cap, 1)
    key = (n, cap)
    hit = _TREE_CACHE.get(key)
    if hit is not None:
        return hit
    pairs = []
    for code, _maxdeg in _free_tree_codes(n, cap):
        t = _tree_from_code(code)
        pairs.append((canonical_code(t), t))
    pairs.sort(key=lambda item: item[0])
    result = tuple(pairs)
    _TREE_CACHE[key] = result
    return result


def enumerate_trees(spec: EnumSpec, order_guard: int = DEFAULT_ORDER_GUARD) -> Iterator[Tree]:
    """Exactly one representative per isomorphism class, in ascending
    canonical-code order.  Raises LimitExceeded beyond the order guard."""
    if spec.n > order_guard:
        raise LimitExceeded(
            f"order {spec.n} exceeds the guard {order_guard}; raise the guard explicitly"
        )
    for _code, t in trees_of_order(spec.n, spec.max_degree):
        if spec.exact_degree:
            if spec.n < 2:
                continue
            if max(t.degrees()) != spec.max_degree:
                continue
        yield t


def count_trees(spec: EnumSpec, order_guard: int = DEFAULT_ORDER_GUARD) -> int:
    """Class count without materializing adjacency (codes are not sorted)."""
    if spec.n > order_guard:
        raise LimitExceeded(
            f"order {spec.n} exceeds the guard {order_guard}; raise the guard explicitly"
        )
    cap = spec.n - 1 if spec.n >= 2 else 1
    if spec.max_degree is not None:
        cap = min(cap, spec.max_degree)
    cap = max(cap, 1)
    total = 0
    for _code, maxdeg in _free_tree_codes(spec.n, cap):
        if spec.exact_degree and maxdeg != spec.max_degree:
            continue
        total += 1
    return total
