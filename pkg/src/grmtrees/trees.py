"""Tree representation, validation, surgery, and degree/edge-type censuses.

A :class:`Tree` is an unlabeled free tree stored with dense vertex ids
0..n-1 and sorted adjacency lists.  Instances are immutable after
construction and safe to share across workers.  The one- and two-vertex
trees are representable; operations that need degrees or edges reject
them explicitly instead of returning a silent zero.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    CycleDetected,
    Disconnected,
    DomainViolation,
    DuplicateEdge,
    NotALeaf,
    SelfLoop,
    SingletonTree,
)

Edge = tuple[int, int]


class Tree:
    """Immutable free tree on vertices 0..n-1.

    Invariants (enforced by :func:`build_tree`): exactly n-1 edges,
    connected, symmetric irreflexive adjacency, sorted neighbor lists.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, adjacency: Sequence[Sequence[int]], _checked: bool = False):
        if not _checked:
            built = build_tree(
                [(u, v) for u in range(len(adjacency)) for v in adjacency[u] if u < v],
                order=len(adjacency),
            )
            adjacency = built._adj
        self._n = len(adjacency)
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)

    @property
    def order(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self._adj)

    def edges(self) -> Iterator[Edge]:
        """Edges as (u, v) with u < v, in ascending order."""
        for u in range(self._n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return self._n - 1

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self._n) if len(self._adj[v]) == 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tree) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Tree(order={self._n}, edges={list(self.edges())})"


def build_tree(edges: Iterable[Edge], order: int | None = None) -> Tree:
    """Validate an edge list and return the Tree it describes.

    Vertex ids may be arbitrary nonnegative integers; they are compacted
    to 0..n-1 in order of first appearance.  ``order`` is only needed for
    the edgeless one-vertex tree (``build_tree([], order=1)``).

    Raises SelfLoop, DuplicateEdge, CycleDetected, or Disconnected, each
    naming the violated tree invariant.
    """
    edges = list(edges)
    if not edges:
        if order == 1:
            return Tree([[]], _checked=True)
        raise DomainViolation("empty edge list: pass order=1 for the singleton tree")

    relabel: dict[int, int] = {}
    seen: set[Edge] = set()
    compact: list[Edge] = []
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"edge ({u}, {v}) joins a vertex to itself")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge ({key[0]}, {key[1]}) appears more than once")
        seen.add(key)
        for x in (u, v):
            if x not in relabel:
                relabel[x] = len(relabel)
        compact.append((relabel[u], relabel[v]))

    n = len(relabel)
    if order is not None and order != n:
        raise DomainViolation(f"edge list spans {n} vertices, expected order {order}")

    # union-find cycle check; a merge of two already-joined vertices is a cycle
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in compact:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CycleDetected(f"edge ({u}, {v}) closes a cycle")
        parent[ru] = rv
        adj[u].append(v)
        adj[v].append(u)

    if len(compact) != n - 1:
        raise Disconnected(f"{n} vertices but only {len(compact)} edges")
    roots = {find(x) for x in range(n)}
    if len(roots) > 1:
        raise Disconnected(f"edge list has {len(roots)} components")

    return Tree(adj, _checked=True)


def max_degree(t: Tree) -> int:
    """Maximum vertex degree; undefined for the singleton tree."""
    if t.order < 2:
        raise SingletonTree("max degree undefined on a single vertex")
    return max(t.degrees())


# ---------------------------------------------------------------------------
# degree census


class DegreeCensus:
    """Counts n_i of vertices of degree i and m_{i,j} of edges whose
    endpoint degrees are {i, j} (unordered, i <= j).

    Equality ignores trailing zero degree classes, so a census computed
    from a path compares equal to the same counts presented in a
    max-degree-3 context.
    """

    __slots__ = ("order", "max_degree", "_nd", "_m", "_key")

    def __init__(self, order: int, vertex_counts: Mapping[int, int], edge_counts: Mapping[Edge, int]):
        self.order = order
        nd = {d: int(c) for d, c in vertex_counts.items() if c}
        m: dict[Edge, int] = {}
        for (i, j), c in edge_counts.items():
            if c:
                key = (i, j) if i <= j else (j, i)
                m[key] = m.get(key, 0) + int(c)
        self._nd = nd
        self._m = m
        self.max_degree = max(
            [d for d in nd] + [j for (_, j) in m] + [0]
        )
        self._key = (order, tuple(sorted(nd.items())), tuple(sorted(m.items())))

    def n_(self, degree: int) -> int:
        """Count of vertices of the given degree."""
        return self._nd.get(degree, 0)

    def m_(self, i: int, j: int) -> int:
        """Count of edges with endpoint degrees {i, j}."""
        return self._m.get((i, j) if i <= j else (j, i), 0)

    def vertex_items(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._nd.items()))

    def edge_items(self) -> tuple[tuple[Edge, int], ...]:
        return tuple(sorted(self._m.items()))

    def check(self) -> None:
        """Raise DomainViolation unless the census identities hold.

        For each degree class i:  sum_j m_{i,j} (diagonal counted twice)
        equals i * n_i, and the vertex counts are consistent with a tree
        (sum n_i = n, sum i*n_i = 2(n-1)).
        """
        n = self.order
        if sum(self._nd.values()) != n:
            raise DomainViolation(f"vertex counts sum to {sum(self._nd.values())}, not {n}")
        if sum(d * c for d, c in self._nd.items()) != 2 * (n - 1):
            raise DomainViolation("degree sum is not 2(n-1)")
        for i in range(1, self.max_degree + 1):
            incident = sum(
                c * (2 if a == b else 1)
                for (a, b), c in self._m.items()
                if i in (a, b)
            )
            if incident != i * self.n_(i):
                raise DomainViolation(
                    f"degree-{i} handshake fails: {incident} edge slots vs {i * self.n_(i)}"
                )
        if any(c < 0 for c in self._nd.values()) or any(c < 0 for c in self._m.values()):
            raise DomainViolation("negative count")

    def __eq__(self, other) -> bool:
        return isinstance(other, DegreeCensus) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        nd = ", ".join(f"n{d}={c}" for d, c in self.vertex_items())
        m = ", ".join(f"m{i}{j}={c}" for (i, j), c in self.edge_items())
        return f"DegreeCensus(n={self.order}; {nd}; {m})"


def census(t: Tree) -> DegreeCensus:
    """Exact degree and edge-type counts of a tree."""
    degs = t.degrees()
    nd: dict[int, int] = {}
    for d in degs:
        if d:
            nd[d] = nd.get(d, 0) + 1
    m: dict[Edge, int] = {}
    for u, v in t.edges():
        i, j = degs[u], degs[v]
        key = (i, j) if i <= j else (j, i)
        m[key] = m.get(key, 0) + 1
    return DegreeCensus(t.order, nd, m)


# ---------------------------------------------------------------------------
# surgery (used by the family constructors and the proof transformations)


def with_edge_subdivided(t: Tree, u: int, v: int) -> Tree:
    """Replace edge uv by u-w-v through a new vertex w = old order."""
    if v not in t.neighbors(u):
        raise DomainViolation(f"({u}, {v}) is not an edge")
    w = t.order
    edges = [e for e in t.edges() if e != (min(u, v), max(u, v))]
    edges += [(u, w), (w, v)]
    return build_tree(sorted(edges))


def with_leaves_attached(t: Tree, v: int, count: int) -> Tree:
    """Attach ``count`` new pendant vertices (ids old order, ...) to v."""
    if not 0 <= v < t.order:
        raise DomainViolation(f"no vertex {v}")
    edges = list(t.edges()) + [(v, t.order + i) for i in range(count)]
    return build_tree(sorted(edges))


def with_leaf_removed(t: Tree, v: int) -> Tree:
    """Remove pendant vertex v; remaining ids are compacted in order."""
    if t.degree(v) != 1:
        raise NotALeaf(f"vertex {v} has degree {t.degree(v)}")
    if t.order < 3:
        raise DomainViolation("removal would leave fewer than 2 vertices")
    edges = [e for e in t.edges() if v not in e]
    return build_tree(sorted(edges))


def rebuilt_without(t: Tree, drop: Iterable[int], extra_edges: Iterable[Edge] = ()) -> Tree:
    """Drop vertices (with their edges), add ``extra_edges``, recompact ids."""
    dropped = set(drop)
    edges = [e for e in t.edges() if e[0] not in dropped and e[1] not in dropped]
    edges += [tuple(sorted(e)) for e in extra_edges]
    return build_tree(sorted(edges))


# ---------------------------------------------------------------------------
# edge-list text format: one "u v" line per edge, '#' comments, blank lines ok


def parse_edge_list(text: str) -> Tree:
    """Parse the CLI's edge-list text format into a validated Tree."""
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DomainViolation(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DomainViolation(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u < 0 or v < 0:
            raise DomainViolation(f"line {lineno}: vertex ids must be nonnegative")
        edges.append((u, v))
    if not edges:
        raise DomainViolation("no edges found in input")
    return build_tree(edges)


def format_edge_list(t: Tree, header: str | None = None) -> str:
    """Serialize a tree in the edge-list text format (round-trips)."""
    lines = []
    if header:
        for h in header.splitlines():
            lines.append(f"# {h}")
    lines.extend(f"{u} {v}" for u, v in t.edges())
    return "\n".join(lines) + "\n"
