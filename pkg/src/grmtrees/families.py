"""Constructors for the reference shapes and the extremal tree families.

Shapes: path, star, spider SP(n, delta), broom BR(n, delta, delta2).

Extremal families: T1/T2/T3 (max degree 3, orders 3k+1 / 3k+2 / 3k+3)
and TT1/TT2/TT3/TT4 (max degree 4, orders 4k+1 .. 4k+4).  These are the
trees that attain the minimum of GRM at lambda = -2 within their degree
class.  Multi-member families are produced by applying each listed
construction at every admissible site and deduplicating by canonical
code, so constructors return the full family up to isomorphism.

Labeling is deterministic: the spine comes first (ids 0..2k for the
T/TT bases), pendants are appended in spine order, and subdivision
vertices take the next free id.  Golden files therefore diff cleanly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import canonical_code
from .errors import DomainViolation
from .trees import (
    DegreeCensus,
    Tree,
    build_tree,
    with_edge_subdivided,
    with_leaves_attached,
)

FAMILY_KINDS = (
    "path",
    "star",
    "spider",
    "broom",
    "t1",
    "t2",
    "t3",
    "tt1",
    "tt2",
    "tt3",
    "tt4",
)

_KIND_ALIASES = {
    "t1opt": "t1",
    "t2opt": "t2",
    "t3opt": "t3",
    "tt1opt": "tt1",
    "tt2opt": "tt2",
    "tt3opt": "tt3",
    "tt4opt": "tt4",
}


def normalize_kind(kind: str) -> str:
    k = kind.strip().lower()
    k = _KIND_ALIASES.get(k, k)
    if k not in FAMILY_KINDS:
        raise DomainViolation(f"unknown family kind {kind!r} (choose from {', '.join(FAMILY_KINDS)})")
    return k


# ---------------------------------------------------------------------------
# reference shapes


def make_path(n: int) -> Tree:
    if n < 2:
        raise DomainViolation("path requires n >= 2")
    return build_tree([(i, i + 1) for i in range(n - 1)])


def make_star(n: int) -> Tree:
    if n < 2:
        raise DomainViolation("star requires n >= 2")
    return build_tree([(0, i) for i in range(1, n)])


def make_spider(n: int, delta: int) -> Tree:
    """Center 0 with delta-1 legs of length 1 and one leg of length n-delta."""
    if delta < 3:
        raise DomainViolation("spider requires max degree >= 3")
    if n < delta + 1:
        raise DomainViolation(f"spider with max degree {delta} requires n >= {delta + 1}")
    edges = [(0, i) for i in range(1, delta)]
    prev = 0
    for i in range(delta, n):
        edges.append((prev, i))
        prev = i
    return build_tree(edges)


def make_broom(n: int, delta: int, delta2: int) -> Tree:
    """Internal path with delta-1 pendants at one end and delta2-1 at the other."""
    if not delta >= delta2 >= 2:
        raise DomainViolation("broom requires delta >= delta2 >= 2")
    if n < delta + delta2:
        raise DomainViolation(f"broom({delta}, {delta2}) requires n >= {delta + delta2}")
    p = n - delta - delta2 + 2
    edges = [(i, i + 1) for i in range(p - 1)]
    nxt = p
    for _ in range(delta - 1):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(delta2 - 1):
        edges.append((p - 1, nxt))
        nxt += 1
    return build_tree(edges)


# ---------------------------------------------------------------------------
# extremal families


def _caterpillar_base(k: int, pendants_per_site: int) -> Tree:
    """Spine of 2k+1 vertices with pendants at every even spine position.

    Spine ids 0..2k; even positions (1-based 2, 4, .., 2k) are ids
    1, 3, .., 2k-1; pendant ids continue from 2k+1 in spine order.
    """
    edges = [(i, i + 1) for i in range(2 * k)]
    nxt = 2 * k + 1
    for site in range(1, 2 * k, 2):
        for _ in range(pendants_per_site):
            edges.append((site, nxt))
            nxt += 1
    return build_tree(edges)


def _dedup_sorted(trees: list[Tree]) -> tuple[Tree, ...]:
    by_code: dict[str, Tree] = {}
    for t in trees:
        by_code.setdefault(canonical_code(t), t)
    return tuple(by_code[c] for c in sorted(by_code))


def _subdivided_at_odd_spine_sites(base: Tree, k: int) -> list[Tree]:
    # spine edges (v_i, v_{i+1}) for odd 1-based i in 3..2k-1 are id pairs
    # (i-1, i); the mirror symmetry of the base collapses these k-1 sites
    # to floor(k/2) isomorphism classes.
    return [with_edge_subdivided(base, i - 1, i) for i in range(3, 2 * k, 2)]


def _subdivided_at_deg2_edges(t: Tree) -> list[Tree]:
    # edges with one endpoint of degree exactly 2 and the other of degree >= 2
    out = []
    degs = t.degrees()
    for u, v in t.edges():
        du, dv = degs[u], degs[v]
        if (du == 2 and dv >= 2) or (dv == 2 and du >= 2):
            out.append(with_edge_subdivided(t, u, v))
    return out


def _pendants_at_22_edge_ends(t: Tree, count: int) -> list[Tree]:
    out = []
    degs = t.degrees()
    for u, v in t.edges():
        if degs[u] == 2 and degs[v] == 2:
            out.append(with_leaves_attached(t, u, count))
            out.append(with_leaves_attached(t, v, count))
    return out


def make_t_opt(variant: int, k: int) -> tuple[Tree, ...]:
    """The max-degree-3 extremal family of the given variant (1, 2, or 3).

    Variant 1 (order 3k+1) is a single caterpillar; variant 2 (order
    3k+2) subdivides one interior spine edge of it, giving floor(k/2)
    classes; variant 3 (order 3k+3) closes over three constructions:
    subdividing variant-2 members at an edge with a degree-2 endpoint,
    attaching two pendants to the variant-1 spine end, or attaching one
    pendant at an endpoint of the (2,2) edge of a variant-2 member.

    Variant 2 is empty for k = 1 (no interior subdivision sites exist).
    """
    if k < 1:
        raise DomainViolation("family parameter k must be >= 1")
    if variant == 1:
        return (_caterpillar_base(k, 1),)
    if variant == 2:
        return _dedup_sorted(_subdivided_at_odd_spine_sites(_caterpillar_base(k, 1), k))
    if variant == 3:
        members: list[Tree] = [with_leaves_attached(_caterpillar_base(k, 1), 0, 2)]
        for t2 in make_t_opt(2, k):
            members.extend(_subdivided_at_deg2_edges(t2))
            members.extend(_pendants_at_22_edge_ends(t2, 1))
        return _dedup_sorted(members)
    raise DomainViolation(f"no max-degree-3 family variant {variant}")


def make_tt_opt(variant: int, k: int) -> tuple[Tree, ...]:
    """The max-degree-4 extremal family of the given variant (1..4).

    Variant 1 (order 4k+1) is the caterpillar with two pendants per even
    spine position; variants 2 and 3 subdivide as in the degree-3 case;
    variant 4 (order 4k+4) closes over subdividing variant-3 members,
    attaching three pendants to the variant-1 spine end, or attaching
    two pendants at an endpoint of the (2,2) edge of a variant-2 member.

    Variants 2 and 3 are empty for k = 1; variant 4 is not (the spine-end
    attachment exists for every k >= 1).
    """
    if k < 1:
        raise DomainViolation("family parameter k must be >= 1")
    if variant == 1:
        return (_caterpillar_base(k, 2),)
    if variant == 2:
        return _dedup_sorted(_subdivided_at_odd_spine_sites(_caterpillar_base(k, 2), k))
    if variant == 3:
        members = []
        for t2 in make_tt_opt(2, k):
            members.extend(_subdivided_at_deg2_edges(t2))
        return _dedup_sorted(members)
    if variant == 4:
        members = [with_leaves_attached(_caterpillar_base(k, 2), 0, 3)]
        for t3 in make_tt_opt(3, k):
            members.extend(_subdivided_at_deg2_edges(t3))
        for t2 in make_tt_opt(2, k):
            members.extend(_pendants_at_22_edge_ends(t2, 2))
        return _dedup_sorted(members)
    raise DomainViolation(f"no max-degree-4 family variant {variant}")


# ---------------------------------------------------------------------------
# paper-free predicted censuses (derived from the constructions, stated
# independently of the constructors so the tests are a real cross-check)


def _census(n: int, nd: dict[int, int], m: dict[tuple[int, int], int]) -> DegreeCensus:
    return DegreeCensus(n, {d: c for d, c in nd.items() if c}, {e: c for e, c in m.items() if c})


def _path_census(n: int) -> DegreeCensus:
    if n == 2:
        return _census(2, {1: 2}, {(1, 1): 1})
    return _census(n, {1: 2, 2: n - 2}, {(1, 2): 2, (2, 2): n - 3})


def _star_census(n: int) -> DegreeCensus:
    if n == 2:
        return _path_census(2)
    return _census(n, {1: n - 1, n - 1: 1}, {(1, n - 1): n - 1})


def _spider_census(n: int, d: int) -> DegreeCensus:
    if n == d + 1:
        return _star_census(n)
    nd = {1: d, 2: n - d - 1, d: 1}
    m = {(1, d): d - 1, (2, d): 1, (2, 2): n - d - 2, (1, 2): 1}
    return _census(n, nd, m)


def _broom_census(n: int, d: int, d2: int) -> DegreeCensus:
    if d2 == 2:
        return _spider_census(n, d)
    p = n - d - d2 + 2
    nd: dict[int, int] = {1: d + d2 - 2}
    nd[d] = nd.get(d, 0) + 1
    nd[d2] = nd.get(d2, 0) + 1
    m: dict[tuple[int, int], int] = {(1, d): d - 1}
    m[(1, d2)] = m.get((1, d2), 0) + d2 - 1
    if p == 2:
        e = (min(d, d2), max(d, d2))
        m[e] = m.get(e, 0) + 1
    else:
        nd[2] = nd.get(2, 0) + p - 2
        m[(2, d)] = m.get((2, d), 0) + 1
        m[(2, d2)] = m.get((2, d2), 0) + 1
        m[(2, 2)] = m.get((2, 2), 0) + p - 3
    return _census(n, nd, m)


def _t_family_censuses(variant: int, k: int) -> tuple[DegreeCensus, ...]:
    n = 3 * k + variant
    if variant == 1:
        return (_census(n, {1: k + 2, 2: k - 1, 3: k}, {(1, 3): k + 2, (2, 3): 2 * k - 2}),)
    if variant == 2:
        return (
            _census(
                n,
                {1: k + 2, 2: k, 3: k},
                {(1, 3): k + 2, (2, 2): 1, (2, 3): 2 * k - 2},
            ),
        )
    return (
        _census(
            n,
            {1: k + 2, 2: k + 1, 3: k},
            {(1, 3): k + 2, (2, 2): 2, (2, 3): 2 * k - 2},
        ),
        _census(
            n,
            {1: k + 3, 2: k - 1, 3: k + 1},
            {(1, 3): k + 3, (3, 3): 1, (2, 3): 2 * k - 2},
        ),
    )


def _tt_family_censuses(variant: int, k: int) -> tuple[DegreeCensus, ...]:
    n = 4 * k + variant
    m14 = 2 * k + 2
    m24 = 2 * k - 2
    if variant == 1:
        return (_census(n, {1: 2 * k + 2, 2: k - 1, 4: k}, {(1, 4): m14, (2, 4): m24}),)
    if variant == 2:
        return (
            _census(
                n,
                {1: 2 * k + 2, 2: k, 4: k},
                {(1, 4): m14, (2, 2): 1, (2, 4): m24},
            ),
        )
    if variant == 3:
        return (
            _census(
                n,
                {1: 2 * k + 2, 2: k + 1, 4: k},
                {(1, 4): m14, (2, 2): 2, (2, 4): m24},
            ),
        )
    return (
        _census(
            n,
            {1: 2 * k + 2, 2: k + 2, 4: k},
            {(1, 4): m14, (2, 2): 3, (2, 4): m24},
        ),
        _census(
            n,
            {1: 2 * k + 4, 2: k - 1, 4: k + 1},
            {(1, 4): 2 * k + 4, (4, 4): 1, (2, 4): m24},
        ),
    )


# ---------------------------------------------------------------------------
# family spec: CLI-facing bundle of kind + parameters


@dataclass(frozen=True)
class FamilySpec:
    """A family kind with its parameters; builds members and predicts censuses."""

    kind: str
    n: int | None = None
    k: int | None = None
    delta: int | None = None
    delta2: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", normalize_kind(self.kind))
        needs_n = self.kind in ("path", "star", "spider", "broom")
        if needs_n and self.n is None:
            raise DomainViolation(f"family {self.kind!r} needs n")
        if not needs_n and self.k is None:
            raise DomainViolation(f"family {self.kind!r} needs k")
        if self.kind in ("spider", "broom") and self.delta is None:
            raise DomainViolation(f"family {self.kind!r} needs delta")
        if self.kind == "broom" and self.delta2 is None:
            raise DomainViolation("broom needs delta2")

    def build(self) -> tuple[Tree, ...]:
        if self.kind == "path":
            return (make_path(self.n),)
        if self.kind == "star":
            return (make_star(self.n),)
        if self.kind == "spider":
            return (make_spider(self.n, self.delta),)
        if self.kind == "broom":
            return (make_broom(self.n, self.delta, self.delta2),)
        if self.kind.startswith("tt"):
            return make_tt_opt(int(self.kind[2:]), self.k)
        return make_t_opt(int(self.kind[1:]), self.k)

    def predicted_census(self) -> tuple[DegreeCensus, ...]:
        if self.kind == "path":
            return (_path_census(self.n),)
        if self.kind == "star":
            return (_star_census(self.n),)
        if self.kind == "spider":
            if self.n < self.delta + 1 or self.delta < 3:
                raise DomainViolation("invalid spider parameters")
            return (_spider_census(self.n, self.delta),)
        if self.kind == "broom":
            if not (self.delta >= self.delta2 >= 2) or self.n < self.delta + self.delta2:
                raise DomainViolation("invalid broom parameters")
            return (_broom_census(self.n, self.delta, self.delta2),)
        if self.k < 1:
            raise DomainViolation("family parameter k must be >= 1")
        if self.kind.startswith("tt"):
            return _tt_family_censuses(int(self.kind[2:]), self.k)
        return _t_family_censuses(int(self.kind[1:]), self.k)

    def label(self) -> str:
        parts = [self.kind]
        for name in ("n", "k", "delta", "delta2"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}{value}")
        return "_".join(parts)


def predicted_census(spec: FamilySpec) -> tuple[DegreeCensus, ...]:
    """Censuses the family members must have (a set, for multi-case families)."""
    return spec.predicted_census()
