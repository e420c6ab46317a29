"""Executable proof machinery for the max-degree-3 minimality argument.

The pendant-removal recurrence expresses GRM(T) - GRM(T - v) for a leaf
v through the degrees around its support vertex.  The four tree
transformations shrink a max-degree-3 tree while changing GRM at
lambda = -2 by a known constant:

  1. contract a (2,2) edge                      n-1 vertices, delta  0
  2. drop a pendant whose degree-2 support
     hangs off a degree-3 vertex                n-1 vertices, delta +1
  3. drop the two leaves of a cherry whose
     third neighbor has degree 3               n-2 vertices, delta  0
  4. collapse a cherry over a degree-2 bridge
     onto the degree-3 vertex behind it        n-3 vertices, delta -1

Sites are selected deterministically (lowest vertex ids satisfying the
trigger, longest-path ties broken by id) so normalization traces are
reproducible.  A transformation whose trigger is absent returns None;
that is an answer, not an error.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegreeBoundViolated,
    DomainViolation,
    GrmTreesError,
    NotALeaf,
)
from .indices import RationalLike
from .trees import Tree, rebuilt_without

MIN_ORDER = 7


@dataclass(frozen=True)
class TransformOutcome:
    """Result tree, removed vertex ids (original labels), and the claimed
    GRM change at lambda = -2: claimed_delta = GRM(T) - GRM(T')."""

    kind: str
    tree: Tree
    removed: tuple[int, ...]
    claimed_delta: Fraction


def pendant_removal_delta(t: Tree, v: int, lam: RationalLike) -> Fraction:
    """GRM_lambda(T) - GRM_lambda(T - v) for a leaf v, via the recurrence
    (lambda+1)(lambda+deg w) + sum over w's other neighbors of
    (lambda + deg w'), where w is v's support and degrees are taken in T.
    """
    if t.order < 3:
        raise DomainViolation("pendant removal delta needs n >= 3")
    if t.degree(v) != 1:
        raise NotALeaf(f"vertex {v} has degree {t.degree(v)}")
    lam = Fraction(lam)
    w = t.neighbors(v)[0]
    degs = t.degrees()
    delta = (lam + 1) * (lam + degs[w])
    for w2 in t.neighbors(w):
        if w2 != v:
            delta += lam + degs[w2]
    return delta


def _guard(t: Tree) -> None:
    if t.order >= 2 and max(t.degrees()) > 3:
        raise DegreeBoundViolated("transformations are defined for max degree <= 3")
    if t.order < MIN_ORDER:
        raise DomainViolation(f"transformations are stated for n >= {MIN_ORDER}")


def _eccentricities(t: Tree) -> list[int]:
    n = t.order
    ecc = [0] * n
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        q = deque([s])
        far = 0
        while q:
            u = q.popleft()
            far = dist[u]
            for w in t.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    q.append(w)
        ecc[s] = far
    return ecc


def _deep_leaf_sites(t: Tree):
    """(u, v, u2, w) for each leaf u ending a longest path, in id order:
    v is u's neighbor (degree 3 required), u2 the smallest other leaf
    neighbor of v, w the remaining neighbor of degree >= 2."""
    ecc = _eccentricities(t)
    diameter = max(ecc)
    degs = t.degrees()
    for u in range(t.order):
        if degs[u] != 1 or ecc[u] != diameter:
            continue
        v = t.neighbors(u)[0]
        if degs[v] != 3:
            continue
        others = [x for x in t.neighbors(v) if x != u]
        leaf_others = [x for x in others if degs[x] == 1]
        big_others = [x for x in others if degs[x] >= 2]
        if not leaf_others or not big_others:
            continue
        yield u, v, leaf_others[0], big_others[0]


def transform1(t: Tree) -> TransformOutcome | None:
    """Contract the lowest (2,2) edge; GRM at -2 is unchanged."""
    _guard(t)
    degs = t.degrees()
    for a, b in t.edges():
        if degs[a] == 2 and degs[b] == 2:
            other = next(x for x in t.neighbors(b) if x != a)
            result = rebuilt_without(t, {b}, [(a, other)])
            return TransformOutcome("merge-22-edge", result, (b,), Fraction(0))
    return None


def transform2(t: Tree) -> TransformOutcome | None:
    """Drop the lowest pendant sitting on a degree-2 vertex whose other
    neighbor has degree 3; GRM at -2 grows by one in the removal."""
    _guard(t)
    degs = t.degrees()
    for v in range(t.order):
        if degs[v] != 1:
            continue
        u = t.neighbors(v)[0]
        if degs[u] != 2:
            continue
        w = next(x for x in t.neighbors(u) if x != v)
        if degs[w] == 1:
            # v-u-w would be the whole tree P3, impossible at n >= 7
            raise GrmTreesError("pendant chain closes a 3-vertex tree despite n >= 7")
        if degs[w] == 3:
            result = rebuilt_without(t, {v})
            return TransformOutcome("drop-pendant-on-2-3", result, (v,), Fraction(1))
    return None


def transform3(t: Tree) -> TransformOutcome | None:
    """Remove both leaves of a deepest cherry whose anchor has degree 3;
    GRM at -2 is unchanged."""
    _guard(t)
    degs = t.degrees()
    for u, v, u2, w in _deep_leaf_sites(t):
        if degs[w] == 3:
            result = rebuilt_without(t, {u, u2})
            return TransformOutcome("drop-cherry-on-3", result, (u, u2), Fraction(0))
    return None


def transform4(t: Tree) -> TransformOutcome | None:
    """Collapse a deepest cherry over a degree-2 bridge onto the degree-3
    vertex behind it; GRM at -2 shrinks by one in the removal."""
    _guard(t)
    degs = t.degrees()
    for u, v, u2, w in _deep_leaf_sites(t):
        if degs[w] != 2:
            continue
        anchor = next(x for x in t.neighbors(w) if x != v)
        if degs[anchor] == 3:
            result = rebuilt_without(t, {v, u2, w}, [(u, anchor)])
            return TransformOutcome("collapse-cherry-bridge", result, (v, u2, w), Fraction(-1))
    return None


_PIPELINE = (transform1, transform2, transform3, transform4)


def normalize(t: Tree) -> tuple[Tree, tuple[TransformOutcome, ...]]:
    """Apply the first applicable transformation (in order 1..4) until the
    tree drops below 7 vertices or nothing applies; returns the final
    tree and the ordered trace.  The accumulated claimed deltas telescope
    to GRM(t, -2) - GRM(final, -2)."""
    if t.order >= 2 and max(t.degrees()) > 3:
        raise DegreeBoundViolated("normalization is defined for max degree <= 3")
    trace: list[TransformOutcome] = []
    while t.order >= MIN_ORDER:
        outcome = None
        for step in _PIPELINE:
            outcome = step(t)
            if outcome is not None:
                break
        if outcome is None:
            break
        trace.append(outcome)
        t = outcome.tree
    return t, tuple(trace)
