"""Exact evaluation of GRM_lambda, the Zagreb indices, and closed forms.

GRM_lambda(T) = sum over edges uv of (deg u + lambda)(deg v + lambda).
lambda = 0 gives the second Zagreb index M2, lambda = -1 the reduced
second Zagreb index, and lambda = -2 the value whose minimum over
bounded-degree trees this package certifies.

All arithmetic is exact: lambda and every returned value is a
:class:`fractions.Fraction`.  There is no floating-point fast path; the
verification suites are equality-based.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainViolation, SingletonTree
from .trees import DegreeCensus, Tree

# Exact rational scalar used for lambda and all index values.  Python's
# Fraction already guarantees the reduced-form and arbitrary-precision
# invariants this package relies on.
Rational = Fraction

RationalLike = Fraction | int


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or an integer string; floats are rejected on purpose."""
    s = text.strip()
    if any(c in s for c in ".eE"):
        raise DomainViolation(f"not an exact rational: {text!r} (use p/q or an integer)")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise DomainViolation(f"not an exact rational: {text!r}") from None


def grm(t: Tree, lam: RationalLike) -> Fraction:
    """General reduced second Zagreb index, summed edge by edge."""
    if t.order < 2:
        raise SingletonTree("GRM undefined on a single vertex")
    lam = Fraction(lam)
    degs = t.degrees()
    total = Fraction(0)
    for u, v in t.edges():
        total += (degs[u] + lam) * (degs[v] + lam)
    return total


def m1(t: Tree) -> Fraction:
    """First Zagreb index: sum of squared degrees."""
    if t.order < 2:
        raise SingletonTree("M1 undefined on a single vertex")
    return Fraction(sum(d * d for d in t.degrees()))


def m2(t: Tree) -> Fraction:
    """Second Zagreb index: sum over edges of deg(u)*deg(v)."""
    if t.order < 2:
        raise SingletonTree("M2 undefined on a single vertex")
    degs = t.degrees()
    return Fraction(sum(degs[u] * degs[v] for u, v in t.edges()))


def census_grm(c: DegreeCensus, lam: RationalLike) -> Fraction:
    """GRM evaluated from a degree census: sum m_{i,j} (i+lambda)(j+lambda)."""
    lam = Fraction(lam)
    total = Fraction(0)
    for (i, j), count in c.edge_items():
        total += count * (i + lam) * (j + lam)
    return total


def edge_weights(lam: RationalLike, max_degree: int) -> dict[tuple[int, int], Fraction]:
    """The edge-weight table (i, j) -> (i+lambda)(j+lambda) for i <= j <= max_degree.

    At lambda = -2 the entries are 4 - 2(i+j) + ij; every entry with
    i = 2 or j = 2 vanishes there.
    """
    if max_degree < 1:
        raise DomainViolation("max_degree must be >= 1")
    lam = Fraction(lam)
    return {
        (i, j): (i + lam) * (j + lam)
        for i in range(1, max_degree + 1)
        for j in range(i, max_degree + 1)
    }


# ---------------------------------------------------------------------------
# closed forms for the reference shapes


def closed_form_path(n: int, lam: RationalLike) -> Fraction:
    """GRM of the path P_n: (2+lambda)(n*lambda + 2n - lambda - 4).

    The formula describes the max-degree-2 path, so n >= 3.
    """
    if n < 3:
        raise DomainViolation("path closed form requires n >= 3 (P_2 is the star S_2)")
    lam = Fraction(lam)
    return (2 + lam) * (n * lam + 2 * n - lam - 4)


def closed_form_star(n: int, lam: RationalLike) -> Fraction:
    """GRM of the star S_n: (n-1)(n-1+lambda)(1+lambda), n >= 2."""
    if n < 2:
        raise DomainViolation("star closed form requires n >= 2")
    lam = Fraction(lam)
    return (n - 1) * (n - 1 + lam) * (1 + lam)


def closed_form_spider(n: int, delta: int, lam: RationalLike) -> Fraction:
    """GRM of the spider SP(n, delta) with one long leg.

    (n*lam + 2n - delta*lam - delta - 3)(2 + lam)
      + (delta - 1)(delta + lam)(1 + lam),
    valid for delta >= 3 and n >= delta + 2 (the long leg has >= 2 edges
    counted through the (2+lam) factor; n = delta + 1 is the star).
    """
    if delta < 3:
        raise DomainViolation("spider closed form requires max degree >= 3")
    if n < delta + 2:
        raise DomainViolation(f"spider closed form requires n >= {delta + 2} for max degree {delta}")
    lam = Fraction(lam)
    return (n * lam + 2 * n - delta * lam - delta - 3) * (2 + lam) + (delta - 1) * (
        delta + lam
    ) * (1 + lam)


def closed_form(kind: str, n: int, lam: RationalLike, delta: int | None = None) -> Fraction:
    """Dispatch on shape kind: 'path', 'star', or 'spider' (needs delta)."""
    kind = kind.lower()
    if kind == "path":
        return closed_form_path(n, lam)
    if kind == "star":
        return closed_form_star(n, lam)
    if kind == "spider":
        if delta is None:
            raise DomainViolation("spider closed form needs delta")
        return closed_form_spider(n, delta, lam)
    raise DomainViolation(f"unknown closed-form shape {kind!r}")
