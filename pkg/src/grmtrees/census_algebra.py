"""Census linear systems for max degree 3 and 4, bounds, and catalogs.

For a tree census the handshake identities tie the n_i and m_{i,j}
together; for max degree 3 the census is determined by (n, n3, m22, m23)
and for max degree 4 by (n, n3, m12, m13, m22, m23, m34, m44).  The
solved forms here are hard-coded, and :func:`check_solved_forms` re-derives
them by generic exact Gaussian elimination of the raw systems, so a
transcription slip in either presentation is caught at startup.

The systems assume every degree class 1..max is accounted for, which
holds for every tree on n >= 3 vertices (the two-vertex tree's (1,1)
edge sits outside them).

GRM at lambda = -2 collapses to short census forms:
  max degree 3:   m33 - m13
  max degree 4:   3*m12 + m13 + m22 + m34 + 3*m44 - n + n3 - 3
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DegreeBoundViolated, DomainViolation, UnsupportedRegime
from .indices import RationalLike, closed_form_spider
from .trees import DegreeCensus

D3_DEPENDENT = ("n1", "n2", "m12", "m13", "m33")
D3_FREE = ("1", "n", "n3", "m22", "m23")

D4_DEPENDENT = ("n1", "n2", "n4", "m14", "m24", "m33")
D4_FREE = ("1", "n", "n3", "m12", "m13", "m22", "m23", "m34", "m44")


@dataclass(frozen=True)
class FreeCensusVarsD3:
    """The free variables of the max-degree-3 census system."""

    n: int
    n3: int
    m22: int
    m23: int

    @classmethod
    def from_census(cls, c: DegreeCensus) -> "FreeCensusVarsD3":
        if c.max_degree > 3:
            raise DegreeBoundViolated(f"census has max degree {c.max_degree} > 3")
        if c.m_(1, 1):
            raise DomainViolation("the (1,1) edge of the two-vertex tree is outside the system")
        return cls(n=c.order, n3=c.n_(3), m22=c.m_(2, 2), m23=c.m_(2, 3))


@dataclass(frozen=True)
class FreeCensusVarsD4:
    """The free variables of the max-degree-4 census system."""

    n: int
    n3: int
    m12: int
    m13: int
    m22: int
    m23: int
    m34: int
    m44: int

    @classmethod
    def from_census(cls, c: DegreeCensus) -> "FreeCensusVarsD4":
        if c.max_degree > 4:
            raise DegreeBoundViolated(f"census has max degree {c.max_degree} > 4")
        if c.m_(1, 1):
            raise DomainViolation("the (1,1) edge of the two-vertex tree is outside the system")
        return cls(
            n=c.order,
            n3=c.n_(3),
            m12=c.m_(1, 2),
            m13=c.m_(1, 3),
            m22=c.m_(2, 2),
            m23=c.m_(2, 3),
            m34=c.m_(3, 4),
            m44=c.m_(4, 4),
        )


@dataclass(frozen=True)
class SolvedCensus:
    """Full census entries as exact rationals, plus realizability.

    ``realizable`` means every entry is a nonnegative integer; it says
    nothing about whether an actual tree attains the census.
    """

    order: int
    max_degree: int
    values: tuple[tuple[str, Fraction], ...]

    def value(self, name: str) -> Fraction:
        for key, v in self.values:
            if key == name:
                return v
        raise KeyError(name)

    @property
    def realizable(self) -> bool:
        return all(v >= 0 and v.denominator == 1 for _, v in self.values)

    def to_census(self) -> DegreeCensus:
        if not self.realizable:
            raise DomainViolation("census entries are not all nonnegative integers")
        nd = {}
        m = {}
        for key, v in self.values:
            if key.startswith("n"):
                nd[int(key[1:])] = int(v)
            else:
                m[(int(key[1]), int(key[2]))] = int(v)
        return DegreeCensus(self.order, nd, m)

    def grm_minus2(self) -> Fraction:
        """m33 - m13 holds for any census with max degree <= 4 entries absent,
        so evaluate from the general weights here."""
        total = Fraction(0)
        for key, v in self.values:
            if not key.startswith("m"):
                continue
            i, j = int(key[1]), int(key[2])
            total += v * (i - 2) * (j - 2)
        return total


def solve_census_d3(free: FreeCensusVarsD3) -> SolvedCensus:
    """Dependent entries of the max-degree-3 system from its free variables."""
    n, n3, m22, m23 = free.n, free.n3, free.m22, free.m23
    values = {
        "n1": 2 + n3,
        "n2": n - 2 - 2 * n3,
        "n3": n3,
        "m12": 2 * n - 4 * n3 - 2 * m22 - m23 - 4,
        "m13": 5 * n3 + 2 * m22 + m23 - 2 * n + 6,
        "m22": m22,
        "m23": m23,
        "m33": n - n3 - 3 - m22 - m23,
    }
    check_solved_forms()
    return SolvedCensus(n, 3, tuple((k, Fraction(v)) for k, v in values.items()))


def solve_census_d4(free: FreeCensusVarsD4) -> SolvedCensus:
    """Dependent entries of the max-degree-4 system from its free variables."""
    n = Fraction(free.n)
    n3 = Fraction(free.n3)
    m12, m13 = Fraction(free.m12), Fraction(free.m13)
    m22, m23 = Fraction(free.m22), Fraction(free.m23)
    m34, m44 = Fraction(free.m34), Fraction(free.m44)
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    eighth = Fraction(1, 8)
    values = {
        "n1": -m12 * half - m13 * quarter - m22 * half - m23 * quarter
        + m34 * quarter + m44 * half + n * half + n3 * quarter + Fraction(3, 2),
        "n2": m12 * Fraction(3, 4) + m13 * Fraction(3, 8) + m22 * Fraction(3, 4)
        + m23 * Fraction(3, 8) - m34 * Fraction(3, 8) - m44 * Fraction(3, 4)
        + n * quarter - n3 * Fraction(7, 8) - Fraction(5, 4),
        "n3": n3,
        "n4": -m12 * quarter - m13 * eighth - m22 * quarter - m23 * eighth
        + m34 * eighth + m44 * quarter + n * quarter - n3 * Fraction(3, 8) - quarter,
        "m12": m12,
        "m13": m13,
        "m14": -m12 * Fraction(3, 2) - m13 * Fraction(5, 4) - m22 * half
        - m23 * quarter + m34 * quarter + m44 * half + n * half + n3 * quarter
        + Fraction(3, 2),
        "m22": m22,
        "m23": m23,
        "m24": m12 * half + m13 * Fraction(3, 4) - m22 * half - m23 * quarter
        - m34 * Fraction(3, 4) - m44 * Fraction(3, 2) + n * half
        - n3 * Fraction(7, 4) - Fraction(5, 2),
        "m33": -m13 * half - m23 * half - m34 * half + n3 * Fraction(3, 2),
        "m34": m34,
        "m44": m44,
    }
    check_solved_forms()
    return SolvedCensus(free.n, 4, tuple(values.items()))


# ---------------------------------------------------------------------------
# generic elimination cross-check of the hard-coded solved forms


def _eliminate(equations, dependents, free):
    """Solve a square linear system whose right-hand sides are linear forms
    over ``free``; returns {dependent: tuple of Fraction coefficients}."""
    k = len(dependents)
    rows = []
    for dep_coeffs, rhs in equations:
        row = [Fraction(dep_coeffs.get(d, 0)) for d in dependents]
        row += [Fraction(rhs.get(f, 0)) for f in free]
        rows.append(row)
    if len(rows) != k:
        raise DomainViolation("system is not square")
    for col in range(k):
        pivot = next((r for r in range(col, k) if rows[r][col] != 0), None)
        if pivot is None:
            raise DomainViolation("singular census system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(k):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return {dependents[i]: tuple(rows[i][k:]) for i in range(k)}


def _d3_raw_system():
    return [
        ({"n1": 1, "n2": 1}, {"n": 1, "n3": -1}),
        ({"n1": 1, "n2": 2}, {"n": 2, "1": -2, "n3": -3}),
        ({"m12": 1, "m13": 1, "n1": -1}, {}),
        ({"m12": 1, "n2": -2}, {"m22": -2, "m23": -1}),
        ({"m13": 1, "m33": 2}, {"n3": 3, "m23": -1}),
    ]


def _d4_raw_system():
    return [
        ({"n1": 1, "n2": 1, "n4": 1}, {"n": 1, "n3": -1}),
        ({"n1": 1, "n2": 2, "n4": 4}, {"n": 2, "1": -2, "n3": -3}),
        ({"n1": 1, "m14": -1}, {"m12": 1, "m13": 1}),
        ({"n2": 2, "m24": -1}, {"m12": 1, "m22": 2, "m23": 1}),
        ({"m33": 2}, {"n3": 3, "m13": -1, "m23": -1, "m34": -1}),
        ({"m14": 1, "m24": 1, "n4": -4}, {"m34": -1, "m44": -2}),
    ]


def _d3_expected_forms():
    # coefficients over ("1", "n", "n3", "m22", "m23")
    return {
        "n1": (2, 0, 1, 0, 0),
        "n2": (-2, 1, -2, 0, 0),
        "m12": (-4, 2, -4, -2, -1),
        "m13": (6, -2, 5, 2, 1),
        "m33": (-3, 1, -1, -1, -1),
    }


def _d4_expected_forms():
    # coefficients over ("1","n","n3","m12","m13","m22","m23","m34","m44")
    h = Fraction(1, 2)
    q = Fraction(1, 4)
    e = Fraction(1, 8)
    return {
        "n1": (Fraction(3, 2), h, q, -h, -q, -h, -q, q, h),
        "n2": (
            -Fraction(5, 4), q, -Fraction(7, 8), Fraction(3, 4), Fraction(3, 8),
            Fraction(3, 4), Fraction(3, 8), -Fraction(3, 8), -Fraction(3, 4),
        ),
        "n4": (-q, q, -Fraction(3, 8), -q, -e, -q, -e, e, q),
        "m14": (Fraction(3, 2), h, q, -Fraction(3, 2), -Fraction(5, 4), -h, -q, q, h),
        "m24": (
            -Fraction(5, 2), h, -Fraction(7, 4), h, Fraction(3, 4), -h, -q,
            -Fraction(3, 4), -Fraction(3, 2),
        ),
        "m33": (0, 0, Fraction(3, 2), 0, -h, 0, -h, -h, 0),
    }


@lru_cache(maxsize=1)
def check_solved_forms() -> bool:
    """Cross-check the hard-coded solved forms against exact elimination
    of the raw systems; raises on any mismatch.  Runs once per process."""
    solved3 = _eliminate(_d3_raw_system(), D3_DEPENDENT, D3_FREE)
    for name, expected in _d3_expected_forms().items():
        got = solved3[name]
        want = tuple(Fraction(x) for x in expected)
        if got != want:
            raise DomainViolation(f"max-degree-3 solved form mismatch for {name}: {got} vs {want}")
    solved4 = _eliminate(_d4_raw_system(), D4_DEPENDENT, D4_FREE)
    for name, expected in _d4_expected_forms().items():
        got = solved4[name]
        want = tuple(Fraction(x) for x in expected)
        if got != want:
            raise DomainViolation(f"max-degree-4 solved form mismatch for {name}: {got} vs {want}")
    return True


# ---------------------------------------------------------------------------
# GRM at lambda = -2 straight from a census


def grm2_census_d3(c: DegreeCensus) -> Fraction:
    """m33 - m13 for any census with max degree <= 3."""
    if c.max_degree > 3:
        raise DegreeBoundViolated(f"census has max degree {c.max_degree} > 3")
    return Fraction(c.m_(3, 3) - c.m_(1, 3))


def grm2_census_d4(c: DegreeCensus) -> Fraction:
    """3*m12 + m13 + m22 + m34 + 3*m44 - n + n3 - 3 for max degree <= 4."""
    if c.max_degree > 4:
        raise DegreeBoundViolated(f"census has max degree {c.max_degree} > 4")
    return Fraction(
        3 * c.m_(1, 2)
        + c.m_(1, 3)
        + c.m_(2, 2)
        + c.m_(3, 4)
        + 3 * c.m_(4, 4)
        - c.order
        + c.n_(3)
        - 3
    )


# ---------------------------------------------------------------------------
# theorem bounds and optimal-census catalogs


def theorem_bound(delta: int, n: int, lam: RationalLike) -> Fraction:
    """The certified lower bound on GRM over trees of order n with the
    given max degree, as a function of (delta, n, lambda).

    lambda = -2 is certified for delta in {3, 4}; lambda >= -1 for
    3 <= delta <= n-2 via the spider closed form.  Anything else is an
    unsupported regime (for delta >= 5 at lambda = -2 nothing is
    certified; enumeration can still explore it).
    """
    lam = Fraction(lam)
    if lam == -2:
        if delta == 3:
            if n < 7:
                raise DomainViolation("max-degree-3 bound stated for n >= 7")
            return Fraction(-((n - 1) // 3 + 2))
        if delta == 4:
            if n < 5:
                raise DomainViolation("max-degree-4 trees need n >= 5")
            r = n % 4
            if r == 1:
                return Fraction(-(n + 3))
            if r == 2:
                return Fraction(-(n + 2))
            if r == 3:
                return Fraction(-(n + 1))
            return Fraction(-n)
        raise UnsupportedRegime(
            f"no certified bound at lambda=-2 for max degree {delta} (open beyond 4)"
        )
    if lam >= -1:
        if n < 4 or not 3 <= delta <= n - 2:
            raise DomainViolation(
                f"spider bound needs n >= 4 and 3 <= delta <= n-2, got n={n}, delta={delta}"
            )
        return closed_form_spider(n, delta, lam)
    raise UnsupportedRegime(f"no certified bound for lambda={lam}")


def optimal_census_catalog(delta: int, n: int) -> tuple[DegreeCensus, ...]:
    """The censuses derived for equality in the lambda = -2 bounds.

    These are arithmetic consequences of the census systems; whether a
    tree attains each of them is exactly what the verification harness
    checks (for small k some entries are attained by no tree, which the
    harness reports alongside the empty construction families).
    """

    def build(nd: dict[int, int], m: dict[tuple[int, int], int]) -> DegreeCensus:
        c = DegreeCensus(n, {d: v for d, v in nd.items() if v}, {e: v for e, v in m.items() if v})
        c.check()
        return c

    if delta == 3:
        if n < 7:
            raise DomainViolation("max-degree-3 catalog stated for n >= 7")
        k = (n - 1) // 3
        r = n - 3 * k
        entries = [
            build(
                {1: k + 2, 2: k + r - 2, 3: k},
                {(1, 3): k + 2, (2, 2): r - 1, (2, 3): 2 * k - 2},
            )
        ]
        if r == 3:
            entries.append(
                build(
                    {1: k + 3, 2: k - 1, 3: k + 1},
                    {(1, 3): k + 3, (2, 3): 2 * k - 2, (3, 3): 1},
                )
            )
        return tuple(entries)
    if delta == 4:
        if n < 5:
            raise DomainViolation("max-degree-4 trees need n >= 5")
        r = n % 4
        if r == 1:
            k = (n - 1) // 4
            return (
                build({1: 2 * k + 2, 2: k - 1, 4: k}, {(1, 4): 2 * k + 2, (2, 4): 2 * k - 2}),
            )
        if r == 2:
            k = (n - 2) // 4
            return (
                build(
                    {1: 2 * k + 2, 2: k, 4: k},
                    {(1, 4): 2 * k + 2, (2, 2): 1, (2, 4): 2 * k - 2},
                ),
            )
        if r == 3:
            k = (n - 3) // 4
            return (
                build(
                    {1: 2 * k + 2, 2: k + 1, 4: k},
                    {(1, 4): 2 * k + 2, (2, 2): 2, (2, 4): 2 * k - 2},
                ),
            )
        k = n // 4 - 1
        return (
            build(
                {1: 2 * k + 2, 2: k + 2, 4: k},
                {(1, 4): 2 * k + 2, (2, 2): 3, (2, 4): 2 * k - 2},
            ),
            build(
                {1: 2 * k + 4, 2: k - 1, 4: k + 1},
                {(1, 4): 2 * k + 4, (2, 4): 2 * k - 2, (4, 4): 1},
            ),
        )
    raise UnsupportedRegime(f"no equality catalog for max degree {delta}")
