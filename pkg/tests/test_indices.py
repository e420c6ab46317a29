import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grmtrees.enumeration import EnumSpec, enumerate_trees
from grmtrees.errors import DomainViolation, SingletonTree
from grmtrees.families import make_path, make_spider, make_star, make_t_opt
from grmtrees.indices import (
    census_grm,
    closed_form,
    closed_form_path,
    closed_form_spider,
    closed_form_star,
    edge_weights,
    grm,
    m1,
    m2,
    parse_rational,
)
from grmtrees.trees import build_tree, census

from oracles import random_prufer_tree

LAMBDAS = tuple(Fraction(x) for x in ("-2", "-1", "-1/2", "0", "1/3", "1", "2"))


def test_grm_examples():
    assert grm(make_path(5), -1) == 2
    assert grm(make_star(6), -1) == 0
    assert grm(make_t_opt(1, 2)[0], -2) == -4


def test_m1_m2_examples():
    p4 = make_path(4)
    assert m1(p4) == 10 and m2(p4) == 8
    s5 = make_star(5)
    assert m1(s5) == 20 and m2(s5) == 16


def test_grm_at_zero_is_m2():
    for t in enumerate_trees(EnumSpec(8)):
        assert grm(t, 0) == m2(t)


def test_singleton_rejected():
    one = build_tree([], order=1)
    for fn in (m1, m2):
        with pytest.raises(SingletonTree):
            fn(one)
    with pytest.raises(SingletonTree):
        grm(one, 0)


@pytest.mark.parametrize("n", range(2, 11))
def test_identity_exhaustive_small(n):
    for t in enumerate_trees(EnumSpec(n)):
        a, b, e = m2(t), m1(t), n - 1
        for lam in LAMBDAS:
            assert grm(t, lam) == a + lam * b + lam * lam * e


def test_identity_on_seeded_random_trees():
    # 1000 random labeled trees up to 64 vertices, all seven lambdas
    rng = random.Random(20240817)
    for _ in range(1000):
        n = rng.randrange(2, 65)
        t = random_prufer_tree(rng, n)
        a, b, e = m2(t), m1(t), n - 1
        for lam in LAMBDAS:
            assert grm(t, lam) == a + lam * b + lam * lam * e


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_identity_property(data):
    n = data.draw(st.integers(min_value=2, max_value=32))
    seed = data.draw(st.integers(min_value=0, max_value=10**6))
    lam = Fraction(
        data.draw(st.integers(min_value=-8, max_value=8)),
        data.draw(st.integers(min_value=1, max_value=5)),
    )
    t = random_prufer_tree(random.Random(seed), n)
    assert grm(t, lam) == m2(t) + lam * m1(t) + lam * lam * (n - 1)


@pytest.mark.parametrize("n", range(2, 11))
def test_census_grm_agrees(n):
    for t in enumerate_trees(EnumSpec(n)):
        c = census(t)
        for lam in LAMBDAS:
            assert census_grm(c, lam) == grm(t, lam)


def test_deg3_trees_reduce_to_m33_minus_m13():
    for n in range(3, 12):
        for t in enumerate_trees(EnumSpec(n, 3)):
            c = census(t)
            assert grm(t, -2) == c.m_(3, 3) - c.m_(1, 3)


def test_edge_weight_table():
    w = edge_weights(Fraction(-2), 4)
    for (i, j), v in w.items():
        assert v == 4 - 2 * (i + j) + i * j
        assert w[(i, j)] == (i + Fraction(-2)) * (j + Fraction(-2))
    assert all(w[(i, j)] == 0 for (i, j) in w if i == 2 or j == 2)
    assert w[(1, 3)] == -1 and w[(3, 3)] == 1 and w[(1, 4)] == -2 and w[(4, 4)] == 4


def test_closed_forms_match_constructions():
    for lam in LAMBDAS:
        for n in range(3, 31):
            assert closed_form_path(n, lam) == grm(make_path(n), lam)
        for n in range(2, 31):
            assert closed_form_star(n, lam) == grm(make_star(n), lam)
        for delta in range(3, 9):
            for n in range(delta + 2, 31):
                assert closed_form_spider(n, delta, lam) == grm(make_spider(n, delta), lam)


def test_closed_form_examples():
    assert closed_form("path", 4, 0) == 8
    assert closed_form("spider", 7, 0, delta=3) == 22
    assert closed_form("spider", 8, -1, delta=3) == 5
    assert closed_form("spider", 8, -1, delta=3) == grm(make_spider(8, 3), -1)


def test_closed_form_domains():
    with pytest.raises(DomainViolation):
        closed_form_path(2, 0)
    with pytest.raises(DomainViolation):
        closed_form_spider(5, 4, 0)  # needs n >= delta + 2
    with pytest.raises(DomainViolation):
        closed_form_spider(9, 2, 0)
    with pytest.raises(DomainViolation):
        closed_form("spider", 9, 0)  # delta missing


def test_parse_rational():
    assert parse_rational("-2") == -2
    assert parse_rational("1/3") == Fraction(1, 3)
    assert parse_rational(" -7/2 ") == Fraction(-7, 2)
    for bad in ("0.5", "1e3", "x", "1/0"):
        with pytest.raises(DomainViolation):
            parse_rational(bad)
