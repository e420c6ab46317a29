import pytest

from grmtrees.canonical import canonical_code
from grmtrees.enumeration import (
    DEFAULT_ORDER_GUARD,
    EnumSpec,
    count_trees,
    enumerate_trees,
    trees_of_order,
)
from grmtrees.errors import DomainViolation, LimitExceeded
from grmtrees.families import make_spider, make_t_opt
from grmtrees.trees import max_degree

from oracles import prufer_iso_codes

# unlabeled free trees, n = 1..12
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551)


def test_unconstrained_counts():
    got = [count_trees(EnumSpec(n)) for n in range(1, 13)]
    assert got == list(FREE_TREE_COUNTS)


def test_small_spec_examples():
    assert count_trees(EnumSpec(4)) == 2
    assert count_trees(EnumSpec(7)) == 11
    assert count_trees(EnumSpec(6, 2)) == 1
    assert count_trees(EnumSpec(5, 4, exact_degree=True)) == 1


@pytest.mark.parametrize("n", range(2, 9))
def test_matches_prufer_oracle_exactly(n):
    mine = {canonical_code(t) for t in enumerate_trees(EnumSpec(n))}
    assert mine == prufer_iso_codes(n)


def test_stream_is_strictly_increasing():
    for n in range(2, 12):
        codes = [canonical_code(t) for t in enumerate_trees(EnumSpec(n))]
        assert all(a < b for a, b in zip(codes, codes[1:]))


def test_trees_of_order_pairs_are_consistent():
    for code, t in trees_of_order(9):
        assert canonical_code(t) == code


def test_n7_exact3_contains_known_members():
    codes = {canonical_code(t) for t in enumerate_trees(EnumSpec(7, 3, exact_degree=True))}
    assert canonical_code(make_t_opt(1, 2)[0]) in codes
    assert canonical_code(make_spider(7, 3)) in codes


@pytest.mark.parametrize("n", range(2, 11))
@pytest.mark.parametrize("cap", (2, 3, 4))
def test_filter_consistency(n, cap):
    capped = {canonical_code(t) for t in enumerate_trees(EnumSpec(n, cap))}
    filtered = {
        canonical_code(t)
        for t in enumerate_trees(EnumSpec(n))
        if max_degree(t) <= cap
    }
    assert capped == filtered


@pytest.mark.parametrize("n", range(3, 13))
def test_exact_degree_partition(n):
    total = count_trees(EnumSpec(n))
    parts = [count_trees(EnumSpec(n, d, exact_degree=True)) for d in range(2, n)]
    assert sum(parts) == total


def test_exact_degree_agrees_with_post_filter():
    for n in range(3, 11):
        for d in range(2, n):
            exact = {canonical_code(t) for t in enumerate_trees(EnumSpec(n, d, True))}
            filtered = {
                canonical_code(t)
                for t in enumerate_trees(EnumSpec(n))
                if max_degree(t) == d
            }
            assert exact == filtered


def test_counts_agree_with_materialization():
    for n in range(1, 12):
        assert count_trees(EnumSpec(n)) == sum(1 for _ in enumerate_trees(EnumSpec(n)))
        for d in (2, 3, 4):
            if n >= 3 or d <= n - 1:
                spec = EnumSpec(n, d)
                assert count_trees(spec) == sum(1 for _ in enumerate_trees(spec))
                if n >= 2:
                    spec = EnumSpec(n, d, exact_degree=True)
                    assert count_trees(spec) == sum(1 for _ in enumerate_trees(spec))


def test_order_guard():
    with pytest.raises(LimitExceeded):
        list(enumerate_trees(EnumSpec(DEFAULT_ORDER_GUARD + 1)))
    with pytest.raises(LimitExceeded):
        count_trees(EnumSpec(DEFAULT_ORDER_GUARD + 1))
    # explicit override allows it
    assert count_trees(EnumSpec(27, 2), order_guard=27) == 1


def test_enum_spec_validation():
    with pytest.raises(DomainViolation):
        EnumSpec(0)
    with pytest.raises(DomainViolation):
        EnumSpec(5, 1)
    with pytest.raises(DomainViolation):
        EnumSpec(5, exact_degree=True)
