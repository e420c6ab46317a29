import pytest

from grmtrees.enumeration import EnumSpec, enumerate_trees
from grmtrees.errors import (
    CycleDetected,
    Disconnected,
    DomainViolation,
    DuplicateEdge,
    NotALeaf,
    SelfLoop,
    SingletonTree,
)
from grmtrees.families import make_path, make_spider, make_star, make_t_opt, make_tt_opt
from grmtrees.trees import (
    build_tree,
    census,
    format_edge_list,
    max_degree,
    parse_edge_list,
    with_edge_subdivided,
    with_leaf_removed,
    with_leaves_attached,
)


def test_build_path3():
    t = build_tree([(0, 1), (1, 2)])
    assert t.order == 3
    assert list(t.edges()) == [(0, 1), (1, 2)]
    assert t.degrees() == (1, 2, 1)


def test_build_rejects_cycle():
    with pytest.raises(CycleDetected):
        build_tree([(0, 1), (1, 2), (2, 0)])


def test_build_rejects_disconnected():
    with pytest.raises(Disconnected):
        build_tree([(0, 1), (2, 3)])


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoop):
        build_tree([(0, 1), (1, 1)])


def test_build_rejects_duplicate_edge():
    with pytest.raises(DuplicateEdge):
        build_tree([(0, 1), (1, 0)])


def test_build_compacts_ids_in_first_appearance_order():
    t = build_tree([(10, 3), (3, 7)])
    # 10 -> 0, 3 -> 1, 7 -> 2
    assert list(t.edges()) == [(0, 1), (1, 2)]


def test_singleton_requires_explicit_order():
    t = build_tree([], order=1)
    assert t.order == 1
    with pytest.raises(DomainViolation):
        build_tree([])
    with pytest.raises(SingletonTree):
        max_degree(t)


def test_max_degree_examples():
    assert max_degree(make_path(6)) == 2
    assert max_degree(make_star(7)) == 6
    assert max_degree(make_spider(9, 4)) == 4


def test_census_path4():
    c = census(make_path(4))
    assert c.n_(1) == 2 and c.n_(2) == 2
    assert c.m_(1, 2) == 2 and c.m_(2, 2) == 1
    c.check()


def test_census_t1_k2():
    c = census(make_t_opt(1, 2)[0])
    assert (c.n_(1), c.n_(2), c.n_(3)) == (4, 1, 2)
    assert c.m_(1, 3) == 4 and c.m_(2, 3) == 2
    c.check()


def test_census_tt1_k2():
    c = census(make_tt_opt(1, 2)[0])
    assert (c.n_(1), c.n_(2), c.n_(4)) == (6, 1, 2)
    assert c.m_(1, 4) == 6 and c.m_(2, 4) == 2
    c.check()


def test_census_symmetric_edge_lookup():
    c = census(make_path(4))
    assert c.m_(2, 1) == c.m_(1, 2) == 2


def test_census_equality_ignores_degree_context():
    # the same counts in a wider max-degree context compare equal
    from grmtrees.trees import DegreeCensus

    a = census(make_path(5))
    b = DegreeCensus(5, {1: 2, 2: 3, 3: 0}, {(1, 2): 2, (2, 2): 2, (3, 3): 0})
    assert a == b and hash(a) == hash(b)


@pytest.mark.parametrize("n", range(2, 13))
def test_census_invariants_over_enumeration(n):
    for t in enumerate_trees(EnumSpec(n)):
        c = census(t)
        assert sum(v for _, v in c.vertex_items()) == n
        assert sum(d * v for d, v in c.vertex_items()) == 2 * (n - 1)
        c.check()


def test_parse_and_format_round_trip():
    text = "# a comment\n\n0 1\n1 2  # trailing\n1 3\n"
    t = parse_edge_list(text)
    assert t.order == 4
    again = parse_edge_list(format_edge_list(t, header="round trip"))
    assert again == t


def test_parse_rejects_garbage():
    with pytest.raises(DomainViolation):
        parse_edge_list("0 1 2\n")
    with pytest.raises(DomainViolation):
        parse_edge_list("a b\n")
    with pytest.raises(DomainViolation):
        parse_edge_list("# nothing\n")


def test_format_round_trip_over_enumeration():
    for t in enumerate_trees(EnumSpec(8)):
        assert census(parse_edge_list(format_edge_list(t))) == census(t)


def test_subdivide_and_attach():
    p3 = make_path(3)
    sub = with_edge_subdivided(p3, 0, 1)
    assert sub.order == 4 and max_degree(sub) == 2
    with pytest.raises(DomainViolation):
        with_edge_subdivided(p3, 0, 2)
    grown = with_leaves_attached(p3, 1, 2)
    assert grown.order == 5 and grown.degree(1) == 4


def test_leaf_removal():
    p4 = make_path(4)
    assert with_leaf_removed(p4, 0).order == 3
    with pytest.raises(NotALeaf):
        with_leaf_removed(p4, 1)
