import random

import pytest

from conftest import rsys
from lkrep import (
    InvalidType,
    TooLarge,
    TypeSpec,
    UnknownRoot,
    max_inversion_subset,
    weyl_from_word,
)
from lkrep.roots import NotClosed, RootSystem


@pytest.mark.parametrize(
    "family,rank,count",
    [
        ("A", 1, 1),
        ("A", 2, 3),
        ("A", 3, 6),
        ("D", 4, 12),
        ("D", 5, 20),
        ("E", 6, 36),
        ("E", 7, 63),
        ("E", 8, 120),
    ],
)
def test_positive_root_counts(family, rank, count):
    assert rsys(family, rank).num_roots == count


@pytest.mark.parametrize("family,rank", [("A", 0), ("D", 3), ("E", 5), ("E", 9), ("B", 2)])
def test_invalid_types_rejected(family, rank):
    with pytest.raises(InvalidType):
        RootSystem.build(TypeSpec(family, rank))


def test_root_order_is_height_then_lex():
    rs = rsys("A", 2)
    assert rs.roots == ((0, 1), (1, 0), (1, 1))


def test_inner_products():
    rs = rsys("A", 2)
    a1, a2, a12 = rs.simple_index[1], rs.simple_index[2], rs.root_index((1, 1))
    assert rs.inner(a1, a1) == 2
    assert rs.inner(a1, a2) == -1
    assert rs.inner(a1, a12) == 1
    with pytest.raises(UnknownRoot):
        rs.root_index((2, 0))


def test_simply_laced_pairing_table():
    for family, rank in [("A", 3), ("D", 4), ("E", 6)]:
        rs = rsys(family, rank)
        for i in range(rs.num_roots):
            assert rs.inner(i, i) == 2
            for j in range(i):
                assert rs.inner(i, j) == rs.inner(j, i)
                assert rs.inner(i, j) in (-1, 0, 1)


def test_reflection_action():
    rs = rsys("A", 2)
    a1, a2, a12 = rs.simple_index[1], rs.simple_index[2], rs.root_index((1, 1))
    assert rs.reflect(1, a1) == (a1, -1)
    assert rs.reflect(1, a2) == (a12, 1)
    assert rs.reflect(1, a12) == (a2, 1)


def test_inversion_sets():
    rs = rsys("A", 2)
    assert rs.identity_element().inversion_set() == frozenset()
    r1 = rs.simple_reflection(1)
    assert r1.inversion_set() == frozenset({rs.simple_index[1]})
    w0 = rs.longest_element()
    assert w0.inversion_set() == frozenset(range(rs.num_roots))
    assert w0.reduced_word() == (1, 2, 1)


def test_longest_element_lengths():
    for family, rank in [("A", 1), ("A", 3), ("D", 4)]:
        rs = rsys(family, rank)
        w0 = rs.longest_element()
        assert w0.length() == rs.num_roots
        assert len(w0.reduced_word()) == rs.num_roots


def test_length_matches_inversion_count_on_random_products():
    rng = random.Random(7)
    for family, rank in [("A", 3), ("D", 4), ("E", 6)]:
        rs = rsys(family, rank)
        for _ in range(25):
            word = [rng.randint(1, rank) for _ in range(rng.randint(0, 12))]
            w = weyl_from_word(rs, word)
            assert w.length() == len(w.inversion_set())
            # recompute length by greedy descent
            assert w.length() == len(w.reduced_word())
            assert weyl_from_word(rs, w.reduced_word()) == w


def test_inversion_sets_are_closed():
    for family, rank in [("A", 2), ("A", 3)]:
        rs = rsys(family, rank)
        for w in rs.weyl_group():
            assert rs.is_closed(w.inversion_set())
    rng = random.Random(11)
    rs = rsys("E", 6)
    for _ in range(10):
        w = weyl_from_word(rs, [rng.randint(1, 6) for _ in range(15)])
        assert rs.is_closed(w.inversion_set())


def test_weak_order_iff_inclusion_exhaustive():
    for family, rank in [("A", 2), ("A", 3)]:
        rs = rsys(family, rank)
        group = rs.weyl_group()
        for v in group:
            for w in group:
                u = v.inverse() * w
                prefix = v.length() + u.length() == w.length()
                assert prefix == v.weak_leq(w)


def test_weak_order_examples():
    rs = rsys("A", 2)
    r1 = rs.simple_reflection(1)
    r2 = rs.simple_reflection(2)
    r1r2 = r1 * r2
    assert rs.identity_element().weak_leq(r1r2)
    assert r1.weak_leq(r1r2)
    assert not r1.weak_leq(r2)


def test_closed_set_enumeration_counts():
    assert sum(1 for _ in rsys("A", 1).closed_sets()) == 2
    # of the 8 subsets in A2 only {a1, a2} fails closure
    assert sum(1 for _ in rsys("A", 2).closed_sets()) == 7
    # frozen from an independent brute-force filter over 2^6 subsets
    assert sum(1 for _ in rsys("A", 3).closed_sets()) == 40


def test_closed_sets_too_large():
    with pytest.raises(TooLarge):
        list(rsys("A", 5).closed_sets())  # 15 roots > default budget of 2^12


def test_max_inversion_subset():
    rs = rsys("A", 2)
    ident = rs.identity_element()
    assert max_inversion_subset(rs, frozenset()) == ident
    assert max_inversion_subset(rs, frozenset({rs.simple_index[1]})) == rs.simple_reflection(1)
    # the non-simple root alone admits no nonempty inversion set
    assert max_inversion_subset(rs, frozenset({rs.root_index((1, 1))})) == ident
    with pytest.raises(NotClosed):
        max_inversion_subset(
            rs, frozenset({rs.simple_index[1], rs.simple_index[2]})
        )


def test_max_inversion_subset_is_maximal_exhaustive():
    for family, rank in [("A", 2), ("A", 3)]:
        rs = rsys(family, rank)
        group = rs.weyl_group()
        for closed in rs.closed_sets():
            best = max_inversion_subset(rs, closed)
            assert best.inversion_set() <= closed
            for w in group:
                if w.inversion_set() <= closed:
                    assert w.inversion_set() <= best.inversion_set()


def test_weyl_group_orders():
    assert len(rsys("A", 3).weyl_group()) == 24
    assert len(rsys("D", 4).weyl_group()) == 192
