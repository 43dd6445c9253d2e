"""Matroid core: rank oracles, bases, circuits, duality, restriction,
blocks, and the constructors."""

import random

import pytest

from matroidbetti import (
    Matroid,
    ValidationError,
    direct_sum,
    from_bases,
    mask_of,
    multi_uniform,
    uniform,
)

from util import assert_rank_axioms, graph_matroid, multiblock_suite, two_triangles


def test_uniform_basics():
    m = uniform(2, 4)
    assert m.n == 4
    assert m.full_rank == 2
    assert len(m.bases()) == 6
    assert all(b.bit_count() == 2 for b in m.bases())
    # circuits of U(2,4) are exactly the 3-element subsets
    assert sorted(m.circuits()) == sorted(
        mask_of(c) for c in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    )


def test_uniform_degenerate():
    loops = uniform(0, 3)
    assert loops.full_rank == 0
    assert loops.bases() == (0,)
    assert loops.circuits() == (1, 2, 4)
    free = uniform(3, 3)
    assert free.bases() == (0b111,)
    assert free.circuits() == ()
    with pytest.raises(ValueError):
        uniform(4, 3)
    with pytest.raises(ValueError):
        uniform(-1, 3)


def test_ground_set_cap():
    with pytest.raises(ValueError):
        uniform(2, 65)
    with pytest.raises(ValueError):
        Matroid(-1, lambda s: 0)


def test_rank_validates_subset():
    m = uniform(2, 4)
    with pytest.raises(ValueError):
        m.rank(1 << 4)
    with pytest.raises(ValueError):
        m.rank(-1)


def test_rank_axioms_on_standard_examples():
    rng = random.Random(7)
    for m in [
        uniform(2, 4),
        uniform(0, 2),
        uniform(3, 3),
        graph_matroid(3, ((0, 1), (1, 2), (2, 0))),
        graph_matroid(5, two_triangles().edges),
        multi_uniform([(2, 3), (2, 3)]),
    ]:
        assert_rank_axioms(m, rng)


def test_rank_axioms_on_seeded_suite_sample():
    rng = random.Random(11)
    suite = multiblock_suite()
    for m in suite[:12]:
        assert_rank_axioms(m, rng, samples=80)


def test_dual_rank_and_involution():
    m = uniform(2, 5)
    ms = m.dual()
    assert ms.full_rank == 3
    # dual of a uniform matroid is the complementary uniform matroid
    expected = uniform(3, 5)
    for s in range(1 << 5):
        assert ms.rank(s) == expected.rank(s)
    back = ms.dual()
    for s in range(1 << 5):
        assert back.rank(s) == m.rank(s)


def test_dual_bases_are_complements():
    m = graph_matroid(5, two_triangles().edges)
    full = m.full_mask
    assert sorted(m.dual().bases()) == sorted(full ^ b for b in m.bases())


def test_restriction_relabels():
    m = multi_uniform([(2, 3), (1, 2)])
    sub = m.restrict(mask_of((3, 4)))
    assert sub.n == 2
    assert sub.labels == (3, 4)
    assert sub.full_rank == 1
    assert sub.circuits() == (0b11,)


def test_circuits_of_graphs():
    # triangle with a pendant edge: the only circuit is the triangle
    m = graph_matroid(4, ((0, 1), (1, 2), (2, 0), (2, 3)))
    assert m.circuits() == (0b0111,)
    # a loop is a one-element circuit, a parallel pair a two-element one
    m2 = graph_matroid(2, ((0, 0), (0, 1), (0, 1)))
    assert m2.circuits() == (0b001, 0b110)


def test_blocks_two_triangles():
    m = graph_matroid(5, two_triangles().edges)
    part = m.blocks()
    assert part.masks() == (0b000111, 0b111000)
    assert [b.matroid.full_rank for b in part.blocks] == [2, 2]


def test_blocks_with_singletons():
    m = direct_sum(uniform(2, 4), uniform(0, 1), uniform(1, 1))
    part = m.blocks()
    assert part.masks() == (0b001111, 0b010000, 0b100000)
    kinds = [(b.matroid.n, b.matroid.full_rank) for b in part.blocks]
    assert kinds == [(4, 2), (1, 0), (1, 1)]


def test_blocks_cover_ground_set():
    for m in multiblock_suite()[:20]:
        part = m.blocks()
        assert len(part.blocks) >= 2
        union = 0
        for b in part.blocks:
            assert union & b.members == 0
            union |= b.members
        assert union == m.full_mask


def test_direct_sum_ranks_add():
    rng = random.Random(3)
    a, b = uniform(2, 4), graph_matroid(3, ((0, 1), (1, 2), (2, 0)))
    m = direct_sum(a, b)
    assert m.n == 7
    assert m.full_rank == 4
    for _ in range(100):
        sa = rng.randrange(1 << 4)
        sb = rng.randrange(1 << 3)
        assert m.rank(sa | (sb << 4)) == a.rank(sa) + b.rank(sb)


def test_multi_uniform_matches_direct_sum():
    m1 = multi_uniform([(2, 3), (3, 4)])
    m2 = direct_sum(uniform(2, 3), uniform(3, 4))
    for s in range(1 << 7):
        assert m1.rank(s) == m2.rank(s)


def test_from_bases_uniform():
    m = from_bases(3, [(0, 1), (0, 2), (1, 2)])
    ref = uniform(2, 3)
    for s in range(1 << 3):
        assert m.rank(s) == ref.rank(s)
    assert m.provenance == "explicit_bases"


def test_from_bases_rejects_non_matroid():
    # {0,1} and {2,3} violate the exchange axiom on 4 elements
    with pytest.raises(ValidationError, match="exchange"):
        from_bases(4, [(0, 1), (2, 3)])


def test_from_bases_rejects_malformed():
    with pytest.raises(ValidationError):
        from_bases(3, [])
    with pytest.raises(ValidationError):
        from_bases(3, [(0, 1), (0, 1, 2)])
    with pytest.raises(ValueError):
        from_bases(3, [(0, 5)])


def test_bases_count_spanning_trees():
    # the number of bases of a cycle matroid is the spanning tree count
    m = graph_matroid(5, two_triangles().edges)
    assert len(m.bases()) == 9
    k4 = graph_matroid(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    assert len(k4.bases()) == 16  # Cayley: 4^(4-2)
