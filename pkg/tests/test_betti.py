"""Betti tables: the homology sweep against an independent resolution oracle,
the block product, the closed form for circuit unions, and its inversion."""

from itertools import combinations_with_replacement

import pytest

from matroidbetti import (
    BettiTable,
    CycleProfile,
    GF2,
    Matroid,
    PrimeField,
    ValidationError,
    betti,
    block_product_betti,
    cactus_betti,
    cycle_matroid,
    direct_sum,
    dual_min_distance,
    fixture,
    hilbert_check,
    hochster_betti,
    invert_cactus_betti,
    multi_uniform,
    resolve_algorithm,
    uniform,
)

from oracles import convolve_naive, taylor_fine_betti, taylor_global_betti
from util import graph_matroid, multiblock_suite, two_triangles

GF3 = PrimeField(3)


def two_triangles_matroid():
    return cycle_matroid(two_triangles())


# -- small closed-form sanity ---------------------------------------------------


@pytest.mark.parametrize("m_len", [2, 3, 4, 5, 6])
def test_single_circuit_global_vector(m_len):
    # One circuit of length m: exactly m generators and m-1 first syzygies.
    t = hochster_betti(uniform(m_len - 1, m_len))
    assert t.global_ == (m_len, m_len - 1)
    assert t.degrees() == (m_len - 1, m_len)
    assert t.is_linear()


def test_free_matroid_single_generator():
    # Every element a coloop: one basis, so the ideal is principal.
    t = hochster_betti(uniform(4, 4))
    assert t.global_ == (1,)
    assert t.coarse == {(0, 4): 1}
    assert t.degrees() == (4, 4)


def test_rank_zero_gives_unit_ideal_table():
    t = hochster_betti(uniform(0, 3))
    assert t.rank_r == 0
    assert t.global_ == (1,)
    assert t.coarse == {(0, 0): 1}
    tf = hochster_betti(uniform(0, 3), fine=True)
    assert tf.fine == {(0, 0): 1}
    assert hilbert_check(t, uniform(0, 3))


def test_broken_rank_oracle_is_rejected():
    # rank jumps straight from 0 to 1 on the full set: no greedy basis exists,
    # the generating set would be empty, and the sweep refuses to run.
    bogus = Matroid(3, lambda s: 1 if s == 0b111 else 0)
    with pytest.raises(ValidationError, match="zero ideal"):
        hochster_betti(bogus)


def test_resolution_text_rendering():
    assert (
        hochster_betti(uniform(2, 3)).resolution_text()
        == "0 <- S(-2)^3 <- S(-3)^2 <- 0"
    )
    assert hochster_betti(uniform(0, 2)).resolution_text() == "0 <- S <- 0"
    assert hochster_betti(uniform(3, 3)).resolution_text() == "0 <- S(-3)^1 <- 0"


# -- independent oracle: strand-by-strand homology of the Taylor resolution ----


def _oracle_battery():
    tri = graph_matroid(3, [(0, 1), (1, 2), (2, 0)])
    c4 = graph_matroid(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    return [
        uniform(2, 3),
        uniform(1, 3),
        uniform(2, 4),
        uniform(3, 4),
        tri,
        c4,
        two_triangles_matroid(),
        multi_uniform([(1, 2), (2, 3)]),
        direct_sum(uniform(0, 1), uniform(2, 3)),
    ]


@pytest.mark.parametrize("m", _oracle_battery(), ids=lambda m: f"n{m.n}r{m.full_rank}")
def test_sweep_agrees_with_taylor_strand_oracle(m):
    # The oracle resolves the basis-monomial ideal over the rationals with a
    # completely different construction (multigraded strands of the Taylor
    # complex, exact fraction elimination); fine and global tables must match.
    gens = m.bases()
    table = hochster_betti(m, fine=True)
    assert table.fine == taylor_fine_betti(gens)
    assert table.global_ == taylor_global_betti(gens)


def test_two_triangle_fine_multiplicities():
    table = hochster_betti(two_triangles_matroid(), fine=True)
    # 9 generators: one per pair (edge of one triangle, edge of the other)...
    assert sum(v for (i, _), v in table.fine.items() if i == 0) == 9
    # ...multiplicity 2 on each of the two 5-element supports, and 4 on top.
    fives = {s: v for (i, s), v in table.fine.items() if i == 1}
    assert set(fives.values()) == {2}
    assert len(fives) == 6
    assert table.fine[(2, 0b111111)] == 4
    assert table.global_ == (9, 12, 4)


# -- exhaustive sweep vs the linear-diagonal shortcut ---------------------------


@pytest.mark.parametrize(
    "m",
    [
        uniform(1, 3),
        uniform(2, 4),
        uniform(3, 6),
        two_triangles_matroid(),
        multi_uniform([(2, 3), (1, 2)]),
        graph_matroid(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),
    ],
    ids=lambda m: f"n{m.n}r{m.full_rank}",
)
def test_exhaustive_sweep_equals_diagonal_sweep(m):
    # The shortcut only visits supports of size rank + i; the exhaustive mode
    # visits every (i, subset) pair and keeps whatever is nonzero. They must
    # produce identical tables, which also certifies off-diagonal vanishing.
    fast = hochster_betti(m, fine=True)
    full = hochster_betti(m, fine=True, exhaustive=True)
    assert full.coarse == fast.coarse
    assert full.fine == fast.fine
    assert full.global_ == fast.global_
    assert fast.is_linear()


@pytest.mark.parametrize("fld", [GF3, PrimeField(5)])
def test_field_independence(fld):
    for m in [uniform(2, 4), two_triangles_matroid(), multi_uniform([(1, 2), (2, 3)])]:
        over_2 = hochster_betti(m, GF2, fine=True)
        over_p = hochster_betti(m, fld, fine=True)
        assert over_2.coarse == over_p.coarse
        assert over_2.fine == over_p.fine


# -- block product ---------------------------------------------------------------


def test_block_product_on_two_triangles():
    tri = hochster_betti(uniform(2, 3))
    prod = block_product_betti([tri, tri])
    assert prod.global_ == (9, 12, 4)
    assert prod.rank_r == 4
    assert prod.n == 6
    assert prod.agrees_with(hochster_betti(two_triangles_matroid()))


def test_block_product_single_table_is_identity():
    tri = hochster_betti(uniform(2, 3))
    assert block_product_betti([tri]) is tri


def test_block_product_with_coloop_block():
    coloop = hochster_betti(uniform(1, 1))
    tri = hochster_betti(uniform(2, 3))
    prod = block_product_betti([tri, coloop])
    # A coloop shifts every degree up by one but keeps the vector.
    assert prod.global_ == (3, 2)
    assert prod.rank_r == 3
    assert prod.coarse == {(0, 3): 3, (1, 4): 2}
    assert prod.agrees_with(hochster_betti(multi_uniform([(2, 3), (1, 1)])))


def test_block_product_matches_naive_convolution():
    for m in multiblock_suite()[:8]:
        tables = [hochster_betti(b.matroid) for b in m.blocks().blocks]
        prod = block_product_betti(tables)
        assert list(prod.global_) == convolve_naive([list(t.global_) for t in tables])
        assert prod.rank_r == m.full_rank
        assert prod.n == m.n
        assert prod.agrees_with(hochster_betti(m))


def test_block_product_rejects_nonlinear_input():
    bad = BettiTable(2, 4, {(0, 2): 1, (1, 4): 1}, (1, 1), None)
    with pytest.raises(ValidationError, match="not linear"):
        block_product_betti([bad, bad])
    with pytest.raises(ValueError, match="at least one"):
        block_product_betti([])


# -- closed form for circuit unions -----------------------------------------------


def test_closed_form_example_3_4_5():
    p = CycleProfile([3, 4, 5])
    assert p.sigma == (1, 12, 47, 60)
    t = cactus_betti(p)
    assert t.global_ == (60, 133, 98, 24)
    assert t.rank_r == 9
    assert t.n == 12
    assert t.degrees() == (9, 12)


def test_closed_form_matches_block_product_of_sweeps():
    for t_cycles in range(1, 5):
        for lengths in combinations_with_replacement(range(2, 7), t_cycles):
            closed = cactus_betti(CycleProfile(lengths))
            swept = block_product_betti(
                [hochster_betti(uniform(l - 1, l)) for l in lengths]
            )
            assert closed.agrees_with(swept), lengths
            assert closed.global_ == swept.global_, lengths


@pytest.mark.parametrize("lengths", [[1], [1, 3], [1, 1, 4]])
def test_closed_form_with_loops(lengths):
    # Loops contribute trailing zeros that the closed form keeps.
    closed = cactus_betti(CycleProfile(lengths))
    assert len(closed.global_) == len(lengths) + 1
    loops = sum(1 for x in lengths if x == 1)
    assert all(v == 0 for v in closed.global_[len(lengths) + 1 - loops :])
    blocks = [
        hochster_betti(uniform(0, 1) if l == 1 else uniform(l - 1, l))
        for l in lengths
    ]
    swept = block_product_betti(blocks) if len(blocks) > 1 else blocks[0]
    assert closed.agrees_with(swept)


def test_closed_form_needs_a_cycle():
    with pytest.raises(ValidationError, match="at least one cycle"):
        cactus_betti(CycleProfile([]))
    with pytest.raises(ValidationError, match=">= 1"):
        CycleProfile([0, 3])


# -- inversion --------------------------------------------------------------------


def test_invert_named_examples():
    assert invert_cactus_betti((60, 133, 98, 24), 0).lengths == (3, 4, 5)
    assert invert_cactus_betti((3, 2, 0), 0).lengths == (3,)
    assert invert_cactus_betti((3, 2, 0), 1).lengths == (1, 3)
    with pytest.raises(ValidationError, match="not a cactus Betti vector"):
        invert_cactus_betti((9, 13, 4), 0)


def test_invert_roundtrip_small_profiles():
    for t_cycles in range(1, 4):
        for lengths in combinations_with_replacement(range(1, 10), t_cycles):
            p = CycleProfile(lengths)
            back = invert_cactus_betti(cactus_betti(p).global_, p.loops)
            assert back == p, lengths


def test_invert_rejects_malformed_vectors():
    with pytest.raises(ValidationError, match="negative"):
        invert_cactus_betti((3, -2), 0)
    with pytest.raises(ValidationError, match="no nonzero"):
        invert_cactus_betti((0, 0), 0)
    with pytest.raises(ValidationError, match="no nonzero"):
        invert_cactus_betti((), 0)
    with pytest.raises(ValidationError, match="sigma_0"):
        invert_cactus_betti((1, 1), 0)
    with pytest.raises(ValueError, match="loop count"):
        invert_cactus_betti((3, 2), -1)
    with pytest.raises(ValueError, match="loop count"):
        invert_cactus_betti((3, 2), True)


# -- dispatcher -------------------------------------------------------------------


def test_auto_algorithm_selection():
    assert resolve_algorithm(two_triangles_matroid()) == "blocks"
    assert resolve_algorithm(uniform(4, 5)) == "cactus"
    assert resolve_algorithm(cycle_matroid(fixture("g3"))) == "hochster"
    # A fine table pins auto to the sweep, the only fine producer.
    assert resolve_algorithm(two_triangles_matroid(), fine=True) == "hochster"
    with pytest.raises(ValueError, match="fine tables"):
        resolve_algorithm(uniform(2, 3), "blocks", fine=True)
    with pytest.raises(ValueError, match="unknown algorithm"):
        resolve_algorithm(uniform(2, 3), "fastest")


def test_dispatcher_routes_agree():
    m = two_triangles_matroid()
    auto = betti(m)
    assert auto.agrees_with(betti(m, "hochster"))
    assert auto.agrees_with(betti(m, "blocks"))
    assert auto.agrees_with(betti(m, "cactus"))
    c5 = uniform(4, 5)
    assert betti(c5).global_ == (5, 4)
    assert betti(c5, "cactus").agrees_with(betti(c5, "hochster"))


def test_cactus_algorithm_rejects_non_cactus():
    with pytest.raises(ValidationError, match="cactus algorithm requires"):
        betti(cycle_matroid(fixture("g1")), "cactus")


def test_cactus_algorithm_on_free_matroid():
    t = betti(uniform(3, 3), "cactus")
    assert t.global_ == (1,)
    assert t.coarse == {(0, 3): 1}
    assert t.agrees_with(betti(uniform(3, 3), "hochster"))


def test_fine_dispatch_produces_fine_table():
    t = betti(two_triangles_matroid(), fine=True)
    assert t.fine is not None
    assert t.global_ == (9, 12, 4)


# -- consistency checks and the dual distance ---------------------------------------


def test_hilbert_series_check_accepts_true_tables():
    for m in [uniform(2, 3), uniform(3, 3), two_triangles_matroid()]:
        assert hilbert_check(betti(m, "hochster"), m)


def test_hilbert_series_check_rejects_tampered_tables():
    m = uniform(2, 3)
    wrong_count = BettiTable(2, 3, {(0, 2): 3, (1, 3): 3}, (3, 3), None)
    assert not hilbert_check(wrong_count, m)
    wrong_degree = BettiTable(2, 3, {(0, 2): 3, (1, 4): 2}, (3, 2), None)
    assert not hilbert_check(wrong_degree, m)


def test_dual_minimum_distance_small_cases():
    assert dual_min_distance(uniform(2, 3)) == 2
    assert dual_min_distance(uniform(1, 3)) == 3
    assert dual_min_distance(multi_uniform([(1, 1), (2, 3)])) == 1
    with pytest.raises(ValidationError, match="no circuits"):
        dual_min_distance(uniform(0, 4))
