"""Shared fixtures and helpers for the test suite: a seeded pool of
multi-block matroids (direct sums of small uniforms and graphic matroids),
matroid axiom checks, and a couple of named graphs."""

from __future__ import annotations

import random

from matroidbetti import (
    Graph,
    Matroid,
    cycle_matroid,
    direct_sum,
    multi_uniform,
    uniform,
)

SEED = 20260816
SUITE_SIZE = 52


def two_triangles() -> Graph:
    """Two triangles glued at one vertex: the smallest interesting cactus."""
    return Graph(5, ((0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)))


def graph_matroid(vertices: int, edges) -> Matroid:
    return cycle_matroid(Graph(vertices, tuple(edges)))


def _component_pool() -> list[tuple[int, object]]:
    return [
        (1, lambda: uniform(0, 1)),  # a loop
        (1, lambda: uniform(1, 1)),  # a coloop
        (2, lambda: uniform(1, 2)),  # a parallel pair
        (3, lambda: uniform(2, 3)),
        (3, lambda: uniform(1, 3)),
        (3, lambda: graph_matroid(3, ((0, 1), (1, 2), (2, 0)))),
        (4, lambda: uniform(2, 4)),
        (4, lambda: uniform(3, 4)),
        (4, lambda: graph_matroid(4, ((0, 1), (1, 2), (2, 3), (3, 0)))),
        (5, lambda: uniform(2, 5)),
        # the diamond: a 4-cycle with one chord
        (5, lambda: graph_matroid(4, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)))),
        # the complete graph on four vertices
        (6, lambda: graph_matroid(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))),
    ]


def random_multiblock(rng: random.Random) -> Matroid:
    """A direct sum of 2+ connected components with at most 10 elements."""
    pool = _component_pool()
    cap = rng.randint(5, 10)
    chosen = []
    size = 0
    while True:
        fits = [(n, mk) for n, mk in pool if size + n <= cap]
        if not fits or (len(chosen) >= 2 and rng.random() < 0.35):
            break
        n, mk = fits[rng.randrange(len(fits))]
        chosen.append(mk)
        size += n
    while len(chosen) < 2:
        n, mk = pool[rng.randrange(3)]  # only the size <= 2 fillers
        chosen.append(mk)
        size += n
    return direct_sum(*[mk() for mk in chosen])


def multiblock_suite() -> list[Matroid]:
    """The seeded suite: 52 matroids, each with <= 10 elements and >= 2
    connectivity blocks, mixing uniform and graphic components."""
    rng = random.Random(SEED)
    out = [
        direct_sum(uniform(0, 1), uniform(2, 3)),
        direct_sum(uniform(1, 1), uniform(0, 1), uniform(2, 3)),
        direct_sum(uniform(2, 4), uniform(1, 2)),
        multi_uniform([(2, 3), (2, 3)]),
        multi_uniform([(1, 3), (2, 3)]),
        direct_sum(uniform(1, 2), uniform(1, 2), uniform(1, 2)),
        direct_sum(
            graph_matroid(3, ((0, 1), (1, 2), (2, 0))),
            graph_matroid(4, ((0, 1), (1, 2), (2, 3), (3, 0))),
        ),
    ]
    while len(out) < SUITE_SIZE:
        out.append(random_multiblock(rng))
    return out


def rank_table(m: Matroid) -> dict[int, int]:
    return {s: m.rank(s) for s in range(1 << m.n)}


def assert_rank_axioms(m: Matroid, rng: random.Random, samples: int = 200) -> None:
    """Normalization, unit growth, monotonicity and submodularity, either
    exhaustively (small ground sets) or on seeded samples."""
    n = m.n
    full = (1 << n) - 1
    assert m.rank(0) == 0
    if n <= 4:
        pairs = [(a, b) for a in range(1 << n) for b in range(1 << n)]
    else:
        pairs = [
            (rng.randrange(1 << n), rng.randrange(1 << n)) for _ in range(samples)
        ]
    for a, b in pairs:
        ra, rb = m.rank(a), m.rank(b)
        assert 0 <= ra <= a.bit_count()
        assert m.rank(a | b) + m.rank(a & b) <= ra + rb, (
            f"submodularity fails at {a:#x}, {b:#x}"
        )
        if a & b == a:
            assert ra <= rb, f"monotonicity fails at {a:#x} <= {b:#x}"
    subsets = range(1 << n) if n <= 10 else [rng.randrange(1 << n) for _ in range(samples)]
    for s in subsets:
        rs = m.rank(s)
        for e in range(n):
            if not s & (1 << e):
                grown = m.rank(s | (1 << e))
                assert grown in (rs, rs + 1), f"unit growth fails at {s:#x} + {e}"
    assert m.rank(full) == m.full_rank
