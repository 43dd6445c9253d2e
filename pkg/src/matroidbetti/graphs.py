"""Graphs, their cycle matroids, and cactus recognition.

Internally vertices are 0-indexed; the JSON and edge-list text formats are
1-indexed because that is how such inputs are usually written by hand. The
ground set of the cycle matroid is the edge list in order, so everything the
rest of the library computes (Betti tables, weights, block decompositions)
is indexed by edge positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import random

from .betti import CycleProfile
from .bitset import bits
from .errors import ValidationError
from .matroid import Matroid


@dataclass(frozen=True)
class Graph:
    """A finite multigraph; parallel edges and self-loops are allowed."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.vertex_count, int) or isinstance(self.vertex_count, bool):
            raise ValueError(f"vertex_count must be an int, got {self.vertex_count!r}")
        if self.vertex_count < 1:
            raise ValueError(f"vertex_count must be >= 1, got {self.vertex_count}")
        norm = []
        for e in self.edges:
            pair = tuple(e)
            if len(pair) != 2 or not all(
                isinstance(v, int) and not isinstance(v, bool) for v in pair
            ):
                raise ValueError(f"edge {e!r} is not a pair of vertex indices")
            u, v = pair
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(
                    f"edge {e!r} out of range for {self.vertex_count} vertices"
                )
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @staticmethod
    def from_json_dict(data: dict) -> "Graph":
        if not isinstance(data, dict):
            raise ValueError(f"graph JSON must be an object, got {type(data).__name__}")
        try:
            vertices = data["vertices"]
            edges = data["edges"]
        except KeyError as exc:
            raise ValueError(f"graph JSON is missing the {exc.args[0]!r} key") from None
        if not isinstance(vertices, int) or isinstance(vertices, bool):
            raise ValueError(f"'vertices' must be an int, got {vertices!r}")
        if not isinstance(edges, list):
            raise ValueError("'edges' must be a list of [u, v] pairs")
        zero_indexed = []
        for e in edges:
            if not isinstance(e, (list, tuple)) or len(e) != 2:
                raise ValueError(f"edge {e!r} is not a [u, v] pair")
            u, v = e
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v)):
                raise ValueError(f"edge {e!r} has non-integer endpoints")
            if not (1 <= u <= vertices and 1 <= v <= vertices):
                raise ValueError(
                    f"edge {e!r} out of range 1..{vertices} (the format is 1-indexed)"
                )
            zero_indexed.append((u - 1, v - 1))
        return Graph(vertices, tuple(zero_indexed))

    def to_json_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": [[u + 1, v + 1] for u, v in self.edges],
        }

    @staticmethod
    def from_edge_text(text: str) -> "Graph":
        """Parse a 1-indexed edge list: one ``u v`` pair per line, ``#``
        comments and blank lines ignored; the vertex count is the largest
        label that appears."""
        pairs = []
        top = 0
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer vertex in {raw!r}") from None
            if u < 1 or v < 1:
                raise ValueError(f"line {lineno}: vertices are 1-indexed, got {raw!r}")
            top = max(top, u, v)
            pairs.append((u - 1, v - 1))
        if not pairs:
            raise ValueError("edge list is empty")
        return Graph(top, tuple(pairs))


def cycle_matroid(graph: Graph) -> Matroid:
    """The cycle matroid on the edge set: the rank of an edge subset is the
    size of a spanning forest of the subgraph it induces."""
    edges = graph.edges

    def rank_fn(mask: int) -> int:
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            root = x
            while parent.setdefault(root, root) != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        rank = 0
        for e in bits(mask):
            ru, rv = find(edges[e][0]), find(edges[e][1])
            if ru != rv:
                parent[ru] = rv
                rank += 1
        return rank

    return Matroid(len(edges), rank_fn, provenance="cycle_matroid")


@dataclass(frozen=True)
class CactusCertificate:
    """Outcome of cactus recognition on a connected graph.

    ``cycles`` holds the edge masks of the blocks that are circuits (self-
    loops appear here as single-bit masks), ``bridges`` the single coloop
    edges, and ``offending`` the blocks that are neither, which is nonempty
    exactly when ``is_cactus`` is False.
    """

    is_cactus: bool
    cycles: tuple[int, ...]
    bridges: tuple[int, ...]
    offending: tuple[int, ...]

    @property
    def loops(self) -> int:
        return sum(1 for c in self.cycles if c.bit_count() == 1)

    def profile(self) -> CycleProfile:
        if not self.is_cactus:
            raise ValidationError(
                "graph is not a cactus: some block is not a single cycle "
                f"(offending edge masks: {list(self.offending)})"
            )
        return CycleProfile(c.bit_count() for c in self.cycles)


def is_cactus(graph: Graph) -> CactusCertificate:
    """Decide whether a connected graph is a cactus (every edge lies on at
    most one cycle) by checking that every block of its cycle matroid is a
    circuit or a single coloop.

    Raises ValidationError when the graph is not connected, since the notion
    is only defined for connected graphs here.
    """
    reached = {0}
    frontier = [0]
    while frontier:
        u = frontier.pop()
        for a, b in graph.edges:
            if a == u and b not in reached:
                reached.add(b)
                frontier.append(b)
            elif b == u and a not in reached:
                reached.add(a)
                frontier.append(a)
    if len(reached) != graph.vertex_count:
        missing = sorted(set(range(graph.vertex_count)) - reached)
        raise ValidationError(
            f"graph is not connected: vertices {[v + 1 for v in missing]} are "
            "unreachable from vertex 1"
        )
    m = cycle_matroid(graph)
    cycles: list[int] = []
    bridges: list[int] = []
    offending: list[int] = []
    for block in m.blocks().blocks:
        bm = block.matroid
        k = bm.n
        if k == 1:
            if bm.full_rank == 0:
                cycles.append(block.members)  # a self-loop
            else:
                bridges.append(block.members)
            continue
        full = bm.full_mask
        if bm.rank(full) == k - 1 and all(
            bm.rank(full ^ (1 << e)) == k - 1 for e in range(k)
        ):
            cycles.append(block.members)
        else:
            offending.append(block.members)
    return CactusCertificate(
        is_cactus=not offending,
        cycles=tuple(cycles),
        bridges=tuple(bridges),
        offending=tuple(offending),
    )


def _ring(k: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % k) for i in range(k)]


_FIXTURES: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "g1": (10, tuple(_ring(10) + [(0, 2), (0, 5), (0, 8), (8, 6)])),
    "g2": (10, tuple(_ring(10) + [(0, 3), (0, 4), (0, 8), (8, 6)])),
    "g3": (7, tuple(_ring(7) + [(0, 3), (0, 5)])),
    "g4": (7, tuple(_ring(7) + [(0, 2), (0, 5)])),
}


def fixture(name: str) -> Graph:
    """The four chorded-ring benchmark graphs g1..g4."""
    key = name.lower()
    if key not in _FIXTURES:
        raise ValueError(
            f"unknown fixture {name!r}; available: {', '.join(sorted(_FIXTURES))}"
        )
    vertices, edges = _FIXTURES[key]
    return Graph(vertices, edges)


def random_cactus(
    rng: random.Random,
    cycles: int,
    length_range: tuple[int, int] = (2, 6),
    bridges: int = 0,
    loops: int = 0,
) -> Graph:
    """A random connected cactus with the requested number of cycles (each of
    a length drawn from ``length_range``), bridge edges and self-loops."""
    lo, hi = length_range
    if cycles < 0 or bridges < 0 or loops < 0 or lo < 2 or hi < lo:
        raise ValueError("invalid cactus parameters")
    vertices = [0]
    edges: list[tuple[int, int]] = []
    for _ in range(cycles):
        attach = rng.choice(vertices)
        length = rng.randint(lo, hi)
        ring = [attach]
        for _ in range(length - 1):
            vertices.append(len(vertices))
            ring.append(vertices[-1])
        for i in range(length):
            edges.append((ring[i], ring[(i + 1) % length]))
    for _ in range(bridges):
        attach = rng.choice(vertices)
        vertices.append(len(vertices))
        edges.append((attach, vertices[-1]))
    for _ in range(loops):
        attach = rng.choice(vertices)
        edges.append((attach, attach))
    rng.shuffle(edges)
    return Graph(len(vertices), tuple(edges))
