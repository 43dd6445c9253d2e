"""Matroids on a ground set of at most 64 elements, given by rank oracles.

A matroid is stored as its rank function on subsets (bit masks). Bases,
circuits and blocks are derived from the oracle by enumeration, so every
constructor gets identical treatment and derived data always agrees with the
oracle. Instances are immutable; rank values, bases and circuits are cached
on first use.

The block decomposition uses the classical connectivity relation: two
elements are related when some circuit contains both, and blocks are the
connected components of that relation (elements lying in no circuit form
singleton blocks).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .bitset import bits, check_ground, check_subset, k_subsets, mask_of
from .errors import ValidationError

Provenance = str  # "graphic" | "uniform" | "multi_uniform" | "explicit_bases"
#                 | "dual_of" | "restriction_of" | "direct_sum" | "explicit"


class Matroid:
    """A matroid presented by its rank oracle."""

    __slots__ = ("n", "provenance", "labels", "_rank_fn", "_cache", "_full", "_bases", "_circuits")

    def __init__(
        self,
        n: int,
        rank_fn: Callable[[int], int],
        provenance: Provenance = "explicit",
        labels: tuple[int, ...] | None = None,
    ):
        check_ground(n)
        self.n = n
        self.provenance = provenance
        self.labels = labels
        self._rank_fn = rank_fn
        self._cache: dict[int, int] = {}
        self._full: int | None = None
        self._bases: tuple[int, ...] | None = None
        self._circuits: tuple[int, ...] | None = None

    # -- rank oracle -------------------------------------------------------

    def rank(self, sigma: int) -> int:
        """Rank of the subset encoded by ``sigma``."""
        check_subset(sigma, self.n)
        r = self._cache.get(sigma)
        if r is None:
            r = self._rank_fn(sigma)
            self._cache[sigma] = r
        return r

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def full_rank(self) -> int:
        if self._full is None:
            self._full = self.rank(self.full_mask)
        return self._full

    def is_independent(self, sigma: int) -> bool:
        return self.rank(sigma) == sigma.bit_count()

    def nullity(self, sigma: int) -> int:
        """Size minus rank of the subset."""
        return sigma.bit_count() - self.rank(sigma)

    # -- derived data ------------------------------------------------------

    def bases(self) -> tuple[int, ...]:
        """All maximal independent sets, ascending by bit-vector value."""
        if self._bases is None:
            r = self.full_rank
            self._bases = tuple(s for s in k_subsets(self.n, r) if self.rank(s) == r)
        return self._bases

    def circuits(self) -> tuple[int, ...]:
        """All minimal dependent sets, ordered by cardinality then mask value.

        Circuits have at most full_rank + 1 elements, so only those sizes are
        scanned. A set is a circuit when it is dependent and every deletion of
        one element is independent.
        """
        if self._circuits is None:
            out = []
            top = min(self.n, self.full_rank + 1)
            for k in range(1, top + 1):
                for s in k_subsets(self.n, k):
                    if self.rank(s) < k and all(
                        self.rank(s ^ (1 << e)) == k - 1 for e in bits(s)
                    ):
                        out.append(s)
            self._circuits = tuple(out)
        return self._circuits

    # -- constructions on top of self ---------------------------------------

    def dual(self) -> "Matroid":
        """The dual matroid: rank*(s) = |s| + rank(complement) - rank(E)."""
        full = self.full_mask
        fr = self.full_rank

        def rank_fn(sigma: int) -> int:
            return sigma.bit_count() + self.rank(full ^ sigma) - fr

        return Matroid(self.n, rank_fn, "dual_of")

    def restrict(self, sigma: int) -> "Matroid":
        """Restriction to the subset ``sigma``, relabelled to 0..k-1.

        ``labels`` on the result maps the new indices back to the old ones.
        """
        check_subset(sigma, self.n)
        members = tuple(bits(sigma))

        def rank_fn(sub: int) -> int:
            m = 0
            for i in bits(sub):
                m |= 1 << members[i]
            return self.rank(m)

        return Matroid(len(members), rank_fn, "restriction_of", labels=members)

    def blocks(self) -> "BlockPartition":
        """Partition of the ground set into connectivity blocks.

        Elements e and f land in the same block exactly when e == f or some
        circuit contains both; computed by a union-find over the circuits.
        Blocks are ordered by their smallest element and carry their
        restricted matroid.
        """
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.circuits():
            first = None
            for e in bits(c):
                if first is None:
                    first = e
                    continue
                ra, rb = find(first), find(e)
                if ra != rb:
                    parent[rb] = ra
        groups: dict[int, int] = {}
        for e in range(self.n):
            root = find(e)
            groups[root] = groups.get(root, 0) | (1 << e)
        masks = sorted(groups.values(), key=lambda m: m & -m)
        return BlockPartition(
            self.n, tuple(Block(m, self.restrict(m)) for m in masks)
        )

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.full_rank}, provenance={self.provenance!r})"


@dataclass(frozen=True)
class Block:
    """One connectivity block: its member mask and the restricted matroid."""

    members: int
    matroid: Matroid


@dataclass(frozen=True)
class BlockPartition:
    """Pairwise-disjoint blocks whose union is the whole ground set."""

    n: int
    blocks: tuple[Block, ...]

    def masks(self) -> tuple[int, ...]:
        return tuple(b.members for b in self.blocks)


# -- constructors ------------------------------------------------------------


def uniform(r: int, n: int) -> Matroid:
    """The uniform matroid U(r, n): every subset of size <= r is independent."""
    check_ground(n)
    if not isinstance(r, int) or isinstance(r, bool) or not 0 <= r <= n:
        raise ValueError(f"uniform matroid needs 0 <= r <= n, got r={r!r}, n={n}")
    return Matroid(n, lambda s: min(r, s.bit_count()), "uniform")


def multi_uniform(profile: Iterable[tuple[int, int]]) -> Matroid:
    """Direct sum of uniform matroids U(r_1, n_1) + ... + U(r_t, n_t).

    The ground set is the concatenation of the component ground sets in the
    given order.
    """
    pairs = [tuple(p) for p in profile]
    if not pairs:
        raise ValueError("multi_uniform needs at least one (r, n) pair")
    offset = 0
    parts: list[tuple[int, int]] = []  # (block mask shifted into place, r)
    for pair in pairs:
        if len(pair) != 2:
            raise ValueError(f"profile entries must be (r, n) pairs, got {pair!r}")
        r, n = pair
        check_ground(n)
        if not isinstance(r, int) or isinstance(r, bool) or not 0 <= r <= n:
            raise ValueError(f"uniform block needs 0 <= r <= n, got r={r!r}, n={n}")
        parts.append((((1 << n) - 1) << offset, r))
        offset += n
    check_ground(offset)
    total = offset

    def rank_fn(sigma: int) -> int:
        return sum(min(r, (sigma & m).bit_count()) for m, r in parts)

    return Matroid(total, rank_fn, "multi_uniform")


def from_bases(n: int, bases: Iterable[Iterable[int]]) -> Matroid:
    """Matroid from an explicit basis family, validated exhaustively.

    The family must be non-empty, equicardinal, and satisfy the basis
    exchange axiom: for all bases B1, B2 and e in B1 - B2 there is an
    f in B2 - B1 with B1 - e + f again a basis. A violation raises
    ValidationError naming a violating pair.
    """
    check_ground(n)
    masks: list[int] = []
    for b in bases:
        m = mask_of(b)
        check_subset(m, n)
        masks.append(m)
    if not masks:
        raise ValidationError("a matroid needs at least one basis; got an empty family")
    card = masks[0].bit_count()
    for m in masks:
        if m.bit_count() != card:
            raise ValidationError(
                "bases have mixed cardinalities: "
                f"{sorted(bits(masks[0]))} vs {sorted(bits(m))}"
            )
    bset = frozenset(masks)
    for b1 in bset:
        for b2 in bset:
            move = b1 & ~b2
            into = b2 & ~b1
            for e in bits(move):
                if not any((b1 ^ (1 << e)) | (1 << f) in bset for f in bits(into)):
                    raise ValidationError(
                        "basis exchange fails for bases "
                        f"{sorted(bits(b1))} and {sorted(bits(b2))} at element {e}"
                    )
    btuple = tuple(sorted(bset))

    def rank_fn(sigma: int) -> int:
        return max((sigma & b).bit_count() for b in btuple)

    return Matroid(n, rank_fn, "explicit_bases")


def direct_sum(*matroids: Matroid) -> Matroid:
    """Direct sum on the concatenation of the ground sets."""
    if not matroids:
        raise ValueError("direct_sum needs at least one matroid")
    offsets = []
    offset = 0
    for m in matroids:
        offsets.append(offset)
        offset += m.n
    check_ground(offset)
    parts = tuple(zip(matroids, offsets))
    total = offset

    def rank_fn(sigma: int) -> int:
        return sum(m.rank((sigma >> off) & m.full_mask) for m, off in parts)

    return Matroid(total, rank_fn, "direct_sum")
