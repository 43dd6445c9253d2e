"""Exact matrix rank over small prime fields.

Matrices arrive column by column. Over GF(2) a column is a Python int with
one bit per row, and elimination is bitwise, which keeps even a few thousand
rows cheap. Over an odd prime a column is a dense list of residues and the
elimination is the plain schoolbook one. Everything is exact integer
arithmetic; there is no floating point anywhere in this package.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def gf2_rank(columns: Iterable[int]) -> int:
    """Rank over GF(2) of the matrix whose columns are the given bit masks.

    Args:
        columns: each int encodes one column, bit ``i`` set when row ``i``
            holds a 1.

    Returns:
        The rank.
    """
    pivots: dict[int, int] = {}
    rank = 0
    for v in columns:
        while v:
            low = v & -v
            w = pivots.get(low)
            if w is None:
                pivots[low] = v
                rank += 1
                break
            v ^= w
    return rank


def modp_rank(columns: Iterable[Sequence[int]], p: int) -> int:
    """Rank over GF(p) of the matrix whose columns are dense coefficient lists.

    Args:
        columns: equal-length sequences of integers, reduced mod ``p``
            internally.
        p: an odd prime (GF(2) input also works but ``gf2_rank`` is faster).

    Returns:
        The rank.
    """
    pivots: dict[int, list[int]] = {}
    rank = 0
    for col in columns:
        cur = [c % p for c in col]
        while True:
            lead = next((i for i, c in enumerate(cur) if c), None)
            if lead is None:
                break
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(cur[lead], -1, p)
                pivots[lead] = [(c * inv) % p for c in cur]
                rank += 1
                break
            f = cur[lead]
            cur = [(a - f * b) % p for a, b in zip(cur, piv)]
    return rank
