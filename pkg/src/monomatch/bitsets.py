"""Bitmask vertex sets and colexicographic (un)ranking of fixed-size subsets.

Vertex sets are plain Python ints used as bitmasks over vertices 0..n-1.
Because colex order on k-subsets compares the largest differing element,
colex order coincides with numeric order of the masks, which is why sorted
mask lists are canonical throughout the package.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Iterator

# Exponential bitmask solvers refuse anything beyond this many vertices.
BITSET_CAPACITY = 4096


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into the sorted tuple of vertex ids."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def subset_masks(mask: int, size: int) -> Iterator[int]:
    """All `size`-subsets of the set `mask`, as masks."""
    verts = vertices_of(mask)
    for combo in combinations(verts, size):
        yield mask_of(combo)


def colex_rank(vertices: tuple[int, ...]) -> int:
    """Rank of a sorted vertex tuple among all |vertices|-subsets in colex order."""
    return sum(comb(v, i + 1) for i, v in enumerate(vertices))


def colex_unrank(rank: int, r: int) -> tuple[int, ...]:
    """Inverse of colex_rank for r-subsets."""
    out = [0] * r
    rest = rank
    for i in range(r, 0, -1):
        # largest m with C(m, i) <= rest
        m = i - 1
        while comb(m + 1, i) <= rest:
            m += 1
        out[i - 1] = m
        rest -= comb(m, i)
    return tuple(out)


def check_capacity(n: int) -> None:
    if n > BITSET_CAPACITY:
        raise ValueError(
            f"bitset solvers are capped at {BITSET_CAPACITY} vertices, got n={n}"
        )
