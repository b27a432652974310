"""Core hypergraph representations and generators.

An r-uniform hypergraph is stored as an (m, r) int32 array of edges, each row
a strictly increasing vertex tuple, rows sorted colexicographically (compare
largest element first).  Vertices are 0-based internally; serialization and
the CLI translate to 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

import numpy as np

from .bitsets import check_capacity, mask_of, vertices_of
from .prng import generator

# Hard stop for r-set enumeration in generators (covers C(5000,2) = 12.5e6).
GNP_ENUMERATION_CAP = 60_000_000


def _colex_sorted(edges: np.ndarray) -> np.ndarray:
    """Sort edge rows colexicographically (last column is the primary key)."""
    if len(edges) == 0:
        return edges
    order = np.lexsort(tuple(edges[:, j] for j in range(edges.shape[1])))
    return edges[order]


class Hypergraph:
    """n-vertex r-uniform hypergraph with a canonically (colex) ordered edge list."""

    __slots__ = ("n", "r", "edges", "_masks", "_mask_index")

    def __init__(self, n: int, r: int, edges, *, validate: bool = True):
        if r < 2:
            raise ValueError(f"uniformity r must be >= 2, got {r}")
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        arr = np.asarray(edges, dtype=np.int32)
        if arr.size == 0:
            arr = np.empty((0, r), dtype=np.int32)
        if arr.ndim != 2 or arr.shape[1] != r:
            raise ValueError(f"edge array must have shape (m, {r})")
        if validate and len(arr):
            arr = np.sort(arr, axis=1)
            arr = _colex_sorted(arr)
            if arr[:, 0].min() < 0 or arr[:, -1].max() >= n:
                raise ValueError("edge vertex out of range")
            if np.any(np.diff(arr, axis=1) == 0):
                raise ValueError("edge with repeated vertex")
            dup = np.all(arr[1:] == arr[:-1], axis=1)
            if np.any(dup):
                raise ValueError("duplicate edges")
        arr.setflags(write=False)
        self.n = n
        self.r = r
        self.edges = arr
        self._masks: Optional[tuple[int, ...]] = None
        self._mask_index: Optional[dict[int, int]] = None

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def masks(self) -> tuple[int, ...]:
        """Edges as bitmasks, in colex order (= ascending numeric order)."""
        if self._masks is None:
            self._masks = tuple(mask_of(row) for row in self.edges.tolist())
        return self._masks

    def mask_index(self) -> dict[int, int]:
        """Map edge bitmask -> position in the canonical edge order."""
        if self._mask_index is None:
            self._mask_index = {m: i for i, m in enumerate(self.masks())}
        return self._mask_index

    def has_edge(self, mask: int) -> bool:
        return mask in self.mask_index()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and self.r == other.r
            and np.array_equal(self.edges, other.edges)
        )

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, m={self.num_edges})"


@dataclass
class Matching:
    """Pairwise vertex-disjoint edges, optionally tagged with a colour id."""

    edges: tuple[tuple[int, ...], ...]
    colour: Optional[int] = None

    def __post_init__(self):
        self.edges = tuple(tuple(e) for e in self.edges)
        seen = 0
        for e in self.edges:
            m = mask_of(e)
            if m & seen:
                raise ValueError("matching edges are not pairwise disjoint")
            seen |= m

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered(self) -> int:
        """Bitmask of matched vertices."""
        return mask_of(v for e in self.edges for v in e)


def _unrank_all(ranks: np.ndarray, n: int, r: int) -> np.ndarray:
    """Vectorised colex unranking of r-subsets of [n]."""
    rest = ranks.astype(np.int64, copy=True)
    out = np.empty((len(ranks), r), dtype=np.int32)
    for i in range(r, 0, -1):
        # binom_table[m] = C(m, i) for m = 0..n
        binom_table = np.array([comb(m, i) for m in range(n + 1)], dtype=np.int64)
        vals = np.searchsorted(binom_table, rest, side="right") - 1
        out[:, i - 1] = vals
        rest -= binom_table[vals]
    return out


def complete(n: int, r: int) -> Hypergraph:
    """The complete n-vertex r-graph: all C(n, r) r-subsets, colex order."""
    if r < 2 or r > n:
        raise ValueError(f"need 2 <= r <= n, got r={r}, n={n}")
    total = comb(n, r)
    if total > GNP_ENUMERATION_CAP:
        raise ValueError(f"C({n},{r}) = {total} exceeds the enumeration cap")
    edges = _unrank_all(np.arange(total, dtype=np.int64), n, r)
    return Hypergraph(n, r, edges, validate=False)


def random_gnp(n: int, r: int, p: float, seed: int) -> Hypergraph:
    """Binomial random r-graph: each r-set kept independently with probability p.

    Deterministic per (n, r, p, seed): the i-th uniform draw decides the
    r-set of colex rank i, so identical inputs give bit-identical edge lists.
    """
    if r < 2 or r > n:
        raise ValueError(f"need 2 <= r <= n, got r={r}, n={n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability p must lie in [0, 1], got {p}")
    total = comb(n, r)
    if total > GNP_ENUMERATION_CAP:
        raise ValueError(f"C({n},{r}) = {total} exceeds the enumeration cap")
    gen = generator(seed)
    kept: list[np.ndarray] = []
    chunk = 4_000_000
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        u = gen.random(stop - start)
        idx = np.nonzero(u < p)[0]
        if len(idx):
            kept.append(idx.astype(np.int64) + start)
    if not kept:
        return Hypergraph(n, r, [], validate=False)
    ranks = np.concatenate(kept)
    return Hypergraph(n, r, _unrank_all(ranks, n, r), validate=False)


def kneser(n: int, r: int, k: int) -> Hypergraph:
    """Kneser hypergraph KG^k(n, r).

    Vertex i of the output is the i-th r-subset of [n] in colex order; a
    k-set of vertices is an edge iff the indexed r-subsets are pairwise
    disjoint.  Desk scale only: the C(n, r) vertices are enumerated.
    """
    if k < 2:
        raise ValueError(f"Kneser uniformity k must be >= 2, got {k}")
    if n < k * r:
        raise ValueError(f"need n >= k*r for a non-degenerate KG^k(n,r), got n={n}")
    nv = comb(n, r)
    check_capacity(nv)
    sets = [mask_of(c) for c in combinations(range(n), r)]
    sets.sort()  # numeric order = colex order on the r-subsets
    edges: list[tuple[int, ...]] = []

    def extend(prefix: list[int], used: int, start: int):
        if len(prefix) == k:
            edges.append(tuple(prefix))
            return
        # need k - len(prefix) more pairwise-disjoint sets
        for idx in range(start, nv):
            if sets[idx] & used:
                continue
            prefix.append(idx)
            extend(prefix, used | sets[idx], idx + 1)
            prefix.pop()

    extend([], 0, 0)
    return Hypergraph(nv, k, np.array(edges, dtype=np.int32).reshape(-1, k))


def _as_vertex_tuple(vertices) -> tuple[int, ...]:
    if isinstance(vertices, int):
        return vertices_of(vertices)
    return tuple(sorted(set(int(v) for v in vertices)))


def induced(h: Hypergraph, vertices) -> Hypergraph:
    """Induced sub-hypergraph on `vertices`, relabelled to 0..|S|-1 (ascending)."""
    vs = _as_vertex_tuple(vertices)
    if vs and (vs[0] < 0 or vs[-1] >= h.n):
        raise ValueError("induced vertex set is not a subset of the vertex range")
    if len(vs) < h.r:
        return Hypergraph(len(vs), h.r, [], validate=False)
    lookup = np.full(h.n, -1, dtype=np.int32)
    lookup[list(vs)] = np.arange(len(vs), dtype=np.int32)
    mapped = lookup[h.edges]
    inside = np.all(mapped >= 0, axis=1)
    sub = mapped[inside]
    return Hypergraph(len(vs), h.r, _colex_sorted(sub), validate=False)


def is_clique(h: Hypergraph, vertices) -> bool:
    """True iff every r-subset of `vertices` is an edge (vacuous below size r)."""
    vs = _as_vertex_tuple(vertices)
    if len(vs) < h.r:
        return True
    index = h.mask_index()
    for combo in combinations(vs, h.r):
        if mask_of(combo) not in index:
            return False
    return True


def _disjoint_blocks(blocks: Sequence) -> list[tuple[int, ...]]:
    tuples = [_as_vertex_tuple(b) for b in blocks]
    seen = 0
    for b in tuples:
        if not b:
            raise ValueError("blocks must be non-empty")
        m = mask_of(b)
        if m & seen:
            raise ValueError("blocks must be pairwise disjoint")
        seen |= m
    return tuples


def count_crossing_edges(h: Hypergraph, blocks: Sequence) -> int:
    """Number of edges with exactly one vertex in each of the r given blocks."""
    tuples = _disjoint_blocks(blocks)
    if len(tuples) != h.r:
        raise ValueError(f"expected {h.r} blocks, got {len(tuples)}")
    if h.num_edges == 0:
        return 0
    lab = np.zeros(h.n, dtype=np.int8)
    for i, b in enumerate(tuples, start=1):
        lab[list(b)] = i
    rows = lab[h.edges]
    rows = np.sort(rows, axis=1)
    target = np.arange(1, h.r + 1, dtype=np.int8)
    return int(np.all(rows == target, axis=1).sum())


def partite_density(
    h: Hypergraph, blocks: Sequence, p: Fraction | float | int = 1
) -> tuple[Fraction, Fraction]:
    """Raw r-partite density and its p-scaled value, both exact rationals.

    raw = |E(X_1,...,X_r)| / (|X_1|...|X_r|), scaled = raw / p.
    """
    tuples = _disjoint_blocks(blocks)
    if len(tuples) != h.r:
        raise ValueError(f"expected {h.r} blocks, got {len(tuples)}")
    pfrac = p if isinstance(p, Fraction) else Fraction(p)
    if pfrac <= 0:
        raise ValueError("density scale p must be positive")
    count = count_crossing_edges(h, tuples)
    denom = 1
    for b in tuples:
        denom *= len(b)
    raw = Fraction(count, denom)
    return raw, raw / pfrac
