"""Leaves, good leaves, good leaf orders, forest recognition, proper chains.

A facet F is a leaf if some branch facet G dominates every other intersection
with F (``H&F <= G&F`` for all facets H outside {F, G}; containment is
non-strict).  F is a good leaf iff its intersections with the other facets
form a chain under inclusion; a complex is a simplicial forest iff good-leaf
peeling never stalls, which is how ``is_forest`` decides (the brute-force
"every nonempty subcomplex has a leaf" definition is kept as a test oracle).

Proper-chain distance and the intersection property are defined for pure
complexes connected in codimension 1; distance is computed by BFS on the
codimension-1 adjacency graph.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .complexes import Complex
from .errors import NotAFacet, NotCodim1Connected, NotPure


class _OnlyFacet:
    """Marker: the queried facet is the only facet of the complex."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "OnlyFacet"


ONLY_FACET = _OnlyFacet()


def _branch_of(masks: Sequence[int], active: Sequence[int], i: int) -> int | _OnlyFacet | None:
    """Branch index for facet ``i`` within the subcomplex on ``active`` indices."""
    others = [j for j in active if j != i]
    if not others:
        return ONLY_FACET
    fm = masks[i]
    for g in others:
        gi = masks[g] & fm
        if all(masks[h] & fm & ~gi == 0 for h in others if h != g):
            return g
    return None


def leaf_branch(cx: Complex, facet: Iterable[int]) -> frozenset[int] | _OnlyFacet | None:
    """Branch facet making ``facet`` a leaf, ONLY_FACET for a one-facet
    complex, or None when no branch exists."""
    i = cx.facet_index(facet)
    res = _branch_of(cx.facet_masks, range(len(cx.facet_masks)), i)
    if isinstance(res, int):
        return cx.facet_ids(res)
    return res


def is_leaf(cx: Complex, facet: Iterable[int]) -> bool:
    return leaf_branch(cx, facet) is not None


def _good_leaf_in(masks: Sequence[int], active: Sequence[int], i: int) -> bool:
    fm = masks[i]
    inters = sorted((masks[j] & fm for j in active if j != i),
                    key=lambda m: m.bit_count())
    return all(a & b == a for a, b in zip(inters, inters[1:]))


def is_good_leaf(cx: Complex, facet: Iterable[int]) -> bool:
    """True iff the intersections of ``facet`` with all other facets are
    totally ordered by inclusion (equivalently, it is a leaf of every
    subcomplex containing it)."""
    i = cx.facet_index(facet)
    return _good_leaf_in(cx.facet_masks, range(len(cx.facet_masks)), i)


def good_leaf_peel(cx: Complex) -> tuple[int, ...] | None:
    """Peel order p1, p2, ...: each p_k is a good leaf of the subcomplex on
    the not-yet-peeled facets.  None when peeling stalls (not a forest)."""
    masks = cx.facet_masks
    remaining = list(range(len(masks)))
    peel: list[int] = []
    while remaining:
        pick = None
        for i in remaining:
            if _good_leaf_in(masks, remaining, i):
                pick = i
                break
        if pick is None:
            return None
        peel.append(pick)
        remaining.remove(pick)
    return tuple(peel)


def good_leaf_order(cx: Complex) -> tuple[int, ...] | None:
    """Facet order F1..Fr with F_i a good leaf of <F1..F_i> for i >= 2,
    or None when the complex is not a forest (reverse of the peel order).

    On forests the greedy peel cannot stall: every forest has a good leaf and
    removing a facet leaves a forest, so any local choice extends.
    """
    peel = good_leaf_peel(cx)
    return None if peel is None else tuple(reversed(peel))


def is_forest(cx: Complex) -> bool:
    return good_leaf_peel(cx) is not None


def _codim1_adjacency(cx: Complex) -> list[int]:
    masks = cx.facet_masks
    sizes = {m.bit_count() for m in masks}
    if len(sizes) > 1:
        raise NotPure("proper chains require a pure complex")
    d = sizes.pop() if sizes else 0
    r = len(masks)
    adj = [0] * r
    for i in range(r):
        for j in range(i + 1, r):
            if (masks[i] & masks[j]).bit_count() == d - 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _check_connected(adj: Sequence[int], r: int) -> None:
    if r == 0:
        return
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
    if seen.bit_count() != r:
        raise NotCodim1Connected("codimension-1 adjacency graph is disconnected")


def _bfs_dists(adj: Sequence[int], src: int, r: int) -> list[int]:
    dist = [-1] * r
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        m = adj[u]
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def proper_chain_distance(cx: Complex, f: Iterable[int], g: Iterable[int]) -> int:
    """Length of the shortest proper chain between two facets of a pure
    complex connected in codimension 1."""
    fi = cx.facet_index(f)
    gi = cx.facet_index(g)
    adj = _codim1_adjacency(cx)
    _check_connected(adj, len(cx.facet_masks))
    if fi == gi:
        return 0
    return _bfs_dists(adj, fi, len(cx.facet_masks))[gi]


def has_intersection_property(cx: Complex) -> bool:
    """True iff dist(F, G) equals the intersection codimension
    ``facet_size - |F & G|`` for every facet pair (empty intersection counts
    as codimension = facet size)."""
    masks = cx.facet_masks
    r = len(masks)
    adj = _codim1_adjacency(cx)
    _check_connected(adj, r)
    if r <= 1:
        return True
    d = masks[0].bit_count()
    for i in range(r):
        dist = _bfs_dists(adj, i, r)
        for j in range(i + 1, r):
            if dist[j] != d - (masks[i] & masks[j]).bit_count():
                return False
    return True
