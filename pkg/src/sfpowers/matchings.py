"""Exact enumeration of k-matchings and the invariants nu, nu0, nu1.

A matching is a set of pairwise disjoint facets.  The three invariants:

* ``matching_number``            nu   -- largest matching,
* ``restricted_matching_number`` nu0  -- largest matching containing a facet
                                         that forms a gap with all others,
* ``induced_matching_number``    nu1  -- largest matching that is exactly the
                                         facet set of the induced subcomplex
                                         on its union.

Always ``nu1 <= nu0 <= nu``.  Searches are exact (branch and bound with an
index-ordered DFS) and guarded by a configurable node budget; witnesses are
returned so failures are diagnosable.  Singleton matchings are restricted
(the gap condition is vacuous), so nu0 >= 1 on nonempty complexes.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .complexes import Complex, ids_from_mask
from .errors import BadParameters, Budget, NotAMatching, node_budget


class RestrictedWitness(NamedTuple):
    indices: tuple[int, ...]
    certificate: int | None  # facet index forming a gap with all others


def enumerate_matchings(cx: Complex, k: int) -> list[tuple[int, ...]]:
    """All k-element sets of pairwise disjoint facets, as sorted index tuples,
    in lexicographic order.  k=0 yields the single empty matching."""
    if k < 0:
        raise BadParameters("k must be >= 0")
    masks = cx.facet_masks
    r = len(masks)
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    def rec(start: int, used: int) -> None:
        if len(acc) == k:
            out.append(tuple(acc))
            return
        # not enough facets left to finish
        if r - start < k - len(acc):
            return
        for i in range(start, r):
            if masks[i] & used:
                continue
            acc.append(i)
            rec(i + 1, used | masks[i])
            acc.pop()

    rec(0, 0)
    return out


def is_matching(cx: Complex, indices: Iterable[int]) -> bool:
    used = 0
    for i in indices:
        m = cx.facet_masks[i]
        if m & used:
            return False
        used |= m
    return True


def _bb_max_matching(masks: Sequence[int], budget: Budget) -> tuple[int, ...]:
    """Branch and bound maximum matching over the given facet masks.

    Branches on the vertex of minimum facet-degree: any matching either uses
    one of the facets covering that vertex or none of them.
    """
    r = len(masks)
    if r == 0:
        return ()

    # greedy seed: smallest facets first
    best: tuple[int, ...] = ()
    used = 0
    for i in sorted(range(r), key=lambda i: masks[i].bit_count()):
        if masks[i] & used == 0:
            best += (i,)
            used |= masks[i]
    best = tuple(sorted(best))
    best_size = len(best)

    def rec(avail: list[int], chosen: list[int]) -> None:
        nonlocal best, best_size
        budget.spend()
        if len(chosen) > best_size:
            best_size = len(chosen)
            best = tuple(chosen)
        if not avail or len(chosen) + len(avail) <= best_size:
            return
        degree: dict[int, int] = {}
        for i in avail:
            m = masks[i]
            while m:
                low = m & -m
                degree[low] = degree.get(low, 0) + 1
                m ^= low
        v = min(degree, key=lambda x: (degree[x], x))
        covering = [i for i in avail if masks[i] & v]
        for i in covering:
            rest = [j for j in avail if j != i and masks[j] & masks[i] == 0]
            chosen.append(i)
            rec(rest, chosen)
            chosen.pop()
        rec([j for j in avail if not masks[j] & v], chosen)

    rec(list(range(r)), [])
    return tuple(sorted(best))


def maximum_matching(cx: Complex) -> tuple[int, ...]:
    return _bb_max_matching(cx.facet_masks, Budget(node_budget()))


def matching_number(cx: Complex) -> int:
    return len(maximum_matching(cx))


def _induced_ok(masks: Sequence[int], selected: set[int], union: int) -> bool:
    for h, hm in enumerate(masks):
        if h not in selected and hm & union == hm:
            return False
    return True


def is_induced_matching(cx: Complex, indices: Iterable[int]) -> bool:
    idx = set(indices)
    if not is_matching(cx, idx):
        return False
    union = 0
    for i in idx:
        union |= cx.facet_masks[i]
    return _induced_ok(cx.facet_masks, idx, union)


def maximum_induced_matching(cx: Complex) -> tuple[int, ...]:
    """Largest induced matching (DFS over index-increasing extensions;
    subsets of induced matchings are induced, so extension search is complete)."""
    masks = cx.facet_masks
    r = len(masks)
    budget = Budget(node_budget())
    best: tuple[int, ...] = ()
    sel: list[int] = []
    sel_set: set[int] = set()

    def rec(start: int, union: int) -> None:
        nonlocal best
        budget.spend()
        if len(sel) > len(best):
            best = tuple(sel)
        if len(sel) + (r - start) <= len(best):
            return
        for i in range(start, r):
            if masks[i] & union:
                continue
            u2 = union | masks[i]
            sel.append(i)
            sel_set.add(i)
            if _induced_ok(masks, sel_set, u2):
                rec(i + 1, u2)
            sel.pop()
            sel_set.discard(i)

    rec(0, 0)
    return best


def induced_matching_number(cx: Complex) -> int:
    return len(maximum_induced_matching(cx))


def gap_matrix(cx: Complex) -> list[int]:
    """Row i is the bitmask of facet indices forming a gap with facet i."""
    masks = cx.facet_masks
    r = len(masks)
    rows = [0] * r
    for i in range(r):
        for j in range(i + 1, r):
            if masks[i] & masks[j]:
                continue
            union = masks[i] | masks[j]
            if any(h != i and h != j and masks[h] & union == masks[h]
                   for h in range(r)):
                continue
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return rows


def maximum_restricted_matching(cx: Complex) -> RestrictedWitness:
    """Largest matching with a facet forming a gap with every other member.

    Such a matching is one certificate facet c plus a matching inside the
    subcomplex of facets forming a gap with c, so we maximise
    ``1 + nu(<gaps of c>)`` over all c.
    """
    masks = cx.facet_masks
    r = len(masks)
    if r == 0:
        return RestrictedWitness((), None)
    gaps = gap_matrix(cx)
    budget = Budget(node_budget())
    best = RestrictedWitness((0,), 0)
    for c in range(r):
        others = ids_from_mask(gaps[c])
        sub = _bb_max_matching([masks[j] for j in others], budget)
        size = 1 + len(sub)
        if size > len(best.indices):
            indices = tuple(sorted((c,) + tuple(others[j] for j in sub)))
            best = RestrictedWitness(indices, c)
    return best


def restricted_matching_number(cx: Complex) -> int:
    return len(maximum_restricted_matching(cx).indices)


def is_restricted_matching(cx: Complex, facets: Sequence[Iterable[int]]) -> frozenset[int] | None:
    """Certificate facet (as a vertex-id frozenset) if one member forms a gap
    with every other member; None otherwise.  Raises NotAMatching if the
    facets are not pairwise disjoint."""
    idx = [cx.facet_index(f) for f in facets]
    used = 0
    for i in idx:
        if cx.facet_masks[i] & used:
            raise NotAMatching("facets are not pairwise disjoint")
        used |= cx.facet_masks[i]
    gaps = gap_matrix(cx)
    for i in idx:
        if all(j == i or (gaps[i] >> j) & 1 for j in idx):
            return cx.facet_ids(i)
    return None
