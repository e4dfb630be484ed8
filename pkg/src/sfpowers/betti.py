"""lcm-lattices, graded Betti numbers, regularity, and linearity predicates.

Multigraded Betti numbers come from interval homology in the lcm lattice:
``beta_{i,m}(I) = dim H~_{i-1}(order complex of the open interval (1, m))``.
For squarefree equigenerated ideals the same number equals the reduced
homology of the complement complex of the induced facet subcomplex on
``supp(m)``; that is the per-vertex-set term of the complement-complex
summation formula implemented independently in ``betti_hochster``.  The two
routes are cross-checked in the test suite; ``method="auto"`` builds the
literal order complex when the interval is small and switches to the
complement complex when chain enumeration would dwarf the face budget.

``betti_table`` iterates lattice elements, so graded numbers are sums of
multigraded ones; ``regularity`` is ``max(j - i)`` over nonzero entries.

Linearity predicates: ``is_linearly_related`` uses the field-free gap-graph
connectivity criterion (first syzygies are linear iff every generator pair is
connected inside the induced divisor subgraph of the degree-(d+1) lcm graph);
``has_linear_quotients`` verifies or searches for an order whose successive
colon ideals are variable-generated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .complexes import ids_from_mask, mask_key
from .errors import (
    BadParameters,
    Budget,
    BudgetExceeded,
    NotEquigenerated,
    ZeroIdeal,
    lattice_budget,
    node_budget,
)
from .homology import GF2, Field, homology_from_masks, order_complex, reduced_homology_dims
from .ideals import Ideal

_AUTO_ORDER_LIMIT = 24  # interval size above which auto betti_gpw switches route


# ---------------------------------------------------------------------------
# lcm lattice


@dataclass(frozen=True)
class LcmLattice:
    """All lcms of nonempty generator subsets, plus the bottom element 1
    (mask 0), ordered by divisibility (mask containment)."""

    n_vertices: int
    labels: tuple
    elements: tuple[int, ...]  # sorted, includes 0

    def __contains__(self, mask: int) -> bool:
        from bisect import bisect_left

        i = bisect_left(self.elements, mask)
        return i < len(self.elements) and self.elements[i] == mask

    def open_interval(self, m: int) -> list[int]:
        """Elements strictly between 1 and m under divisibility."""
        return [v for v in self.elements if v and v != m and v & m == v]

    def interval_size_over(self, m: int, limit: int) -> bool:
        count = 0
        for v in self.elements:
            if v and v != m and v & m == v:
                count += 1
                if count > limit:
                    return True
        return False

    def degree_census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for m in self.elements:
            if m:
                out[m.bit_count()] = out.get(m.bit_count(), 0) + 1
        return out


def lcm_lattice(ideal: Ideal, limit: int | None = None) -> LcmLattice:
    """Closure of the generators under pairwise lcm (joins with generators
    suffice), plus the bottom element."""
    if ideal.is_zero:
        raise ZeroIdeal("the zero ideal has no lcm lattice")
    limit = lattice_budget() if limit is None else limit
    gens = ideal.gens
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x | g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > limit:
            raise BudgetExceeded(f"lcm lattice budget of {limit} exceeded")
        frontier = nxt
    return LcmLattice(ideal.n_vertices, ideal.labels, tuple(sorted(seen | {0})))


# ---------------------------------------------------------------------------
# multigraded Betti numbers


def _interval_order_complex(interval: list[int]):
    return order_complex(interval, lambda a, b: a != b and a & b == a, validate=False)


def _gpw_profile_order(lattice: LcmLattice, m: int, fld: Field) -> dict[int, int]:
    interval = lattice.open_interval(m)
    if not interval:
        return {0: 1}
    dims = reduced_homology_dims(_interval_order_complex(interval), fld)
    return {i + 1: h for i, h in dims.items() if h}


def _complement_profile(ideal: Ideal, m: int, fld: Field) -> dict[int, int]:
    """beta_{i,m} for all i via the complement complex of the generators
    dividing m inside supp(m); valid for squarefree equigenerated input."""
    sub = [g for g in ideal.gens if g & m == g]
    comp = [m & ~g for g in sub]
    if any(c == 0 for c in comp):
        # m is itself a generator; its complement complex is the single
        # empty face, contributing only in homological degree 0
        return {0: 1}
    dims = homology_from_masks(comp, fld)
    return {i + 1: h for i, h in dims.items() if h}


def _gpw_profile(ideal: Ideal, lattice: LcmLattice, m: int, fld: Field,
                 method: str = "auto") -> dict[int, int]:
    if m == 0:
        raise BadParameters("the bottom element 1 has no Betti contribution")
    if m not in lattice:
        return {}
    if method == "order":
        return _gpw_profile_order(lattice, m, fld)
    if method == "complement":
        return _complement_profile(ideal, m, fld)
    if method != "auto":
        raise BadParameters(f"unknown method {method!r}")
    equi = ideal.common_degree() is not None
    if equi and lattice.interval_size_over(m, _AUTO_ORDER_LIMIT):
        return _complement_profile(ideal, m, fld)
    try:
        return _gpw_profile_order(lattice, m, fld)
    except BudgetExceeded:
        if equi:
            return _complement_profile(ideal, m, fld)
        raise


def betti_gpw(ideal: Ideal, i: int, m: Iterable[int] | int, fld: Field = GF2,
              method: str = "auto") -> int:
    """Multigraded Betti number beta_{i,m}(I): reduced homology of the order
    complex of the open lcm-lattice interval (1, m); zero for m outside the
    lattice."""
    mask = m if isinstance(m, int) else _as_mask(m)
    lattice = lcm_lattice(ideal)
    return _gpw_profile(ideal, lattice, mask, fld, method).get(i, 0)


def _as_mask(ids: Iterable[int]) -> int:
    out = 0
    for v in ids:
        out |= 1 << v
    return out


def betti_hochster(ideal: Ideal, i: int, d: int, fld: Field = GF2) -> int:
    """Graded Betti number beta_{i,d}(I) of a squarefree equigenerated ideal:
    sum over vertex subsets W of size d that are exactly the support of the
    induced facet subcomplex, of dim H~_{i-1} of its complement in W."""
    from itertools import combinations

    if ideal.is_zero:
        raise ZeroIdeal("Betti numbers of the zero ideal are undefined")
    if ideal.common_degree() is None:
        raise NotEquigenerated("complement-complex summation needs a single degree")
    total = 0
    for combo in combinations(range(ideal.n_vertices), d):
        w = _as_mask(combo)
        sub = [g for g in ideal.gens if g & w == g]
        if not sub:
            continue
        support = 0
        for g in sub:
            support |= g
        if support != w:
            continue
        comp = [w & ~g for g in sub]
        if any(c == 0 for c in comp):
            total += 1 if i == 0 else 0
            continue
        total += homology_from_masks(comp, fld).get(i - 1, 0)
    return total


# ---------------------------------------------------------------------------
# Betti tables and regularity


@dataclass
class BettiTable:
    field: Field
    entries: dict[tuple[int, int], int] = dc_field(default_factory=dict)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def add(self, i: int, j: int, value: int) -> None:
        if value:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + value

    def regularity(self) -> int:
        return max(j - i for (i, j) in self.entries)

    def projective_dimension(self) -> int:
        return max(i for (i, _j) in self.entries)

    def row_i(self, i: int) -> dict[int, int]:
        return {j: v for (ii, j), v in self.entries.items() if ii == i}

    def __eq__(self, other) -> bool:
        return isinstance(other, BettiTable) and self.entries == other.entries

    def to_json_dict(self) -> dict:
        rows = [{"i": i, "j": j, "value": v}
                for (i, j), v in sorted(self.entries.items())]
        return {"field": str(self.field), "entries": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def render(self) -> str:
        """Aligned text grid: rows are j - i, columns homological degree i."""
        if not self.entries:
            return "(zero table)"
        imax = self.projective_dimension()
        shifts = sorted({j - i for (i, j) in self.entries})
        width = max(len(str(v)) for v in self.entries.values())
        width = max(width, len(str(imax)), 2)
        head = "j-i \\ i " + " ".join(f"{i:>{width}}" for i in range(imax + 1))
        lines = [head]
        for s in range(min(shifts), max(shifts) + 1):
            cells = []
            for i in range(imax + 1):
                v = self.get(i, i + s)
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{s:>7} " + " ".join(cells))
        return "\n".join(lines)


def betti_table(ideal: Ideal, fld: Field = GF2, method: str = "auto",
                max_i: int | None = None,
                j_filter: Iterable[int] | None = None) -> BettiTable:
    """Full graded Betti table: beta_{i,j} summed as betti_gpw over lattice
    elements of degree j.  ``j_filter`` restricts internal degrees; ``max_i``
    truncates homological degree (max_i=1 runs a matrix-free component count)."""
    if ideal.is_zero:
        raise ZeroIdeal("Betti numbers of the zero ideal are undefined")
    lattice = lcm_lattice(ideal)
    wanted = set(j_filter) if j_filter is not None else None
    table = BettiTable(fld)
    genset = set(ideal.gens)
    for m in lattice.elements:
        if m == 0:
            continue
        deg = m.bit_count()
        if wanted is not None and deg not in wanted:
            continue
        if max_i == 1:
            if m in genset:
                table.add(0, deg, 1)
            else:
                table.add(1, deg, _interval_components(lattice, m) - 1)
            continue
        profile = _gpw_profile(ideal, lattice, m, fld, method)
        for i, v in profile.items():
            if max_i is None or i <= max_i:
                table.add(i, deg, v)
    return table


def _interval_components(lattice: LcmLattice, m: int) -> int:
    """Connected components of the comparability graph of the open interval
    (equals components of its order complex)."""
    elems = lattice.open_interval(m)
    n = len(elems)
    if n == 0:
        return 1  # H~_0 of the empty complex is 0; callers add -1
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(n):
        for b in range(a + 1, n):
            x, y = elems[a], elems[b]
            if x & y == x or x & y == y:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    return len({find(x) for x in range(n)})


def betti_one_profile(ideal: Ideal) -> dict[int, int]:
    """First-syzygy profile {j: beta_{1,j}}, field-free.

    beta_{1,m} vanishes unless m is an lcm of two generators (the Taylor
    complex supports the resolution), so only those lattice elements are
    scanned; each contributes (components of (1, m)) - 1.
    """
    if ideal.is_zero:
        raise ZeroIdeal("Betti numbers of the zero ideal are undefined")
    lattice = lcm_lattice(ideal)
    gens = ideal.gens
    pair_lcms = {gens[a] | gens[b]
                 for a in range(len(gens)) for b in range(a + 1, len(gens))}
    out: dict[int, int] = {}
    for m in sorted(pair_lcms):
        c = _interval_components(lattice, m) - 1
        if c:
            out[m.bit_count()] = out.get(m.bit_count(), 0) + c
    return out


def regularity(ideal: Ideal, fld: Field = GF2, method: str = "auto") -> int:
    """Castelnuovo-Mumford regularity of the ideal: max j - i over nonzero
    graded Betti numbers.  reg(R/I) is this minus one."""
    return betti_table(ideal, fld, method).regularity()


def quotient_regularity(ideal: Ideal, fld: Field = GF2, method: str = "auto") -> int:
    return regularity(ideal, fld, method) - 1


def has_linear_resolution(ideal: Ideal, fld: Field = GF2) -> bool:
    """True iff every nonzero beta_{i,j} has j = i + t for the generator
    degree t (equivalently the regularity equals t)."""
    deg = _require_equigenerated(ideal)
    table = betti_table(ideal, fld)
    return all(j == i + deg for (i, j) in table.entries)


# ---------------------------------------------------------------------------
# linearly related: gap-graph connectivity criterion


def _require_equigenerated(ideal: Ideal) -> int:
    if ideal.is_zero:
        raise ZeroIdeal("zero ideal")
    deg = ideal.common_degree()
    if deg is None:
        raise NotEquigenerated("generators do not share a degree")
    return deg


@dataclass(frozen=True)
class SyzygyGapGraph:
    """Graph on the generators with edges where deg lcm(u, v) = d + 1."""

    degree: int
    adjacency: tuple[int, ...]  # bitmask rows over generator indices


def syzygy_gap_graph(ideal: Ideal) -> SyzygyGapGraph:
    d = _require_equigenerated(ideal)
    gens = ideal.gens
    p = len(gens)
    adj = [0] * p
    for a in range(p):
        for b in range(a + 1, p):
            if (gens[a] | gens[b]).bit_count() == d + 1:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return SyzygyGapGraph(d, tuple(adj))


def linearly_related_failure(ideal: Ideal) -> tuple[int, int] | None:
    """First generator pair (by index) disconnected in its divisor-restricted
    gap graph, or None when the ideal is linearly related."""
    graph = syzygy_gap_graph(ideal)
    gens = ideal.gens
    p = len(gens)
    adj = graph.adjacency
    for a in range(p):
        for b in range(a + 1, p):
            lcm = gens[a] | gens[b]
            allowed = 0
            for c in range(p):
                if gens[c] & lcm == gens[c]:
                    allowed |= 1 << c
            seen = 1 << a
            frontier = seen
            target = 1 << b
            while frontier and not seen & target:
                nxt = 0
                m = frontier
                while m:
                    low = m & -m
                    nxt |= adj[low.bit_length() - 1]
                    m ^= low
                frontier = nxt & allowed & ~seen
                seen |= frontier
            if not seen & target:
                return (a, b)
    return None


def is_linearly_related(ideal: Ideal) -> bool:
    return linearly_related_failure(ideal) is None


# ---------------------------------------------------------------------------
# linear quotients


def _colon_ok(gens: Sequence[int], chosen: Sequence[int], nxt: int) -> bool:
    """True iff (g_c : c in chosen) : (g_nxt) is generated by variables."""
    f = gens[nxt]
    cols = [gens[c] & ~f for c in chosen]
    singles = 0
    for c in cols:
        if c.bit_count() == 1:
            singles |= c
    return all(c & singles for c in cols)


def verify_linear_quotients_order(ideal: Ideal, order: Sequence[int]) -> bool:
    """Check that successive colon ideals along the given generator order are
    generated by variables."""
    gens = ideal.gens
    if sorted(order) != list(range(len(gens))):
        raise BadParameters("order must be a permutation of the generator indices")
    if len(gens) >= 64 and ideal.n_vertices <= 64:
        return _verify_order_numpy(gens, order)
    for b in range(1, len(order)):
        if not _colon_ok(gens, order[:b], order[b]):
            return False
    return True


def _verify_order_numpy(gens: Sequence[int], order: Sequence[int]) -> bool:
    import numpy as np

    arr = np.array([gens[o] for o in order], dtype=np.uint64)
    full = np.uint64((1 << 64) - 1)
    one = np.uint64(1)
    for b in range(1, len(order)):
        cols = arr[:b] & (arr[b] ^ full)
        singles = cols[(cols & (cols - one)) == 0]
        if singles.size == 0:
            return False
        union = np.bitwise_or.reduce(singles)
        if not np.all(cols & union):
            return False
    return True


def has_linear_quotients(ideal: Ideal, order: Sequence[int] | None = None,
                         hint_orders: Iterable[Sequence[int]] = (),
                         limit: int | None = None) -> tuple[int, ...] | None:
    """A generator order with linear quotients, or None after exhaustive
    search.  A supplied ``order`` is verified rather than searched; hint
    orders are tried before backtracking."""
    if ideal.is_zero:
        raise ZeroIdeal("zero ideal")
    gens = ideal.gens
    p = len(gens)
    if order is not None:
        return tuple(order) if verify_linear_quotients_order(ideal, order) else None
    if p <= 1:
        return tuple(range(p))
    candidates = list(hint_orders) + [
        tuple(range(p)),
        tuple(reversed(range(p))),
        tuple(sorted(range(p), key=lambda i: (gens[i].bit_count(), mask_key(gens[i])))),
    ]
    for cand in candidates:
        if sorted(cand) == list(range(p)) and verify_linear_quotients_order(ideal, cand):
            return tuple(cand)
    budget = Budget(node_budget() if limit is None else limit, "linear-quotients search")
    failed: set[frozenset[int]] = set()
    chosen: list[int] = []

    def rec(chosen_set: frozenset[int]) -> bool:
        budget.spend()
        if len(chosen) == p:
            return True
        if chosen_set in failed:
            return False
        for nxt in range(p):
            if nxt in chosen_set:
                continue
            if _colon_ok(gens, chosen, nxt):
                chosen.append(nxt)
                if rec(chosen_set | {nxt}):
                    return True
                chosen.pop()
        failed.add(chosen_set)
        return False

    if rec(frozenset()):
        return tuple(chosen)
    return None
