"""Squarefree monomial ideals as antichains of support masks.

A squarefree monomial is identified with its support (a vertex mask over the
same interned universe as the complexes it came from); divisibility is mask
containment and lcm is union.  An ``Ideal`` keeps its unique minimal monomial
generating set in canonical order, so ideal equality is tuple equality.
The zero ideal has no generators; the unit ideal is generated by mask 0.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .complexes import (
    Complex,
    Label,
    ids_from_mask,
    make_complex,
    mask_key,
    minimal_antichain,
)
from .errors import BadParameters, UniverseMismatch, ZeroIdeal
from .matchings import enumerate_matchings


class Ideal:
    """Immutable squarefree monomial ideal given by minimal generators."""

    __slots__ = ("n_vertices", "gens", "labels")

    def __init__(self, n_vertices: int, gens: Sequence[int], labels: Sequence[Label]):
        self.n_vertices = n_vertices
        self.gens = tuple(gens)
        self.labels = tuple(labels)

    @classmethod
    def from_masks(cls, n_vertices: int, masks: Iterable[int],
                   labels: Sequence[Label] | None = None) -> "Ideal":
        kept, _ = minimal_antichain(masks)
        if labels is None:
            labels = tuple(range(n_vertices))
        return cls(n_vertices, kept, labels)

    @classmethod
    def zero(cls, n_vertices: int, labels: Sequence[Label] | None = None) -> "Ideal":
        return cls(n_vertices, (), labels if labels is not None else tuple(range(n_vertices)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def __len__(self) -> int:
        return len(self.gens)

    def degrees(self) -> list[int]:
        return [g.bit_count() for g in self.gens]

    def common_degree(self) -> int | None:
        """Generator degree when equigenerated, else None."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def gen_supports(self) -> list[frozenset[int]]:
        return [frozenset(ids_from_mask(g)) for g in self.gens]

    def gen_label_sets(self) -> list[list[Label]]:
        return [[self.labels[v] for v in ids_from_mask(g)] for g in self.gens]

    def label_mask(self, labels: Iterable[Label]) -> int:
        table = {lab: i for i, lab in enumerate(self.labels)}
        m = 0
        for lab in labels:
            m |= 1 << table[lab]
        return m

    def monomial_str(self, mask: int) -> str:
        return "*".join(f"x{self.labels[v]}" for v in ids_from_mask(mask)) or "1"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Ideal)
                and self.n_vertices == other.n_vertices
                and self.gens == other.gens
                and self.labels == other.labels)

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.gens, self.labels))

    def __repr__(self) -> str:
        shown = ", ".join(self.monomial_str(g) for g in self.gens[:6])
        tail = ", ..." if len(self.gens) > 6 else ""
        return f"Ideal({shown}{tail})" if self.gens else "Ideal(0)"

    def to_json_dict(self) -> dict:
        return {"generators": self.gen_label_sets()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def ideal_from_json(data: str | dict) -> Ideal:
    obj = json.loads(data) if isinstance(data, str) else data
    cx = make_complex(obj["generators"])
    return facet_ideal(cx)


def facet_ideal(cx: Complex) -> Ideal:
    """Ideal generated by the facet monomials; minimal because facets form an
    antichain.  The empty complex yields the zero ideal."""
    return Ideal(cx.n_vertices, cx.facet_masks, cx.labels)


def squarefree_power(cx: Complex, k: int) -> Ideal:
    """k-th squarefree power of the facet ideal: generators are the unions of
    k-matchings (minimalized).  Zero iff k exceeds the matching number."""
    if k < 1:
        raise BadParameters("k must be >= 1")
    masks = cx.facet_masks
    unions = []
    for match in enumerate_matchings(cx, k):
        u = 0
        for i in match:
            u |= masks[i]
        unions.append(u)
    return Ideal.from_masks(cx.n_vertices, unions, cx.labels)


def colon_by_monomial(ideal: Ideal, monomial: Iterable[int] | int) -> Ideal:
    """Monomial colon ``I : (f)``, generated by ``g / gcd(g, f)``."""
    fmask = monomial if isinstance(monomial, int) else _mask(monomial)
    return Ideal.from_masks(ideal.n_vertices,
                            (g & ~fmask for g in ideal.gens),
                            ideal.labels)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.n_vertices != b.n_vertices or a.labels != b.labels:
        raise UniverseMismatch("ideals live over different universes")
    return Ideal.from_masks(a.n_vertices, a.gens + b.gens, a.labels)


def facet_complex_of_ideal(ideal: Ideal) -> Complex:
    """Complex whose facets are the generator supports."""
    if ideal.is_zero:
        raise ZeroIdeal("the zero ideal has no facet complex")
    return Complex(ideal.n_vertices, ideal.gens, ideal.labels)


def _mask(ids: Iterable[int]) -> int:
    m = 0
    for v in ids:
        m |= 1 << v
    return m


def squarefree_part_of_power(ideal: Ideal, k: int) -> Ideal:
    """Literal oracle: squarefree members of G(I^k), by expanding products of
    k generators with exponents.  Exponential; only sensible at tiny scale."""
    from itertools import combinations_with_replacement

    if k < 1:
        raise BadParameters("k must be >= 1")
    n = ideal.n_vertices
    products: set[tuple[int, ...]] = set()
    for combo in combinations_with_replacement(range(len(ideal.gens)), k):
        exp = [0] * n
        for gi in combo:
            for v in ids_from_mask(ideal.gens[gi]):
                exp[v] += 1
        products.add(tuple(exp))
    # minimal generators of I^k: exponentwise-minimal products
    prods = sorted(products, key=sum)
    minimal: list[tuple[int, ...]] = []
    for e in prods:
        if not any(all(m[i] <= e[i] for i in range(n)) for m in minimal):
            minimal.append(e)
    squarefree = [e for e in minimal if all(x <= 1 for x in e)]
    return Ideal.from_masks(n, (_mask(i for i, x in enumerate(e) if x) for e in squarefree),
                            ideal.labels)
