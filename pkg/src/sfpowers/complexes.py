"""Facet-list simplicial complexes over an interned vertex universe.

Vertices carry arbitrary hashable labels (typically ints or strings) that are
interned to dense ids ``0..n-1``; every facet is stored as a bit mask over
those ids, so set operations cost O(universe/word).  Complexes are immutable
after construction and all operations here are pure functions, safe to share
across threads.

The empty complex (zero facets) is a legal value; a complex whose only facet
would be the empty set is rejected.
"""

from __future__ import annotations

import json
from typing import Hashable, Iterable, Sequence

from .errors import (
    EmptyFacet,
    EmptyInput,
    FacetOutsideY,
    NotAFacet,
    UniverseTooLarge,
    UnknownVertex,
    universe_cap,
)

Label = Hashable


def mask_from_ids(ids: Iterable[int]) -> int:
    m = 0
    for v in ids:
        m |= 1 << v
    return m


def ids_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def mask_key(mask: int) -> tuple[int, ...]:
    """Canonical sort key: the ascending vertex-id tuple."""
    return ids_from_mask(mask)


def maximal_antichain(masks: Iterable[int]) -> tuple[list[int], int]:
    """Keep masks not contained in another (facet minimalization).

    Returns the kept masks in canonical order and the number of inputs
    dropped (duplicates plus non-maximal elements).
    """
    masks = list(masks)
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    kept.sort(key=mask_key)
    return kept, len(masks) - len(kept)


def minimal_antichain(masks: Iterable[int]) -> tuple[list[int], int]:
    """Keep masks containing no other (monomial-ideal minimalization)."""
    masks = list(masks)
    uniq = sorted(set(masks), key=lambda m: m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == k for k in kept):
            kept.append(m)
    kept.sort(key=mask_key)
    return kept, len(masks) - len(kept)


class Complex:
    """Immutable simplicial complex stored by its inclusion-maximal facets."""

    __slots__ = ("n_vertices", "facet_masks", "labels", "n_discarded", "_label_to_id")

    def __init__(self, n_vertices: int, facet_masks: Sequence[int],
                 labels: Sequence[Label], n_discarded: int = 0):
        self.n_vertices = n_vertices
        self.facet_masks = tuple(facet_masks)
        self.labels = tuple(labels)
        self.n_discarded = n_discarded
        self._label_to_id = {lab: i for i, lab in enumerate(self.labels)}

    @classmethod
    def from_masks(cls, n_vertices: int, masks: Iterable[int],
                   labels: Sequence[Label] | None = None) -> "Complex":
        """Internal constructor: minimalizes and sorts; no universe cap."""
        masks = list(masks)
        if any(m == 0 for m in masks):
            raise EmptyFacet("facets must be nonempty vertex sets")
        kept, dropped = maximal_antichain(masks)
        if labels is None:
            labels = tuple(range(n_vertices))
        return cls(n_vertices, kept, labels, dropped)

    # -- basic accessors ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.facet_masks)

    @property
    def n_facets(self) -> int:
        return len(self.facet_masks)

    @property
    def support_mask(self) -> int:
        m = 0
        for f in self.facet_masks:
            m |= f
        return m

    def facet_ids(self, i: int) -> frozenset[int]:
        return frozenset(ids_from_mask(self.facet_masks[i]))

    def facets(self) -> list[frozenset[int]]:
        return [frozenset(ids_from_mask(m)) for m in self.facet_masks]

    def facet_labels(self, i: int) -> list[Label]:
        return [self.labels[v] for v in ids_from_mask(self.facet_masks[i])]

    def facet_label_sets(self) -> list[list[Label]]:
        return [self.facet_labels(i) for i in range(len(self.facet_masks))]

    def id_of(self, label: Label) -> int:
        try:
            return self._label_to_id[label]
        except KeyError:
            raise UnknownVertex(f"unknown vertex label {label!r}") from None

    def vertex_mask(self, vertices: Iterable[int]) -> int:
        """Mask from dense vertex ids, validating they exist."""
        m = 0
        for v in vertices:
            if not 0 <= v < self.n_vertices:
                raise UnknownVertex(f"vertex id {v} outside universe of size {self.n_vertices}")
            m |= 1 << v
        return m

    def label_mask(self, labels: Iterable[Label]) -> int:
        return mask_from_ids(self.id_of(lab) for lab in labels)

    def ids_of_labels(self, labels: Iterable[Label]) -> frozenset[int]:
        return frozenset(self.id_of(lab) for lab in labels)

    def facet_index(self, facet: Iterable[int] | int) -> int:
        """Index of a facet given as a mask or an iterable of vertex ids."""
        m = facet if isinstance(facet, int) else self.vertex_mask(facet)
        try:
            return self.facet_masks.index(m)
        except ValueError:
            raise NotAFacet(f"{sorted(ids_from_mask(m))} is not a facet") from None

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex."""
        if not self.facet_masks:
            return -1
        return max(m.bit_count() for m in self.facet_masks) - 1

    @property
    def is_pure(self) -> bool:
        sizes = {m.bit_count() for m in self.facet_masks}
        return len(sizes) <= 1

    def facet_size(self) -> int:
        """Common facet size of a pure complex."""
        sizes = {m.bit_count() for m in self.facet_masks}
        if len(sizes) != 1:
            from .errors import NotPure
            raise NotPure("complex is not pure")
        return sizes.pop()

    def restrict(self, indices: Iterable[int]) -> "Complex":
        """Subcomplex generated by a subset of facets; universe unchanged."""
        masks = [self.facet_masks[i] for i in indices]
        return Complex(self.n_vertices, sorted(set(masks), key=mask_key), self.labels)

    # -- equality / hashing / repr ----------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Complex)
                and self.n_vertices == other.n_vertices
                and self.facet_masks == other.facet_masks
                and self.labels == other.labels)

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.facet_masks, self.labels))

    def __repr__(self) -> str:
        shown = [sorted(self.facet_labels(i), key=repr) for i in range(min(len(self), 6))]
        tail = ", ..." if len(self) > 6 else ""
        return f"Complex({len(self)} facets, {self.n_vertices} vertices: {shown}{tail})"

    # -- JSON --------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"facets": self.facet_label_sets()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _intern_labels(facet_lists: Sequence[Sequence[Label]]) -> tuple[Label, ...]:
    seen: dict[Label, None] = {}
    for f in facet_lists:
        for lab in f:
            seen.setdefault(lab, None)
    labs = list(seen)
    if all(isinstance(x, int) for x in labs) or all(isinstance(x, str) for x in labs):
        labs.sort()
    else:
        labs.sort(key=lambda x: (type(x).__name__, repr(x)))
    return tuple(labs)


def make_complex(facet_lists: Iterable[Iterable[Label]],
                 max_universe: int | None = None) -> Complex:
    """Build a complex from facet label lists.

    Duplicate facets are merged and facets contained in another are discarded;
    the discard count is kept on ``n_discarded``.  Labels are interned to
    dense ids (sorted when homogeneous).
    """
    facet_lists = [list(f) for f in facet_lists]
    if not facet_lists:
        raise EmptyInput("no facets given")
    if any(len(f) == 0 for f in facet_lists):
        raise EmptyFacet("facets must be nonempty")
    labels = _intern_labels(facet_lists)
    cap = universe_cap() if max_universe is None else max_universe
    if len(labels) > cap:
        raise UniverseTooLarge(f"{len(labels)} vertices exceeds the cap of {cap}")
    lab_to_id = {lab: i for i, lab in enumerate(labels)}
    masks = [mask_from_ids(lab_to_id[lab] for lab in f) for f in facet_lists]
    kept, dropped = maximal_antichain(masks)
    return Complex(len(labels), kept, labels, dropped)


def complex_from_json(data: str | dict) -> Complex:
    obj = json.loads(data) if isinstance(data, str) else data
    return make_complex(obj["facets"])


def induced_subcomplex(cx: Complex, vertices: Iterable[int]) -> Complex:
    """Complex generated by the facets of ``cx`` contained in ``vertices`` (ids)."""
    ymask = cx.vertex_mask(vertices)
    masks = [m for m in cx.facet_masks if m & ymask == m]
    return Complex(cx.n_vertices, masks, cx.labels)


def is_gap(cx: Complex, f: Iterable[int], g: Iterable[int]) -> bool:
    """True iff facets ``f`` and ``g`` are disjoint and the induced subcomplex
    on their union has no third facet."""
    fi = cx.facet_index(f)
    gi = cx.facet_index(g)
    return gap_by_index(cx, fi, gi)


def gap_by_index(cx: Complex, fi: int, gi: int) -> bool:
    fm = cx.facet_masks[fi]
    gm = cx.facet_masks[gi]
    if fi == gi or fm & gm:
        return False
    union = fm | gm
    for j, hm in enumerate(cx.facet_masks):
        if j not in (fi, gi) and hm & union == hm:
            return False
    return True


def complement_complex(cx: Complex, vertices: Iterable[int]) -> Complex:
    """Complex generated by ``Y - F`` over facets ``F``, on vertex universe ``Y``.

    Every facet must be contained in ``Y``.  The result is re-interned so its
    universe is exactly ``Y`` (labels preserved).
    """
    yids = sorted(set(vertices))
    ymask = cx.vertex_mask(yids)
    for m in cx.facet_masks:
        if m & ymask != m:
            raise FacetOutsideY(f"facet {sorted(ids_from_mask(m))} not contained in Y")
    pos = {v: i for i, v in enumerate(yids)}
    comp = []
    for m in cx.facet_masks:
        comp.append(mask_from_ids(pos[v] for v in ids_from_mask(ymask & ~m)))
    if any(c == 0 for c in comp):
        # Y - F empty means F = Y; the complement would be the empty facet.
        raise EmptyFacet("complement of a facet equal to Y is empty")
    kept, _ = maximal_antichain(comp)
    return Complex(len(yids), kept, tuple(cx.labels[v] for v in yids))


def delete_facet_closed(cx: Complex, facet: Iterable[int]) -> Complex:
    """Complex generated by the facets disjoint from the given facet."""
    fi = cx.facet_index(facet)
    fm = cx.facet_masks[fi]
    masks = [m for m in cx.facet_masks if m & fm == 0]
    return Complex(cx.n_vertices, masks, cx.labels)
