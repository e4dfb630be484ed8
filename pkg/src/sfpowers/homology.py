"""Reduced simplicial homology dimensions over a field.

The engine materializes all faces of a facet list (bit masks, budgeted),
builds the augmented oriented chain complex with the usual alternating signs
(orientation fixed by the global vertex order, ``delta_0`` sends every vertex
to 1), and reads off ``dim H~_i = nullity(delta_i) - rank(delta_{i+1})``.

Ranks:
  * GF(2): bitset Gaussian elimination on Python ints, with a packed-word
    numpy elimination for very wide matrices;
  * GF(p): dense modular elimination;
  * rationals: exact integer elimination (fraction-free rows with gcd
    normalization); a classical Bareiss elimination is kept alongside and
    cross-checked in the tests.

Large complexes are optionally preprocessed by elementary collapses (free
face removal), which preserve the homotopy type and hence every homology
dimension; the collapsed and literal paths are compared in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Callable, Iterable, Sequence

from .complexes import Complex, ids_from_mask, mask_key
from .errors import (
    BadParameters,
    Budget,
    BudgetExceeded,
    NotAPartialOrder,
    face_budget,
    node_budget,
)


# ---------------------------------------------------------------------------
# coefficient fields


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field tag: GF(2), GF(p) for an odd prime p, or Q."""

    kind: str  # "gf2" | "gfp" | "q"
    p: int | None = None

    @staticmethod
    def gf(p: int) -> "Field":
        if not _is_prime(p) or p >= 1 << 31:
            raise BadParameters(f"{p} is not a prime below 2^31")
        return Field("gf2") if p == 2 else Field("gfp", p)

    def __str__(self) -> str:
        return {"gf2": "gf2", "q": "q"}.get(self.kind) or f"gfp:{self.p}"


GF2 = Field("gf2")
QQ = Field("q")


def parse_field(spec: str) -> Field:
    s = spec.strip().lower()
    if s == "gf2":
        return GF2
    if s in ("q", "qq", "rationals"):
        return QQ
    if s.startswith("gfp:"):
        return Field.gf(int(s[4:]))
    raise BadParameters(f"unknown field spec {spec!r} (use gf2, q, or gfp:P)")


# ---------------------------------------------------------------------------
# faces


def _faces_by_dim(facet_masks: Sequence[int], limit: int) -> dict[int, list[int]]:
    """All nonempty faces of the given facets, grouped by dimension."""
    faces: set[int] = set()
    check = 0
    for fm in facet_masks:
        sub = fm
        while sub:
            faces.add(sub)
            sub = (sub - 1) & fm
            check += 1
            if check >= 8192:
                check = 0
                if len(faces) > limit:
                    raise BudgetExceeded(f"face budget of {limit} exceeded")
        if len(faces) > limit:
            raise BudgetExceeded(f"face budget of {limit} exceeded")
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort(key=mask_key)
    return by_dim


def faces_from_facets(cx: Complex, limit: int | None = None) -> dict[int, list[tuple[int, ...]]]:
    """All faces of the complex as sorted vertex-id tuples, keyed by dimension."""
    limit = face_budget() if limit is None else limit
    by_dim = _faces_by_dim(cx.facet_masks, limit)
    return {d: [ids_from_mask(m) for m in masks] for d, masks in by_dim.items()}


# ---------------------------------------------------------------------------
# elementary collapses (optional homotopy-preserving reduction)


def _collapse(faces: set[int], support: int) -> set[int]:
    """Repeatedly remove free pairs (sigma, tau): sigma with exactly one
    coface of one dimension higher (hence exactly one proper coface at all,
    because face sets are closed under subsets)."""
    verts = ids_from_mask(support)
    queue = list(faces)
    in_queue = set(queue)
    while queue:
        sigma = queue.pop()
        in_queue.discard(sigma)
        if sigma not in faces:
            continue
        tau = 0
        count = 0
        for v in verts:
            bit = 1 << v
            if sigma & bit:
                continue
            cof = sigma | bit
            if cof in faces:
                tau = cof
                count += 1
                if count > 1:
                    break
        if count != 1:
            continue
        faces.discard(sigma)
        faces.discard(tau)
        for big in (tau, sigma):
            m = big
            while m:
                low = m & -m
                m ^= low
                sub = big ^ low
                if sub and sub in faces and sub not in in_queue:
                    queue.append(sub)
                    in_queue.add(sub)
    return faces


# ---------------------------------------------------------------------------
# boundary matrices


def _boundary_sparse(lower: Sequence[int], upper: Sequence[int]) -> list[list[tuple[int, int]]]:
    """Columns of delta: for each face in ``upper``, the list of
    (row index into ``lower``, sign) entries."""
    index = {m: i for i, m in enumerate(lower)}
    cols = []
    for f in upper:
        entries = []
        sign = 1
        m = f
        while m:
            low = m & -m
            m ^= low
            entries.append((index[f ^ low], sign))
            sign = -sign
        cols.append(entries)
    return cols


def boundary_matrix(faces: dict[int, list[tuple[int, ...]]], i: int,
                    field: Field = QQ) -> list[list[int]]:
    """Dense matrix of delta_i in the canonical face bases.

    Rows are indexed by (i-1)-faces, columns by i-faces; delta_0 is the
    augmentation row of ones.  Entries are reduced modulo p for GF(p) fields.
    """
    if i < 0:
        raise BadParameters("boundary index must be >= 0")
    upper = faces.get(i, [])
    if i == 0:
        row = [1] * len(upper)
        return [row]
    lower = faces.get(i - 1, [])
    index = {f: r for r, f in enumerate(lower)}
    mat = [[0] * len(upper) for _ in range(len(lower))]
    for c, f in enumerate(upper):
        for j in range(len(f)):
            sub = f[:j] + f[j + 1:]
            val = 1 if j % 2 == 0 else -1
            if field.kind == "gf2":
                val = 1
            elif field.kind == "gfp":
                val %= field.p
            mat[index[sub]][c] = val
    return mat


# ---------------------------------------------------------------------------
# ranks


def rank_gf2(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows given as bit masks."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = row
                rank += 1
                break
            row ^= piv
    return rank


def _rank_gf2_numpy(rows: list[int], width: int) -> int:
    import numpy as np

    words = max(1, (width + 63) // 64)
    mat = np.zeros((len(rows), words), dtype=np.uint64)
    mask64 = (1 << 64) - 1
    for r, row in enumerate(rows):
        w = 0
        while row:
            mat[r, w] = row & mask64
            row >>= 64
            w += 1
    rank = 0
    top = 0
    nrows = len(rows)
    for col in range(width):
        if top == nrows:
            break
        w, b = divmod(col, 64)
        bit = np.uint64(1 << b)
        nz = np.nonzero(mat[top:, w] & bit)[0]
        if nz.size == 0:
            continue
        piv = top + int(nz[0])
        if piv != top:
            mat[[top, piv]] = mat[[piv, top]]
        hits = np.nonzero(mat[top + 1:, w] & bit)[0]
        if hits.size:
            mat[hits + top + 1] ^= mat[top]
        rank += 1
        top += 1
    return rank


def rank_modp(rows: list[list[int]], p: int) -> int:
    """Dense Gaussian elimination over GF(p)."""
    mat = [[x % p for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    top = 0
    for col in range(ncols):
        piv = next((r for r in range(top, nrows) if mat[r][col]), None)
        if piv is None:
            continue
        mat[top], mat[piv] = mat[piv], mat[top]
        inv = pow(mat[top][col], p - 2, p)
        prow = mat[top]
        for r in range(top + 1, nrows):
            f = mat[r][col]
            if f:
                f = f * inv % p
                row = mat[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - f * prow[c]) % p
        rank += 1
        top += 1
        if top == nrows:
            break
    return rank


def rank_int_exact(rows: Iterable[dict[int, int]]) -> int:
    """Exact rank over Q of sparse integer rows (fraction-free elimination
    with gcd normalization, smallest-row pivoting)."""
    from math import gcd

    active: dict[int, dict[int, int]] = {}
    by_col: dict[int, set[int]] = {}
    for rid, row in enumerate(rows):
        row = {c: v for c, v in row.items() if v}
        if row:
            active[rid] = row
            for c in row:
                by_col.setdefault(c, set()).add(rid)
    rank = 0
    while active:
        rid = min(active, key=lambda r: (len(active[r]),
                                         min(abs(v) for v in active[r].values()), r))
        row = active.pop(rid)
        col, a = min(row.items(), key=lambda cv: (abs(cv[1]), cv[0]))
        for c in row:
            by_col[c].discard(rid)
        rank += 1
        for other_id in list(by_col.get(col, ())):
            other = active[other_id]
            b = other[col]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            if fa != 1:
                for c in other:
                    other[c] *= fa
            for c, v in row.items():
                nv = other.get(c, 0) - fb * v
                if nv:
                    other[c] = nv
                    by_col.setdefault(c, set()).add(other_id)
                else:
                    if c in other:
                        del other[c]
                        by_col[c].discard(other_id)
            if other:
                g = 0
                for v in other.values():
                    g = gcd(g, v)
                if g > 1:
                    for c in other:
                        other[c] //= g
            else:
                del active[other_id]
    return rank


def rank_bareiss(rows: list[list[int]]) -> int:
    """Exact rank over Q via classical fraction-free Bareiss elimination."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    prev = 1
    rank = 0
    top = 0
    for col in range(ncols):
        piv = next((r for r in range(top, nrows) if mat[r][col]), None)
        if piv is None:
            continue
        mat[top], mat[piv] = mat[piv], mat[top]
        p = mat[top][col]
        for r in range(top + 1, nrows):
            mr = mat[r]
            f = mr[col]
            for c in range(col, ncols):
                mr[c] = (p * mr[c] - f * mat[top][c]) // prev
        prev = p
        rank += 1
        top += 1
        if top == nrows:
            break
    return rank


def _rank_sparse_cols(cols: list[list[tuple[int, int]]], n_rows: int, field: Field) -> int:
    """Rank of a matrix given by sparse signed columns."""
    if not cols or n_rows == 0:
        return 0
    if field.kind == "gf2":
        rows_int = []
        for col in cols:
            m = 0
            for r, _s in col:
                m |= 1 << r
            rows_int.append(m)
        # treat columns as bitset rows (rank is transpose-invariant)
        if len(cols) * n_rows > 1 << 24:
            return _rank_gf2_numpy(rows_int, n_rows)
        return rank_gf2(rows_int)
    if field.kind == "q":
        return rank_int_exact([{r: s for r, s in col} for col in cols])
    dense = [[0] * n_rows for _ in cols]
    for i, col in enumerate(cols):
        for r, s in col:
            dense[i][r] = s % field.p
    return rank_modp(dense, field.p)


# ---------------------------------------------------------------------------
# homology


_COLLAPSE_THRESHOLD = 8192


def homology_from_masks(facet_masks: Sequence[int], field: Field,
                        limit: int | None = None,
                        collapse: bool | None = None) -> dict[int, int]:
    """Reduced homology dimensions of the complex spanned by facet masks,
    indexed -1..dim.  The empty facet list yields {-1: 1}."""
    if not facet_masks:
        return {-1: 1}
    limit = face_budget() if limit is None else limit
    orig_dim = max(m.bit_count() for m in facet_masks) - 1
    by_dim = _faces_by_dim(facet_masks, limit)
    total = sum(len(v) for v in by_dim.values())
    if collapse is None:
        collapse = total > _COLLAPSE_THRESHOLD
    if collapse:
        support = 0
        for m in facet_masks:
            support |= m
        faceset = set()
        for v in by_dim.values():
            faceset.update(v)
        faceset = _collapse(faceset, support)
        by_dim = {}
        for f in faceset:
            by_dim.setdefault(f.bit_count() - 1, []).append(f)
        for d in by_dim:
            by_dim[d].sort(key=mask_key)
    max_dim = max(by_dim)
    counts = {d: len(by_dim.get(d, [])) for d in range(max_dim + 1)}
    ranks = {0: 1}  # augmentation: some vertex exists
    for i in range(1, max_dim + 1):
        cols = _boundary_sparse(by_dim.get(i - 1, []), by_dim.get(i, []))
        ranks[i] = _rank_sparse_cols(cols, counts[i - 1], field)
    ranks[max_dim + 1] = 0
    dims = {-1: 1 - ranks[0]}
    for i in range(0, orig_dim + 1):
        if i <= max_dim:
            dims[i] = counts[i] - ranks[i] - ranks[i + 1]
        else:
            dims[i] = 0
    return dims


def reduced_homology_dims(cx: Complex, field: Field = GF2,
                          limit: int | None = None,
                          collapse: bool | None = None) -> dict[int, int]:
    """Reduced homology dimensions of a complex over the given field."""
    return homology_from_masks(cx.facet_masks, field, limit, collapse)


def connected_components(cx: Complex) -> int:
    """Number of connected components (facets glued along shared vertices)."""
    masks = cx.facet_masks
    parent = list(range(len(masks)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    return len({find(i) for i in range(len(masks))})


def reduced_h0_dim(cx: Complex) -> int:
    """dim H~_0 = number of connected components minus one (field-free)."""
    if not cx.facet_masks:
        return 0
    return connected_components(cx) - 1


# ---------------------------------------------------------------------------
# order complexes


def order_complex(elements: Sequence, less_than: Callable,
                  validate: bool = True, budget: int | None = None) -> Complex:
    """Complex of chains of a strict partial order; facets are the maximal
    chains, so ``faces_from_facets`` recovers every chain."""
    elems = list(elements)
    n = len(elems)
    if n == 0:
        return Complex(0, (), ())
    less = [0] * n
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            if i != j and less_than(a, b):
                less[i] |= 1 << j
    if validate:
        for i, a in enumerate(elems):
            if less_than(a, a):
                raise NotAPartialOrder(f"{a!r} < {a!r} violates irreflexivity")
            m = less[i]
            while m:
                low = m & -m
                j = low.bit_length() - 1
                m ^= low
                if (less[j] >> i) & 1:
                    raise NotAPartialOrder("antisymmetry violated")
                if less[j] & ~less[i]:
                    raise NotAPartialOrder("transitivity violated")
    covers = []
    for i in range(n):
        above = less[i]
        shadow = 0
        m = above
        while m:
            low = m & -m
            shadow |= less[low.bit_length() - 1]
            m ^= low
        covers.append(above & ~shadow)
    incoming = 0
    for m in less:
        incoming |= m
    minimals = [i for i in range(n) if not (incoming >> i) & 1]
    spend = Budget(node_budget() if budget is None else budget, "order-complex chains")
    chains: list[int] = []
    path: list[int] = []

    def walk(u: int) -> None:
        spend.spend()
        path.append(u)
        if covers[u] == 0:
            m = 0
            for v in path:
                m |= 1 << v
            chains.append(m)
        else:
            m = covers[u]
            while m:
                low = m & -m
                walk(low.bit_length() - 1)
                m ^= low
        path.pop()

    for i in minimals:
        walk(i)
    # maximal chains never contain one another, so no antichain pass is needed
    chains.sort(key=mask_key)
    return Complex(n, chains, tuple(elems))
