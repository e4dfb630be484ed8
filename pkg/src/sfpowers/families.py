"""Path, rooted-tree and broom t-path complexes, closed forms, and fuzzers.

``path_complex(n, t)`` is the complex of windows {i..i+t-1} of the path on
vertices 1..n; ``rooted_tree_path_complex`` generalizes to directed t-paths
of a rooted tree (always a simplicial forest).  Brooms are rooted trees made
of a directed handle with extra leaves hanging off it; their vertices carry
(level, slot) coordinate labels so the associated total order on facets and
on squarefree-power generators is computable directly from a complex.

Fuzzers are constructive: forests are built either as t-path complexes of
random rooted trees or by good-leaf attachment (each new facet meets the
complex in a chain of intersections dominated by a chosen branch), so every
output passes ``is_forest`` by construction, never by rejection.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .complexes import Complex, Label, make_complex, mask_key
from .errors import BadParameters, NotABroomComplex
from .ideals import Ideal, squarefree_power
from .matchings import enumerate_matchings


# ---------------------------------------------------------------------------
# rooted trees


@dataclass(frozen=True)
class RootedTree:
    """Directed tree with edges away from the root; parent maps child -> parent."""

    root: Label
    parent: tuple[tuple[Label, Label], ...]  # (child, parent) pairs

    @staticmethod
    def build(root: Label, parent: dict) -> "RootedTree":
        if root in parent:
            raise BadParameters("the root cannot have a parent")
        verts = {root, *parent.keys(), *parent.values()}
        for v in parent:
            seen = {v}
            cur = v
            while cur != root:
                if cur not in parent:
                    raise BadParameters(f"vertex {cur!r} is not connected to the root")
                cur = parent[cur]
                if cur in seen:
                    raise BadParameters("parent map contains a cycle")
                seen.add(cur)
        _ = verts
        items = sorted(parent.items(), key=lambda kv: (repr(kv[0])))
        return RootedTree(root, tuple(items))

    def parent_map(self) -> dict:
        return dict(self.parent)

    def children_map(self) -> dict:
        out: dict = {v: [] for v in self.vertices()}
        for child, par in self.parent:
            out[par].append(child)
        return out

    def vertices(self) -> list:
        vs = {self.root}
        for child, par in self.parent:
            vs.add(child)
            vs.add(par)
        try:
            return sorted(vs)
        except TypeError:
            return sorted(vs, key=repr)


def rooted_tree_from_json(data: dict) -> RootedTree:
    parent = {}
    for par, child in data["edges"]:
        par = tuple(par) if isinstance(par, list) else par
        child = tuple(child) if isinstance(child, list) else child
        parent[child] = par
    root = data["root"]
    root = tuple(root) if isinstance(root, list) else root
    return RootedTree.build(root, parent)


# ---------------------------------------------------------------------------
# path and t-path complexes


def path_complex(n: int, t: int) -> Complex:
    """Complex of the t-vertex windows of the path graph on 1..n."""
    if not 2 <= t <= n:
        raise BadParameters("need 2 <= t <= n")
    return make_complex([list(range(i, i + t)) for i in range(1, n - t + 2)])


def rooted_tree_path_complex(tree: RootedTree, t: int) -> Complex:
    """Complex whose facets are the directed t-paths of the rooted tree; the
    empty complex when no t-path exists."""
    if t < 2:
        raise BadParameters("need t >= 2")
    children = tree.children_map()
    paths: list[list] = []

    def extend(path: list) -> None:
        if len(path) == t:
            paths.append(list(path))
            return
        for c in children.get(path[-1], ()):
            path.append(c)
            extend(path)
            path.pop()

    for v in children:
        extend([v])
    if not paths:
        return Complex(0, (), ())
    return make_complex(paths)


# ---------------------------------------------------------------------------
# brooms


@dataclass(frozen=True)
class BroomSpec:
    """Handle of length ``height`` plus ``leaf_counts[i-1]`` extra leaves
    attached at handle vertex i-1, for i = 1..height."""

    height: int
    leaf_counts: tuple[int, ...]

    def __post_init__(self):
        if self.height < 1 or len(self.leaf_counts) != self.height:
            raise BadParameters("need height >= 1 and one leaf count per level")
        if any(l < 0 for l in self.leaf_counts):
            raise BadParameters("leaf counts must be >= 0")


def broom_tree(spec: BroomSpec) -> RootedTree:
    """Broom rooted at (0, 0): handle (i, 0) for i = 0..h, and leaves (i, j)
    with parent (i-1, 0) for j = 1..leaf_counts[i-1]."""
    parent: dict = {}
    for i in range(1, spec.height + 1):
        parent[(i, 0)] = (i - 1, 0)
        for j in range(1, spec.leaf_counts[i - 1] + 1):
            parent[(i, j)] = (i - 1, 0)
    return RootedTree.build((0, 0), parent)


def broom_path_complex(spec: BroomSpec, t: int) -> Complex:
    return rooted_tree_path_complex(broom_tree(spec), t)


class BroomCoords(NamedTuple):
    coords: dict[int, tuple[int, int]]  # facet index -> (i, j)
    t: int


def broom_facet_coords(cx: Complex) -> BroomCoords:
    """Recover the (i, j) coordinates of broom t-path facets from the vertex
    labels, validating the window shape."""
    if not cx.facet_masks:
        raise NotABroomComplex("empty complex")
    for lab in cx.labels:
        if not (isinstance(lab, tuple) and len(lab) == 2
                and all(isinstance(x, int) for x in lab)):
            raise NotABroomComplex("vertex labels do not carry broom coordinates")
    sizes = {m.bit_count() for m in cx.facet_masks}
    if len(sizes) != 1:
        raise NotABroomComplex("broom path complexes are pure")
    t = sizes.pop()
    coords = {}
    for fi in range(len(cx.facet_masks)):
        labs = sorted(cx.facet_labels(fi))
        i = labs[0][0]
        expect = [(i + k, 0) for k in range(t - 1)]
        if labs[:-1] != expect or labs[-1][0] != i + t - 1:
            raise NotABroomComplex(f"facet {labs} is not a broom window")
        coords[fi] = (i, labs[-1][1])
    return BroomCoords(coords, t)


def broom_facet_order(cx: Complex) -> list[int]:
    """Facet indices in descending broom order: F(i,j) < F(k,m) iff i < k, or
    i = k and m < j (larger handle start wins; among equal starts, smaller
    slot wins)."""
    coords = broom_facet_coords(cx).coords
    asc = sorted(coords, key=lambda fi: (coords[fi][0], -coords[fi][1]))
    return list(reversed(asc))


def broom_power_order(cx: Complex, k: int) -> tuple[Ideal, list[int]]:
    """The k-th squarefree power together with its generator order induced by
    the broom facet order: matchings are compared at the largest position
    where their ascending facet sequences differ."""
    coords = broom_facet_coords(cx).coords
    ideal = squarefree_power(cx, k)
    key = {fi: (ij[0], -ij[1]) for fi, ij in coords.items()}
    matchings = enumerate_matchings(cx, k)
    decorated = []
    for match in matchings:
        keys = sorted(key[fi] for fi in match)
        mask = 0
        for fi in match:
            mask |= cx.facet_masks[fi]
        decorated.append((tuple(reversed(keys)), mask))
    decorated.sort(key=lambda km: km[0], reverse=True)
    gen_index = {g: i for i, g in enumerate(ideal.gens)}
    order = [gen_index[mask] for _keys, mask in decorated]
    if sorted(order) != list(range(len(ideal.gens))):
        raise NotABroomComplex("matchings and generators do not correspond 1-1")
    return ideal, order


# ---------------------------------------------------------------------------
# closed forms


class ClosedInvariants(NamedTuple):
    nu: int
    nu0: int
    nu1: int
    nu0_formula_valid: bool  # the nu0 closed form needs n >= t + 1


def closed_invariants(n: int, t: int) -> ClosedInvariants:
    """Closed forms for the path complex: (floor(n/t), floor((n-1)/t),
    ceil((n-t+1)/(t+1))); the nu0 formula gives 0 at n = t where the vacuous
    singleton reading makes the true value 1."""
    if not 2 <= t <= n:
        raise BadParameters("need 2 <= t <= n")
    nu = n // t
    nu0 = (n - 1) // t
    nu1 = -((n - t + 1) // -(t + 1))
    return ClosedInvariants(nu, nu0, nu1, n >= t + 1)


def closed_regularity(n: int, t: int, k: int) -> int:
    """reg(R / I^{[k+1]}) of the t-path ideal of the n-path:
    k*t + (t-1) * nu1 of the (n - k*t)-path complex."""
    if not 2 <= t <= n:
        raise BadParameters("need 2 <= t <= n")
    if not 1 <= k + 1 <= n // t:
        raise BadParameters("need 1 <= k+1 <= matching number")
    m = n - k * t
    nu1 = -((m - t + 1) // -(t + 1))
    return k * t + (t - 1) * nu1


# ---------------------------------------------------------------------------
# fuzzers (seed-deterministic, constructive)


def fuzz_rooted_tree(seed: int, n_vertices: tuple[int, int] = (3, 12)) -> RootedTree:
    rng = random.Random(("tree", seed))
    n = rng.randint(*n_vertices)
    parent = {}
    for v in range(2, n + 1):
        parent[v] = rng.randint(1, v - 1)
    return RootedTree.build(1, parent)


def _chain_under(masks: Sequence[int], s: int) -> bool:
    inters = sorted((m & s for m in masks), key=lambda m: m.bit_count())
    return all(a & b == a for a, b in zip(inters, inters[1:]))


def fuzz_forest(seed: int, n_facets: tuple[int, int] = (2, 8),
                facet_size: tuple[int, int] = (2, 4), pure: bool = False,
                connected: bool = False, style: str = "mixed") -> Complex:
    """Random simplicial forest.

    ``style="paths"`` takes the t-path complex of a random rooted tree;
    ``style="attach"`` grows facets one at a time, each attached along a
    vertex subset of an existing branch facet whose intersections with the
    older facets form a chain, so the attachment order is a good leaf order.
    """
    rng = random.Random(("forest", seed, n_facets, facet_size, pure, connected, style))
    if style == "mixed":
        style = rng.choice(["paths", "attach"])
    if style == "paths":
        t = rng.randint(*facet_size)
        lo, hi = n_facets
        for _attempt in range(40):
            tree = fuzz_rooted_tree(rng.randrange(1 << 30),
                                    (t + 1, max(t + 2, 3 * hi // 2 + t)))
            cx = rooted_tree_path_complex(tree, t)
            if lo <= len(cx) <= hi and (not connected or _facet_connected(cx)):
                return cx
        style = "attach"  # rare fallback keeps the fuzzer total
    if style != "attach":
        raise BadParameters(f"unknown style {style!r}")
    target = rng.randint(*n_facets)
    size = rng.randint(*facet_size)
    fresh = size
    masks = [(1 << size) - 1]
    while len(masks) < target:
        want = size if pure else rng.randint(*facet_size)
        branch = masks[rng.randrange(len(masks))]
        overlap = None
        bits = [b for b in range(branch.bit_length()) if branch >> b & 1]
        max_k = min(len(bits), want - 1)
        min_k = 1 if connected else 0
        for _try in range(6):
            cand = 0
            for b in rng.sample(bits, rng.randint(min_k, max_k)):
                cand |= 1 << b
            if _chain_under(masks, cand):
                overlap = cand
                break
        if overlap is None:
            if connected:
                v = rng.choice([b for b in range(branch.bit_length()) if branch >> b & 1])
                overlap = 1 << v  # singleton overlaps always form a chain
            else:
                overlap = 0
        new = overlap
        for _ in range(want - overlap.bit_count()):
            new |= 1 << fresh
            fresh += 1
        masks.append(new)
    return make_complex([[b for b in range(m.bit_length()) if m >> b & 1]
                         for m in masks], max_universe=max(64, fresh))


def _facet_connected(cx: Complex) -> bool:
    from .homology import connected_components

    return len(cx) > 0 and connected_components(cx) == 1


def fuzz_pure_complex(seed: int, n_vertices: int = 12, t: int = 3,
                      n_facets: tuple[int, int] = (2, 8)) -> Complex:
    """Random pure complex: distinct t-subsets of a small vertex pool."""
    rng = random.Random(("pure", seed, n_vertices, t, n_facets))
    count = rng.randint(*n_facets)
    facets = set()
    for _ in range(4 * count):
        facets.add(tuple(sorted(rng.sample(range(1, n_vertices + 1), t))))
        if len(facets) == count:
            break
    return make_complex([list(f) for f in facets])


def fuzz_equigenerated_ideal(seed: int, n_vertices: int = 10, degree: int = 3,
                             n_gens: tuple[int, int] = (2, 7)) -> Ideal:
    from .ideals import facet_ideal

    return facet_ideal(fuzz_pure_complex(seed, n_vertices, degree, n_gens))
