"""Cat1-group structures: axioms, enumeration, classification, and the
equivalence with crossed modules.

A structure is a pair of endomorphisms (t, h) of one group with t o h = h,
h o t = t and [ker t, ker h] = 1.  The endomorphism form is canonical; the
embedding form (e; t, h : G -> R) is a view converted on input and output.
Enumeration runs over idempotent endomorphisms and lists ordered pairs in
lexicographic order of their concatenated map arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .groups import (
    DENSE_CAP,
    GroupError,
    GroupTable,
    Homomorphism,
    Subgroup,
    as_dense,
    automorphism_generators,
    all_homomorphisms,
    compose,
    group_of_subgroup,
    idempotent_endomorphisms,
    image_of,
    inclusion_hom,
    kernel_of,
    require_dense,
    restrict_hom,
    semidirect_product,
    sub_conjugation_action,
)
from .xmod import CrossedModule, crossed_module


@dataclass(frozen=True)
class PreCat1Group:
    """(G; t, h) with t o h = h and h o t = t; build via the factories."""

    group: GroupTable
    tail: Homomorphism
    head: Homomorphism
    range_: Subgroup

    def key(self) -> tuple:
        return (self.tail.mapping, self.head.mapping)

    def __repr__(self) -> str:  # pragma: no cover
        return f"[{self.group.label} => |R|={self.range_.order}]"


class Cat1Group(PreCat1Group):
    """A pre-cat1-group that also satisfies [ker t, ker h] = 1."""


def _pre_cat1_witness(t: Sequence[int], h: Sequence[int]) -> Optional[tuple[str, int]]:
    for x, hx in enumerate(h):
        if t[hx] != hx:
            return ("t o h = h", x)
    for x, tx in enumerate(t):
        if h[tx] != tx:
            return ("h o t = t", x)
    return None


def pre_cat1_by_endomorphisms(t: Homomorphism, h: Homomorphism) -> PreCat1Group:
    """Validated pre-cat1-group from two endomorphisms of one group."""
    G = t.source
    if t.target is not G or h.source is not G or h.target is not G:
        raise GroupError("tail and head must be endomorphisms of one group")
    bad = _pre_cat1_witness(t.mapping, h.mapping)
    if bad is not None:
        raise GroupError(f"pre-cat1 axiom {bad[0]} fails at element {bad[1]}")
    rng = image_of(t)
    if rng.members != image_of(h).members:
        raise GroupError("tail and head must share an image")
    return PreCat1Group(G, t, h, rng)


def _kernels_commute(G: GroupTable, kt: Sequence[int], kh: Sequence[int]) -> Optional[tuple[int, int]]:
    for a in kt:
        for b in kh:
            if G.mul(a, b) != G.mul(b, a):
                return (a, b)
    return None


def is_cat1_group(C: PreCat1Group) -> tuple[bool, Optional[tuple[int, int]]]:
    """Kernel-commutator verdict with a noncommuting witness pair on failure."""
    kt = kernel_of(C.tail).members
    kh = kernel_of(C.head).members
    w = _kernels_commute(C.group, kt, kh)
    return (w is None, w)


def cat1_group(t: Homomorphism, h: Homomorphism) -> Cat1Group:
    pre = pre_cat1_by_endomorphisms(t, h)
    ok, w = is_cat1_group(pre)
    if not ok:
        raise GroupError(f"[ker t, ker h] != 1: elements {w[0]} and {w[1]} do not commute")
    return Cat1Group(pre.group, pre.tail, pre.head, pre.range_)


def identity_cat1(G: GroupTable) -> Cat1Group:
    ident = Homomorphism(G, G, tuple(G.elements()))
    return cat1_group(ident, ident)


# -- the embedding (general) form ---------------------------------------------


@dataclass(frozen=True)
class Cat1GeneralForm:
    """(e; t, h : G -> R) with R standalone and e an embedding into G."""

    embedding: Homomorphism
    tail: Homomorphism
    head: Homomorphism


def from_general_form(e: Homomorphism, t: Homomorphism, h: Homomorphism) -> Cat1Group:
    """Convert the embedding form into an endomorphism-form cat1-group."""
    R, G = e.source, e.target
    if t.source is not G or h.source is not G or t.target is not R or h.target is not R:
        raise GroupError("tail and head must map G onto the embedded range")
    if len(set(e.mapping)) != R.order:
        raise GroupError("the range embedding must be injective")
    if len(set(t.mapping)) != R.order or len(set(h.mapping)) != R.order:
        raise GroupError("tail and head must be surjections onto the range")
    em, tm, hm = e.mapping, t.mapping, h.mapping
    for x in G.elements():
        if tm[em[hm[x]]] != hm[x]:
            raise GroupError(f"general axiom t o e o h = h fails at element {x}")
        if hm[em[tm[x]]] != tm[x]:
            raise GroupError(f"general axiom h o e o t = t fails at element {x}")
    return cat1_group(compose(e, t), compose(e, h))


def general_form(C: Cat1Group) -> Cat1GeneralForm:
    """The embedding-form view of a cat1-group (range as a standalone group)."""
    R, members = group_of_subgroup(C.range_)
    pos = {m: i for i, m in enumerate(members)}
    e = inclusion_hom(C.range_)
    t = Homomorphism(C.group, R, tuple(pos[v] for v in C.tail.mapping))
    h = Homomorphism(C.group, R, tuple(pos[v] for v in C.head.mapping))
    return Cat1GeneralForm(e, t, h)


# -- enumeration and classification -------------------------------------------


def all_cat1_groups(G: GroupTable) -> list[Cat1Group]:
    """Every cat1 structure (t, h) on G, ordered pairs, lexicographic order.

    Since idempotents fix exactly their image, t o h = h and h o t = t hold
    for a pair of idempotents precisely when the two images coincide; pairs
    are then filtered by the kernel-commutator axiom.
    """
    require_dense(G)
    if "cat1s" not in G._cache:
        ies = idempotent_endomorphisms(G)
        kers = [tuple(x for x, v in enumerate(f.mapping) if v == 0) for f in ies]
        by_image: dict[frozenset, list[int]] = {}
        for i, f in enumerate(ies):
            by_image.setdefault(frozenset(f.mapping), []).append(i)
        commute_cache: dict[tuple, Optional[tuple]] = {}
        out = []
        for i, f in enumerate(ies):
            mates = by_image[frozenset(f.mapping)]
            for j in mates:
                key = (kers[i], kers[j])
                if key not in commute_cache:
                    commute_cache[key] = _kernels_commute(G, kers[i], kers[j])
                if commute_cache[key] is None:
                    rng = image_of(f)
                    out.append(Cat1Group(G, f, ies[j], rng))
        G._cache["cat1s"] = out
    return list(G._cache["cat1s"])


@dataclass(frozen=True)
class Cat1Classification:
    structures: tuple[Cat1Group, ...]
    representatives: tuple[Cat1Group, ...]
    families: tuple[tuple[int, ...], ...]  # 0-based positions per class


def _conjugated_map(alpha: Sequence[int], alpha_inv: Sequence[int],
                    m: Sequence[int]) -> tuple[int, ...]:
    return tuple(alpha[m[alpha_inv[x]]] for x in range(len(m)))


def cat1_structure_orbit_maps(G: GroupTable) -> list[tuple[int, ...]]:
    """For each Aut(G) generator, the induced permutation of cat1 positions."""
    cat1s = all_cat1_groups(G)
    index = {c.key(): p for p, c in enumerate(cat1s)}
    sigmas = []
    for a in automorphism_generators(G):
        am = a.mapping
        inv = [0] * len(am)
        for x, v in enumerate(am):
            inv[v] = x
        sigma = []
        for c in cat1s:
            key = (_conjugated_map(am, inv, c.tail.mapping),
                   _conjugated_map(am, inv, c.head.mapping))
            try:
                sigma.append(index[key])
            except KeyError:
                raise GroupError(
                    "conjugating a cat1 structure left the enumeration; "
                    "the Aut action is broken") from None
        sigmas.append(tuple(sigma))
    return sigmas


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _families_from_unionfind(uf: _UnionFind, n: int) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(uf.find(x), []).append(x)
    return tuple(tuple(groups[r]) for r in sorted(groups))


def cat1_isomorphism_classes(G: GroupTable) -> Cat1Classification:
    """Aut(G)-orbits of cat1 structures; least member per orbit represents."""
    cat1s = all_cat1_groups(G)
    n = len(cat1s)
    uf = _UnionFind(n)
    for sigma in cat1_structure_orbit_maps(G):
        for p, q in enumerate(sigma):
            uf.union(p, q)
    families = _families_from_unionfind(uf, n)
    reps = tuple(cat1s[f[0]] for f in families)
    return Cat1Classification(tuple(cat1s), reps, families)


# -- the equivalence with crossed modules --------------------------------------


def xmod_of_cat1(C: PreCat1Group) -> CrossedModule:
    """S = ker t, R = im t, boundary h|S, action by conjugation in G."""
    G = C.group
    ker = kernel_of(C.tail)
    rng = C.range_
    boundary = restrict_hom(C.head, ker, rng)
    action = sub_conjugation_action(G, rng, ker)
    return crossed_module(action.space, action.actor, boundary, action)


def cat1_of_xmod(X: CrossedModule) -> Cat1Group:
    """G = S x| R with t(s,r) = (1,r) and h(s,r) = (1, (ds) r)."""
    S, R = X.source, X.range_
    G = semidirect_product(S, R, X.action, label=f"{S.label} x| {R.label}")
    if G.order <= DENSE_CAP:
        G = as_dense(G)
    rn = R.order
    bm = X.boundary.mapping
    tmap = tuple(x % rn for x in G.elements())
    hmap = tuple(R.mul(bm[x // rn], x % rn) for x in G.elements())
    return cat1_group(Homomorphism(G, G, tmap), Homomorphism(G, G, hmap))


# -- morphisms -----------------------------------------------------------------


@dataclass(frozen=True)
class Cat1Morphism:
    source: PreCat1Group
    target: PreCat1Group
    hom: Homomorphism


def _intertwines(f: Sequence[int], a: Sequence[int], b: Sequence[int]) -> bool:
    # f o a = b o f on the source elements
    return all(f[a[x]] == b[f[x]] for x in range(len(f)))


def cat1_morphism(C1: PreCat1Group, C2: PreCat1Group, f: Homomorphism) -> Cat1Morphism:
    if f.source is not C1.group or f.target is not C2.group:
        raise GroupError("the morphism map must go between the underlying groups")
    if not _intertwines(f.mapping, C1.tail.mapping, C2.tail.mapping):
        raise GroupError("f o t1 != t2 o f")
    if not _intertwines(f.mapping, C1.head.mapping, C2.head.mapping):
        raise GroupError("f o h1 != h2 o f")
    return Cat1Morphism(C1, C2, f)


def is_cat1_morphism(C1: PreCat1Group, C2: PreCat1Group, f: Homomorphism) -> bool:
    return (_intertwines(f.mapping, C1.tail.mapping, C2.tail.mapping)
            and _intertwines(f.mapping, C1.head.mapping, C2.head.mapping))


def all_cat1_morphisms(C1: PreCat1Group, C2: PreCat1Group) -> list[Cat1Morphism]:
    out = []
    for f in all_homomorphisms(C1.group, C2.group):
        if is_cat1_morphism(C1, C2, f):
            out.append(Cat1Morphism(C1, C2, f))
    return out
