"""Cat2-group structures and cat^n generalities.

A cat2-group is an unordered pair of cat1 structures on one group whose four
maps commute pairwise; constructors keep the caller's orientation while the
enumeration emits each pair once, lexicographically smaller structure first.
The pair scan switches to blocked numpy composition when the structure list
is large.  Isomorphism classification computes orbits under Aut(G) combined
with the orientation swap, via union-find over the induced position
permutations of a small automorphism generating set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .groups import (
    GroupError,
    GroupTable,
    Homomorphism,
    Subgroup,
    all_homomorphisms,
    compose,
    image_of,
    require_dense,
    restrict_hom,
    _iter_isomorphism_maps,
)
from .cat1 import (
    Cat1Group,
    PreCat1Group,
    _UnionFind,
    _families_from_unionfind,
    _intertwines,
    all_cat1_groups,
    is_cat1_group,
    pre_cat1_by_endomorphisms,
)

_NUMPY_SCAN_MIN = 64  # switch the pair scan to numpy above this many cat1s


@dataclass(frozen=True)
class PreCat2Group:
    """Two commuting pre-cat1 structures on one group.

    The pair is semantically unordered; the stored orientation is the one the
    structure was built with (the enumeration emits the lexicographically
    canonical orientation), and classification identifies transposes.
    """

    group: GroupTable
    c1: PreCat1Group
    c2: PreCat1Group

    @cached_property
    def r1(self) -> Subgroup:
        return self.c1.range_

    @cached_property
    def r2(self) -> Subgroup:
        return self.c2.range_

    @cached_property
    def r12(self) -> Subgroup:
        return image_of(compose(self.c1.tail, self.c2.tail))

    @cached_property
    def size(self) -> tuple[int, int, int, int]:
        return (self.group.order, self.r1.order, self.r2.order, self.r12.order)

    def key(self) -> tuple:
        return (self.c1.key(), self.c2.key())

    def __repr__(self) -> str:  # pragma: no cover
        return f"<cat2 on {self.group.label} size {list(self.size)}>"


class Cat2Group(PreCat2Group):
    """Both generating structures are cat1-groups."""


def commutation_witness(c1: PreCat1Group, c2: PreCat1Group) -> Optional[tuple[str, int]]:
    """First violated commutation identity, as (name, element), or None."""
    t1, h1 = c1.tail.mapping, c1.head.mapping
    t2, h2 = c2.tail.mapping, c2.head.mapping
    for name, a, b in (("t1 o t2 = t2 o t1", t1, t2),
                       ("h1 o h2 = h2 o h1", h1, h2),
                       ("t1 o h2 = h2 o t1", t1, h2),
                       ("t2 o h1 = h1 o t2", t2, h1)):
        for x in range(len(a)):
            if a[b[x]] != b[a[x]]:
                return (name, x)
    return None


def pre_cat2_group(c1: PreCat1Group, c2: PreCat1Group) -> PreCat2Group:
    if c1.group is not c2.group:
        raise GroupError("both structures must live on the same group")
    bad = commutation_witness(c1, c2)
    if bad is not None:
        raise GroupError(f"commutation identity {bad[0]} fails at element {bad[1]}")
    return PreCat2Group(c1.group, c1, c2)


def cat2_group(c1: Cat1Group, c2: Cat1Group) -> Cat2Group:
    pre = pre_cat2_group(c1, c2)
    for c in (pre.c1, pre.c2):
        ok, w = is_cat1_group(c)
        if not ok:
            raise GroupError(f"a generating structure is not a cat1-group: witness {w}")
    return Cat2Group(pre.group, pre.c1, pre.c2)


def transpose_cat2(C: PreCat2Group) -> PreCat2Group:
    """The same unordered structure with the opposite orientation."""
    return type(C)(C.group, C.c2, C.c1)


def diagonal_pre_cat1(C: PreCat2Group) -> tuple[PreCat1Group, bool, Optional[tuple]]:
    """The diagonal (t1 o t2, h1 o h2) with its cat1 verdict and witness."""
    t = compose(C.c1.tail, C.c2.tail)
    h = compose(C.c1.head, C.c2.head)
    pre = pre_cat1_by_endomorphisms(t, h)
    ok, w = is_cat1_group(pre)
    return pre, ok, w


# -- enumeration ---------------------------------------------------------------


def _compatible_pairs_python(tmaps, hmaps) -> list[tuple[int, int]]:
    k = len(tmaps)
    n = len(tmaps[0]) if k else 0
    rng = range(n)
    pairs = []
    for i in range(k):
        t1, h1 = tmaps[i], hmaps[i]
        for j in range(i, k):
            t2, h2 = tmaps[j], hmaps[j]
            if (all(t1[t2[x]] == t2[t1[x]] for x in rng)
                    and all(h1[h2[x]] == h2[h1[x]] for x in rng)
                    and all(t1[h2[x]] == h2[t1[x]] for x in rng)
                    and all(t2[h1[x]] == h1[t2[x]] for x in rng)):
                pairs.append((i, j))
    return pairs


def _compatible_pairs_numpy(tmaps, hmaps) -> list[tuple[int, int]]:
    k = len(tmaps)
    T = np.array(tmaps, dtype=np.int16)
    H = np.array(hmaps, dtype=np.int16)
    pairs = []
    # keep each (block, k, n) composition tensor around 16 MB
    block = max(1, min(256, (1 << 24) // max(1, k * T.shape[1])))
    for start in range(0, k, block):
        stop = min(start + block, k)
        Tb, Hb = T[start:stop], H[start:stop]
        mask = (Tb[:, T] == np.swapaxes(T[:, Tb], 0, 1)).all(axis=2)
        mask &= (Hb[:, H] == np.swapaxes(H[:, Hb], 0, 1)).all(axis=2)
        mask &= (Tb[:, H] == np.swapaxes(H[:, Tb], 0, 1)).all(axis=2)
        mask &= (Hb[:, T] == np.swapaxes(T[:, Hb], 0, 1)).all(axis=2)
        for p, row in enumerate(mask):
            i = start + p
            js = np.nonzero(row)[0]
            pairs.extend((i, int(j)) for j in js if j >= i)
    return pairs


def cat2_pair_indices(G: GroupTable) -> list[tuple[int, int]]:
    """Index pairs (i <= j) of commuting cat1 structures, canonical order."""
    if "cat2pairs" not in G._cache:
        cat1s = all_cat1_groups(G)
        tmaps = [c.tail.mapping for c in cat1s]
        hmaps = [c.head.mapping for c in cat1s]
        if len(cat1s) >= _NUMPY_SCAN_MIN:
            pairs = _compatible_pairs_numpy(tmaps, hmaps)
        else:
            pairs = _compatible_pairs_python(tmaps, hmaps)
        pairs.sort()
        G._cache["cat2pairs"] = pairs
    return list(G._cache["cat2pairs"])


def all_cat2_groups(G: GroupTable) -> list[Cat2Group]:
    """All unordered pairs {C1, C2} of cat1 structures passing commutation."""
    require_dense(G)
    cat1s = all_cat1_groups(G)
    return [Cat2Group(G, cat1s[i], cat1s[j]) for i, j in cat2_pair_indices(G)]


# -- classification ------------------------------------------------------------


@dataclass(frozen=True)
class Cat2Classification:
    representatives: tuple[Cat2Group, ...]
    families: tuple[tuple[int, ...], ...]  # 0-based positions per class
    total: int


def cat2_isomorphism_classes(G: GroupTable) -> Cat2Classification:
    """Orbits of Aut(G) x orientation-swap on the cat2 enumeration.

    Stored pairs are already swap-canonical, so conjugating both components
    by automorphism generators and re-canonicalizing realizes the full orbit
    relation; union-find over the generator moves yields the families.
    """
    from .cat1 import cat1_structure_orbit_maps

    pairs = cat2_pair_indices(G)
    cat1s = all_cat1_groups(G)
    index = {p: pos for pos, p in enumerate(pairs)}
    uf = _UnionFind(len(pairs))
    for sigma in cat1_structure_orbit_maps(G):
        for pos, (i, j) in enumerate(pairs):
            a, b = sigma[i], sigma[j]
            if a > b:
                a, b = b, a
            try:
                uf.union(pos, index[(a, b)])
            except KeyError:
                raise GroupError(
                    "Aut(G) moved a cat2 structure outside the enumeration") from None
    families = _families_from_unionfind(uf, len(pairs))
    reps = tuple(Cat2Group(G, cat1s[pairs[f[0]][0]], cat1s[pairs[f[0]][1]])
                 for f in families)
    return Cat2Classification(reps, families, len(pairs))


def non_cat1_diagonal_count(G: GroupTable) -> int:
    """Number of cat2 isomorphism classes whose diagonal is not a cat1-group."""
    cls = cat2_isomorphism_classes(G)
    return sum(1 for rep in cls.representatives if not diagonal_pre_cat1(rep)[1])


# -- morphisms -----------------------------------------------------------------


@dataclass(frozen=True)
class Cat2Morphism:
    source: PreCat2Group
    target: PreCat2Group
    gamma: Homomorphism
    rho1: Homomorphism
    rho2: Homomorphism
    swapped: bool = False  # gamma matches the target with orientation swapped


def _cat2_intertwines(gm, A: PreCat2Group, c1: PreCat1Group, c2: PreCat1Group) -> bool:
    return (_intertwines(gm, A.c1.tail.mapping, c1.tail.mapping)
            and _intertwines(gm, A.c1.head.mapping, c1.head.mapping)
            and _intertwines(gm, A.c2.tail.mapping, c2.tail.mapping)
            and _intertwines(gm, A.c2.head.mapping, c2.head.mapping))


def cat2_morphism(A: PreCat2Group, B: PreCat2Group, gamma: Homomorphism,
                  swapped: bool = False) -> Cat2Morphism:
    tgt = (B.c2, B.c1) if swapped else (B.c1, B.c2)
    if not _cat2_intertwines(gamma.mapping, A, *tgt):
        raise GroupError("gamma does not intertwine the four structure maps")
    rho1 = restrict_hom(gamma, A.r1, tgt[0].range_)
    rho2 = restrict_hom(gamma, A.r2, tgt[1].range_)
    return Cat2Morphism(A, B, gamma, rho1, rho2, swapped)


def all_cat2_group_morphisms(A: PreCat2Group, B: PreCat2Group) -> list[Cat2Morphism]:
    """All morphisms with the stored orientations matched componentwise."""
    out = []
    for f in all_homomorphisms(A.group, B.group):
        if _cat2_intertwines(f.mapping, A, B.c1, B.c2):
            out.append(cat2_morphism(A, B, f))
    return out


def isomorphism_cat2_groups(A: PreCat2Group, B: PreCat2Group) -> Optional[Cat2Morphism]:
    """A bijective morphism matching either orientation of B, or None."""
    for mapping in _iter_isomorphism_maps(A.group, B.group):
        for swapped in (False, True):
            tgt = (B.c2, B.c1) if swapped else (B.c1, B.c2)
            if _cat2_intertwines(mapping, A, *tgt):
                gamma = Homomorphism(A.group, B.group, mapping)
                return cat2_morphism(A, B, gamma, swapped)
    return None


def are_isomorphic_cat2_groups(A: PreCat2Group, B: PreCat2Group) -> bool:
    return isomorphism_cat2_groups(A, B) is not None


# -- cat^n ---------------------------------------------------------------------


@dataclass(frozen=True)
class CatNGroup:
    """A group with n pairwise-independent cat1 structures."""

    group: GroupTable
    structures: tuple[Cat1Group, ...]

    @property
    def higher_dimension(self) -> int:
        return len(self.structures) + 1

    def face(self, i: int, j: int) -> Cat2Group:
        """The cat2-group on structures i and j (1-based)."""
        return cat2_group(self.structures[i - 1], self.structures[j - 1])

    def front(self) -> Cat2Group:
        return self.face(1, 2)


def catn_group(structures: Sequence[Cat1Group]) -> CatNGroup:
    structures = tuple(structures)
    if not structures:
        raise GroupError("a cat^n-group needs at least one structure")
    G = structures[0].group
    for c in structures[1:]:
        if c.group is not G:
            raise GroupError("all structures must live on the same group")
    for i in range(len(structures)):
        for j in range(len(structures)):
            if i == j:
                continue
            bad = commutation_witness(structures[i], structures[j])
            if bad is not None:
                raise GroupError(
                    f"structures {i + 1} and {j + 1} violate {bad[0]} at {bad[1]}")
    return CatNGroup(G, structures)
