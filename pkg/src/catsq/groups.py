"""Exact arithmetic for small finite groups on dense element indices.

Every group lives on indices ``0..order-1`` with ``0`` the identity.  Small
groups are *dense* (a materialized multiplication table); semidirect products
above :data:`DENSE_CAP` stay *structural* and multiply pairs on the fly.  The
composition convention is ``(f o g)(x) = f(g(x))`` everywhere, and the product
of two permutations is their composition as functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

DENSE_CAP = 2000

# Full n^3 associativity check only below this size; permutation composition
# and validated semidirect data are associative by construction, and Light's
# test covers larger tables.
_FULL_CHECK_CAP = 128

Perm = tuple  # permutation as an image tuple


class GroupError(ValueError):
    """Malformed group-theoretic data."""


class TooLargeError(GroupError):
    """A construction exceeded the configured materialization cap."""


# ---------------------------------------------------------------------------
# permutations


def perm_from_cycles(cycles: Sequence[Sequence[int]], degree: int = 0) -> Perm:
    """Expand 1-based disjoint cycles into a 0-based image tuple."""
    top = degree
    for cyc in cycles:
        for pt in cyc:
            if pt < 1:
                raise GroupError(f"cycle point {pt} is not a positive integer")
            top = max(top, pt)
    images = list(range(top))
    for cyc in cycles:
        if len(set(cyc)) != len(cyc):
            raise GroupError(f"cycle {cyc} repeats a point")
        for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
            if images[a - 1] != a - 1:
                raise GroupError(f"cycles are not disjoint at point {a}")
            images[a - 1] = b - 1
    return tuple(images)


def cycles_of_perm(perm: Perm) -> tuple[tuple[int, ...], ...]:
    """Inverse of :func:`perm_from_cycles` (1-based, fixed points dropped)."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = perm[x]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def _pcompose(p: Perm, q: Perm) -> Perm:
    # (p o q)(i) = p(q(i))
    return tuple(p[i] for i in q)


# ---------------------------------------------------------------------------
# group tables


class GroupTable:
    """A finite group on indices 0..order-1 with identity at index 0."""

    order: int
    label: str
    generators: tuple[int, ...]

    def __init__(self) -> None:
        self._cache: dict = {}

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    @property
    def realization(self) -> str:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    def conj(self, g: int, x: int) -> int:
        return self.mul(g, self.mul(x, self.inv(g)))

    def comm(self, a: int, b: int) -> int:
        return self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))

    def element_order(self, x: int) -> int:
        n = 1
        y = x
        while y != 0:
            y = self.mul(y, x)
            n += 1
        return n

    def element_orders(self) -> tuple[int, ...]:
        if "elorders" not in self._cache:
            self._cache["elorders"] = tuple(self.element_order(x) for x in self.elements())
        return self._cache["elorders"]

    def is_abelian(self) -> bool:
        if "abelian" not in self._cache:
            gens = self.generators or tuple(self.elements())
            self._cache["abelian"] = all(
                self.mul(g, x) == self.mul(x, g) for g in gens for x in self.elements()
            )
        return self._cache["abelian"]

    def center(self) -> tuple[int, ...]:
        if "center" not in self._cache:
            gens = self.generators or tuple(self.elements())
            self._cache["center"] = tuple(
                x for x in self.elements()
                if all(self.mul(g, x) == self.mul(x, g) for g in gens)
            )
        return self._cache["center"]

    def fingerprint(self) -> tuple:
        """Cheap isomorphism invariant: order stats, abelianness, centre size."""
        if "fingerprint" not in self._cache:
            hist: dict[int, int] = {}
            for o in self.element_orders():
                hist[o] = hist.get(o, 0) + 1
            self._cache["fingerprint"] = (
                self.order,
                tuple(sorted(hist.items())),
                self.is_abelian(),
                len(self.center()),
            )
        return self._cache["fingerprint"]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"<{type(self).__name__} {self.label!r} order {self.order}>"


class DenseGroup(GroupTable):
    """Group with a fully materialized multiplication table."""

    def __init__(self, table: Sequence[Sequence[int]], label: str,
                 generators: Sequence[int] = (), check: bool = True) -> None:
        super().__init__()
        self.order = len(table)
        self.table = tuple(tuple(row) for row in table)
        self.label = label
        if check:
            _check_table(self.table)
        self.inv_table = tuple(row.index(0) for row in self.table)
        gens = tuple(dict.fromkeys(g for g in generators if g != 0))
        if not gens:
            gens = _greedy_generators(self.table)
        self.generators = gens

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    @property
    def realization(self) -> str:
        return "dense"


def _check_table(table: tuple[tuple[int, ...], ...]) -> None:
    n = len(table)
    rng = range(n)
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupError(f"row {i} has length {len(row)}, expected {n}")
        if any(v < 0 or v >= n for v in row):
            raise GroupError(f"row {i} has entries outside 0..{n - 1}")
    for x in rng:
        if table[0][x] != x or table[x][0] != x:
            raise GroupError(f"element 0 is not a two-sided identity at {x}")
    for row in table:
        if 0 not in row:
            raise GroupError("an element has no right inverse")
    if n <= _FULL_CHECK_CAP:
        triples = ((a, b, c) for a in rng for b in rng for c in rng)
    else:
        # Light's test: associativity over a generating set of left factors
        # propagates to the whole table.
        gens = _greedy_generators(table)
        triples = ((a, b, c) for a in gens for b in rng for c in rng)
    for a, b, c in triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupError(f"associativity fails at ({a}, {b}, {c})")


def _greedy_generators(table: Sequence[Sequence[int]]) -> tuple[int, ...]:
    n = len(table)
    gens: list[int] = []
    known = {0}
    for x in range(1, n):
        if x in known:
            continue
        gens.append(x)
        frontier = [x]
        while frontier:
            nxt = []
            for a in frontier:
                if a not in known:
                    known.add(a)
                for g in gens:
                    for b in (table[a][g], table[g][a]):
                        if b not in known:
                            known.add(b)
                            nxt.append(b)
            frontier = nxt
        if len(known) == n:
            break
    return tuple(gens)


class SemidirectGroup(GroupTable):
    """Structural semidirect product S x| R on pair indices s * |R| + r."""

    def __init__(self, s_group: GroupTable, r_group: GroupTable,
                 action: "GroupAction", label: Optional[str] = None) -> None:
        super().__init__()
        if action.actor is not r_group or action.space is not s_group:
            raise GroupError("action must be of the range factor on the normal factor")
        self.s_group = s_group
        self.r_group = r_group
        self.action = action
        self._rn = r_group.order
        self.order = s_group.order * r_group.order
        self.label = label or f"({s_group.label} x| {r_group.label})"
        self.generators = tuple(s * self._rn for s in s_group.generators) + r_group.generators

    def encode(self, s: int, r: int) -> int:
        return s * self._rn + r

    def decode(self, x: int) -> tuple[int, int]:
        return divmod(x, self._rn)

    def mul(self, a: int, b: int) -> int:
        rn = self._rn
        s1, r1 = divmod(a, rn)
        s2, r2 = divmod(b, rn)
        return self.s_group.mul(s1, self.action.perms[r1][s2]) * rn + self.r_group.mul(r1, r2)

    def inv(self, a: int) -> int:
        s, r = divmod(a, self._rn)
        ri = self.r_group.inv(r)
        return self.s_group.inv(self.action.perms[r][s]) * self._rn + ri

    @property
    def realization(self) -> str:
        return "structural"


def as_dense(G: GroupTable, cap: int = DENSE_CAP) -> DenseGroup:
    """Materialize the full multiplication table of ``G`` (same indexing)."""
    if isinstance(G, DenseGroup):
        return G
    if G.order > cap:
        raise TooLargeError(f"order {G.order} exceeds the dense cap {cap}")
    table = [[G.mul(a, b) for b in G.elements()] for a in G.elements()]
    out = DenseGroup(table, G.label, G.generators, check=False)
    return out


def require_dense(G: GroupTable) -> DenseGroup:
    if not isinstance(G, DenseGroup):
        raise GroupError(f"operation needs a dense group, got {G.realization} "
                         f"of order {G.order}; call as_dense first")
    return G


# ---------------------------------------------------------------------------
# permutation group construction


def group_from_permutation_generators(gens: Sequence[Sequence[Sequence[int]]],
                                      label: str,
                                      order_cap: int = DENSE_CAP) -> DenseGroup:
    """Dense table of the group generated by permutations given as cycle lists.

    Elements are ordered identity first, then by breadth-first closure over
    generator products with a lexicographic tie-break on permutation images.
    """
    degree = 1
    gen_perms = []
    for g in gens:
        p = perm_from_cycles(g)
        degree = max(degree, len(p))
        gen_perms.append(p)
    gen_perms = [p + tuple(range(len(p), degree)) for p in gen_perms]

    ident = tuple(range(degree))
    index = {ident: 0}
    elems = [ident]
    frontier = [ident]
    while frontier:
        fresh = set()
        for x in frontier:
            for g in gen_perms:
                y = _pcompose(x, g)
                if y not in index and y not in fresh:
                    fresh.add(y)
        frontier = sorted(fresh)
        for y in frontier:
            index[y] = len(elems)
            elems.append(y)
        if len(elems) > order_cap:
            raise TooLargeError(
                f"closure of {label!r} is too large to materialize (cap {order_cap})")

    n = len(elems)
    table = [[0] * n for _ in range(n)]
    for i, p in enumerate(elems):
        row = table[i]
        for j, q in enumerate(elems):
            row[j] = index[_pcompose(p, q)]
    gen_idx = [index[p] for p in gen_perms]
    G = DenseGroup(table, label, gen_idx, check=n <= _FULL_CHECK_CAP)
    G._cache["perms"] = tuple(elems)
    return G


def verify_group_axioms(G: GroupTable) -> None:
    """Exhaustive associativity / identity / inverse check (test hook)."""
    n = G.order
    for a in range(n):
        if G.mul(0, a) != a or G.mul(a, 0) != a:
            raise GroupError(f"identity fails at {a}")
        i = G.inv(a)
        if G.mul(a, i) != 0 or G.mul(i, a) != 0:
            raise GroupError(f"inverse fails at {a}")
    for a in range(n):
        for b in range(n):
            ab = G.mul(a, b)
            for c in range(n):
                if G.mul(ab, c) != G.mul(a, G.mul(b, c)):
                    raise GroupError(f"associativity fails at ({a}, {b}, {c})")


# ---------------------------------------------------------------------------
# subgroups


@dataclass(frozen=True)
class Subgroup:
    parent: GroupTable
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.members or self.members[0] != 0:
            raise GroupError("a subgroup must contain the identity")
        if list(self.members) != sorted(set(self.members)):
            raise GroupError("subgroup members must be sorted and distinct")

    @property
    def order(self) -> int:
        return len(self.members)

    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.member_set()

    def __repr__(self) -> str:  # pragma: no cover
        return f"<Subgroup of {self.parent.label!r} order {self.order}>"


def subgroup_generated(G: GroupTable, seed: Iterable[int]) -> Subgroup:
    members = {0}
    seed = [s for s in seed]
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in seed:
                y = G.mul(x, s)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, tuple(sorted(members)))


def whole_subgroup(G: GroupTable) -> Subgroup:
    return Subgroup(G, tuple(G.elements()))


def trivial_subgroup(G: GroupTable) -> Subgroup:
    return Subgroup(G, (0,))


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    if A.parent is not B.parent:
        raise GroupError("subgroup intersection needs a common parent")
    bs = set(B.members)
    return Subgroup(A.parent, tuple(m for m in A.members if m in bs))


def is_normal(G: GroupTable, S: Subgroup) -> bool:
    return normality_witness(G, S) is None


def normality_witness(G: GroupTable, S: Subgroup) -> Optional[tuple[int, int]]:
    """Return a pair (g, s) with g s g^-1 outside S, or None if S is normal."""
    mem = set(S.members)
    gens = G.generators or tuple(G.elements())
    for g in gens:
        for s in S.members:
            if G.conj(g, s) not in mem:
                return (g, s)
    return None


def commutator_subgroup(G: GroupTable, A: Subgroup, B: Subgroup) -> Subgroup:
    comms = {G.comm(a, b) for a in A.members for b in B.members}
    return subgroup_generated(G, comms)


def group_of_subgroup(S: Subgroup) -> tuple[DenseGroup, tuple[int, ...]]:
    """Standalone dense group for a subgroup, plus the member positions.

    Returns ``(H, members)`` with ``H`` indexed by position in the sorted
    member list, so position 0 is the parent identity.  Cached per parent.
    """
    key = ("subgrp", S.members)
    cache = S.parent._cache
    if key not in cache:
        G = S.parent
        pos = {m: i for i, m in enumerate(S.members)}
        try:
            table = [[pos[G.mul(a, b)] for b in S.members] for a in S.members]
        except KeyError:
            raise GroupError("member set is not closed under multiplication") from None
        H = DenseGroup(table, f"{G.label}|{len(S.members)}", check=False)
        cache[key] = (H, S.members)
    return cache[key]


def inclusion_hom(S: Subgroup) -> "Homomorphism":
    H, members = group_of_subgroup(S)
    return Homomorphism(H, S.parent, members)


def all_subgroups(G: GroupTable) -> tuple[Subgroup, ...]:
    """Every subgroup of ``G``, found by closure-extension search."""
    if "subgroups" not in G._cache:
        found = {(0,)}
        frontier = [(0,)]
        while frontier:
            nxt = []
            for mem in frontier:
                inside = set(mem)
                for x in G.elements():
                    if x in inside:
                        continue
                    bigger = subgroup_generated(G, inside | {x}).members
                    if bigger not in found:
                        found.add(bigger)
                        nxt.append(bigger)
            frontier = nxt
        G._cache["subgroups"] = tuple(Subgroup(G, mem) for mem in sorted(found, key=lambda m: (len(m), m)))
    return G._cache["subgroups"]


def normal_subgroups(G: GroupTable) -> tuple[Subgroup, ...]:
    return tuple(S for S in all_subgroups(G) if is_normal(G, S))


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class Homomorphism:
    source: GroupTable
    target: GroupTable
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mapping", tuple(self.mapping))
        m = self.mapping
        if len(m) != self.source.order:
            raise GroupError("mapping length must equal the source order")
        if m and m[0] != 0:
            raise GroupError("a homomorphism must send identity to identity")
        src, tgt = self.source, self.target
        for g in src.generators:
            fg = m[g]
            for x in src.elements():
                if m[src.mul(g, x)] != tgt.mul(fg, m[x]):
                    raise GroupError(
                        f"not a homomorphism: f({g}*{x}) != f({g})*f({x})")

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def is_bijective(self) -> bool:
        return len(set(self.mapping)) == self.source.order == self.target.order

    def is_idempotent(self) -> bool:
        if self.source is not self.target:
            return False
        m = self.mapping
        return all(m[v] == v for v in m)

    def __repr__(self) -> str:  # pragma: no cover
        return f"<Hom {self.source.label!r}->{self.target.label!r} {list(self.mapping)}>"


def identity_hom(G: GroupTable) -> Homomorphism:
    return Homomorphism(G, G, tuple(G.elements()))

def trivial_hom(G: GroupTable, H: GroupTable) -> Homomorphism:
    return Homomorphism(G, H, (0,) * G.order)


def compose(f: Homomorphism, g: Homomorphism) -> Homomorphism:
    """(f o g)(x) = f(g(x)); g.target must be f.source."""
    if g.target is not f.source:
        raise GroupError("composition needs g.target is f.source")
    return Homomorphism(g.source, f.target, tuple(f.mapping[v] for v in g.mapping))


def kernel_of(f: Homomorphism) -> Subgroup:
    return Subgroup(f.source, tuple(x for x in f.source.elements() if f.mapping[x] == 0))


def image_of(f: Homomorphism) -> Subgroup:
    return Subgroup(f.target, tuple(sorted(set(f.mapping))))


def restrict_hom(f: Homomorphism, sub: Subgroup, target_sub: Subgroup) -> Homomorphism:
    """Restrict ``f`` to a subgroup of its source, landing in a target subgroup."""
    if sub.parent is not f.source or target_sub.parent is not f.target:
        raise GroupError("restriction subgroups must live in f's source/target")
    S, s_members = group_of_subgroup(sub)
    T, t_members = group_of_subgroup(target_sub)
    pos = {m: i for i, m in enumerate(t_members)}
    try:
        mapping = tuple(pos[f.mapping[m]] for m in s_members)
    except KeyError:
        raise GroupError("f does not map the subgroup into the stated target") from None
    return Homomorphism(S, T, mapping)


def hom_by_images(G: GroupTable, H: GroupTable,
                  images: Sequence[int]) -> Homomorphism:
    """The homomorphism sending ``G.generators`` to ``images`` (must exist)."""
    mapping = _extend_mapping(G, H, G.generators, tuple(images))
    if mapping is None:
        raise GroupError("the generator images do not define a homomorphism")
    return Homomorphism(G, H, mapping)


def _extend_mapping(G: GroupTable, H: GroupTable, gens: tuple[int, ...],
                    images: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Closure of a generator assignment into a full map, or None on conflict.

    Walks every edge (x, g) of the right Cayley graph, which both defines the
    map on all of G and certifies the homomorphism property.
    """
    n = G.order
    known = [-1] * n
    known[0] = 0
    for g, im in zip(gens, images):
        if known[g] >= 0:
            if known[g] != im:
                return None
        else:
            known[g] = im
    stack = [0] + [g for g in gens if g != 0]
    seen = [False] * n
    for x in stack:
        seen[x] = True
    while stack:
        x = stack.pop()
        fx = known[x]
        for g, im in zip(gens, images):
            y = G.mul(x, g)
            fy = H.mul(fx, im)
            if known[y] < 0:
                known[y] = fy
            elif known[y] != fy:
                return None
            if not seen[y]:
                seen[y] = True
                stack.append(y)
    if any(v < 0 for v in known):
        return None  # generators do not generate G (caller error)
    return tuple(known)


def _hom_maps(G: GroupTable, H: GroupTable) -> Iterator[tuple[int, ...]]:
    """Yield the mapping array of every homomorphism G -> H (unsorted)."""
    gens = G.generators
    if not gens:
        yield (0,) * G.order
        return
    h_orders = H.element_orders()
    cands = []
    for g in gens:
        og = G.element_order(g)
        cands.append([h for h in H.elements() if og % h_orders[h] == 0])
    for images in itertools.product(*cands):
        mapping = _extend_mapping(G, H, gens, images)
        if mapping is not None:
            yield mapping


def all_homomorphisms(G: GroupTable, H: GroupTable) -> list[Homomorphism]:
    """Complete duplicate-free list, lexicographic on the mapping arrays."""
    require_dense(G), require_dense(H)
    maps = sorted(set(_hom_maps(G, H)))
    return [Homomorphism(G, H, m) for m in maps]


def idempotent_endomorphisms(G: GroupTable) -> list[Homomorphism]:
    """All f: G -> G with f o f = f, in canonical (lexicographic) order."""
    require_dense(G)
    if "idempotents" not in G._cache:
        maps = sorted({m for m in _hom_maps(G, G) if all(m[v] == v for v in m)})
        G._cache["idempotents"] = tuple(Homomorphism(G, G, m) for m in maps)
    return list(G._cache["idempotents"])


def automorphism_group(G: GroupTable) -> list[Homomorphism]:
    """All bijective endomorphisms, lexicographic on mapping arrays."""
    require_dense(G)
    if "automorphisms" not in G._cache:
        n = G.order
        maps = sorted({m for m in _hom_maps(G, G) if len(set(m)) == n})
        G._cache["automorphisms"] = tuple(Homomorphism(G, G, m) for m in maps)
    return list(G._cache["automorphisms"])


def conjugation_by(G: GroupTable, g: int) -> Homomorphism:
    return Homomorphism(G, G, tuple(G.conj(g, x) for x in G.elements()))


def automorphism_group_as_table(G: GroupTable) -> tuple[DenseGroup, tuple[tuple[int, ...], ...]]:
    """Aut(G) as a dense group under composition, plus its element maps.

    Element k of the returned group is the k-th automorphism in canonical
    (lexicographic) order; the identity map sorts first, so index 0 is the
    group identity.
    """
    if "aut_table" not in G._cache:
        maps = tuple(a.mapping for a in automorphism_group(G))
        pos = {m: i for i, m in enumerate(maps)}
        table = [[pos[_pcompose(a, b)] for b in maps] for a in maps]
        A = DenseGroup(table, f"Aut({G.label})", check=False)
        G._cache["aut_table"] = (A, maps)
    return G._cache["aut_table"]


def inner_automorphism_indices(G: GroupTable) -> tuple[int, ...]:
    """Positions of the conjugation maps inside :func:`automorphism_group`."""
    auts = automorphism_group(G)
    where = {a.mapping: i for i, a in enumerate(auts)}
    inner = {where[tuple(G.conj(g, x) for x in G.elements())] for g in G.elements()}
    return tuple(sorted(inner))


def automorphism_generators(G: GroupTable) -> list[Homomorphism]:
    """A small generating subset of the automorphism group (greedy closure)."""
    auts = automorphism_group(G)
    if "aut_gens" not in G._cache:
        ident = tuple(G.elements())
        gens: list[tuple[int, ...]] = []
        known = {ident}
        for a in auts:
            m = a.mapping
            if m in known:
                continue
            gens.append(m)
            frontier = [m]
            known.add(m)
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = _pcompose(g, x)
                        if y not in known:
                            known.add(y)
                            nxt.append(y)
                frontier = nxt
            if len(known) == len(auts):
                break
        G._cache["aut_gens"] = tuple(gens)
    by_map = {a.mapping: a for a in auts}
    return [by_map[m] for m in G._cache["aut_gens"]]


# ---------------------------------------------------------------------------
# actions and products


@dataclass(frozen=True)
class GroupAction:
    """A left action of ``actor`` on ``space`` by automorphisms."""

    actor: GroupTable
    space: GroupTable
    perms: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "perms", tuple(tuple(p) for p in self.perms))
        P, S = self.actor, self.space
        if len(self.perms) != P.order:
            raise GroupError("need one permutation per actor element")
        ident = tuple(S.elements())
        if self.perms[0] != ident:
            raise GroupError("the identity must act trivially")
        for p in self.perms:
            if len(p) != S.order or len(set(p)) != S.order:
                raise GroupError("actor images must be permutations of the space")
        gens = P.generators or tuple(P.elements())
        for g in gens:
            pg = self.perms[g]
            for x in S.elements():
                gx = pg[x]
                for y in S.elements():
                    if self.perms[g][S.mul(x, y)] != S.mul(gx, pg[y]):
                        raise GroupError(f"actor {g} does not act by an automorphism")
            # the homomorphism property on generator edges pins every value
            for q in P.elements():
                if self.perms[P.mul(g, q)] != _pcompose(pg, self.perms[q]):
                    raise GroupError(f"action is not a homomorphism at ({g}, {q})")

    def apply(self, p: int, x: int) -> int:
        return self.perms[p][x]


def trivial_action(actor: GroupTable, space: GroupTable) -> GroupAction:
    ident = tuple(space.elements())
    return GroupAction(actor, space, (ident,) * actor.order)


def action_by_hom(f: Homomorphism, base: GroupAction) -> GroupAction:
    """Pull a ``base`` action back along ``f`` into ``f.source``."""
    if f.target is not base.actor:
        raise GroupError("hom target must be the base action's actor")
    return GroupAction(f.source, base.space, tuple(base.perms[v] for v in f.mapping))


def conjugation_action(G: GroupTable, S: Subgroup) -> GroupAction:
    """G acting by conjugation on a normal subgroup, as a standalone group."""
    key = ("conjact", S.members)
    if key not in G._cache:
        bad = normality_witness(G, S)
        if bad is not None:
            raise GroupError(
                f"subgroup is not normal: conjugating {bad[1]} by {bad[0]} leaves it")
        H, members = group_of_subgroup(S)
        pos = {m: i for i, m in enumerate(members)}
        perms = tuple(
            tuple(pos[G.conj(g, m)] for m in members) for g in G.elements()
        )
        G._cache[key] = GroupAction(G, H, perms)
    return G._cache[key]


def sub_conjugation_action(G: GroupTable, A: Subgroup, S: Subgroup) -> GroupAction:
    """Subgroup ``A`` of ``G`` conjugating a subgroup ``S`` it normalizes."""
    key = ("subconjact", A.members, S.members)
    if key not in G._cache:
        Agrp, amem = group_of_subgroup(A)
        Sgrp, smem = group_of_subgroup(S)
        pos = {m: i for i, m in enumerate(smem)}
        try:
            perms = tuple(
                tuple(pos[G.conj(a, m)] for m in smem) for a in amem
            )
        except KeyError:
            raise GroupError("the first subgroup does not normalize the second") from None
        G._cache[key] = GroupAction(Agrp, Sgrp, perms)
    return G._cache[key]


def semidirect_product(S: GroupTable, R: GroupTable, act: GroupAction,
                       label: Optional[str] = None) -> SemidirectGroup:
    """S x| R with (s1,r1)(s2,r2) = (s1 * (r1 |> s2), r1 r2)."""
    return SemidirectGroup(S, R, act, label)


def direct_product(A: GroupTable, B: GroupTable,
                   label: Optional[str] = None) -> GroupTable:
    G = semidirect_product(A, B, trivial_action(B, A),
                           label or f"({A.label} x {B.label})")
    return as_dense(G) if G.order <= DENSE_CAP else G


def semidirect_injections(G: SemidirectGroup) -> tuple[Homomorphism, Homomorphism]:
    inj_s = Homomorphism(G.s_group, G, tuple(s * G.r_group.order for s in G.s_group.elements()))
    inj_r = Homomorphism(G.r_group, G, tuple(G.r_group.elements()))
    return inj_s, inj_r


def semidirect_projection(G: SemidirectGroup) -> Homomorphism:
    return Homomorphism(G, G.r_group, tuple(x % G.r_group.order for x in G.elements()))


# ---------------------------------------------------------------------------
# isomorphism


def _iter_isomorphism_maps(G: GroupTable, H: GroupTable) -> Iterator[tuple[int, ...]]:
    if G.order != H.order or G.fingerprint() != H.fingerprint():
        return
    gens = G.generators
    if not gens:
        yield (0,)
        return
    h_orders = H.element_orders()
    cands = []
    for g in gens:
        og = G.element_order(g)
        cands.append([h for h in H.elements() if h_orders[h] == og])
    n = G.order
    for images in itertools.product(*cands):
        mapping = _extend_mapping(G, H, gens, images)
        if mapping is not None and len(set(mapping)) == n:
            yield mapping


def isomorphism_between(G: GroupTable, H: GroupTable) -> Optional[Homomorphism]:
    """A bijective homomorphism G -> H, or None; deterministic choice."""
    require_dense(G), require_dense(H)
    for mapping in _iter_isomorphism_maps(G, H):
        return Homomorphism(G, H, mapping)
    return None


def are_isomorphic(G: GroupTable, H: GroupTable) -> bool:
    return isomorphism_between(G, H) is not None
