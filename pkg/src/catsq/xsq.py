"""Crossed squares: the five axioms, standard constructions, transposition,
and the equivalence with cat2-groups in both directions.

A square holds four groups L (up-left), M (up-right), N (down-left),
P (down-right), boundaries kappa: L->M, lambda: L->N, mu: M->P, nu: N->P,
actions of P on L, M, N, and a crossed pairing M x N -> L stored as a dense
table.  M acts on N and L through mu, N acts on M and L through nu; no
independent action is stored.  The axiom checker is exhaustive while
|M| * |N| <= 10^4 and falls back to seeded samples plus all generator tuples
above that.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .groups import (
    DENSE_CAP,
    GroupAction,
    GroupError,
    GroupTable,
    Homomorphism,
    Subgroup,
    action_by_hom,
    as_dense,
    automorphism_group_as_table,
    compose,
    conjugation_action,
    direct_product,
    group_of_subgroup,
    inclusion_hom,
    inner_automorphism_indices,
    intersection,
    kernel_of,
    restrict_hom,
    semidirect_product,
    sub_conjugation_action,
    trivial_action,
    trivial_hom,
)
from .xmod import AxiomCheck, CrossedModule, ValidityReport, is_crossed_module, _require
from .cat1 import cat1_group
from .cat2 import Cat2Group, PreCat2Group, cat2_group

_EXHAUSTIVE_TUPLES = 10_000


@dataclass(frozen=True)
class CrossedSquare:
    """Crossed square data; validate with :func:`is_crossed_square`."""

    up_left: GroupTable     # L
    up_right: GroupTable    # M
    down_left: GroupTable   # N
    down_right: GroupTable  # P
    kappa: Homomorphism     # L -> M
    lambda_: Homomorphism   # L -> N
    mu: Homomorphism        # M -> P
    nu: Homomorphism        # N -> P
    act_l: GroupAction
    act_m: GroupAction
    act_n: GroupAction
    pairing: tuple[tuple[int, ...], ...]  # |M| x |N| table of L indices

    def __post_init__(self) -> None:
        L, M, N, P = self.up_left, self.up_right, self.down_left, self.down_right
        pairs = (
            (self.kappa, L, M), (self.lambda_, L, N), (self.mu, M, P), (self.nu, N, P),
        )
        for f, src, tgt in pairs:
            if f.source is not src or f.target is not tgt:
                raise GroupError("a boundary map does not match its corners")
        for act, space in ((self.act_l, L), (self.act_m, M), (self.act_n, N)):
            if act.actor is not P or act.space is not space:
                raise GroupError("each action must be of P on the matching corner")
        object.__setattr__(self, "pairing", tuple(tuple(r) for r in self.pairing))
        if len(self.pairing) != M.order or any(len(r) != N.order for r in self.pairing):
            raise GroupError("the pairing table must be |M| x |N|")

    def pair(self, m: int, n: int) -> int:
        return self.pairing[m][n]

    @property
    def diagonal(self) -> Homomorphism:
        return compose(self.mu, self.kappa)

    def corner_orders(self) -> tuple[int, int, int, int]:
        return (self.up_left.order, self.up_right.order,
                self.down_left.order, self.down_right.order)

    def __repr__(self) -> str:  # pragma: no cover
        return ("[{} -> {}; {} -> {}]".format(
            self.up_left.label, self.up_right.label,
            self.down_left.label, self.down_right.label))


# -- axiom checking ------------------------------------------------------------


def _tuples(sizes: Sequence[int], gens: Sequence[Sequence[int]], seed: int):
    total = 1
    for s in sizes:
        total *= s
    if total <= _EXHAUSTIVE_TUPLES:
        return itertools.product(*(range(s) for s in sizes))
    rng = random.Random(seed)
    sample = set(itertools.product(*gens))
    while len(sample) < _EXHAUSTIVE_TUPLES:
        sample.add(tuple(rng.randrange(s) for s in sizes))
    return iter(sorted(sample))


def is_crossed_square(X: CrossedSquare) -> ValidityReport:
    """Per-axiom report with witness tuples, per the exhaustiveness policy."""
    L, M, N, P = X.up_left, X.up_right, X.down_left, X.down_right
    kap, lam, mu, nu = (X.kappa.mapping, X.lambda_.mapping,
                        X.mu.mapping, X.nu.mapping)
    al, am, an = X.act_l.perms, X.act_m.perms, X.act_n.perms
    pairing = X.pairing
    checks: list[AxiomCheck] = []

    w = next(((l,) for l in L.elements() if mu[kap[l]] != nu[lam[l]]), None)
    checks.append(AxiomCheck("square-commutes", w is None, w))

    edges = (
        ("axiom1:kappa", CrossedModule(L, M, X.kappa, action_by_hom(X.mu, X.act_l))),
        ("axiom1:lambda", CrossedModule(L, N, X.lambda_, action_by_hom(X.nu, X.act_l))),
        ("axiom1:mu", CrossedModule(M, P, X.mu, X.act_m)),
        ("axiom1:nu", CrossedModule(N, P, X.nu, X.act_n)),
        ("axiom1:pi", CrossedModule(L, P, X.diagonal, X.act_l)),
    )
    for name, xm in edges:
        rep = is_crossed_module(xm)
        bad = None if rep.ok else rep.failures()[0]
        checks.append(AxiomCheck(name, rep.ok, None if bad is None else (bad.name,) + tuple(bad.witness)))

    w = next(((p, l) for p in P.elements() for l in L.elements()
              if kap[al[p][l]] != am[p][kap[l]]), None)
    checks.append(AxiomCheck("axiom1:kappa-equivariant", w is None, w))
    w = next(((p, l) for p in P.elements() for l in L.elements()
              if lam[al[p][l]] != an[p][lam[l]]), None)
    checks.append(AxiomCheck("axiom1:lambda-equivariant", w is None, w))

    mg = M.generators or (0,)
    ng = N.generators or (0,)
    pg = P.generators or (0,)
    lg = L.generators or (0,)

    w = None
    for m, m2, n in _tuples((M.order, M.order, N.order), (mg, mg, ng), 20):
        pm = mu[m]
        if pairing[M.mul(m, m2)][n] != L.mul(pairing[am[pm][m2]][an[pm][n]], pairing[m][n]):
            w = (m, m2, n)
            break
    checks.append(AxiomCheck("axiom2:left", w is None, w))
    w = None
    for m, n, n2 in _tuples((M.order, N.order, N.order), (mg, ng, ng), 21):
        pn = nu[n]
        if pairing[m][N.mul(n, n2)] != L.mul(pairing[m][n], pairing[am[pn][m]][an[pn][n2]]):
            w = (m, n, n2)
            break
    checks.append(AxiomCheck("axiom2:right", w is None, w))

    w = None
    for m, n in _tuples((M.order, N.order), (mg, ng), 22):
        if kap[pairing[m][n]] != M.mul(m, M.inv(am[nu[n]][m])):
            w = (m, n)
            break
    checks.append(AxiomCheck("axiom3:kappa", w is None, w))
    w = None
    for m, n in _tuples((M.order, N.order), (mg, ng), 23):
        if lam[pairing[m][n]] != N.mul(an[mu[m]][n], N.inv(n)):
            w = (m, n)
            break
    checks.append(AxiomCheck("axiom3:lambda", w is None, w))

    w = None
    for l, n in _tuples((L.order, N.order), (lg, ng), 24):
        if pairing[kap[l]][n] != L.mul(l, L.inv(al[nu[n]][l])):
            w = (l, n)
            break
    checks.append(AxiomCheck("axiom4:kappa", w is None, w))
    w = None
    for m, l in _tuples((M.order, L.order), (mg, lg), 25):
        if pairing[m][lam[l]] != L.mul(al[mu[m]][l], L.inv(l)):
            w = (m, l)
            break
    checks.append(AxiomCheck("axiom4:lambda", w is None, w))

    w = None
    for p, m, n in _tuples((P.order, M.order, N.order), (pg, mg, ng), 26):
        if al[p][pairing[m][n]] != pairing[am[p][m]][an[p][n]]:
            w = (p, m, n)
            break
    checks.append(AxiomCheck("axiom5", w is None, w))

    return ValidityReport(tuple(checks))


def crossed_square(*args, **kwargs) -> CrossedSquare:
    X = CrossedSquare(*args, **kwargs)
    _require(is_crossed_square(X), "not a crossed square")
    return X


# -- standard constructions -----------------------------------------------------


def _sub_inclusion(small: Subgroup, big: Subgroup) -> Homomorphism:
    S, smem = group_of_subgroup(small)
    B, bmem = group_of_subgroup(big)
    pos = {m: i for i, m in enumerate(bmem)}
    try:
        return Homomorphism(S, B, tuple(pos[m] for m in smem))
    except KeyError:
        raise GroupError("the first subgroup is not contained in the second") from None


def crossed_square_by_normal_subgroups(L: Subgroup, M: Subgroup, N: Subgroup,
                                       P: GroupTable) -> CrossedSquare:
    """Inclusion square of two normal subgroups with commutator pairing."""
    if not (L.parent is P and M.parent is P and N.parent is P):
        raise GroupError("all three subgroups must live in P")
    if L.members != intersection(M, N).members:
        raise GroupError("the up-left corner must be the intersection of M and N")
    act_m = conjugation_action(P, M)   # raises with witness when not normal
    act_n = conjugation_action(P, N)
    act_l = conjugation_action(P, L)
    Lg, lmem = group_of_subgroup(L)
    Mg, mmem = group_of_subgroup(M)
    Ng, nmem = group_of_subgroup(N)
    lpos = {m: i for i, m in enumerate(lmem)}
    pairing = tuple(
        tuple(lpos[P.comm(m, n)] for n in nmem) for m in mmem
    )
    return crossed_square(
        Lg, Mg, Ng, P,
        _sub_inclusion(L, M), _sub_inclusion(L, N),
        inclusion_hom(M), inclusion_hom(N),
        act_l, act_m, act_n, pairing,
    )


def actor_crossed_square(M: GroupTable) -> CrossedSquare:
    """The square M -> Inn M (twice) -> Aut M with commutator pairing."""
    A, maps = automorphism_group_as_table(M)
    inner = Subgroup(A, inner_automorphism_indices(M))
    Ig, imem = group_of_subgroup(inner)
    ipos = {a: i for i, a in enumerate(imem)}
    apos = {m: i for i, m in enumerate(maps)}
    alpha = Homomorphism(M, Ig, tuple(
        ipos[apos[tuple(M.conj(m, x) for x in M.elements())]] for m in M.elements()
    ))
    iota = inclusion_hom(inner)
    act_l = GroupAction(A, M, maps)
    act_inn = conjugation_action(A, inner)
    # the commutator pairing must not depend on the chosen preimages
    pre: dict[int, list[int]] = {}
    for m in M.elements():
        pre.setdefault(alpha.mapping[m], []).append(m)
    pairing_rows = []
    for i in range(Ig.order):
        row = []
        for j in range(Ig.order):
            vals = {M.comm(m, m2) for m in pre[i] for m2 in pre[j]}
            if len(vals) != 1:
                raise GroupError(
                    f"commutator pairing ill-defined on inner classes ({i}, {j})")
            row.append(vals.pop())
        pairing_rows.append(tuple(row))
    return crossed_square(M, Ig, Ig, A, alpha, alpha, iota, iota,
                          act_l, act_inn, act_inn, tuple(pairing_rows))


def trivial_action_crossed_square(A: GroupTable, M: GroupTable, N: GroupTable,
                                  P: GroupTable, act_m: GroupAction,
                                  act_n: GroupAction) -> CrossedSquare:
    """Zero boundaries over P-modules, with P acting trivially on A."""
    for g, what in ((A, "up-left"), (M, "up-right"), (N, "down-left")):
        if not g.is_abelian():
            raise GroupError(f"the {what} corner must be abelian")
    pairing = ((0,) * N.order,) * M.order
    return crossed_square(
        A, M, N, P,
        trivial_hom(A, M), trivial_hom(A, N), trivial_hom(M, P), trivial_hom(N, P),
        trivial_action(P, A), act_m, act_n, pairing,
    )


def direct_product_xsq(X1: CrossedSquare, X2: CrossedSquare) -> CrossedSquare:
    """Componentwise product of two crossed squares."""
    L = direct_product(X1.up_left, X2.up_left)
    M = direct_product(X1.up_right, X2.up_right)
    N = direct_product(X1.down_left, X2.down_left)
    P = direct_product(X1.down_right, X2.down_right)

    def pair_hom(f1, f2, src, tgt, n1src, n2src, n2tgt):
        return Homomorphism(src, tgt, tuple(
            f1.mapping[a] * n2tgt + f2.mapping[b]
            for a in range(n1src) for b in range(n2src)
        ))

    def pair_act(a1: GroupAction, a2: GroupAction, space) -> GroupAction:
        s2 = a2.space.order
        perms = []
        for p1 in range(a1.actor.order):
            q1 = a1.perms[p1]
            for p2 in range(a2.actor.order):
                q2 = a2.perms[p2]
                perms.append(tuple(
                    q1[x1] * s2 + q2[x2]
                    for x1 in range(a1.space.order) for x2 in range(s2)
                ))
        return GroupAction(P, space, tuple(perms))

    l2, m2, n2, p2 = (X2.up_left.order, X2.up_right.order,
                      X2.down_left.order, X2.down_right.order)
    kappa = pair_hom(X1.kappa, X2.kappa, L, M, X1.up_left.order, l2, m2)
    lam = pair_hom(X1.lambda_, X2.lambda_, L, N, X1.up_left.order, l2, n2)
    mu = pair_hom(X1.mu, X2.mu, M, P, X1.up_right.order, m2, p2)
    nu = pair_hom(X1.nu, X2.nu, N, P, X1.down_left.order, n2, p2)
    pairing = tuple(
        tuple(X1.pairing[ma][na] * l2 + X2.pairing[mb][nb]
              for na in range(X1.down_left.order) for nb in range(n2))
        for ma in range(X1.up_right.order) for mb in range(m2)
    )
    return crossed_square(L, M, N, P, kappa, lam, mu, nu,
                          pair_act(X1.act_l, X2.act_l, L),
                          pair_act(X1.act_m, X2.act_m, M),
                          pair_act(X1.act_n, X2.act_n, N), pairing)


def transpose_xsq(X: CrossedSquare) -> CrossedSquare:
    """Swap M and N; the new pairing is (n, m) -> (m |x| n)^-1."""
    L = X.up_left
    pairing = tuple(
        tuple(L.inv(X.pairing[m][n]) for m in range(X.up_right.order))
        for n in range(X.down_left.order)
    )
    return crossed_square(L, X.down_left, X.up_right, X.down_right,
                          X.lambda_, X.kappa, X.nu, X.mu,
                          X.act_l, X.act_n, X.act_m, pairing)


# -- the equivalence with cat2-groups -------------------------------------------


def crossed_square_of_cat2(C: PreCat2Group) -> CrossedSquare:
    """Kernel/image corner square with restricted heads and commutator pairing."""
    G = C.group
    kt1 = kernel_of(C.c1.tail)
    kt2 = kernel_of(C.c2.tail)
    it1 = C.c1.range_
    it2 = C.c2.range_
    Lsub = intersection(kt1, kt2)
    Msub = intersection(it1, kt2)
    Nsub = intersection(kt1, it2)
    Psub = intersection(it1, it2)
    kappa = restrict_hom(C.c1.head, Lsub, Msub)
    lam = restrict_hom(C.c2.head, Lsub, Nsub)
    mu = restrict_hom(C.c2.head, Msub, Psub)
    nu = restrict_hom(C.c1.head, Nsub, Psub)
    act_l = sub_conjugation_action(G, Psub, Lsub)
    act_m = sub_conjugation_action(G, Psub, Msub)
    act_n = sub_conjugation_action(G, Psub, Nsub)
    lpos = {m: i for i, m in enumerate(Lsub.members)}
    try:
        pairing = tuple(
            tuple(lpos[G.comm(m, n)] for n in Nsub.members) for m in Msub.members
        )
    except KeyError:
        raise GroupError("a commutator escaped ker t1 * ker t2; not a cat2-group") from None
    return crossed_square(act_l.space, act_m.space, act_n.space, act_l.actor,
                          kappa, lam, mu, nu, act_l, act_m, act_n, pairing)


def cat2_of_crossed_square(X: CrossedSquare) -> Cat2Group:
    """(L x| N) x| (M x| P) with the induced tail/head endomorphism pairs."""
    L, M, N, P = X.up_left, X.up_right, X.down_left, X.down_right
    kap, lam, mu, nu = (X.kappa.mapping, X.lambda_.mapping,
                        X.mu.mapping, X.nu.mapping)
    al, an = X.act_l.perms, X.act_n.perms

    LN = semidirect_product(L, N, action_by_hom(X.nu, X.act_l),
                            label=f"{L.label} x| {N.label}")
    if LN.order <= DENSE_CAP:
        LN = as_dense(LN)
    MP = semidirect_product(M, P, X.act_m, label=f"{M.label} x| {P.label}")
    if MP.order <= DENSE_CAP:
        MP = as_dense(MP)

    n_ord, p_ord = N.order, P.order
    perms = []
    for m in M.elements():
        am_l = al[mu[m]]
        row_m = X.pairing[m]
        for p in P.elements():
            ap_l, ap_n = al[p], an[p]
            perm = [0] * LN.order
            for l in L.elements():
                ml = am_l[ap_l[l]]
                base = l * n_ord
                for n in N.elements():
                    pn = ap_n[n]
                    perm[base + n] = L.mul(ml, row_m[pn]) * n_ord + pn
            perms.append(tuple(perm))
    bigact = GroupAction(MP, LN, tuple(perms))

    G = semidirect_product(LN, MP, bigact, label=f"({LN.label}) x| ({MP.label})")
    if G.order <= DENSE_CAP:
        G = as_dense(G)

    rn = MP.order
    t1m, h1m, t2m, h2m = [], [], [], []
    for x in G.elements():
        ln, mp = divmod(x, rn)
        l, n = divmod(ln, n_ord)
        m, p = divmod(mp, p_ord)
        t1m.append(mp)
        h1m.append(MP.mul(kap[l] * p_ord + nu[n], mp))
        t2m.append(n * rn + p)
        h2m.append(N.mul(lam[l], n) * rn + P.mul(mu[m], p))
    c1 = cat1_group(Homomorphism(G, G, t1m), Homomorphism(G, G, h1m))
    c2 = cat1_group(Homomorphism(G, G, t2m), Homomorphism(G, G, h2m))
    return cat2_group(c1, c2)
