"""Pairs of morphisms: composition, algebraic kernel and image, strict
exactness, and the mono/epi/iso classification."""
from __future__ import annotations

from itertools import product as iproduct
from typing import NamedTuple

from . import lattice as L
from .errors import DomainMismatch, LimitExceeded
from .lattice import BModule, Morphism, compose, join_maps


class PairMorphism(NamedTuple):
    f: Morphism
    g: Morphism

    @property
    def dom(self) -> BModule:
        return self.f.dom

    @property
    def cod(self) -> BModule:
        return self.f.cod

    def swap(self) -> "PairMorphism":
        return PairMorphism(self.g, self.f)


def pair(f: Morphism, g: Morphism) -> PairMorphism:
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatch("pair components must be parallel")
    return PairMorphism(f, g)


def kappa(f: Morphism) -> PairMorphism:
    return PairMorphism(f, L.zero_map(f.dom, f.cod))


def pair_identity(M: BModule) -> PairMorphism:
    return kappa(L.identity(M))


def pair_zero(M: BModule, N: BModule) -> PairMorphism:
    z = L.zero_map(M, N)
    return PairMorphism(z, z)


def compose_pairs(p: PairMorphism, q: PairMorphism) -> PairMorphism:
    """p o q = (f f' + g g', f g' + g f') for p = (f, g), q = (f', g')."""
    if q.cod != p.dom:
        raise DomainMismatch("pairs are not composable")
    f, g = p
    f2, g2 = q
    return PairMorphism(join_maps(compose(f, f2), compose(g, g2)),
                        join_maps(compose(f, g2), compose(g, f2)))


class PairSubmodule(NamedTuple):
    owner: BModule
    members: frozenset
    base: BModule

    def __contains__(self, xy):
        x, y = xy
        return x * self.base.n + y in self.members

    def __len__(self):
        return len(self.members)

    def pairs(self) -> list[tuple[int, int]]:
        n = self.base.n
        return sorted(divmod(i, n) for i in self.members)


def _square(M: BModule) -> BModule:
    return L.product(M.forget(), M.forget()).module


def diagonal(M: BModule) -> PairSubmodule:
    n = M.n
    return PairSubmodule(_square(M), frozenset(x * n + x for x in range(n)), M)


def z_submodule(p: PairMorphism) -> PairSubmodule:
    """Z(f, g) = {(x, y) : f(x)+g(y) = f(y)+g(x)}."""
    f, g = p.f.map, p.g.map
    t = p.cod.table
    M = p.dom
    mem = frozenset(x * M.n + y for x in range(M.n) for y in range(M.n)
                    if t[f[x], g[y]] == t[f[y], g[x]])
    return PairSubmodule(_square(M), mem, M)


def doubling_map(p: PairMorphism) -> list[int]:
    """(x, y) -> (f(x)+g(y), g(x)+f(y)) on index pairs."""
    f, g = p.f.map, p.g.map
    t = p.cod.table
    M, N = p.dom, p.cod
    return [int(t[f[x], g[y]]) * N.n + int(t[g[x], f[y]])
            for x in range(M.n) for y in range(M.n)]


def b_submodule(p: PairMorphism) -> PairSubmodule:
    """B(f, g) = {(f(x)+g(y), f(y)+g(x))}."""
    return PairSubmodule(_square(p.cod), frozenset(doubling_map(p)), p.cod)


def sum_submodules(A: PairSubmodule, B: PairSubmodule) -> PairSubmodule:
    t = A.owner.table
    return PairSubmodule(A.owner, frozenset(int(t[a, b]) for a in A.members for b in B.members), A.base)


class SequencePair(NamedTuple):
    left: PairMorphism
    right: PairMorphism


class Verdict(NamedTuple):
    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


def strictly_exact_at(left: PairMorphism, right: PairMorphism) -> Verdict:
    """B(left) + diagonal = Z(right); the witness is a pair in the
    symmetric difference."""
    if left.cod != right.dom:
        raise DomainMismatch("pairs are not composable")
    M = left.cod
    lhs = sum_submodules(b_submodule(left), diagonal(M)).members
    rhs = z_submodule(right).members
    if lhs == rhs:
        return Verdict(True)
    return Verdict(False, divmod(min(lhs ^ rhs), M.n))


class Decomposition(NamedTuple):
    """N = N1 x N2 inside N and alpha = f + g : M -> N."""
    N1: frozenset
    N2: frozenset
    alpha: Morphism


class Classification(NamedTuple):
    mono: bool
    epi: bool
    iso: bool
    decomposition: Decomposition | None
    mono_witness: object
    epi_witness: object


def classify(p: PairMorphism) -> Classification:
    d = doubling_map(p)
    seen: dict[int, int] = {}
    mono_w = None
    for i, v in enumerate(d):
        if v in seen:
            mono_w = (divmod(seen[v], p.dom.n), divmod(i, p.dom.n))
            break
        seen[v] = i
    N = p.cod
    missing = sorted(set(range(N.n * N.n)) - set(d))
    epi_w = divmod(missing[0], N.n) if missing else None
    mono, epi = mono_w is None, epi_w is None
    dec = None
    if mono and epi:
        alpha = join_maps(p.f, p.g)
        dec = Decomposition(frozenset(p.f.map), frozenset(p.g.map), alpha)
    return Classification(mono, epi, mono and epi, dec, mono_w, epi_w)


def is_split_pair(p: PairMorphism) -> bool:
    """f, g idempotent, fg = gf = 0 and f + g = id: an ordered product decomposition."""
    M = p.dom
    if p.cod != M:
        return False
    f, g = p
    ident = L.identity(M)
    zero = L.zero_map(M, M)
    return (compose(f, f).map == f.map and compose(g, g).map == g.map
            and compose(f, g).map == zero.map and compose(g, f).map == zero.map
            and join_maps(f, g).map == ident.map)


class AutGroup(NamedTuple):
    decompositions: list      # Aut^(1): ordered decompositions as (p1, p2)
    automorphisms: list       # plain automorphisms alpha, embedded as (alpha, 0)
    units: list               # every invertible pair

    @property
    def decompositions_mod_swap(self) -> int:
        """Decompositions counted up to the central element (0, id)."""
        return len(self.decompositions) // 2


def pair_endomorphisms(M: BModule, *, limit: int = L.DEFAULT_LIMIT) -> list[PairMorphism]:
    E = L.hom_set(M, M, limit=limit)
    if len(E) ** 2 > limit:
        raise LimitExceeded("too many pair endomorphisms")
    return [PairMorphism(f, g) for f, g in iproduct(E, E)]


def aut_group(M: BModule, *, limit: int = L.DEFAULT_LIMIT) -> AutGroup:
    M = M.forget()
    ends = pair_endomorphisms(M, limit=limit)
    units = [p for p in ends if classify(p).iso]
    decs = [p for p in ends if is_split_pair(p)]
    autos = [kappa(f) for f in L.hom_set(M, M, limit=limit)
             if f.is_injective() and f.is_surjective()]
    return AutGroup(decs, autos, units)


def factor_unit(u: PairMorphism, group: AutGroup) -> list[tuple[PairMorphism, PairMorphism]]:
    """All (beta, rho(alpha)) with u = beta o rho(alpha)."""
    out = []
    for b in group.decompositions:
        for a in group.automorphisms:
            c = compose_pairs(b, a)
            if c.f.map == u.f.map and c.g.map == u.g.map:
                out.append((b, a))
    return out


def pair_inverse(p: PairMorphism, *, limit: int = L.DEFAULT_LIMIT) -> PairMorphism | None:
    """A two-sided inverse found by search, or None."""
    M, N = p.dom, p.cod
    idM, idN = L.identity(M).map, L.identity(N).map
    back = L.hom_set(N, M, limit=limit)
    for f, g in iproduct(back, back):
        q = PairMorphism(f, g)
        a = compose_pairs(q, p)
        if a.f.map != idM or any(a.g.map):
            continue
        b = compose_pairs(p, q)
        if b.f.map == idN and not any(b.g.map):
            return q
    return None


def factorizations(p: PairMorphism, middles, *, limit: int = L.DEFAULT_LIMIT):
    """All (eta, psi) with p = psi o eta, eta epi and psi mono, for X in `middles`."""
    out = []
    for X in middles:
        etas = [PairMorphism(f, g) for f, g in iproduct(L.hom_set(p.dom, X, limit=limit), repeat=2)]
        etas = [e for e in etas if classify(e).epi]
        if not etas:
            continue
        psis = [PairMorphism(f, g) for f, g in iproduct(L.hom_set(X, p.cod, limit=limit), repeat=2)]
        psis = [s for s in psis if classify(s).mono]
        for e in etas:
            for s in psis:
                c = compose_pairs(s, e)
                if c.f.map == p.f.map and c.g.map == p.g.map:
                    out.append((e, s))
    return out


def quotient_functor(M: BModule, N_members, X: BModule) -> list[PairMorphism]:
    """Pairs (u, v) : M -> X agreeing on the submodule N."""
    hs = L.hom_set(M, X)
    N_members = list(N_members)
    return [PairMorphism(u, v) for u, v in iproduct(hs, hs)
            if all(u.map[x] == v.map[x] for x in N_members)]
