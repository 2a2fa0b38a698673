"""Involutive B-modules: null ideal, kernels, cokernels, normal images, duality."""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, NamedTuple

import numpy as np

from . import lattice as L
from .errors import (
    DomainMismatch, LimitExceeded, NotAMorphism, NotAnInvolution,
    PreconditionViolated,
)
from .lattice import BModule, Morphism, compose


class InvModule(BModule):
    """A B-module with an involutive automorphism sigma."""

    def __init__(self, base: BModule, sigma, *, check: bool = True):
        super().__init__(base.table, base.names, check=False)
        self.sigma = tuple(int(s) for s in sigma)
        self.base = base if base.sigma is None else BModule(base.table, base.names, check=False)
        if check:
            s = np.array(self.sigma)
            if s.shape != (self.n,) or sorted(self.sigma) != list(range(self.n)):
                raise NotAnInvolution("sigma must be a permutation of the carrier")
            if not np.array_equal(s[s], np.arange(self.n)):
                raise NotAnInvolution("sigma is not of order two")
            if s[0] != 0 or not np.array_equal(s[self.table], self.table[s[:, None], s[None, :]]):
                raise NotAnInvolution("sigma does not preserve joins")

    def forget(self) -> BModule:
        return self.base

    def p(self, x: int) -> int:
        return int(self.table[x, self.sigma[x]])

    @property
    def p_map(self) -> np.ndarray:
        return self.table[np.arange(self.n), np.array(self.sigma)]

    @property
    def fixed(self) -> frozenset:
        return frozenset(x for x in range(self.n) if self.sigma[x] == x)

    def is_null(self) -> bool:
        return all(self.sigma[x] == x for x in range(self.n))

    def __repr__(self):
        return f"InvModule(n={self.n}, fixed={len(self.fixed)})"


def inv_module(table, sigma, names=None) -> InvModule:
    return InvModule(L.validate_module(table, names), sigma)


def null_object(M: BModule) -> InvModule:
    return InvModule(M.forget(), range(M.n), check=False)


def zero_object() -> InvModule:
    return null_object(L.zero_module())


def inv_morphism(dom: InvModule, cod: InvModule, mapping) -> Morphism:
    f = Morphism(dom, cod, mapping)
    if not is_equivariant(f):
        raise NotAMorphism("map does not commute with the involutions")
    return f


def is_equivariant(f: Morphism) -> bool:
    return all(f.map[f.dom.sigma[x]] == f.cod.sigma[f.map[x]] for x in range(f.dom.n))


def hom(Ld: InvModule, M: InvModule, *, limit: int = L.DEFAULT_LIMIT) -> list[Morphism]:
    """Equivariant morphisms in canonical order."""
    return L.hom_set(Ld, M, equivariant=True, limit=limit)


def sigma_map(E: InvModule) -> Morphism:
    return Morphism(E, E, E.sigma, check=False)


def p_morphism(E: InvModule) -> Morphism:
    """p : E -> E, x -> x + sigma(x)."""
    return Morphism(E, E, E.p_map, check=False)


def is_null(h: Morphism) -> bool:
    """sigma o h = h."""
    return all(h.cod.sigma[y] == y for y in h.map)


# ------------------------------------------------------------------ the monad

def s_functor(M: BModule) -> InvModule:
    """sM = (M x M, swap)."""
    P = L.product(M.forget(), M.forget())
    n = M.n
    sigma = [P.pair(y, x) for x in range(n) for y in range(n)]
    return InvModule(P.module, sigma, check=False)


def s_morphism(f: Morphism) -> Morphism:
    """sf (x, y) = (f x, f y)."""
    A, B = s_functor(f.dom), s_functor(f.cod)
    n, m = f.dom.n, f.cod.n
    return Morphism(A, B, [f.map[i // n] * m + f.map[i % n] for i in range(n * n)], check=False)


def forget(E: InvModule) -> BModule:
    return E.forget()


def T(E: InvModule) -> InvModule:
    return s_functor(E.forget())


def unit(E: InvModule) -> Morphism:
    """eta(a) = (a, sigma a) into T(E)."""
    n = E.n
    return Morphism(E, T(E), [a * n + E.sigma[a] for a in range(n)], check=False)


def retraction(E: InvModule) -> Morphism:
    """r(x, y) = x + sigma(y) from T(E)."""
    n = E.n
    t = E.table
    return Morphism(T(E), E, [int(t[i // n, E.sigma[i % n]]) for i in range(n * n)], check=False)


def adjunction_pi(phi: Morphism, N: BModule) -> Morphism:
    """Hom_s(E, sN) -> Hom_B(I(E), N): compose with the first projection."""
    return Morphism(phi.dom.forget(), N.forget(), [y // N.n for y in phi.map], check=False)


def adjunction_pi_inverse(E: InvModule, psi: Morphism) -> Morphism:
    """psi -> (psi(z), psi(sigma z))."""
    N = psi.cod
    sN = s_functor(N)
    return Morphism(E, sN, [psi.map[z] * N.n + psi.map[E.sigma[z]] for z in range(E.n)], check=False)


# ------------------------------------------------------------- subobjects

class SubInv:
    """A sigma-stable submodule of `owner`, always augmented by owner's fixed points."""

    __slots__ = ("owner", "members")

    def __init__(self, owner: InvModule, members: Iterable[int], *, augment: bool = True):
        base = set(int(x) for x in members)
        if augment:
            base |= owner.fixed
        closed = L.join_closure(owner, base)
        if any(owner.sigma[x] not in closed for x in closed):
            closed = L.join_closure(owner, closed | {owner.sigma[x] for x in closed})
        self.owner = owner
        self.members = closed

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, SubInv) and self.members == other.members and self.owner == other.owner

    def __hash__(self):
        return hash(self.members)

    def __le__(self, other):
        return self.members <= other.members

    def __repr__(self):
        return f"SubInv({sorted(self.members)})"

    def module(self) -> tuple[InvModule, Morphism]:
        return L.submodule(self.owner, self.members)

    def is_null(self) -> bool:
        return all(self.owner.sigma[x] == x for x in self.members)


def fixed_points(E: InvModule) -> SubInv:
    return SubInv(E, E.fixed)


def kernel(h: Morphism) -> SubInv:
    """h^{-1}(fixed points of the codomain)."""
    fixed = h.cod.fixed
    return SubInv(h.dom, [x for x in range(h.dom.n) if h.map[x] in fixed])


def ker(h: Morphism) -> Morphism:
    """The kernel as a normal mono."""
    return kernel(h).module()[1]


def range_sub(h: Morphism) -> SubInv:
    return SubInv(h.cod, h.map)


def cokernel_congruence(h: Morphism) -> L.Congruence:
    F = h.cod
    seeds = [(u, F.sigma[u]) for u in set(h.map)]
    return L.congruence_closure(F, seeds, equivariant=True)


def explicit_cokernel_partition(h: Morphism) -> tuple:
    """Plain equivalence on F generated by xi+u ~ xi+v for u, v in
    E = Range(h) + F^sigma with p(u) = p(v); class labels by least member."""
    F = h.cod
    E = sorted(range_sub(h).members)
    t = F.table
    parent = list(range(F.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_p: dict[int, list[int]] = {}
    for u in E:
        by_p.setdefault(F.p(u), []).append(u)
    for fiber in by_p.values():
        u0 = fiber[0]
        for v in fiber[1:]:
            for xi in range(F.n):
                a, b = find(int(t[xi, u0])), find(int(t[xi, v]))
                if a != b:
                    parent[max(a, b)] = min(a, b)
    first = {}
    return tuple(first.setdefault(find(x), len(first)) for x in range(F.n))


def cokernel(h: Morphism, *, check: bool = True) -> tuple[InvModule, Morphism]:
    """Quotient of the codomain identifying u ~ sigma(u) for u in Range(h).

    With check=True the explicit description (fixed points together with
    the complement of Range(h)+F^sigma, modulo the additive relation) is
    recomputed and must give the same partition.
    """
    C = cokernel_congruence(h)
    if check and C.class_of != explicit_cokernel_partition(h):
        raise AssertionError("cokernel routes disagree")
    return L.quotient(h.cod, C)


def cok(h: Morphism, *, check: bool = True) -> Morphism:
    return cokernel(h, check=check)[1]


def inclusion(E: SubInv) -> Morphism:
    return E.module()[1]


# ------------------------------------------------------------- normal images

def _p_graph_distance(F: InvModule, Eset: frozenset, xi: int):
    """Steps needed to link 0 to xi + sigma(xi) through the relation
    p(R), R = {(x, y) in E x E : x + xi = y + xi}; None if unreachable."""
    t = F.table
    pm = F.p_map
    E = sorted(Eset)
    alpha = int(pm[xi])
    groups: dict[int, set[int]] = {}
    for x in E:
        groups.setdefault(int(t[x, xi]), set()).add(int(pm[x]))
    adj: dict[int, set[int]] = {}
    for vals in groups.values():
        for a in vals:
            adj.setdefault(a, set()).update(vals)
    dist = {0: 0}
    dq = deque([0])
    while dq:
        a = dq.popleft()
        if a == alpha:
            return max(dist[a], 1)
        for b in adj.get(a, ()):
            if b not in dist:
                dist[b] = dist[a] + 1
                dq.append(b)
    return None


def filtration_level(E: SubInv, xi: int):
    """Least n with xi in the n-th filtration step of the normal image, or None."""
    return _p_graph_distance(E.owner, E.members, xi)


def normal_image_filtration(E: SubInv) -> SubInv:
    F = E.owner
    return SubInv(F, [x for x in range(F.n) if _p_graph_distance(F, E.members, x) is not None],
                  augment=False)


def orthogonal_ideals(E: SubInv) -> list[L.Ideal]:
    """Ideals J with x in J iff sigma(x) in J for every x in E."""
    F = E.owner
    out = []
    for J in L.dual_ideals(F.forget()):
        s = J.members
        if all((x in s) == (F.sigma[x] in s) for x in E.members):
            out.append(J)
    return out


def annihilated(F: InvModule, ideal_list: Iterable[L.Ideal]) -> SubInv:
    ideal_list = list(ideal_list)
    keep = [x for x in range(F.n)
            if all((x in J.members) == (F.sigma[x] in J.members) for J in ideal_list)]
    return SubInv(F, keep, augment=False)


def normal_image_orthogonal(E: SubInv) -> SubInv:
    return annihilated(E.owner, orthogonal_ideals(E))


def normal_image_kernel(E: SubInv) -> SubInv:
    return kernel(cok(inclusion(E), check=False))


NORMAL_IMAGE_METHODS = {
    "filtration": normal_image_filtration,
    "orthogonal": normal_image_orthogonal,
    "kernel": normal_image_kernel,
}


def normal_image(E: SubInv, method: str = "kernel") -> SubInv:
    """Least normal subobject containing E."""
    return NORMAL_IMAGE_METHODS[method](E)


def normal_image_of(f: Morphism, method: str = "kernel") -> SubInv:
    return normal_image(range_sub(f), method)


def is_normal(E: SubInv) -> bool:
    return normal_image(E) == E


def is_normal_mono(m: Morphism) -> bool:
    """Injective, equivariant, and its image is already a kernel."""
    if not (m.is_injective() and is_equivariant(m)):
        return False
    return normal_image(range_sub(m)).members == frozenset(m.map)


def is_normal_epi(q: Morphism) -> bool:
    """q is the cokernel of its own kernel."""
    if not q.is_surjective():
        return False
    k = ker(q)
    return cokernel_congruence(k).class_of == L.kernel_congruence(q).class_of


# ------------------------------------------------------------------ exactness

class Exactness(NamedTuple):
    order_two: bool
    strict: bool
    exact: bool


def exactness(f: Morphism, g: Morphism) -> Exactness:
    """At the middle object of L -f-> M -g-> N."""
    if f.cod != g.dom:
        raise DomainMismatch("maps are not composable")
    M = f.cod
    order_two = is_null(compose(g, f))
    kg = kernel(g)
    strict = SubInv(M, f.map).members == kg.members
    exact = normal_image_of(f).members == kg.members
    assert exact or not strict
    return Exactness(order_two, strict, exact)


# ------------------------------------------------------------------ Nsb

class NsbLattice:
    """Normal subobjects of E, ordered by inclusion."""

    def __init__(self, E: InvModule, members: list[frozenset]):
        self.E = E
        self.elements = sorted(members, key=lambda s: (len(s), sorted(s)))
        self._pos = {s: i for i, s in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def meet(self, a: frozenset, b: frozenset) -> frozenset:
        return a & b

    def join(self, a: frozenset, b: frozenset) -> frozenset:
        return normal_image(SubInv(self.E, a | b)).members

    def leq(self, a, b) -> bool:
        return a <= b

    def modularity_witness(self):
        """(a, b, c) with a <= c and a + (b ^ c) != (a + b) ^ c, or None."""
        els = self.elements
        for a in els:
            for c in els:
                if not a <= c:
                    continue
                for b in els:
                    if self.join(a, self.meet(b, c)) != self.meet(self.join(a, b), c):
                        return a, b, c
        return None

    def is_modular(self) -> bool:
        return self.modularity_witness() is None


def nsb(E: InvModule, *, limit: int = 1_000_000) -> NsbLattice:
    """Every normal subobject is cut out by a family of ideals, so the
    lattice is the intersection closure of the single-ideal annihilators."""
    basics = {annihilated(E, [J]).members for J in L.dual_ideals(E.forget())}
    found = {frozenset(range(E.n))}
    for b in basics:
        found |= {s & b for s in found}
        if len(found) > limit:
            raise LimitExceeded("too many normal subobjects")
    return NsbLattice(E, sorted(found, key=len))


def direct_image(f: Morphism, m: SubInv) -> SubInv:
    return normal_image(SubInv(f.cod, [f.map[x] for x in m.members]))


def inverse_image(f: Morphism, M: SubInv) -> SubInv:
    return SubInv(f.dom, f.preimage(M.members))


# ------------------------------------------------------------------ duality

def dual_inv(E: InvModule) -> InvModule:
    """E* as ideals of the underlying module with the involution J -> sigma(J)."""
    D = L.dual(E.forget())
    ids = L.dual_ideals(E.forget())
    pos = {J.mask: i for i, J in enumerate(ids)}
    sigma = [pos[L.Ideal(E, (E.sigma[x] for x in J.members)).mask] for J in ids]
    return InvModule(D, sigma, check=False)


def dual_form(E: InvModule, J: L.Ideal) -> Morphism:
    """The morphism E -> sB attached to the ideal J."""
    sB = s_functor(L.BOOL)
    return Morphism(E, sB, [J.value(x) * 2 + J.value(E.sigma[x]) for x in range(E.n)], check=False)


def orthogonal(F: SubInv) -> SubInv:
    """Elements of the dual that are null on F."""
    E = F.owner
    D = dual_inv(E)
    ids = L.dual_ideals(E.forget())
    keep = {J.mask for J in orthogonal_ideals(F)}
    return SubInv(D, [i for i, J in enumerate(ids) if J.mask in keep], augment=False)


def dual_of_morphism(phi: Morphism) -> Morphism:
    """phi* : F* -> E*, J -> phi^{-1}(J)."""
    E, F = phi.dom, phi.cod
    De, Df = dual_inv(E), dual_inv(F)
    pos = {J.mask: i for i, J in enumerate(L.dual_ideals(E.forget()))}
    out = [pos[L.Ideal(E, phi.preimage(J.members)).mask] for J in L.dual_ideals(F.forget())]
    return Morphism(Df, De, out, check=False)


# ---------------------------------------------------------- sigma-injectivity

def p_fibers(E: InvModule) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for x in range(E.n):
        out.setdefault(E.p(x), []).append(x)
    return out


def sigma_injective(f: Morphism) -> bool:
    """Injective on every fiber of p."""
    for fiber in p_fibers(f.dom).values():
        if len({f.map[x] for x in fiber}) != len(fiber):
            return False
    return True


def kernel_is_null(f: Morphism) -> bool:
    return kernel(f).is_null()


def fiberwise_dual_min_generated(E: InvModule) -> bool:
    for fiber in p_fibers(E).values():
        members = sorted(set(fiber) | {0})
        S, _ = L.submodule(E.forget(), members)
        if not L.dual_min_generated(S):
            return False
    return True


def congruence_join(C1: L.Congruence, C2: L.Congruence, *, equivariant: bool = True) -> L.Congruence:
    M = C1.owner
    seeds = []
    for C in (C1, C2):
        for cls in C.classes():
            seeds.extend((cls[0], x) for x in cls[1:])
    return L.congruence_closure(M, seeds, equivariant=equivariant)


def all_quotients(E: InvModule, *, limit: int = 100_000) -> list[L.Congruence]:
    """Every sigma-compatible congruence of E, i.e. every surjection out of E
    up to isomorphism of the codomain."""
    principal = {}
    for a in range(E.n):
        for b in range(E.n):
            if a != b and E.leq(a, b):
                C = L.congruence_closure(E, [(a, b)], equivariant=True)
                principal[C.class_of] = C
    principal = list(principal.values())
    eq = L.Congruence(E, range(E.n))
    found = {eq.class_of: eq}
    queue = deque([eq])
    while queue:
        C = queue.popleft()
        for P in principal:
            D = congruence_join(C, P)
            if D.class_of not in found:
                found[D.class_of] = D
                queue.append(D)
                if len(found) > limit:
                    raise LimitExceeded("too many congruences")
    return sorted(found.values(), key=lambda c: c.class_of)


class KernelNullReport(NamedTuple):
    dual_min_generated: bool
    fiberwise_hypothesis: bool
    morphisms_checked: int
    equivalence_holds: bool
    equivalence_counterexample: object
    strong_implication_holds: bool
    strong_counterexample: object


def kernel_null_tests(E: InvModule) -> KernelNullReport:
    """Check, over every surjection out of E, whether null kernel and
    sigma-injectivity agree, and whether a null kernel separates x, y
    whenever x + sigma(y) is not null."""
    equiv_bad = None
    strong_bad = None
    quotients = all_quotients(E)
    t = E.table
    for C in quotients:
        _, q = L.quotient(E, C)
        kn = kernel_is_null(q)
        si = sigma_injective(q)
        if kn != si and equiv_bad is None:
            equiv_bad = q
        if kn and strong_bad is None:
            for x in range(E.n):
                for y in range(E.n):
                    s = int(t[x, E.sigma[y]])
                    if E.sigma[s] != s and q.map[x] == q.map[y]:
                        strong_bad = (q, x, y)
                        break
                if strong_bad:
                    break
    return KernelNullReport(
        L.dual_min_generated(E.forget()), fiberwise_dual_min_generated(E), len(quotients),
        equiv_bad is None, equiv_bad, strong_bad is None, strong_bad)


# ---------------------------------------------------------- homological tools

class Subquotient(NamedTuple):
    S: SubInv
    module: InvModule
    q_restricted: Morphism
    k: Morphism


def ex3_subquotient(m: Morphism, q: Morphism) -> Subquotient:
    """For a normal mono m: M -> N containing Ker(q) and a normal epi
    q: N -> Q, write cok(m) = phi o q and return S = Ker(phi) with
    q' : M -> S and k : S -> Q, so that q o m = k o q'."""
    N = m.cod
    if q.dom != N:
        raise DomainMismatch("m and q do not share the middle object")
    image = set(m.map)
    missing = [x for x in kernel(q).members if x not in image]
    if missing:
        raise PreconditionViolated(f"Ker(q) is not inside the image of m: {missing[0]}")
    f = cok(m, check=False)
    phi_map = {}
    for x in range(N.n):
        y = q.map[x]
        if phi_map.setdefault(y, f.map[x]) != f.map[x]:
            raise PreconditionViolated("cok(m) does not factor through q")
    phi = Morphism(q.cod, f.cod, [phi_map[y] for y in range(q.cod.n)], check=False)
    S = kernel(phi)
    Smod, k = S.module()
    pos = {x: i for i, x in enumerate(k.map)}
    qm = [q.map[m.map[x]] for x in range(m.dom.n)]
    if any(v not in pos for v in qm):
        raise AssertionError("q o m leaves Ker(phi)")
    q_restricted = Morphism(m.dom, Smod, [pos[v] for v in qm], check=False)
    return Subquotient(S, Smod, q_restricted, k)


class Pushout(NamedTuple):
    module: InvModule
    along_f: Morphism
    along_h: Morphism


def pushout(f: Morphism, h: Morphism) -> Pushout:
    """Coequalizer of E -> F -> F+Z and E -> Z -> F+Z.

    along_f : Z -> P is the pushout of f, along_h : F -> P the pushout of h.
    """
    if f.dom != h.dom:
        raise DomainMismatch("maps do not share their domain")
    P = L.product(f.cod, h.cod)
    Pm, c = L.coequalizer(compose(P.s1, f), compose(P.s2, h))
    return Pushout(Pm, compose(c, P.s2), compose(c, P.s1))


class FixedCokerIso(NamedTuple):
    forward: Morphism
    backward: Morphism


def fixed_coker_iso(E: SubInv) -> FixedCokerIso:
    """F^sigma -> Coker(E in F)^sigma (restriction of cok) and its inverse
    induced by p."""
    F = E.owner
    C, c = cokernel(inclusion(E))
    Ff, _ = L.submodule(F.forget(), sorted(F.fixed))
    Cf, _ = L.submodule(C.forget(), sorted(C.fixed))
    fpos = {x: i for i, x in enumerate(sorted(F.fixed))}
    cpos = {x: i for i, x in enumerate(sorted(C.fixed))}
    fwd = [cpos[c.map[x]] for x in sorted(F.fixed)]
    back = {}
    for x in range(F.n):
        y = c.map[x]
        if y in cpos:
            v = fpos[F.p(x)]
            if back.setdefault(cpos[y], v) != v:
                raise AssertionError("p does not descend to the cokernel")
    return FixedCokerIso(Morphism(Ff, Cf, fwd, check=False),
                         Morphism(Cf, Ff, [back[i] for i in range(Cf.n)], check=False))


def is_injective_obj(E: InvModule) -> bool:
    return L.is_injective_finite(E.forget())


def is_projective_obj(E: InvModule) -> bool:
    return L.is_injective_finite(E.forget())


def inv_support_decomposition(f: Morphism) -> L.SupportDecomposition:
    """Support decomposition of an equivariant f; sigma restricts to the
    support, so both factors are again equivariant."""
    sd = L.support_decomposition(f)
    E = f.dom
    pos = {x: i for i, x in enumerate(sd.support)}
    S = InvModule(sd.module, [pos[E.sigma[x]] for x in sd.support])
    q = Morphism(E, S, sd.q.map)
    inj = Morphism(S, f.cod, sd.inj.map)
    if not (is_equivariant(q) and is_equivariant(inj)):
        raise AssertionError("support factors are not equivariant")
    return L.SupportDecomposition(f, sd.support, q, inj, sd.adjoint_g, S)


def support_orthogonal(f: Morphism) -> SubInv:
    """Elements x with (x <= z iff sigma(x) <= z) for every z in the
    support: the orthogonal of the support seen inside the dual."""
    E = f.dom
    sup = L.support_decomposition(f).support
    keep = [x for x in range(E.n) if all(E.leq(x, z) == E.leq(E.sigma[x], z) for z in sup)]
    return SubInv(E, keep, augment=False)


# ------------------------------------------------------------------ Hom objects

class HomObject(NamedTuple):
    src: InvModule
    dst: InvModule
    module: InvModule
    maps: tuple
    index: dict

    def element(self, f: Morphism) -> int:
        return self.index[f.map]

    def morphism(self, i: int) -> Morphism:
        return Morphism(self.src, self.dst, self.maps[i], check=False)


def _orbit_reps(E: InvModule) -> list[int]:
    return [x for x in E.join_irreducibles if x <= E.sigma[x]]


@lru_cache(maxsize=128)
def _hom_object(src: InvModule, dst: InvModule, limit: int) -> HomObject:
    rows = L.search_morphisms(src, dst, equivariant=True, limit=limit)
    maps = tuple(tuple(int(v) for v in r) for r in rows)
    index = {m: i for i, m in enumerate(maps)}
    n = len(maps)
    dt = dst.table
    ds = np.array(dst.sigma)
    join = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        joined = dt[rows[i][None, :], rows[i:]]
        for k, row in enumerate(joined):
            join[i, i + k] = join[i + k, i] = index[tuple(int(v) for v in row)]
    sigma = [index[tuple(int(v) for v in ds[r])] for r in rows]
    reps = _orbit_reps(src)
    names = ["(" + ",".join(dst.names[m[j]] for j in reps) + ")" for m in maps]
    module = InvModule(BModule(join, names, check=False), sigma, check=False)
    return HomObject(src, dst, module, maps, index)


def hom_object(src: InvModule, dst: InvModule, *, limit: int = L.DEFAULT_LIMIT) -> HomObject:
    """Internal Hom: equivariant maps, pointwise join, involution h -> sigma o h."""
    return _hom_object(src, dst, limit)


def post_compose(t: Morphism, A: HomObject, B: HomObject) -> Morphism:
    """h -> t o h from Hom(Q, X) to Hom(Q, Y)."""
    ta = t.array
    out = [B.index[tuple(int(v) for v in ta[np.array(m)])] for m in A.maps]
    return Morphism(A.module, B.module, out, check=False)


def pre_compose(r: Morphism, A: HomObject, B: HomObject) -> Morphism:
    """h -> h o r from Hom(Q, X) to Hom(Q', X) for r: Q' -> Q."""
    ra = r.array
    out = [B.index[tuple(int(v) for v in np.array(m)[ra])] for m in A.maps]
    return Morphism(A.module, B.module, out, check=False)
