"""Short doubly exact sequences, the functor Hom(Q, -), extension fans,
condition (a), satellites and order-two homology."""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import bmods as S
from . import lattice as L
from .bmods import HomObject, InvModule
from .errors import (
    ConditionAFailed, DomainMismatch, NotCokernel, NotKernel,
    PreconditionViolated,
)
from .lattice import Morphism, compose


class ShortDoublyExact(NamedTuple):
    aprime: Morphism
    adoubleprime: Morphism

    @property
    def left(self) -> InvModule:
        return self.aprime.dom

    @property
    def mid(self) -> InvModule:
        return self.aprime.cod

    @property
    def right(self) -> InvModule:
        return self.adoubleprime.cod


class SdesReport(NamedTuple):
    kernel_ok: bool
    cokernel_ok: bool
    five_term_exact: bool


def validate_sdes(aprime: Morphism, adoubleprime: Morphism) -> tuple[ShortDoublyExact, SdesReport]:
    """Check a' = ker(a'') and a'' = cok(a'); raise NotKernel / NotCokernel."""
    if aprime.cod != adoubleprime.dom:
        raise DomainMismatch("a' and a'' are not composable")
    for f in (aprime, adoubleprime):
        if not S.is_equivariant(f):
            raise DomainMismatch("both maps must commute with the involutions")
    A = aprime.cod
    seen = {}
    for x, y in enumerate(aprime.map):
        if y in seen:
            raise NotKernel("a' is not injective", (seen[y], x))
        seen[y] = x
    K = S.kernel(adoubleprime).members
    image = frozenset(aprime.map)
    if image != K:
        raise NotKernel("the image of a' differs from Ker(a'')", min(image ^ K))
    if not adoubleprime.is_surjective():
        missing = min(set(range(adoubleprime.cod.n)) - set(adoubleprime.map))
        raise NotCokernel("a'' is not surjective", missing)
    want = S.cokernel_congruence(aprime).class_of
    have = L.kernel_congruence(adoubleprime).class_of
    if want != have:
        for x in range(A.n):
            for y in range(x + 1, A.n):
                if (want[x] == want[y]) != (have[x] == have[y]):
                    raise NotCokernel("a'' does not identify exactly the cokernel classes", (x, y))
    seq = ShortDoublyExact(aprime, adoubleprime)
    return seq, SdesReport(True, True, five_term_exact(seq))


def sdes(aprime: Morphism, adoubleprime: Morphism) -> ShortDoublyExact:
    return validate_sdes(aprime, adoubleprime)[0]


def five_term_exact(seq: ShortDoublyExact) -> bool:
    """0 -> A' -> A -> A'' -> 0 exact at the three inner nodes."""
    Z = S.zero_object()
    into = Morphism(Z, seq.left, [0], check=False)
    out = Morphism(seq.right, Z, [0] * seq.right.n, check=False)
    return all(S.exactness(f, g).exact for f, g in
               ((into, seq.aprime), (seq.aprime, seq.adoubleprime), (seq.adoubleprime, out)))


def from_normal_mono(m: Morphism) -> ShortDoublyExact:
    """m -> cok(m), valid whenever m is a normal mono."""
    return sdes(m, S.cok(m))


def from_normal_epi(q: Morphism) -> ShortDoublyExact:
    return sdes(S.ker(q), q)


def trivial_resolution(A: InvModule) -> ShortDoublyExact:
    """A -> A -> A^sigma (identity, then p)."""
    return from_normal_mono(L.identity(A))


class CommaObject(NamedTuple):
    seq: ShortDoublyExact
    x: Morphism


# ----------------------------------------------------------------- the functor

class HomFunctor:
    """F = Hom(Q, -) with cached objects."""

    def __init__(self, Q: InvModule, *, limit: int = L.DEFAULT_LIMIT):
        self.Q = Q
        self.limit = limit

    def obj(self, X: InvModule) -> HomObject:
        return S.hom_object(self.Q, X, limit=self.limit)

    def arrow(self, t: Morphism) -> Morphism:
        return S.post_compose(t, self.obj(t.dom), self.obj(t.cod))

    def __call__(self, t):
        return self.arrow(t) if isinstance(t, Morphism) else self.obj(t)


def apply_F(Q: InvModule, t: Morphism, *, limit: int = L.DEFAULT_LIMIT) -> Morphism:
    return HomFunctor(Q, limit=limit).arrow(t)


def coker_F(seq: ShortDoublyExact, Q: InvModule | HomFunctor) -> tuple[InvModule, Morphism]:
    F = Q if isinstance(Q, HomFunctor) else HomFunctor(Q)
    return S.cokernel(F.arrow(seq.adoubleprime))


# ------------------------------------------------------------------ extensions

class ExtensionFan(NamedTuple):
    v: Morphism
    extensions: list
    induced: list


def _hom_rows(A: InvModule, B: InvModule) -> np.ndarray:
    return S.hom_object(A, B).maps


def _induced_on_quotient(w: Morphism, c: ShortDoublyExact, iota: ShortDoublyExact) -> Morphism:
    """w'' with w'' o c'' = iota'' o w."""
    out = {}
    for x in range(c.mid.n):
        y = iota.adoubleprime.map[w.map[x]]
        if out.setdefault(c.adoubleprime.map[x], y) != y:
            raise AssertionError("extension does not descend to the quotients")
    return Morphism(c.right, iota.right, [out[i] for i in range(c.right.n)], check=False)


def extension_fan(iota: ShortDoublyExact, c: ShortDoublyExact, v: Morphism) -> ExtensionFan:
    """Every w : C -> I with w o c' = iota' o v, and the distinct induced w''."""
    if v.dom != c.left or v.cod != iota.left:
        raise DomainMismatch("v must map C' to I'")
    target = np.array([iota.aprime.map[y] for y in v.map])
    rows = np.array(_hom_rows(c.mid, iota.mid), dtype=np.int64)
    cp = np.array(c.aprime.map)
    hits = np.flatnonzero((rows[:, cp] == target[None, :]).all(axis=1)) if len(rows) else []
    ext = [Morphism(c.mid, iota.mid, rows[i], check=False) for i in hits]
    if not ext and L.is_injective_finite(iota.mid.forget()):
        raise AssertionError("no extension although the middle object is injective")
    induced = {}
    for w in ext:
        wi = _induced_on_quotient(w, c, iota)
        induced.setdefault(wi.map, wi)
    return ExtensionFan(v, ext, [induced[k] for k in sorted(induced)])


class CokerData(NamedTuple):
    F: HomFunctor
    hom_right: HomObject
    module: InvModule
    quotient: Morphism


def coker_data(seq: ShortDoublyExact, F: HomFunctor) -> CokerData:
    C, k = S.cokernel(F.arrow(seq.adoubleprime))
    return CokerData(F, F.obj(seq.right), C, k)


def induced_coker_action(w2: Morphism, source: CokerData, target: CokerData) -> Morphism:
    """The map Coker(F(c'')) -> Coker(F(iota'')) induced by u -> w'' o u."""
    Fw = S.post_compose(w2, source.hom_right, target.hom_right)
    out = {}
    for u in range(source.hom_right.module.n):
        y = target.quotient.map[Fw.map[u]]
        if out.setdefault(source.quotient.map[u], y) != y:
            raise AssertionError("action does not descend to the cokernel")
    return Morphism(source.module, target.module, [out[i] for i in range(source.module.n)], check=False)


class ConditionAResult(NamedTuple):
    holds: bool
    counterexample: object
    actions: dict          # v.map -> action map (tuple) on the cokernel
    fans: dict             # v.map -> ExtensionFan

    def __bool__(self):
        return self.holds


def condition_a(iota: ShortDoublyExact, Q: InvModule | HomFunctor,
                vs: list[Morphism] | None = None) -> ConditionAResult:
    """For every v (default: all endomorphisms of the kernel) all induced
    w'' act identically on Coker(F(iota''))."""
    F = Q if isinstance(Q, HomFunctor) else HomFunctor(Q)
    data = coker_data(iota, F)
    if vs is None:
        vs = S.hom(iota.left, iota.left)
    actions, fans = {}, {}
    bad = None
    for v in vs:
        fan = extension_fan(iota, iota, v)
        fans[v.map] = fan
        acts = [induced_coker_action(w2, data, data) for w2 in fan.induced]
        if acts:
            actions[v.map] = acts[0].map
        for a, w2 in zip(acts[1:], fan.induced[1:]):
            if a.map != acts[0].map and bad is None:
                bad = (v, fan.induced[0], w2)
    return ConditionAResult(bad is None, bad, actions, fans)


class SatelliteResult(NamedTuple):
    source: InvModule
    value: InvModule
    connecting: Morphism
    functorial_actions: dict
    resolution: ShortDoublyExact


def satellite_eval(Q: InvModule | HomFunctor, X: InvModule, iota: ShortDoublyExact) -> SatelliteResult:
    """SF(X) = Coker(F(iota'')) for a resolution with injective middle;
    raises ConditionAFailed if two extensions act differently."""
    F = Q if isinstance(Q, HomFunctor) else HomFunctor(Q)
    iso = L.find_isomorphism(X, iota.left, equivariant=True)
    if iso is None:
        raise PreconditionViolated("the resolution does not start at X")
    if not S.is_injective_obj(iota.mid):
        raise PreconditionViolated("the middle object is not injective")
    res = condition_a(iota, F)
    if not res.holds:
        v, w1, w2 = res.counterexample
        raise ConditionAFailed(v, w1, w2)
    data = coker_data(iota, F)
    return SatelliteResult(X, data.module, data.quotient, res.actions, iota)


def satellite_value(F: HomFunctor, iota: ShortDoublyExact) -> tuple[InvModule, Morphism]:
    data = coker_data(iota, F)
    return data.module, data.quotient


def find_resolution(X: InvModule, *, max_size: int = 64) -> ShortDoublyExact | None:
    """A normal embedding of X into some s(B^a) x (B, id)^b, with its cokernel."""
    cands = []
    for a in range(0, 4):
        for b in range(0, 7):
            size = 4 ** a * 2 ** b
            if 1 < size <= max_size:
                cands.append((size, a, b))
    for _, a, b in sorted(cands):
        I = _standard_injective(a, b)
        rows = L.search_morphisms(X, I, equivariant=True)
        for r in rows:
            m = Morphism(X, I, r, check=False)
            if S.is_normal_mono(m):
                return from_normal_mono(m)
    return None


def _standard_injective(a: int, b: int) -> InvModule:
    parts = [S.s_functor(L.BOOL)] * a + [S.null_object(L.BOOL)] * b
    I = parts[0]
    for P in parts[1:]:
        I = L.product(I, P).module
    return I


class SixTerm(NamedTuple):
    objects: list
    maps: list

    def order_two(self) -> bool:
        return all(S.is_null(compose(g, f)) for f, g in zip(self.maps, self.maps[1:]))


def _resolution_for(A: InvModule, given: ShortDoublyExact | None) -> ShortDoublyExact:
    if given is not None:
        return given
    if S.is_injective_obj(A):
        return trivial_resolution(A)
    found = find_resolution(A)
    if found is None:
        raise PreconditionViolated("no resolution found; pass one explicitly")
    return found


def _satellite_map(t: Morphism, src: ShortDoublyExact, dst: ShortDoublyExact, F: HomFunctor,
                   src_data: CokerData, dst_data: CokerData) -> Morphism:
    """SF(t) through any extension of t between the two resolutions."""
    fan = extension_fan(dst, src, t)
    if not fan.induced:
        raise PreconditionViolated("t does not extend to the resolutions")
    return induced_coker_action(fan.induced[0], src_data, dst_data)


def satellite_sequence(seq: ShortDoublyExact, Q: InvModule | HomFunctor,
                       resolutions: dict | None = None, *, truncate: bool = False) -> SixTerm:
    """F A' -> F A -> F A'' -d-> SF A' -> SF A -> SF A''.

    SF A' is evaluated on `seq` itself (its middle must be injective), so
    d = cok(F(a'')). SF A and SF A'' use the resolutions given under keys
    "mid" and "right", the identity resolution for injective objects, or a
    searched normal embedding. With `truncate`, a missing resolution of A''
    drops the last term and the sequence stops at SF A.
    """
    F = Q if isinstance(Q, HomFunctor) else HomFunctor(Q)
    resolutions = resolutions or {}
    if not S.is_injective_obj(seq.mid):
        raise PreconditionViolated("the middle object of the sequence must be injective")
    r_left = seq
    r_mid = _resolution_for(seq.mid, resolutions.get("mid"))
    try:
        r_right = _resolution_for(seq.right, resolutions.get("right"))
    except PreconditionViolated:
        if not truncate:
            raise
        r_right = None
    d_left, d_mid = coker_data(r_left, F), coker_data(r_mid, F)
    Fa1 = F.arrow(seq.aprime)
    Fa2 = F.arrow(seq.adoubleprime)
    s1 = _satellite_map(seq.aprime, r_left, r_mid, F, d_left, d_mid)
    objects = [Fa1.dom, Fa1.cod, Fa2.cod, d_left.module, d_mid.module]
    maps = [Fa1, Fa2, d_left.quotient, s1]
    if r_right is not None:
        d_right = coker_data(r_right, F)
        objects.append(d_right.module)
        maps.append(_satellite_map(seq.adoubleprime, r_mid, r_right, F, d_mid, d_right))
    return SixTerm(objects, maps)


# ------------------------------------------------------------------ homology

class ChainComplex(NamedTuple):
    """objects[n] = A_n and differentials[n] = d_{n+1} : A_{n+1} -> A_n."""
    objects: list
    differentials: list

    def validate(self) -> None:
        if len(self.differentials) != max(len(self.objects) - 1, 0):
            raise DomainMismatch("need one differential between consecutive objects")
        for n, d in enumerate(self.differentials):
            if d.dom != self.objects[n + 1] or d.cod != self.objects[n]:
                raise DomainMismatch(f"differential {n + 1} has the wrong ends")
        for a, b in zip(self.differentials, self.differentials[1:]):
            if not S.is_null(compose(a, b)):
                raise PreconditionViolated("consecutive differentials do not compose to a null map")


def homology(cx: ChainComplex) -> list[InvModule]:
    """H_n: subquotient of Ker(d_n) by the normal image of d_{n+1}."""
    cx.validate()
    Z = S.zero_object()
    out = []
    k = len(cx.objects)
    for n in range(k):
        A = cx.objects[n]
        d_out = cx.differentials[n - 1] if n > 0 else Morphism(A, Z, [0] * A.n, check=False)
        d_in = cx.differentials[n] if n < k - 1 else Morphism(Z, A, [0], check=False)
        m = S.ker(d_out)
        q = S.cok(d_in)
        out.append(S.ex3_subquotient(m, q).module)
    return out
