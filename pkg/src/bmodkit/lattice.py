"""Finite B-modules: join tables, order, duality, morphisms, limits and colimits."""
from __future__ import annotations

from functools import cached_property
from itertools import product as iproduct
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _kernels as K
from .errors import (
    DomainMismatch, ElementInSubmodule, LimitExceeded, MalformedTable,
    NotAMorphism, NotAssociative, NotCommutative, NotIdempotent,
    ZeroNotNeutral,
)

DEFAULT_LIMIT = 10_000_000


def validate_module(table, names: Sequence[str] | None = None) -> "BModule":
    """Check the B-module laws on a raw join table and build the module.

    Laws are checked in a fixed order (neutral zero, idempotence,
    commutativity, associativity) and the first failure is raised with
    its witnesses.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise MalformedTable("join table must be a non-empty square array")
    if not np.issubdtype(t.dtype, np.integer):
        raise MalformedTable("join table entries must be integers")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise MalformedTable("join table entries must be element indices")
    if names is not None and len(names) != n:
        raise MalformedTable("one name per element is required")
    t = t.astype(np.int64)
    idx = np.arange(n)
    bad = np.flatnonzero(t[0] != idx)
    if bad.size:
        raise ZeroNotNeutral(int(bad[0]))
    bad = np.flatnonzero(t[idx, idx] != idx)
    if bad.size:
        raise NotIdempotent(int(bad[0]))
    bad = np.argwhere(t != t.T)
    if bad.size:
        raise NotCommutative(*map(int, bad[0]))
    # (x+y)+z against x+(y+z) for every triple
    left = t[t[:, :, None], idx[None, None, :]]
    right = t[idx[:, None, None], t[None, :, :]]
    bad = np.argwhere(left != right)
    if bad.size:
        raise NotAssociative(*map(int, bad[0]))
    return BModule(t, names, check=False)


class BModule:
    """A finite join-semilattice with least element 0, as a dense join table."""

    sigma = None

    def __init__(self, join, names: Sequence[str] | None = None, *, check: bool = True):
        if check:
            validate_module(join, names)
        table = np.array(join, dtype=np.int64)
        table.setflags(write=False)
        self._join = table
        n = table.shape[0]
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))

    @property
    def n(self) -> int:
        return self._join.shape[0]

    def __len__(self):
        return self.n

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def table(self) -> np.ndarray:
        return self._join

    def join(self, x: int, y: int) -> int:
        return int(self._join[x, y])

    def join_all(self, xs: Iterable[int]) -> int:
        v = 0
        for x in xs:
            v = self._join[v, x]
        return int(v)

    @cached_property
    def order(self) -> np.ndarray:
        o = self._join == np.arange(self.n)[None, :]
        o.setflags(write=False)
        return o

    def leq(self, x: int, y: int) -> bool:
        return bool(self._join[x, y] == y)

    @cached_property
    def meet_table(self) -> np.ndarray:
        m = K.meet_table(self._join, self.order)
        m.setflags(write=False)
        return m

    def meet(self, x: int, y: int) -> int:
        return int(self.meet_table[x, y])

    @cached_property
    def top(self) -> int:
        return self.join_all(range(self.n))

    @cached_property
    def heights(self) -> np.ndarray:
        """Number of elements below each element (itself included)."""
        return self.order.sum(axis=0)

    def down(self, x: int) -> frozenset:
        return frozenset(np.flatnonzero(self.order[:, x]).tolist())

    def up(self, x: int) -> frozenset:
        return frozenset(np.flatnonzero(self.order[x, :]).tolist())

    @cached_property
    def covers(self) -> tuple:
        """Hasse edges (x, y) with x covered by y."""
        o = self.order
        edges = []
        for y in range(self.n):
            below = [x for x in range(self.n) if x != y and o[x, y]]
            for x in below:
                if not any(z != x and o[x, z] for z in below):
                    edges.append((x, y))
        return tuple(sorted(edges))

    def lower_covers(self, x: int) -> list[int]:
        return [a for a, b in self.covers if b == x]

    @cached_property
    def join_irreducibles(self) -> tuple:
        """Elements with exactly one lower cover, in a linear extension."""
        cnt = np.zeros(self.n, dtype=np.int64)
        for _, b in self.covers:
            cnt[b] += 1
        ji = [x for x in range(1, self.n) if cnt[x] == 1]
        return tuple(sorted(ji, key=lambda x: (int(self.heights[x]), x)))

    @cached_property
    def atoms(self) -> tuple:
        return tuple(b for a, b in self.covers if a == 0)

    @cached_property
    def coatoms(self) -> tuple:
        t = self.top
        return tuple(a for a, b in self.covers if b == t)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def forget(self) -> "BModule":
        return self

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, BModule) or type(self) is not type(other):
            return NotImplemented if not isinstance(other, BModule) else False
        return (self.names == other.names and np.array_equal(self._join, other._join)
                and self.sigma == other.sigma)

    def __hash__(self):
        return hash((self.n, self.names, self._join.tobytes()))

    def __repr__(self):
        return f"BModule(n={self.n})"

    @cached_property
    def _hom_plan(self):
        return _HomPlan(self)


def _derive(like: BModule, join, names, sigma=None) -> BModule:
    """Build a module of the same kind as `like` (plain or involutive)."""
    if sigma is None or like.sigma is None:
        return BModule(join, names, check=False)
    from .bmods import InvModule
    return InvModule(BModule(join, names, check=False), sigma)


def from_order(leq, names: Sequence[str] | None = None) -> BModule:
    """Module from a boolean order matrix whose least element is index 0."""
    o = np.asarray(leq, dtype=bool)
    n = o.shape[0]
    h = o.sum(axis=0)
    join = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            ub = np.flatnonzero(o[x] & o[y])
            if ub.size == 0:
                raise MalformedTable(f"{x} and {y} have no upper bound")
            z = int(ub[np.argmin(h[ub])])
            if not all(o[z, u] for u in ub):
                raise MalformedTable(f"{x} and {y} have no least upper bound")
            join[x, y] = join[y, x] = z
    return validate_module(join, names)


def from_subsets(sets: Sequence[frozenset], names: Sequence[str] | None = None) -> BModule:
    """Module of a union-closed family of sets (the empty set first)."""
    sets = [frozenset(s) for s in sets]
    pos = {s: i for i, s in enumerate(sets)}
    n = len(sets)
    join = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            u = a | b
            if u not in pos:
                raise MalformedTable("family is not closed under union")
            join[i, j] = pos[u]
    return validate_module(join, names)


def chain(k: int, names: Sequence[str] | None = None) -> BModule:
    """The totally ordered module 0 < 1 < ... < k-1."""
    idx = np.arange(k)
    return BModule(np.maximum(idx[:, None], idx[None, :]), names, check=False)


def powerset(labels: Sequence[str]) -> BModule:
    """B^k as subsets of `labels`, indexed by bitmask, named by '+'-sums."""
    k = len(labels)
    n = 1 << k
    idx = np.arange(n)
    names = []
    for m in range(n):
        parts = [labels[i] for i in range(k) if m >> i & 1]
        names.append("+".join(parts) if parts else "0")
    return BModule(idx[:, None] | idx[None, :], names, check=False)


def zero_module() -> BModule:
    return BModule([[0]], ["0"], check=False)


BOOL = powerset(["1"])


class Morphism:
    """A join- and zero-preserving map, stored as a tuple of images."""

    __slots__ = ("dom", "cod", "map", "_arr")

    def __init__(self, dom: BModule, cod: BModule, mapping, *, check: bool = True):
        self.dom = dom
        self.cod = cod
        self.map = tuple(int(v) for v in mapping)
        self._arr = None
        if check:
            self._check()

    def _check(self):
        if len(self.map) != self.dom.n:
            raise NotAMorphism("one image per domain element is required")
        if any(not 0 <= v < self.cod.n for v in self.map):
            raise NotAMorphism("image out of range")
        if self.map[0] != 0:
            raise NotAMorphism("0 must map to 0")
        if not K.preserves_join(self.dom.table, self.cod.table, self.array):
            raise NotAMorphism("join is not preserved")

    @property
    def array(self) -> np.ndarray:
        if self._arr is None:
            a = np.array(self.map, dtype=np.int64)
            a.setflags(write=False)
            self._arr = a
        return self._arr

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.map == other.map
                and self.dom == other.dom and self.cod == other.cod)

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return f"Morphism({list(self.map)})"

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.cod.n

    def image(self) -> frozenset:
        return frozenset(self.map)

    def preimage(self, subset) -> frozenset:
        s = set(subset)
        return frozenset(x for x, y in enumerate(self.map) if y in s)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f."""
    if f.cod != g.dom:
        raise DomainMismatch("codomain of the first map is not the domain of the second")
    return Morphism(f.dom, g.cod, g.array[f.array], check=False)


def identity(M: BModule) -> Morphism:
    return Morphism(M, M, range(M.n), check=False)


def zero_map(M: BModule, N: BModule) -> Morphism:
    return Morphism(M, N, [0] * M.n, check=False)


def join_maps(f: Morphism, g: Morphism) -> Morphism:
    """Pointwise join of two parallel morphisms."""
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatch("maps are not parallel")
    return Morphism(f.dom, f.cod, f.cod.table[f.array, g.array], check=False)


class _HomPlan:
    """Per-domain tables for the generator search."""

    def __init__(self, M: BModule):
        gens = M.join_irreducibles
        g = len(gens)
        self.gens = gens
        o = M.order
        n = M.n
        gi = np.array(gens, dtype=np.int64)
        self.gen_le = o[np.ix_(gi, gi)] if g else np.zeros((0, 0), dtype=bool)
        elem_gens = o[gi, :].T.copy() if g else np.zeros((n, 0), dtype=bool)
        self.elem_gens = elem_gens
        ready = np.full(n, -1, dtype=np.int64)
        for x in range(n):
            hits = np.flatnonzero(elem_gens[x])
            if hits.size:
                ready[x] = hits.max()
        self.ready = ready
        order_idx = np.argsort(ready, kind="stable")
        order_idx = order_idx[ready[order_idx] >= 0]
        self.ready_idx = order_idx.astype(np.int64)
        self.ready_ptr = np.searchsorted(ready[order_idx], np.arange(g + 1)).astype(np.int64)
        xs, ys = np.triu_indices(n, 1)
        jt = M.table
        keep = (xs > 0) & ~o[xs, ys] & ~o[ys, xs]
        xs, ys = xs[keep], ys[keep]
        steps = ready[jt[xs, ys]]
        srt = np.argsort(steps, kind="stable")
        self.pair_x = xs[srt].astype(np.int64)
        self.pair_y = ys[srt].astype(np.int64)
        self.pair_ptr = np.searchsorted(steps[srt], np.arange(g + 1)).astype(np.int64)


def search_morphisms(M: BModule, N: BModule, *, equivariant: bool = False,
                     allowed=None, distinct: bool = False,
                     limit: int = DEFAULT_LIMIT, max_results: int = 0) -> np.ndarray:
    """Raw generator search; rows are image tuples in canonical order."""
    plan = M._hom_plan
    g = len(plan.gens)
    sigma_src = np.full(max(g, 1), -1, dtype=np.int64)
    cod_sigma = np.arange(N.n, dtype=np.int64)
    if equivariant:
        if M.sigma is None or N.sigma is None:
            raise DomainMismatch("equivariant search needs involutive modules")
        pos = {x: i for i, x in enumerate(plan.gens)}
        for i, x in enumerate(plan.gens):
            sigma_src[i] = pos[M.sigma[x]]
        cod_sigma = np.array(N.sigma, dtype=np.int64)
    if allowed is None:
        allowed = np.ones((max(g, 1), N.n), dtype=bool)
    rows, status, _ = K.hom_search(
        N.table, N.order, plan.gen_le, sigma_src, cod_sigma, allowed,
        plan.elem_gens, plan.ready_ptr, plan.ready_idx, plan.pair_ptr,
        plan.pair_x, plan.pair_y, M.table, distinct, limit, max_results)
    if status == K.STATUS_LIMIT:
        raise LimitExceeded(f"morphism search exceeded {limit} states")
    if rows.shape[0] > 1:
        rows = rows[np.lexsort(rows.T[::-1])]
    return rows


def hom_set(M: BModule, N: BModule, *, equivariant: bool = False,
            limit: int = DEFAULT_LIMIT) -> list[Morphism]:
    """All morphisms M -> N in lexicographic order of image tuples."""
    rows = search_morphisms(M, N, equivariant=equivariant, limit=limit)
    return [Morphism(M, N, r, check=False) for r in rows]


def _signature(M: BModule):
    o = M.order
    return [(int(o[:, x].sum()), int(o[x, :].sum())) for x in range(M.n)]


def find_isomorphism(M: BModule, N: BModule, *, equivariant: bool = False,
                     limit: int = DEFAULT_LIMIT) -> Morphism | None:
    """An isomorphism M -> N, or None. Generators may only go to generators
    with the same (down-set, up-set) sizes."""
    if M.n != N.n or len(M.join_irreducibles) != len(N.join_irreducibles):
        return None
    sm, sn = _signature(M), _signature(N)
    if sorted(sm) != sorted(sn):
        return None
    if M.n == 1:
        return identity(M) if M.sigma is None else Morphism(M, N, [0], check=False)
    jn = set(N.join_irreducibles)
    gens = M.join_irreducibles
    allowed = np.zeros((len(gens), N.n), dtype=bool)
    for i, x in enumerate(gens):
        for y in jn:
            allowed[i, y] = sm[x] == sn[y]
    rows = search_morphisms(M, N, equivariant=equivariant, allowed=allowed,
                            distinct=True, limit=limit, max_results=1)
    if rows.shape[0] == 0:
        return None
    return Morphism(M, N, rows[0], check=False)


def is_isomorphic(M: BModule, N: BModule, *, equivariant: bool = False) -> bool:
    return find_isomorphism(M, N, equivariant=equivariant) is not None


# ---------------------------------------------------------------- ideals / dual

class Ideal:
    """A hereditary submodule: contains 0, downward closed, closed under join."""

    __slots__ = ("owner", "members", "mask")

    def __init__(self, owner: BModule, members: Iterable[int]):
        self.owner = owner
        self.members = frozenset(int(x) for x in members)
        self.mask = sum(1 << x for x in self.members)

    def __contains__(self, x):
        return x in self.members

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.mask == other.mask and self.owner == other.owner

    def __hash__(self):
        return hash(self.mask)

    def __repr__(self):
        return f"Ideal({sorted(self.members)})"

    @property
    def top(self) -> int:
        return self.owner.join_all(self.members)

    def is_valid(self) -> bool:
        M, s = self.owner, self.members
        if 0 not in s:
            return False
        o = M.order
        for y in s:
            if any(o[x, y] and x not in s for x in range(M.n)):
                return False
        return all(M.join(x, y) in s for x in s for y in s)

    def value(self, x: int) -> int:
        """The functional attached to the ideal: 0 on members, 1 elsewhere."""
        return 0 if x in self.members else 1


def ideals(M: BModule) -> list[Ideal]:
    """Every ideal of M (all are principal), sorted by member bitset."""
    out = [Ideal(M, M.down(x)) for x in range(M.n)]
    return sorted(out, key=lambda i: i.mask)


def dual_ideals(M: BModule) -> list[Ideal]:
    """Ideals in the carrier order of dual(M): the full ideal (the zero
    functional) first, then the rest by member bitset."""
    full = Ideal(M, range(M.n))
    return [full] + [i for i in ideals(M) if i.mask != full.mask]


def dual(M: BModule) -> BModule:
    """M* as ideals of M joined by intersection."""
    ids = dual_ideals(M)
    pos = {i.mask: k for k, i in enumerate(ids)}
    n = len(ids)
    join = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            join[a, b] = join[b, a] = pos[ids[a].mask & ids[b].mask]
    names = ["<" + M.names[i.top] + "]" for i in ids]
    return BModule(join, names, check=False)


def evaluate(ideal: Ideal, x: int) -> int:
    return ideal.value(x)


def functional(M: BModule, ideal: Ideal) -> Morphism:
    return Morphism(M, BOOL, [ideal.value(x) for x in range(M.n)], check=False)


def ideal_of(phi: Morphism) -> Ideal:
    return Ideal(phi.dom, phi.preimage([0]))


# ---------------------------------------------------------- submodules / quotients

def join_closure(M: BModule, gens: Iterable[int]) -> frozenset:
    """The submodule generated by `gens` (0 included)."""
    out = {0}
    frontier = list(set(gens) - out)
    t = M.table
    while frontier:
        x = frontier.pop()
        if x in out:
            continue
        new = {int(t[x, y]) for y in out} | {x}
        out.add(x)
        frontier.extend(v for v in new if v not in out)
    return frozenset(out)


def is_submodule(M: BModule, members) -> bool:
    s = set(members)
    t = M.table
    return 0 in s and all(int(t[x, y]) in s for x in s for y in s)


def submodule(M: BModule, members) -> tuple[BModule, Morphism]:
    """The submodule on `members` with its inclusion; indices keep M's order."""
    elems = sorted(set(members))
    if not is_submodule(M, elems):
        raise MalformedTable("subset is not a submodule")
    pos = {x: i for i, x in enumerate(elems)}
    t = M.table
    join = np.array([[pos[int(t[x, y])] for y in elems] for x in elems], dtype=np.int64)
    sigma = None
    if M.sigma is not None:
        if any(M.sigma[x] not in pos for x in elems):
            raise MalformedTable("subset is not stable under the involution")
        sigma = [pos[M.sigma[x]] for x in elems]
    S = _derive(M, join, [M.names[x] for x in elems], sigma)
    return S, Morphism(S, M, elems, check=False)


class Congruence:
    """A join-compatible partition, stored as a class label per element."""

    __slots__ = ("owner", "class_of")

    def __init__(self, owner: BModule, class_of):
        self.owner = owner
        self.class_of = tuple(int(c) for c in class_of)

    @property
    def count(self) -> int:
        return max(self.class_of) + 1

    def classes(self) -> list[tuple]:
        out = [[] for _ in range(self.count)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return [tuple(c) for c in out]

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def is_valid(self) -> bool:
        t = self.owner.table
        c = np.array(self.class_of)
        lab = c[t]
        # x~x' implies x+y ~ x'+y
        for cls in self.classes():
            rows = lab[list(cls)]
            if not (rows == rows[0]).all():
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Congruence) and self.class_of == other.class_of

    def __hash__(self):
        return hash(self.class_of)

    def __repr__(self):
        return f"Congruence({self.classes()})"


def congruence_closure(M: BModule, pairs: Iterable[tuple[int, int]], *,
                       equivariant: bool = False) -> Congruence:
    """Least congruence containing `pairs` (and stable under sigma if asked)."""
    pairs = list(pairs)
    a = np.array([p[0] for p in pairs], dtype=np.int64)
    b = np.array([p[1] for p in pairs], dtype=np.int64)
    sigma = np.array(M.sigma, dtype=np.int64) if equivariant else np.zeros(0, dtype=np.int64)
    labels = K.close_congruence(M.table, sigma, a, b)
    return Congruence(M, labels)


def kernel_congruence(f: Morphism) -> Congruence:
    first = {}
    return Congruence(f.dom, [first.setdefault(y, len(first)) for y in f.map])


def quotient(M: BModule, C: Congruence) -> tuple[BModule, Morphism]:
    """M/C with the quotient map; classes are numbered by least member and
    named after it."""
    cls = C.class_of
    reps = [cl[0] for cl in C.classes()]
    t = M.table
    c = np.array(cls, dtype=np.int64)
    join = c[t[np.ix_(reps, reps)]]
    sigma = None
    if M.sigma is not None:
        sigma = [cls[M.sigma[r]] for r in reps]
    Q = _derive(M, join, [M.names[r] for r in reps], sigma)
    return Q, Morphism(M, Q, cls, check=False)


# ------------------------------------------------------------- limits / colimits

class Product(NamedTuple):
    module: BModule
    p1: Morphism
    p2: Morphism
    s1: Morphism
    s2: Morphism

    def pair(self, x: int, y: int) -> int:
        return x * self.p2.cod.n + y


def product(M: BModule, N: BModule) -> Product:
    """M x N with projections and inclusions; (x, y) has index x*|N| + y."""
    m, n = M.n, N.n
    tm, tn = M.table, N.table
    xs = np.repeat(np.arange(m), n)
    ys = np.tile(np.arange(n), m)
    join = tm[xs[:, None], xs[None, :]] * n + tn[ys[:, None], ys[None, :]]
    names = [f"({M.names[x]},{N.names[y]})" for x, y in zip(xs, ys)]
    sigma = None
    if M.sigma is not None and N.sigma is not None:
        sigma = [M.sigma[x] * n + N.sigma[y] for x, y in zip(xs, ys)]
    P = _derive(M, join, names, sigma)
    return Product(
        P,
        Morphism(P, M, xs, check=False),
        Morphism(P, N, ys, check=False),
        Morphism(M, P, np.arange(m) * n, check=False),
        Morphism(N, P, np.arange(n), check=False),
    )


def equalizer(f: Morphism, g: Morphism) -> tuple[BModule, Morphism]:
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatch("maps are not parallel")
    return submodule(f.dom, [x for x in range(f.dom.n) if f.map[x] == g.map[x]])


def coequalizer(f: Morphism, g: Morphism) -> tuple[BModule, Morphism]:
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatch("maps are not parallel")
    C = congruence_closure(f.cod, zip(f.map, g.map),
                           equivariant=f.cod.sigma is not None)
    return quotient(f.cod, C)


def extend_functional(incl: Morphism, phi: Ideal) -> Ideal:
    """Largest functional on M restricting to phi (i.e. the smallest ideal)."""
    M = incl.cod
    return Ideal(M, M.down(incl.map[phi.top]))


def separate(incl: Morphism, xi: int) -> tuple[Ideal, Ideal]:
    """Two functionals agreeing on the submodule but not at xi."""
    M = incl.cod
    sub = set(incl.map)
    if xi in sub:
        raise ElementInSubmodule(f"{M.names[xi]} lies in the submodule")
    below = M.join_all(y for y in sub if M.leq(y, xi))
    return Ideal(M, M.down(xi)), Ideal(M, M.down(below))


class KernelPair(NamedTuple):
    module: BModule
    inclusion: Morphism
    p1: Morphism
    p2: Morphism


def kernel_pair(f: Morphism) -> KernelPair:
    M = f.dom
    P = product(M, M)
    members = [P.pair(x, y) for x in range(M.n) for y in range(M.n) if f.map[x] == f.map[y]]
    S, inc = submodule(P.module, members)
    return KernelPair(S, inc, compose(P.p1, inc), compose(P.p2, inc))


def coimage(f: Morphism) -> tuple[BModule, Morphism, Morphism]:
    """Quotient of the domain by f(x) = f(y), the quotient map and the
    induced injective map to the codomain."""
    Q, q = quotient(f.dom, kernel_congruence(f))
    reps = [cl[0] for cl in kernel_congruence(f).classes()]
    return Q, q, Morphism(Q, f.cod, [f.map[r] for r in reps], check=False)


def cokernel_pair(f: Morphism) -> tuple[BModule, Morphism, Morphism]:
    N = f.cod
    P = product(N, N)
    Cp, c = coequalizer(compose(P.s1, f), compose(P.s2, f))
    return Cp, compose(c, P.s1), compose(c, P.s2)


def image(f: Morphism) -> tuple[BModule, Morphism]:
    _, g1, g2 = cokernel_pair(f)
    return equalizer(g1, g2)


# ------------------------------------------------------------- Galois / support

def galois_adjoint(f: Morphism) -> tuple:
    """g(y) = join of {x : f(x) <= y}; f(x) <= y iff x <= g(y)."""
    M, N = f.dom, f.cod
    no = N.order
    fa = f.array
    return tuple(M.join_all(np.flatnonzero(no[fa, y]).tolist()) for y in range(N.n))


class SupportDecomposition(NamedTuple):
    f: Morphism
    support: tuple
    q: Morphism
    inj: Morphism
    adjoint_g: tuple
    module: BModule


def support_decomposition(f: Morphism) -> SupportDecomposition:
    """f = inj o q through the fixed points S of the closure c = g o f."""
    M = f.dom
    g = galois_adjoint(f)
    c = [g[f.map[x]] for x in range(M.n)]
    fixed = sorted({x for x in range(M.n) if c[x] == x}, key=lambda x: (x != c[0], x))
    pos = {x: i for i, x in enumerate(fixed)}
    t = M.table
    join = np.array([[pos[c[int(t[a, b])]] for b in fixed] for a in fixed], dtype=np.int64)
    S = BModule(join, [M.names[x] for x in fixed], check=False)
    q = Morphism(M, S, [pos[c[x]] for x in range(M.n)], check=False)
    inj = Morphism(S, f.cod, [f.map[x] for x in fixed], check=False)
    return SupportDecomposition(f, tuple(fixed), q, inj, g, S)


# ----------------------------------------------------------- radical / injectivity

def maximal_ideals(M: BModule) -> list[Ideal]:
    return sorted((Ideal(M, M.down(c)) for c in M.coatoms), key=lambda i: i.mask)


def radical(M: BModule) -> Congruence:
    """x ~ y iff x and y lie in the same maximal ideals. The zero module has
    no maximal ideal and gets the single class."""
    maxi = maximal_ideals(M)
    first = {}
    return Congruence(M, [first.setdefault(tuple(x in I for I in maxi), len(first))
                          for x in range(M.n)])


def radical_trivial(M: BModule) -> bool:
    return radical(M).count == M.n


def dual_min_generated(M: BModule) -> bool:
    """Every ideal is an intersection of maximal ideals, i.e. every element
    is the meet of the coatoms above it (the top for the empty meet)."""
    co = M.coatoms
    for x in range(M.n):
        v = M.top
        for c in co:
            if M.leq(x, c):
                v = M.meet(v, c)
        if v != x:
            return False
    return True


def distributivity_witness(M: BModule):
    """A triple breaking x^(y+z) = (x^y)+(x^z), or None."""
    mt, jt = M.meet_table, M.table
    lhs = mt[np.arange(M.n)[:, None, None], jt[None, :, :]]
    xy = mt[:, :, None]
    xz = mt[:, None, :]
    rhs = jt[np.broadcast_to(xy, lhs.shape), np.broadcast_to(xz, lhs.shape)]
    bad = np.argwhere(lhs != rhs)
    return tuple(map(int, bad[0])) if bad.size else None


def is_injective_finite(M: BModule) -> bool:
    """Finite M is injective (equivalently projective) iff its lattice is distributive."""
    return distributivity_witness(M) is None


def morphism_from_generators(M: BModule, N: BModule, images: dict[int, int]) -> Morphism:
    """The morphism sending each join-irreducible x of M to images[x];
    raises NotAMorphism if that assignment does not extend."""
    f = [N.join_all(images[j] for j in M.join_irreducibles if M.leq(j, x)) for x in range(M.n)]
    for j in M.join_irreducibles:
        if f[j] != images[j]:
            raise NotAMorphism("generator images are not monotone")
    return Morphism(M, N, f)


def all_pairs(n: int):
    return iproduct(range(n), range(n))


def random_module(rng, size: int, *, universe: int | None = None) -> BModule:
    """A module with `size` elements as a random union-closed family of
    subsets of range(universe); `rng` is a numpy Generator."""
    universe = universe or max(size - 1, 1)
    while True:
        fam = {0}
        for _ in range(64):
            if len(fam) == size:
                break
            s = int(rng.integers(1, 1 << universe))
            grown = set(fam)
            frontier = [s]
            while frontier:
                a = frontier.pop()
                if a in grown:
                    continue
                grown.add(a)
                frontier.extend(a | b for b in list(grown) if a | b not in grown)
            if len(grown) <= size:
                fam = grown
        if len(fam) == size:
            break
    order = sorted(fam, key=lambda m: (bin(m).count("1"), m))
    return from_subsets([frozenset(i for i in range(universe) if m >> i & 1) for m in order])


def random_involutive(rng, size: int):
    """A random module with a random involution, non-trivial when the
    sampled module admits one."""
    from .bmods import InvModule
    M = random_module(rng, size)
    ident = tuple(range(M.n))
    autos = [f.map for f in hom_set(M, M) if f.is_injective() and compose(f, f).map == ident]
    proper = [a for a in autos if a != ident] or autos
    return InvModule(M, proper[int(rng.integers(len(proper)))], check=False)
