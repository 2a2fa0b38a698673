import os
import subprocess
import sys
from itertools import product

import numpy as np
import pytest

import families as Fm
import oracles as O
from bmodkit import _kernels as K
from bmodkit import catalog as C
from bmodkit import lattice as L
from bmodkit.errors import (
    ElementInSubmodule, LimitExceeded, MalformedTable, NotAMorphism,
    NotAssociative, NotCommutative, NotIdempotent, ZeroNotNeutral,
)

BAD_ASSOC = [[0, 1, 2, 3], [1, 1, 1, 2], [2, 1, 2, 1], [3, 2, 1, 3]]


# ------------------------------------------------------------------ validation

def test_swap_table_fails_idempotence_first():
    # neutrality holds (0+1 = 1), so the next law in line reports
    with pytest.raises(NotIdempotent) as e:
        L.validate_module([[0, 1], [1, 0]])
    assert e.value.witness == (1,)


@pytest.mark.parametrize("table, err, witness", [
    ([[1, 1], [1, 1]], ZeroNotNeutral, (0,)),
    ([[0, 1, 2], [1, 1, 1], [2, 2, 2]], NotCommutative, (1, 2)),
    (BAD_ASSOC, NotAssociative, (1, 1, 3)),
])
def test_law_violations_carry_witnesses(table, err, witness):
    with pytest.raises(err) as e:
        L.validate_module(table)
    assert e.value.witness == witness


@pytest.mark.parametrize("table", [[], [[0, 1]], [[0, 2], [2, 2]], [[0.0]]])
def test_malformed_tables(table):
    with pytest.raises(MalformedTable):
        L.validate_module(table)


def test_names_must_match_size():
    with pytest.raises(MalformedTable):
        L.validate_module([[0]], ["a", "b"])


def test_from_order_and_from_subsets_agree_on_b2():
    A = L.powerset(["a", "b"])
    B = L.from_subsets([set(), {"a"}, {"b"}, {"a", "b"}])
    C2 = L.from_order(A.order)
    assert np.array_equal(A.table, B.table) and np.array_equal(A.table, C2.table)


def test_from_subsets_rejects_non_union_closed():
    with pytest.raises(MalformedTable):
        L.from_subsets([set(), {1}, {2}])


def test_morphism_checks():
    B2 = L.powerset(["a", "b"])
    with pytest.raises(NotAMorphism):
        L.Morphism(B2, B2, [0, 1, 2, 0])
    with pytest.raises(NotAMorphism):
        L.Morphism(B2, B2, [1, 1, 3, 3])
    with pytest.raises(NotAMorphism):
        L.Morphism(B2, B2, [0, 1])


# ------------------------------------------------------------------ order

@pytest.mark.parametrize("M", Fm.modules(), ids=lambda M: f"n{M.n}")
def test_order_is_transitive_closure_of_covers(M):
    n = M.n
    reach = np.eye(n, dtype=bool)
    for a, b in M.covers:
        reach[a, b] = True
    for k in range(n):
        reach |= reach[:, [k]] & reach[[k], :]
    assert np.array_equal(reach, M.order)
    assert all(M.meet(x, y) == M.meet(y, x) and M.leq(M.meet(x, y), x) for x in range(n) for y in range(n))


def test_meet_kernel_matches_python_version():
    for M in Fm.modules():
        assert np.array_equal(K.meet_table_py(M.table, M.order), M.meet_table)


# ------------------------------------------------------------------ ideals / duality

@pytest.mark.parametrize("M", Fm.modules(), ids=lambda M: f"n{M.n}")
def test_ideals_match_oracle(M):
    got = {I.members for I in L.ideals(M)}
    assert got == set(O.ideals(Fm.table(M)))
    assert all(I.is_valid() for I in L.ideals(M))


def test_q_has_ten_ideals():
    assert len(L.ideals(C.diagonal().Q)) == 10


@pytest.mark.parametrize("M", Fm.modules(), ids=lambda M: f"n{M.n}")
def test_biduality(M):
    D = L.dual(M)
    assert D.n == M.n
    assert L.is_isomorphic(L.dual(D), M)
    # the zero functional sits at index 0
    assert L.dual_ideals(M)[0].members == frozenset(range(M.n))


def test_dual_of_chain_is_chain():
    assert L.is_isomorphic(L.dual(L.chain(4)), L.chain(4))


def test_functional_round_trip():
    M = L.powerset(["a", "b", "c"])
    for I in L.ideals(M):
        phi = L.functional(M, I)
        assert L.ideal_of(phi) == I
        assert all(L.evaluate(I, x) == phi(x) for x in M.elements)


# ------------------------------------------------------------------ morphisms

def test_hom_sets_match_oracle():
    mods = Fm.modules_exhaustive(4) + Fm.modules_sampled(2, 2)
    for A, B in Fm.pairs(mods, max_pairs=400, salt=1):
        got = sorted(f.map for f in L.hom_set(A, B))
        assert got == sorted(O.homs(Fm.table(A), Fm.table(B)))


def test_equivariant_hom_sets_match_oracle():
    invs = Fm.inv_modules(2, 2)
    for A, B in Fm.pairs(invs, max_pairs=300, salt=2):
        got = sorted(f.map for f in L.hom_set(A, B, equivariant=True))
        assert got == sorted(O.homs(Fm.table(A), Fm.table(B), A.sigma, B.sigma))


@pytest.mark.parametrize("M", Fm.modules(), ids=lambda M: f"n{M.n}")
def test_hom_from_and_into_b(M):
    # B is free on one generator; maps into B are the functionals
    assert len(L.hom_set(L.BOOL, M)) == M.n
    assert len(L.hom_set(M, L.BOOL)) == len(L.ideals(M))


def test_hom_limit_raises():
    M = L.powerset(["a", "b", "c", "d"])
    with pytest.raises(LimitExceeded):
        L.hom_set(M, M, limit=10)


def test_isomorphism_search():
    A = L.from_order([[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]])
    assert L.is_isomorphic(A, L.powerset(["x", "y"]))
    assert not L.is_isomorphic(L.chain(4), L.powerset(["x", "y"]))
    iso = L.find_isomorphism(A, L.powerset(["x", "y"]))
    assert iso.is_injective() and iso.is_surjective()


def test_morphism_from_generators():
    B2 = L.powerset(["a", "b"])
    f = L.morphism_from_generators(B2, L.chain(3), {1: 1, 2: 2})
    assert f.map == (0, 1, 2, 2)


# ------------------------------------------------------------------ limits / colimits

def test_product_projections_and_inclusions():
    A, B = L.chain(3), L.powerset(["a", "b"])
    P = L.product(A, B)
    assert P.module.n == 12
    for m in (P.p1, P.p2, P.s1, P.s2):
        L.Morphism(m.dom, m.cod, m.map)
    assert L.compose(P.p1, P.s1) == L.identity(A)
    assert all(v == 0 for v in L.compose(P.p2, P.s1).map)


def test_product_universal_property():
    A, B = L.chain(3), L.BOOL
    P = L.product(A, B)
    X = L.powerset(["x", "y"])
    for f in L.hom_set(X, A):
        for g in L.hom_set(X, B):
            h = [P.pair(f(x), g(x)) for x in X.elements]
            L.Morphism(X, P.module, h)


def test_equalizer_and_coequalizer_match_oracle():
    mods = Fm.modules_exhaustive(4)
    for A, B in Fm.pairs(mods):
        hs = L.hom_set(A, B)
        for f, g in product(hs[:4], hs[-4:]):
            E, inc = L.equalizer(f, g)
            assert set(inc.map) == {x for x in A.elements if f(x) == g(x)}
            Q, q = L.coequalizer(f, g)
            assert L.compose(q, f) == L.compose(q, g)
            want = O.least_congruence(Fm.table(B), list(zip(f.map, g.map)))
            assert O.same_partition(q.map, want)


def test_congruence_closure_matches_oracle():
    rng = np.random.default_rng(Fm.SEED)
    for M in Fm.modules_exhaustive(4) + Fm.modules_sampled(3, 0):
        t = Fm.table(M)
        for _ in range(4):
            k = int(rng.integers(1, 3))
            pairs = [tuple(int(v) for v in rng.integers(0, M.n, 2)) for _ in range(k)]
            C2 = L.congruence_closure(M, pairs)
            assert C2.is_valid()
            assert O.same_partition(C2.class_of, O.least_congruence(t, pairs))


def test_equivariant_congruence_closure_matches_oracle():
    for E in Fm.inv_modules(2, 0):
        t = Fm.table(E)
        for a in range(E.n):
            C2 = L.congruence_closure(E, [(0, a)], equivariant=True)
            assert O.same_partition(C2.class_of, O.least_congruence(t, [(0, a)], E.sigma))


def test_quotient_map_is_a_morphism():
    M = L.powerset(["a", "b", "c"])
    C2 = L.congruence_closure(M, [(1, 2)])
    Q, q = L.quotient(M, C2)
    L.Morphism(M, Q, q.map)
    assert Q.n == C2.count


def _sub_families(M):
    t = Fm.table(M)
    return [s for s in O.submodules(t) if len(s) < M.n]


@pytest.mark.parametrize("M", Fm.modules_exhaustive(5), ids=lambda M: f"n{M.n}")
def test_extend_functional_gives_largest_extension(M):
    # largest functional = smallest ideal restricting correctly
    for s in _sub_families(M):
        Sm, inc = L.submodule(M, s)
        for phi in L.ideals(Sm):
            ext = L.extend_functional(inc, phi)
            restricted = {i for i, x in enumerate(inc.map) if x in ext.members}
            assert restricted == set(phi.members)
            for J in L.ideals(M):
                if {i for i, x in enumerate(inc.map) if x in J.members} == set(phi.members):
                    assert ext.members <= J.members


@pytest.mark.parametrize("M", Fm.modules_exhaustive(5), ids=lambda M: f"n{M.n}")
def test_separation(M):
    for s in _sub_families(M):
        Sm, inc = L.submodule(M, s)
        for xi in M.elements:
            if xi in s:
                with pytest.raises(ElementInSubmodule):
                    L.separate(inc, xi)
                continue
            I1, I2 = L.separate(inc, xi)
            assert all(I1.value(x) == I2.value(x) for x in s)
            assert I1.value(xi) != I2.value(xi)


def test_image_of_inclusion_is_the_range():
    M = L.powerset(["a", "b", "c"])
    for s in O.submodules(Fm.table(M)):
        _, inc = L.submodule(M, s)
        _, im = L.image(inc)
        assert set(im.map) == set(s)


def test_kernel_pair_of_injective_map_is_diagonal():
    M = L.powerset(["a", "b"])
    _, inc = L.submodule(M, [0, 1, 3])
    kp = L.kernel_pair(inc)
    assert kp.module.n == 3
    assert kp.p1.map == kp.p2.map


# ------------------------------------------------------------------ support / radical / injectivity

def test_support_decomposition_invariants():
    for A, B in Fm.pairs(Fm.modules(), max_pairs=200, salt=3):
        for f in L.hom_set(A, B):
            sd = L.support_decomposition(f)
            assert sd.q.is_surjective() and sd.inj.is_injective()
            assert L.compose(sd.inj, sd.q).map == f.map
            # the support is the set of closed elements of g o f
            assert all(sd.adjoint_g[f(x)] == x for x in sd.support)


def test_duality_separates_points():
    for M in Fm.modules():
        for x in M.elements:
            for y in M.elements:
                if x != y:
                    assert any(I.value(x) != I.value(y) for I in L.ideals(M))


def test_radical_cases():
    assert L.radical_trivial(L.BOOL)
    assert L.radical_trivial(L.powerset(["a", "b", "c"]))
    c3 = L.radical(C.three_chain())
    assert c3.count == 2 and c3.related(0, 1)
    assert L.radical(L.zero_module()).count == 1


def _dual_min_oracle(M):
    t = Fm.table(M)
    ids = O.ideals(t)
    maxi = [I for I in ids if len(I) < M.n and not any(I < J and len(J) < M.n for J in ids)]
    full = frozenset(range(M.n))
    for I in ids:
        inter = full
        for J in maxi:
            if I <= J:
                inter = inter & J
        if inter != I:
            return False
    return True


@pytest.mark.parametrize("M", Fm.modules_exhaustive(6), ids=lambda M: f"n{M.n}")
def test_dual_min_generated_matches_oracle(M):
    assert L.dual_min_generated(M) == _dual_min_oracle(M)


@pytest.mark.parametrize("M", Fm.modules_exhaustive(6), ids=lambda M: f"n{M.n}")
def test_injectivity_matches_retract_oracle(M):
    assert L.is_injective_finite(M) == O.is_retract_of_powerset(Fm.table(M))


def test_s_is_not_injective():
    X = C.s_example()
    assert L.is_injective_finite(X.B3) and not L.is_injective_finite(X.S)
    assert L.distributivity_witness(X.S) is not None


# ------------------------------------------------------------------ generators for sweeps

def test_random_module_is_seeded():
    a = L.random_module(np.random.default_rng(5), 6)
    b = L.random_module(np.random.default_rng(5), 6)
    assert a.n == 6 and np.array_equal(a.table, b.table)
    E = L.random_involutive(np.random.default_rng(7), 5)
    assert E.n == 5 and all(E.sigma[E.sigma[x]] == x for x in E.elements)


# ------------------------------------------------------------------ compiled vs interpreted kernels

def test_kernels_agree_with_python_versions():
    for A, B in Fm.pairs(Fm.modules(), max_pairs=150, salt=4):
        for f in L.hom_set(A, B):
            assert K.preserves_join_py(A.table, B.table, f.array)
            assert K.preserves_join_np(A.table, B.table, f.array)
    M = L.powerset(["a", "b", "c"])
    a = np.array([1, 3], dtype=np.int64)
    b = np.array([2, 5], dtype=np.int64)
    none = np.zeros(0, dtype=np.int64)
    assert list(K.close_congruence(M.table, none, a, b)) == list(K.close_congruence_py(M.table, none, a, b))


_PARITY = """
import json, numpy as np
from bmodkit import lattice as L, _kernels as K
from bmodkit import catalog as C
out = {"disabled": K.NUMBA_DISABLED}
D = C.diagonal()
out["endQ"] = len(C.S.hom(D.Q, D.Q))
M = L.powerset(["a", "b", "c"])
out["cong"] = list(L.congruence_closure(M, [(1, 6)]).class_of)
out["hom"] = [list(f.map) for f in L.hom_set(L.chain(3), M)]
print(json.dumps(out))
"""


def _run_parity(disable):
    env = dict(os.environ)
    env.pop("BMODKIT_DISABLE_NUMBA", None)
    if disable:
        env["BMODKIT_DISABLE_NUMBA"] = "1"
    r = subprocess.run([sys.executable, "-c", _PARITY], env=env, capture_output=True, text=True, check=True)
    return r.stdout


def test_fallback_path_gives_identical_results():
    import json
    on, off = json.loads(_run_parity(False)), json.loads(_run_parity(True))
    assert off.pop("disabled") is True and on.pop("disabled") is False
    assert on == off
    assert on["endQ"] == 70
