"""Hot loops: morphism search, congruence closure, join checks, meet tables.

Each kernel is written once as plain Python over numpy arrays. Unless the
environment variable BMODKIT_DISABLE_NUMBA is set to a non-empty value other
than "0", the public names are the numba-compiled versions; the ``*_py``
names always refer to the interpreted originals so both paths can be
compared side by side.
"""
import os

import numpy as np

NUMBA_DISABLED = os.environ.get("BMODKIT_DISABLE_NUMBA", "") not in ("", "0")

if NUMBA_DISABLED:
    def _jit(fn):
        return fn
else:
    from numba import njit

    def _jit(fn):
        return njit(cache=True, nogil=True)(fn)

STATUS_OK = 0
STATUS_LIMIT = 1


def hom_search_py(cod_join, cod_leq, gen_le, sigma_src, cod_sigma, allowed,
                  elem_gens, ready_ptr, ready_idx, pair_ptr, pair_x, pair_y,
                  dom_join, distinct, limit, max_results):
    """Depth-first search over images of the generators of the domain.

    Generators are join-irreducibles in a linear extension of the order.
    Element x is "ready" at step k once every generator below it is fixed;
    its image is then the join of those generator images. Join pairs are
    checked at the step their join becomes ready, so every leaf reached is
    a morphism. Returns (maps, status, visited).
    """
    n = dom_join.shape[0]
    m = cod_join.shape[0]
    g = gen_le.shape[0]
    cap = 64
    out = np.zeros((cap, n), dtype=np.int64)
    count = 0
    visited = 0
    fval = np.zeros(n, dtype=np.int64)
    assign = np.zeros(max(g, 1), dtype=np.int64)
    choice = np.full(max(g, 1), -1, dtype=np.int64)
    if g == 0:
        out[0, :] = 0
        return out[:1], STATUS_OK, 0
    k = 0
    while k >= 0:
        if k == g:
            if count == cap:
                bigger = np.zeros((cap * 2, n), dtype=np.int64)
                bigger[:cap] = out
                out = bigger
                cap *= 2
            out[count, :] = fval
            count += 1
            if max_results > 0 and count >= max_results:
                return out[:count], STATUS_OK, visited
            k -= 1
            continue
        advanced = False
        src = sigma_src[k]
        while True:
            if 0 <= src < k:
                if choice[k] != -1:
                    break
                choice[k] = m
                y = cod_sigma[assign[src]]
            else:
                choice[k] += 1
                if choice[k] >= m:
                    break
                y = choice[k]
            visited += 1
            if visited > limit:
                return out[:count], STATUS_LIMIT, visited
            if not allowed[k, y]:
                continue
            if src == k and cod_sigma[y] != y:
                continue
            ok = True
            for j in range(k):
                if distinct and assign[j] == y:
                    ok = False
                    break
                if gen_le[j, k] and not cod_leq[assign[j], y]:
                    ok = False
                    break
            if not ok:
                continue
            assign[k] = y
            for t in range(ready_ptr[k], ready_ptr[k + 1]):
                x = ready_idx[t]
                v = 0
                for j in range(k + 1):
                    if elem_gens[x, j]:
                        v = cod_join[v, assign[j]]
                fval[x] = v
            for t in range(pair_ptr[k], pair_ptr[k + 1]):
                a = pair_x[t]
                b = pair_y[t]
                if fval[dom_join[a, b]] != cod_join[fval[a], fval[b]]:
                    ok = False
                    break
            if ok:
                advanced = True
                break
        if advanced:
            k += 1
            if k < g:
                choice[k] = -1
        else:
            choice[k] = -1
            k -= 1
    return out[:count], STATUS_OK, visited


def close_congruence_py(join, sigma, seeds_a, seeds_b):
    """Least join-compatible (and sigma-compatible, if sigma is non-empty)
    equivalence containing the seed pairs; classes numbered by least member."""
    n = join.shape[0]
    parent = np.arange(n)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(seeds_a.shape[0]):
        a = find(seeds_a[i])
        b = find(seeds_b[i])
        if a != b:
            if a < b:
                parent[b] = a
            else:
                parent[a] = b
    use_sigma = sigma.shape[0] == n
    changed = True
    while changed:
        changed = False
        for x in range(n):
            r = find(x)
            if r == x:
                continue
            for z in range(n):
                a = find(join[x, z])
                b = find(join[r, z])
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
                    changed = True
            if use_sigma:
                a = find(sigma[x])
                b = find(sigma[r])
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
                    changed = True
    labels = np.full(n, -1, dtype=np.int64)
    root_label = np.full(n, -1, dtype=np.int64)
    nxt = 0
    for x in range(n):
        r = find(x)
        if root_label[r] == -1:
            root_label[r] = nxt
            nxt += 1
        labels[x] = root_label[r]
    return labels


def preserves_join_py(dom_join, cod_join, f):
    n = dom_join.shape[0]
    for x in range(n):
        for y in range(x + 1, n):
            if f[dom_join[x, y]] != cod_join[f[x], f[y]]:
                return False
    return True


def meet_table_py(join, leq):
    n = join.shape[0]
    meet = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            v = 0
            for z in range(n):
                if leq[z, x] and leq[z, y]:
                    v = join[v, z]
            meet[x, y] = v
            meet[y, x] = v
    return meet


def preserves_join_np(dom_join, cod_join, f):
    return bool(np.array_equal(f[dom_join], cod_join[f[:, None], f[None, :]]))


if NUMBA_DISABLED:
    hom_search = hom_search_py
    close_congruence = close_congruence_py
    preserves_join = preserves_join_np
    meet_table = meet_table_py
else:
    hom_search = _jit(hom_search_py)
    close_congruence = _jit(close_congruence_py)
    preserves_join = _jit(preserves_join_py)
    meet_table = _jit(meet_table_py)
