"""Table-driven lattice kernels with a numba backend and a pure-numpy fallback.

The backend is chosen once at import time from the ``OMLQ_BACKEND``
environment variable (``numba`` or ``numpy``).  The default is ``numba``
when it can be imported.  Both backends take and return plain numpy arrays
and must produce identical results; ``tests/test_kernels.py`` checks this.
"""

from __future__ import annotations

import os

import numpy as np

_requested = os.environ.get("OMLQ_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"OMLQ_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

try:
    if _requested != "numba":
        raise ImportError("numba disabled by OMLQ_BACKEND")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------- numpy side


def _np_transitive_closure(rel):
    r = rel.copy()
    n = r.shape[0]
    for k in range(n):
        r |= r[:, k : k + 1] & r[k : k + 1, :]
    return r


def _np_bound_table(leq, lower):
    """Unique glb (lower=True) or lub table; -1 where none or several exist."""
    n = leq.shape[0]
    out = np.full((n, n), -1, dtype=np.int64)
    order = leq if lower else leq.T
    # order[x, a] means x is below a (or above for lubs)
    for a in range(n):
        bounds = order[:, a][None, :] & order.T  # [b, x]: x bounds both a and b
        # x is the greatest bound iff every bound y satisfies order[y, x]
        ok = bounds & ~np.any(bounds[:, :, None] & ~order[None, :, :], axis=1)
        cnt = ok.sum(axis=1)
        idx = ok.argmax(axis=1)
        out[a] = np.where(cnt == 1, idx, -1)
    return out


def _np_join_reduce(join, arr, zero):
    arr = np.asarray(arr, dtype=np.int64)
    if arr.size == 0:
        return zero
    while arr.size > 1:
        if arr.size % 2:
            arr = np.append(arr, zero)
        arr = join[arr[0::2], arr[1::2]]
    return int(arr[0])


def _np_commutator(meet, join, ortho, elems, zero, one):
    k = len(elems)
    masks = np.arange(1 << k, dtype=np.int64)
    acc = np.full(masks.shape, one, dtype=np.int64)
    for i, e in enumerate(elems):
        bit = (masks >> i) & 1
        acc = meet[acc, np.where(bit == 0, e, ortho[e])]
    return _np_join_reduce(join, acc, zero)


def _np_vector_step(meet, join, v, d, zero):
    # out[q] = join_p meet(v[p], d[p, q])
    terms = meet[v[:, None], d]
    out = np.empty(d.shape[1], dtype=np.int64)
    for q in range(d.shape[1]):
        out[q] = _np_join_reduce(join, terms[:, q], zero)
    return out


def _np_path_join(meet, join, init, term, word_delta, zero):
    vals = np.asarray(init, dtype=np.int64)
    for d in word_delta:
        # vals has one axis per visited state; extend by the next state
        vals = meet[vals[..., :, None], d]
    vals = meet[vals, np.asarray(term, dtype=np.int64)]
    return _np_join_reduce(join, vals.ravel(), zero)


def _np_commutes_table(meet, join, ortho):
    n = meet.shape[0]
    a = np.arange(n)
    lhs = join[meet[a[:, None], a[None, :]], meet[a[:, None], ortho[None, :]]]
    return lhs == a[:, None]


def _np_distributive_violation(meet, join):
    n = meet.shape[0]
    for a in range(n):
        lhs = meet[a, join]  # [b, c] -> a ∧ (b ∨ c)
        rhs = join[meet[a, :][:, None], meet[a, :][None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            return a, int(bad[0, 0]), int(bad[0, 1])
    return -1, -1, -1


def _np_orthomodular_violation(leq, meet, join, ortho):
    n = meet.shape[0]
    a = np.arange(n)
    lhs = join[a[:, None], meet[ortho[:, None], a[None, :]]]
    bad = np.argwhere(leq & (lhs != a[None, :]))
    if bad.size:
        return int(bad[0, 0]), int(bad[0, 1])
    return -1, -1


# ---------------------------------------------------------------- numba side

if HAVE_NUMBA:

    @njit(cache=True)
    def _nb_transitive_closure(rel):
        r = rel.copy()
        n = r.shape[0]
        for k in range(n):
            for i in range(n):
                if r[i, k]:
                    for j in range(n):
                        if r[k, j]:
                            r[i, j] = True
        return r

    @njit(cache=True)
    def _nb_bound_table(leq, lower):
        n = leq.shape[0]
        out = np.full((n, n), -1, dtype=np.int64)
        for a in range(n):
            for b in range(n):
                found = -1
                count = 0
                for x in range(n):
                    if lower:
                        isb = leq[x, a] and leq[x, b]
                    else:
                        isb = leq[a, x] and leq[b, x]
                    if not isb:
                        continue
                    best = True
                    for y in range(n):
                        if lower:
                            yb = leq[y, a] and leq[y, b]
                            if yb and not leq[y, x]:
                                best = False
                                break
                        else:
                            yb = leq[a, y] and leq[b, y]
                            if yb and not leq[x, y]:
                                best = False
                                break
                    if best:
                        found = x
                        count += 1
                if count == 1:
                    out[a, b] = found
        return out

    @njit(cache=True)
    def _nb_commutator(meet, join, ortho, elems, zero, one):
        k = elems.shape[0]
        acc = zero
        for mask in range(1 << k):
            m = one
            for i in range(k):
                e = elems[i]
                if (mask >> i) & 1:
                    e = ortho[e]
                m = meet[m, e]
                if m == zero:
                    break
            acc = join[acc, m]
            if acc == one:
                break
        return acc

    @njit(cache=True)
    def _nb_vector_step(meet, join, v, d, zero):
        nq = d.shape[1]
        out = np.full(nq, zero, dtype=np.int64)
        for p in range(d.shape[0]):
            for q in range(nq):
                out[q] = join[out[q], meet[v[p], d[p, q]]]
        return out

    @njit(cache=True)
    def _nb_path_join(meet, join, init, term, word_delta, zero):
        k = word_delta.shape[0]
        nq = init.shape[0]
        if k == 0:
            acc = zero
            for q in range(nq):
                acc = join[acc, meet[init[q], term[q]]]
            return acc
        seq = np.zeros(k + 1, dtype=np.int64)
        pre = np.zeros(k + 1, dtype=np.int64)  # pre[i]: value of the path prefix up to seq[i]
        acc = zero
        pos = 0
        pre[0] = init[0]
        while True:
            # extend the prefix to full length with state 0 choices
            while pos < k:
                pos += 1
                seq[pos] = 0
                pre[pos] = meet[pre[pos - 1], word_delta[pos - 1, seq[pos - 1], 0]]
            acc = join[acc, meet[pre[k], term[seq[k]]]]
            # odometer increment
            while pos >= 0 and seq[pos] == nq - 1:
                pos -= 1
            if pos < 0:
                break
            seq[pos] += 1
            if pos == 0:
                pre[0] = init[seq[0]]
            else:
                pre[pos] = meet[pre[pos - 1], word_delta[pos - 1, seq[pos - 1], seq[pos]]]
        return acc

    @njit(cache=True)
    def _nb_commutes_table(meet, join, ortho):
        n = meet.shape[0]
        out = np.zeros((n, n), dtype=np.bool_)
        for a in range(n):
            for b in range(n):
                out[a, b] = join[meet[a, b], meet[a, ortho[b]]] == a
        return out

    @njit(cache=True)
    def _nb_distributive_violation(meet, join):
        n = meet.shape[0]
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if meet[a, join[b, c]] != join[meet[a, b], meet[a, c]]:
                        return a, b, c
        return -1, -1, -1

    @njit(cache=True)
    def _nb_orthomodular_violation(leq, meet, join, ortho):
        n = meet.shape[0]
        for a in range(n):
            for b in range(n):
                if leq[a, b] and join[a, meet[ortho[a], b]] != b:
                    return a, b
        return -1, -1


# ---------------------------------------------------------------- dispatch


def _i64(x):
    return np.ascontiguousarray(x, dtype=np.int64)


def transitive_closure(rel):
    rel = np.ascontiguousarray(rel, dtype=np.bool_)
    return _nb_transitive_closure(rel) if HAVE_NUMBA else _np_transitive_closure(rel)


def bound_table(leq, lower: bool):
    leq = np.ascontiguousarray(leq, dtype=np.bool_)
    return _nb_bound_table(leq, lower) if HAVE_NUMBA else _np_bound_table(leq, lower)


def commutator(meet, join, ortho, elems, zero: int, one: int) -> int:
    elems = _i64(elems)
    if HAVE_NUMBA:
        return int(_nb_commutator(meet, join, ortho, elems, zero, one))
    return _np_commutator(meet, join, ortho, elems, zero, one)


def vector_step(meet, join, v, d, zero: int):
    v, d = _i64(v), _i64(d)
    return _nb_vector_step(meet, join, v, d, zero) if HAVE_NUMBA else _np_vector_step(meet, join, v, d, zero)


def path_join(meet, join, init, term, word_delta, zero: int) -> int:
    init, term, word_delta = _i64(init), _i64(term), _i64(word_delta)
    if HAVE_NUMBA:
        return int(_nb_path_join(meet, join, init, term, word_delta, zero))
    return _np_path_join(meet, join, init, term, word_delta, zero)


def commutes_table(meet, join, ortho):
    return _nb_commutes_table(meet, join, ortho) if HAVE_NUMBA else _np_commutes_table(meet, join, ortho)


def distributive_violation(meet, join):
    f = _nb_distributive_violation if HAVE_NUMBA else _np_distributive_violation
    return tuple(int(x) for x in f(meet, join))


def orthomodular_violation(leq, meet, join, ortho):
    f = _nb_orthomodular_violation if HAVE_NUMBA else _np_orthomodular_violation
    return tuple(int(x) for x in f(leq, meet, join, ortho))


def join_reduce(join, arr, zero: int) -> int:
    return _np_join_reduce(join, arr, zero)
