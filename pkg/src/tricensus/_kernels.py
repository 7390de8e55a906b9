"""Compiled inner loops for canonical codes, vertex splits and flips.

Graphs are passed as dense arrays: ``nbr[v, :deg[v]]`` is the clockwise
rotation of vertex ``v`` (0-based), rows padded with -1.  Canonical codes
are ``uint8`` arrays of length ``7n - 11``: the vertex count followed by
the planar_code body (1-based rotations, each closed by a 0 byte) of the
canonically relabeled graph.

Every function here is ``nogil`` so batches can be spread over threads.
"""

from __future__ import annotations

import numpy as np
from numba import njit


def code_length(n: int) -> int:
    return 7 * n - 11


@njit(cache=True, nogil=True)
def _wrap(i, d):
    if i >= d:
        return i - d
    if i < 0:
        return i + d
    return i


@njit(cache=True, nogil=True)
def canon_into(nbr, deg, n, best):
    """Write the lexicographically least rooted serialization into ``best``.

    Only roots of minimum degree are tried: the first emitted list is
    ``2, 3, ..., d + 1, 0`` so a larger root degree always loses at the
    ``d + 1``-th entry.
    """
    pos = np.full((n, n), -1, np.int32)
    mind = n
    for v in range(n):
        d = deg[v]
        if d < mind:
            mind = d
        for i in range(d):
            pos[v, nbr[v, i]] = i
    label = np.zeros(n, np.int32)
    order = np.zeros(n, np.int32)
    start = np.zeros(n, np.int32)
    best[0] = n
    have = False
    for v0 in range(n):
        if deg[v0] != mind:
            continue
        for i0 in range(deg[v0]):
            for o in (1, -1):
                label[:] = 0
                label[v0] = 1
                order[0] = v0
                start[v0] = i0
                nl = 1
                k = 1
                state = 0 if have else 1
                aborted = False
                for q in range(n):
                    x = order[q]
                    d = deg[x]
                    s = start[x]
                    for j in range(d + 1):
                        if j < d:
                            y = nbr[x, _wrap(s + o * j, d)]
                            if label[y] == 0:
                                nl += 1
                                label[y] = nl
                                order[nl - 1] = y
                                start[y] = pos[y, x]
                            val = label[y]
                        else:
                            val = 0
                        if state == 0:
                            b = best[k]
                            if val > b:
                                aborted = True
                                break
                            if val < b:
                                state = 1
                                best[k] = val
                        else:
                            best[k] = val
                        k += 1
                    if aborted:
                        break
                if not aborted:
                    have = True


@njit(cache=True, nogil=True)
def decode_into(code, nbr, deg):
    n = code[0]
    k = 1
    for v in range(n):
        c = 0
        while code[k] != 0:
            nbr[v, c] = code[k] - 1
            c += 1
            k += 1
        deg[v] = c
        k += 1


@njit(cache=True, nogil=True)
def _insert_at(cn, cd, r, q, x):
    d = cd[r]
    for t in range(d, q, -1):
        cn[r, t] = cn[r, t - 1]
    cn[r, q] = x
    cd[r] = d + 1


@njit(cache=True, nogil=True)
def _index_of(cn, cd, r, x):
    for t in range(cd[r]):
        if cn[r, t] == x:
            return t
    return -1


@njit(cache=True, nogil=True)
def _remove(cn, cd, r, x):
    d = cd[r]
    q = _index_of(cn, cd, r, x)
    for t in range(q, d - 1):
        cn[r, t] = cn[r, t + 1]
    cn[r, d - 1] = -1
    cd[r] = d - 1


@njit(cache=True, nogil=True)
def _insert_between(cn, cd, r, x, y, z):
    """Insert ``z`` into row ``r`` between the cyclically consecutive ``x``, ``y``."""
    d = cd[r]
    px = _index_of(cn, cd, r, x)
    py = _index_of(cn, cd, r, y)
    if _wrap(px + 1, d) == py:
        _insert_at(cn, cd, r, px + 1, z)
    else:
        _insert_at(cn, cd, r, py + 1, z)


@njit(cache=True, nogil=True)
def split_into(nbr, deg, n, w, i, j, cn, cd):
    """Split ``w`` along rotation positions ``i < j``; new vertex is ``n``.

    ``w`` keeps the arc ``i..j`` and the new vertex takes the arc ``j..i``.
    """
    cn[:, :] = -1
    for v in range(n):
        cd[v] = deg[v]
        for t in range(deg[v]):
            cn[v, t] = nbr[v, t]
    d = deg[w]
    a = nbr[w, i]
    b = nbr[w, j]
    c = 0
    for t in range(i, j + 1):
        cn[w, c] = nbr[w, t]
        c += 1
    cn[w, c] = n
    cd[w] = c + 1
    for t in range(c + 1, n + 1):
        cn[w, t] = -1
    c = 0
    t = j
    while True:
        cn[n, c] = nbr[w, t]
        c += 1
        if t == i:
            break
        t = _wrap(t + 1, d)
    cn[n, c] = w
    cd[n] = c + 1
    t = _wrap(j + 1, d)
    while t != i:
        y = nbr[w, t]
        cn[y, _index_of(cn, cd, y, w)] = n
        t = _wrap(t + 1, d)
    _insert_at(cn, cd, a, _index_of(cn, cd, a, w) + 1, n)
    _insert_at(cn, cd, b, _index_of(cn, cd, b, w), n)


@njit(cache=True, nogil=True)
def flip_into(nbr, deg, n, u, p, cn, cd):
    """Flip the edge from ``u`` to its ``p``-th neighbour; False if not flippable."""
    d = deg[u]
    v = nbr[u, p]
    a = nbr[u, _wrap(p - 1, d)]
    b = nbr[u, _wrap(p + 1, d)]
    if a == b:
        return False
    for t in range(deg[a]):
        if nbr[a, t] == b:
            return False
    for r in range(n):
        cd[r] = deg[r]
        for t in range(n):
            cn[r, t] = nbr[r, t]
    _remove(cn, cd, u, v)
    _remove(cn, cd, v, u)
    _insert_between(cn, cd, a, u, v, b)
    _insert_between(cn, cd, b, u, v, a)
    return True


@njit(cache=True, nogil=True)
def expand_codes(codes):
    """Canonical codes of every vertex split of every parent, in parent order."""
    B = codes.shape[0]
    n = np.int64(codes[0, 0])
    m = n + 1
    nbr = np.full((n, n), -1, np.int32)
    deg = np.zeros(n, np.int32)
    counts = np.zeros(B, np.int64)
    for g in range(B):
        decode_into(codes[g], nbr, deg)
        s = 0
        for v in range(n):
            s += deg[v] * (deg[v] - 1) // 2
        counts[g] = s
    out = np.empty((counts.sum(), 7 * m - 11), np.uint8)
    cn = np.full((m, m), -1, np.int32)
    cd = np.zeros(m, np.int32)
    r = 0
    for g in range(B):
        nbr[:, :] = -1
        decode_into(codes[g], nbr, deg)
        for w in range(n):
            for i in range(deg[w]):
                for j in range(i + 1, deg[w]):
                    split_into(nbr, deg, n, w, i, j, cn, cd)
                    canon_into(cn, cd, m, out[r])
                    r += 1
    return out


@njit(cache=True, nogil=True)
def flip_codes(codes):
    """Canonical codes of every legal flip of every graph, in graph order."""
    B = codes.shape[0]
    n = np.int64(codes[0, 0])
    e = 3 * n - 6
    out = np.empty((B * e, 7 * n - 11), np.uint8)
    keep = np.zeros(B * e, np.bool_)
    nbr = np.full((n, n), -1, np.int32)
    deg = np.zeros(n, np.int32)
    cn = np.full((n, n), -1, np.int32)
    cd = np.zeros(n, np.int32)
    r = 0
    for g in range(B):
        nbr[:, :] = -1
        decode_into(codes[g], nbr, deg)
        for u in range(n):
            for p in range(deg[u]):
                if nbr[u, p] < u:
                    continue
                if flip_into(nbr, deg, n, u, p, cn, cd):
                    canon_into(cn, cd, n, out[r])
                    keep[r] = True
                r += 1
    return out[keep]


@njit(cache=True, nogil=True)
def _separates(adj, n, removed):
    rest = ((np.int64(1) << n) - 1) & ~removed
    if rest == 0:
        return False
    seen = rest & -rest
    frontier = seen
    while frontier != 0:
        reach = np.int64(0)
        for v in range(n):
            if (frontier >> v) & 1:
                reach |= adj[v]
        frontier = reach & rest & ~seen
        seen |= frontier
    return seen != rest


@njit(cache=True, nogil=True)
def is_cut(nbr, deg, n, removed):
    adj = np.zeros(n, np.int64)
    for v in range(n):
        for t in range(deg[v]):
            adj[v] |= np.int64(1) << nbr[v, t]
    return _separates(adj, n, removed)


@njit(cache=True, nogil=True)
def connectivity(nbr, deg, n):
    """Smallest k in {3, 4} admitting a k-vertex cut, else 5."""
    adj = np.zeros(n, np.int64)
    for v in range(n):
        for t in range(deg[v]):
            adj[v] |= np.int64(1) << nbr[v, t]
    one = np.int64(1)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if _separates(adj, n, (one << a) | (one << b) | (one << c)):
                    return 3
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    m = (one << a) | (one << b) | (one << c) | (one << d)
                    if _separates(adj, n, m):
                        return 4
    return 5
