"""Isomorph-free enumeration of sphere triangulations.

Two independent routes produce the catalog of n-vertex classes:

* :func:`enumerate_triangulations` grows level by level from K4 by vertex
  splitting and dedups each level by canonical code.  Completeness follows
  from every triangulation other than K4 having a contractible edge.
* :func:`flip_closure` walks the diagonal-flip graph from one seed, which
  reaches every class because that graph is connected for fixed n.

The per-level work runs on canonical-code arrays through compiled kernels;
:func:`vertex_split` and :func:`diagonal_flip` are the readable reference
versions the kernels are tested against.
"""

from __future__ import annotations

import logging
import warnings
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _kernels
from .embed import CanonicalCode, Triangulation, face_apexes, k4, validate
from .errors import InvalidSplit, LimitExceeded, NotFlippable

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 14
HARD_MAX_N = 15
DEFAULT_CLASS_BUDGET = 400_000

# parents per kernel call; keeps the raw child array of one chunk small
_CHUNK = 2048

_levels: dict[int, tuple[CanonicalCode, ...]] = {}


def vertex_split(T: Triangulation, w: int, a: int, b: int) -> Triangulation:
    """Replace ``w`` by adjacent ``w`` and ``n``, both joined to ``a`` and ``b``.

    ``w`` keeps the rotation arc running clockwise from the earlier of
    ``a``/``b`` (by position in the rotation of ``w``) to the later one;
    the new vertex ``n`` takes the complementary arc.
    """
    r = T.rotation[w]
    if a == b or a not in r or b not in r:
        raise InvalidSplit(f"{a} and {b} must be distinct neighbours of {w}")
    i, j = sorted((r.index(a), r.index(b)))
    a, b = r[i], r[j]
    new = T.n
    rot = [list(x) for x in T.rotation]
    rot[w] = list(r[i : j + 1]) + [new]
    rot.append(list(r[j:] + r[: i + 1]) + [w])
    for y in r[j + 1 :] + r[:i]:
        ry = rot[y]
        ry[ry.index(w)] = new
    ra = rot[a]
    ra.insert(ra.index(w) + 1, new)
    rb = rot[b]
    rb.insert(rb.index(w), new)
    return validate(rot)


def expand_children(T: Triangulation) -> list[Triangulation]:
    """Every vertex split of ``T``; isomorphic duplicates are kept."""
    out = []
    for w, r in enumerate(T.rotation):
        for i in range(len(r)):
            for j in range(i + 1, len(r)):
                out.append(vertex_split(T, w, r[i], r[j]))
    return out


def _insert_between(rot: list[int], x: int, y: int, z: int) -> None:
    d = len(rot)
    px = rot.index(x)
    if rot[(px + 1) % d] == y:
        rot.insert(px + 1, z)
    else:
        rot.insert(rot.index(y) + 1, z)


def diagonal_flip(T: Triangulation, u: int, v: int) -> Triangulation:
    """Swap edge ``uv`` for the other diagonal ``ab`` of its two faces."""
    if not T.has_edge(u, v):
        raise NotFlippable(f"{u}{v} is not an edge")
    a, b = face_apexes(T, u, v)
    if a == b or T.has_edge(a, b):
        raise NotFlippable(f"apexes {a}, {b} of edge {u}{v} are already adjacent")
    rot = [list(x) for x in T.rotation]
    rot[u].remove(v)
    rot[v].remove(u)
    _insert_between(rot[a], u, v, b)
    _insert_between(rot[b], u, v, a)
    return validate(rot)


def stacked(n: int) -> Triangulation:
    """K4 followed by ``n - 4`` insertions of a degree-3 vertex into a face."""
    T = k4()
    while T.n < n:
        w = T.n - 1
        r = T.rotation[w]
        T = vertex_split(T, w, r[0], r[1])
    return T


def _as_array(codes: Sequence[bytes]) -> np.ndarray:
    width = len(codes[0])
    return np.frombuffer(b"".join(codes), dtype=np.uint8).reshape(len(codes), width)


def _rows(arr: np.ndarray) -> list[bytes]:
    if len(arr) == 0:
        return []
    arr = np.unique(arr, axis=0)
    blob = arr.tobytes()
    w = arr.shape[1]
    return [blob[k : k + w] for k in range(0, len(blob), w)]


def _fan_out(kernel, codes: Sequence[bytes], threads: int) -> Iterator[list[bytes]]:
    """Run ``kernel`` over chunks of ``codes``; yields chunk results in order."""
    arr = _as_array(codes)
    chunks = [arr[k : k + _CHUNK] for k in range(0, len(arr), _CHUNK)]

    def work(chunk: np.ndarray) -> list[bytes]:
        return _rows(kernel(chunk))

    if threads <= 1:
        yield from map(work, chunks)
    else:
        with ThreadPoolExecutor(threads) as pool:
            yield from pool.map(work, chunks)


def _check_n(n: int, max_n: int) -> None:
    if n < 4:
        raise ValueError(f"triangulations need n >= 4, got {n}")
    if max_n > HARD_MAX_N:
        raise LimitExceeded(f"max_n is capped at {HARD_MAX_N}")
    if n > max_n:
        raise LimitExceeded(f"n = {n} exceeds configured max_n = {max_n}")
    if max_n > DEFAULT_MAX_N and n > DEFAULT_MAX_N:
        warnings.warn(
            f"n = {n} needs several GB and hours; raise max_n only deliberately",
            ResourceWarning,
            stacklevel=3,
        )


def catalog_codes(
    n: int, *, max_n: int = DEFAULT_MAX_N, threads: int = 1
) -> tuple[CanonicalCode, ...]:
    """Canonical codes of all n-vertex classes in ascending byte order.

    Completed levels are memoised for the lifetime of the process.
    """
    _check_n(n, max_n)
    if n in _levels:
        return _levels[n]
    k = max((m for m in _levels if m < n), default=None)
    if k is None:
        k, level = 4, (k4().code,)
        _levels[4] = level
    else:
        level = _levels[k]
    while k < n:
        seen: set[bytes] = set()
        for rows in _fan_out(_kernels.expand_codes, level, threads):
            seen.update(rows)
        k += 1
        level = tuple(CanonicalCode(c) for c in sorted(seen))
        _levels[k] = level
        log.info("n=%d: %d classes", k, len(level))
    return level


def clear_cache() -> None:
    _levels.clear()


def enumerate_triangulations(
    n: int, *, max_n: int = DEFAULT_MAX_N, threads: int = 1
) -> Iterator[Triangulation]:
    """One validated representative per class, in ascending canonical code order."""
    for code in catalog_codes(n, max_n=max_n, threads=threads):
        yield Triangulation.from_code(code)


def flip_closure(
    seed: Triangulation,
    *,
    budget: int = DEFAULT_CLASS_BUDGET,
    threads: int = 1,
) -> frozenset[CanonicalCode]:
    """All classes reachable from ``seed`` by diagonal flips (breadth first)."""
    seen: set[bytes] = {seed.code}
    frontier: list[bytes] = [seed.code]
    while frontier:
        fresh: set[bytes] = set()
        for rows in _fan_out(_kernels.flip_codes, frontier, threads):
            fresh.update(c for c in rows if c not in seen)
        seen |= fresh
        if len(seen) > budget:
            raise LimitExceeded(f"flip closure passed the class budget of {budget}")
        frontier = sorted(fresh)
    return frozenset(CanonicalCode(c) for c in seen)
