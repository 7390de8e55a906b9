"""Embedded sphere triangulations stored as rotation systems.

A rotation lists, for every vertex, its neighbours in clockwise order.
Faces are traced with one corner rule: from the directed edge ``(u, v)``
the next edge is ``(v, w)`` where ``w`` immediately precedes ``u`` in the
rotation of ``v``.  Reversing every rotation gives the mirror embedding,
which the canonical code identifies with the original.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import (
    Disconnected,
    InducedCycleBroken,
    NonTriangularFace,
    NotSimple,
    NotSymmetric,
    TriangulationError,
    WrongEdgeCount,
)

Face = tuple[int, int, int]


class CanonicalCode(bytes):
    """Labeling- and orientation-invariant fingerprint of a triangulation.

    The bytes are the planar_code record of the canonically relabeled
    graph: vertex count, then each 1-based rotation closed by a 0 byte.
    Ordinary byte comparison gives the catalog order.
    """

    @property
    def n(self) -> int:
        return self[0]

    def to_triangulation(self) -> Triangulation:
        return Triangulation.from_code(self)

    def __repr__(self) -> str:
        return f"CanonicalCode(n={self.n}, {self.hex()})"


@dataclass(frozen=True, eq=True)
class Triangulation:
    """A maximal planar graph with a fixed sphere embedding.

    Construction always runs :func:`validate`; an instance can be relied
    on to satisfy ``e = 3n - 6`` with ``2n - 4`` triangular faces.
    """

    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        _check(self.rotation)

    @classmethod
    def from_code(cls, code: bytes) -> Triangulation:
        n = code[0]
        rot: list[tuple[int, ...]] = []
        cur: list[int] = []
        for b in code[1:]:
            if b == 0:
                rot.append(tuple(cur))
                cur = []
            else:
                cur.append(b - 1)
        if len(rot) != n or cur:
            raise TriangulationError("code does not describe n rotations")
        return cls(tuple(rot))

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rotation)

    @cached_property
    def adjmask(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an int bitmask."""
        return tuple(sum(1 << u for u in r) for r in self.rotation)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjmask[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, r in enumerate(self.rotation) for v in r if u < v]

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Dense ``(nbr, deg)`` arrays in the layout the kernels expect."""
        n = self.n
        nbr = np.full((n, n), -1, dtype=np.int32)
        for v, r in enumerate(self.rotation):
            nbr[v, : len(r)] = r
        return nbr, np.array(self.degrees, dtype=np.int32)

    @cached_property
    def code(self) -> CanonicalCode:
        return canonical_code(self)


def _successor(rotation: Sequence[Sequence[int]], u: int, v: int) -> int:
    rv = rotation[v]
    return rv[rv.index(u) - 1]


def _check(rotation: tuple[tuple[int, ...], ...]) -> None:
    n = len(rotation)
    if n < 4:
        raise TriangulationError(f"need at least 4 vertices, got {n}")
    for v, r in enumerate(rotation):
        for u in r:
            if not 0 <= u < n:
                raise NotSimple(f"vertex {v} lists out-of-range neighbour {u}")
        if v in r:
            raise NotSimple(f"self-loop at vertex {v}")
        if len(set(r)) != len(r):
            raise NotSimple(f"repeated neighbour in rotation of vertex {v}")
    sets = [set(r) for r in rotation]
    for v, r in enumerate(rotation):
        for u in r:
            if v not in sets[u]:
                raise NotSymmetric(f"{u} is in N({v}) but {v} is not in N({u})")
    seen = {0}
    stack = [0]
    while stack:
        for u in rotation[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != n:
        raise Disconnected(f"only {len(seen)} of {n} vertices reachable from 0")
    for face in _trace_faces(rotation):
        if len(face) != 3:
            raise NonTriangularFace(f"face {face} has length {len(face)}")
    e = sum(len(r) for r in rotation) // 2
    if e != 3 * n - 6:
        raise WrongEdgeCount(f"e = {e}, expected 3n - 6 = {3 * n - 6}")


def _trace_faces(rotation: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    visited: set[tuple[int, int]] = set()
    out = []
    for u, r in enumerate(rotation):
        for v in r:
            if (u, v) in visited:
                continue
            face = []
            a, b = u, v
            while (a, b) not in visited:
                visited.add((a, b))
                face.append(a)
                a, b = b, _successor(rotation, a, b)
            out.append(tuple(face))
    return out


def validate(raw_rotation: Sequence[Sequence[int]]) -> Triangulation:
    """Build a :class:`Triangulation`, checking every structural invariant.

    Raises:
        NotSimple: loop, repeated or out-of-range neighbour.
        NotSymmetric: ``u`` lists ``v`` but not vice versa.
        Disconnected: some vertex unreachable.
        NonTriangularFace: the corner rule traces a face of length != 3.
        WrongEdgeCount: all faces are triangles but ``e != 3n - 6``.
    """
    return Triangulation(tuple(tuple(int(u) for u in r) for r in raw_rotation))


def faces(T: Triangulation) -> list[Face]:
    """All ``2n - 4`` faces; every directed edge lies on exactly one."""
    return [tuple(f) for f in _trace_faces(T.rotation)]  # type: ignore[misc]


def face_apexes(T: Triangulation, u: int, v: int) -> tuple[int, int]:
    """Third vertices of the faces on the left and right of ``u -> v``."""
    ru = T.rotation[u]
    i = ru.index(v)
    return ru[i - 1], ru[(i + 1) % len(ru)]


def neighborhood_cycle(T: Triangulation, v: int) -> tuple[int, ...]:
    cyc = T.rotation[v]
    for i, x in enumerate(cyc):
        y = cyc[(i + 1) % len(cyc)]
        if not T.has_edge(x, y):
            raise InducedCycleBroken(f"{x} and {y} consecutive around {v} but not adjacent")
    return cyc


def canonical_code(T: Triangulation) -> CanonicalCode:
    """Least rooted breadth-first serialization over all 4e roots.

    A root is a directed edge together with an orientation (rotations as
    stored, or all reversed).  Vertices are relabeled in first-visit order;
    each vertex's list starts at the neighbour it was discovered from.
    """
    nbr, deg = T.arrays
    out = np.empty(_kernels.code_length(T.n), dtype=np.uint8)
    _kernels.canon_into(nbr, deg, T.n, out)
    return CanonicalCode(out.tobytes())


def relabel(T: Triangulation, perm: Sequence[int]) -> Triangulation:
    """Rename vertex ``v`` to ``perm[v]``."""
    rot: list[tuple[int, ...]] = [()] * T.n
    for v, r in enumerate(T.rotation):
        rot[perm[v]] = tuple(perm[u] for u in r)
    return Triangulation(tuple(rot))


def mirror(T: Triangulation) -> Triangulation:
    return Triangulation(tuple(r[::-1] for r in T.rotation))


def rotate_lists(T: Triangulation, shifts: Sequence[int]) -> Triangulation:
    """Same embedding with each cyclic order started at a different entry."""
    return Triangulation(
        tuple(r[s % len(r):] + r[: s % len(r)] for r, s in zip(T.rotation, shifts))
    )


def is_vertex_cut(T: Triangulation, vertices) -> bool:
    """True iff deleting ``vertices`` leaves a disconnected non-empty graph."""
    removed = 0
    for v in vertices:
        removed |= 1 << v
    rest = ((1 << T.n) - 1) & ~removed
    if rest == 0:
        return False
    adj = T.adjmask
    seen = frontier = rest & -rest
    while frontier:
        reach = 0
        f = frontier
        while f:
            low = f & -f
            reach |= adj[low.bit_length() - 1]
            f ^= low
        frontier = reach & rest & ~seen
        seen |= frontier
    return seen != rest


def vertex_connectivity(T: Triangulation) -> int:
    """Minimum vertex cut size, found by scanning all 3- and 4-subsets."""
    if T.n < 5:
        raise ValueError("vertex connectivity is only defined here for n >= 5")
    nbr, deg = T.arrays
    return int(_kernels.connectivity(nbr, deg, T.n))


def k4() -> Triangulation:
    return validate([(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)])

