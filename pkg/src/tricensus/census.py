"""Cycle census: triangles, 4-cycles and their edge-diamond/separating split.

A 4-cycle is a cycle subgraph, so a 4-set inducing K4 carries three of
them.  Cycles are reported as normalised vertex quadruples
``(c0, c1, c2, c3)`` with ``c0`` the smallest vertex and ``c1 < c3``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .embed import CanonicalCode, Triangulation, face_apexes, is_vertex_cut

Cycle4 = tuple[int, int, int, int]


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex counts per degree; ``profile[k]`` is n_k (0 when absent)."""

    n: int
    counts: dict[int, int]

    def __post_init__(self) -> None:
        assert sum(self.counts.values()) == self.n
        assert sum(k * c for k, c in self.counts.items()) == 6 * self.n - 12

    def __getitem__(self, k: int) -> int:
        return self.counts.get(k, 0)

    @property
    def min_degree(self) -> int:
        return min(self.counts)

    @property
    def max_degree(self) -> int:
        return max(self.counts)


@dataclass(frozen=True)
class CycleCensus:
    n: int
    c3: int
    c4: int
    c4_diamond: int
    c4_separating: int
    per_vertex_c4: tuple[int, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "c3": self.c3,
            "c4": self.c4,
            "c4_diamond": self.c4_diamond,
            "c4_separating": self.c4_separating,
            "per_vertex_c4": list(self.per_vertex_c4),
        }


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    g_value: int
    minimizer_count: int
    minimizer_codes: tuple[CanonicalCode, ...]


def normalise_cycle(c: tuple[int, int, int, int]) -> Cycle4:
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if c[1] > c[3]:
        c = (c[0], c[3], c[2], c[1])
    return c  # type: ignore[return-value]


def count_4cycles(T: Triangulation) -> int:
    """Half the sum over vertex pairs of C(common neighbours, 2)."""
    adj = T.adjmask
    total = 0
    for u in range(T.n):
        for v in range(u + 1, T.n):
            c = (adj[u] & adj[v]).bit_count()
            total += c * (c - 1) // 2
    return total // 2


def count_triangles(T: Triangulation) -> int:
    adj = T.adjmask
    return sum((adj[u] & adj[v]).bit_count() for u, v in T.edges()) // 3


def count_cycles_brute(T: Triangulation, k: int) -> int:
    """Count k-cycles (k = 3 or 4) by scanning every k-subset.

    For four vertices the three possible Hamiltonian cycles are each
    checked edge by edge.
    """
    e = T.has_edge
    if k == 3:
        return sum(e(a, b) and e(b, c) and e(a, c) for a, b, c in combinations(range(T.n), 3))
    if k != 4:
        raise ValueError("only k = 3 and k = 4 are supported")
    total = 0
    for p, q, r, s in combinations(range(T.n), 4):
        for w, x, y, z in ((p, q, r, s), (p, q, s, r), (p, r, q, s)):
            if e(w, x) and e(x, y) and e(y, z) and e(z, w):
                total += 1
    return total


def four_cycles(T: Triangulation) -> list[Cycle4]:
    """Every 4-cycle once, sorted."""
    adj = T.adjmask
    found = set()
    for u in range(T.n):
        for v in range(u + 1, T.n):
            common = adj[u] & adj[v]
            if common.bit_count() < 2:
                continue
            cs = [x for x in range(T.n) if common >> x & 1]
            for a, b in combinations(cs, 2):
                found.add(normalise_cycle((u, a, v, b)))
    return sorted(found)


def cycles_through_vertex(T: Triangulation, v: int, cycles: list[Cycle4] | None = None) -> int:
    if cycles is None:
        cycles = four_cycles(T)
    return sum(v in c for c in cycles)


def edge_diamond(T: Triangulation, u: int, v: int) -> Cycle4 | None:
    """The 4-cycle ``u-a-v-b`` left when edge ``uv`` is deleted.

    ``a`` and ``b`` are the apexes of the two faces on ``uv``; returns None
    if they coincide, which a simple triangulation never allows.
    """
    a, b = face_apexes(T, u, v)
    if a == b:
        return None
    return normalise_cycle((u, a, v, b))


def diamonds(T: Triangulation) -> dict[tuple[int, int], Cycle4 | None]:
    return {(u, v): edge_diamond(T, u, v) for u, v in T.edges()}


def separating_4cycles(T: Triangulation, cycles: list[Cycle4] | None = None) -> list[Cycle4]:
    if cycles is None:
        cycles = four_cycles(T)
    cuts: dict[frozenset[int], bool] = {}
    out = []
    for c in cycles:
        key = frozenset(c)
        if key not in cuts:
            cuts[key] = is_vertex_cut(T, key)
        if cuts[key]:
            out.append(c)
    return out


def separating_triangles(T: Triangulation) -> list[tuple[int, int, int]]:
    adj = T.adjmask
    out = []
    for u, v in T.edges():
        common = adj[u] & adj[v]
        for w in range(v + 1, T.n):
            if common >> w & 1 and is_vertex_cut(T, (u, v, w)):
                out.append((u, v, w))
    return out


def degree_profile(T: Triangulation) -> DegreeProfile:
    return DegreeProfile(T.n, dict(sorted(Counter(T.degrees).items())))


def census(T: Triangulation) -> CycleCensus:
    cycles = four_cycles(T)
    diamond_set = {d for d in diamonds(T).values() if d is not None}
    return CycleCensus(
        n=T.n,
        c3=count_triangles(T),
        c4=len(cycles),
        c4_diamond=sum(c in diamond_set for c in cycles),
        c4_separating=len(separating_4cycles(T, cycles)),
        per_vertex_c4=tuple(cycles_through_vertex(T, v, cycles) for v in range(T.n)),
    )
