"""Exhaustive checkers over the catalog of triangulations.

Each checker states a precise set-theoretic claim, scans every class in
range and returns a :class:`VerificationReport` whose counterexamples are
the canonical codes of offending classes.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from . import generate
from .census import (
    DegreeProfile,
    ExtremalRecord,
    count_4cycles,
    count_cycles_brute,
    cycles_through_vertex,
    degree_profile,
    diamonds,
    four_cycles,
    separating_4cycles,
    separating_triangles,
)
from .embed import (
    CanonicalCode,
    Triangulation,
    face_apexes,
    is_vertex_cut,
    neighborhood_cycle,
    validate,
    vertex_connectivity,
)
from .errors import UnknownPredicateField

THEOREM1 = {4: 3, 5: 9, 6: 15, 7: 20, 8: 23, 9: 24, 10: 26, 11: 29, 12: 30, 13: 34, 14: 36}
MIN_SEPARATING = {9: 3, 10: 2, 11: 2, 13: 1}
ORACLE_SAMPLE = 1000
ORACLE_SEED = 20260101


@dataclass
class VerificationReport:
    claim_id: str
    n_range: tuple[int, int]
    counterexamples: list[CanonicalCode] = field(default_factory=list)
    statistics: dict[int, dict] = field(default_factory=dict)
    notes: str = ""

    @property
    def status(self) -> str:
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        d = {
            "claim_id": self.claim_id,
            "n_range": list(self.n_range),
            "status": self.status,
            "counterexamples": [c.hex() for c in self.counterexamples],
            "statistics": {str(n): s for n, s in sorted(self.statistics.items())},
        }
        if self.notes:
            d["notes"] = self.notes
        return d


@dataclass
class _Facts:
    """Cheap per-class scalars, aligned with the catalog order."""

    codes: tuple[CanonicalCode, ...]
    c4: list[int]
    kappa: list[int]
    profiles: list[DegreeProfile]


class Catalog:
    """Source of per-n class lists plus memoised per-class facts.

    The default pulls from :func:`generate.catalog_codes`; pass ``codes``
    to check an explicit (possibly tampered) catalog instead.
    """

    def __init__(
        self,
        codes: Mapping[int, Sequence[bytes]] | None = None,
        *,
        max_n: int = generate.DEFAULT_MAX_N,
        threads: int = 1,
    ):
        self._explicit = (
            {n: tuple(CanonicalCode(c) for c in cs) for n, cs in codes.items()}
            if codes is not None
            else None
        )
        self.max_n = max_n
        self.threads = threads
        self._facts: dict[int, _Facts] = {}

    def codes(self, n: int) -> tuple[CanonicalCode, ...]:
        if self._explicit is not None:
            return self._explicit.get(n, ())
        return generate.catalog_codes(n, max_n=self.max_n, threads=self.threads)

    def graphs(self, n: int) -> Iterable[tuple[CanonicalCode, Triangulation]]:
        for c in self.codes(n):
            yield c, Triangulation.from_code(c)

    def facts(self, n: int) -> _Facts:
        if n not in self._facts:
            codes = self.codes(n)
            c4, kappa, profiles = [], [], []
            for c in codes:
                T = Triangulation.from_code(c)
                c4.append(count_4cycles(T))
                kappa.append(vertex_connectivity(T) if n >= 5 else 3)
                profiles.append(degree_profile(T))
            self._facts[n] = _Facts(codes, c4, kappa, profiles)
        return self._facts[n]


_default: Catalog | None = None


def default_catalog() -> Catalog:
    global _default
    if _default is None:
        _default = Catalog()
    return _default


def _cat(catalog: Catalog | None) -> Catalog:
    return catalog if catalog is not None else default_catalog()


def min_c4(n: int, catalog: Catalog | None = None) -> ExtremalRecord:
    f = _cat(catalog).facts(n)
    g = min(f.c4)
    mins = tuple(c for c, x in zip(f.codes, f.c4) if x == g)
    return ExtremalRecord(n=n, g_value=g, minimizer_count=len(mins), minimizer_codes=mins)


def verify_theorem1(max_n: int, catalog: Catalog | None = None) -> VerificationReport:
    """Observed g(n, C4) equals the table value for every 4 <= n <= max_n."""
    cat = _cat(catalog)
    rep = VerificationReport("theorem1", (4, max_n))
    for n in range(4, max_n + 1):
        f = cat.facts(n)
        rec = min_c4(n, cat)
        rep.statistics[n] = {
            "catalog_size": len(f.codes),
            "g": rec.g_value,
            "expected": THEOREM1[n],
            "minimizer_count": rec.minimizer_count,
        }
        if rec.g_value != THEOREM1[n]:
            rep.counterexamples.extend(rec.minimizer_codes)
    return rep


def _has_degree3(T: Triangulation) -> bool:
    return 3 in T.degrees


def _has_chord(T: Triangulation, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    for i in range(k):
        for j in range(i + 2, k):
            if (i, j) != (0, k - 1) and T.has_edge(cycle[i], cycle[j]):
                return True
    return False


def lemma1_holds(T: Triangulation) -> bool | None:
    """None when the hypothesis (a vertex of degree n - 1) fails."""
    if max(T.degrees) != T.n - 1:
        return None
    return _has_degree3(T)


def lemma2_holds(T: Triangulation) -> bool | None:
    hyp = any(
        d == T.n - 2 and _has_chord(T, neighborhood_cycle(T, v)) for v, d in enumerate(T.degrees)
    )
    if not hyp:
        return None
    return _has_degree3(T)


def lemma3_holds(T: Triangulation) -> bool | None:
    fours = [frozenset(neighborhood_cycle(T, v)) for v, d in enumerate(T.degrees) if d == 4]
    if len(fours) < 2:
        return None
    return len(set(fours)) == len(fours)


_LEMMAS: dict[int, tuple[int, Callable[[Triangulation], bool | None]]] = {
    1: (4, lemma1_holds),
    2: (6, lemma2_holds),
    3: (7, lemma3_holds),
}


def verify_lemma(which: int, max_n: int, catalog: Catalog | None = None) -> VerificationReport:
    lo, pred = _LEMMAS[which]
    cat = _cat(catalog)
    rep = VerificationReport(f"lemma{which}", (lo, max_n))
    for n in range(lo, max_n + 1):
        hyp = 0
        for code, T in cat.graphs(n):
            ok = pred(T)
            if ok is None:
                continue
            hyp += 1
            if not ok:
                rep.counterexamples.append(code)
        rep.statistics[n] = {"catalog_size": len(cat.codes(n)), "hypothesis_holds": hyp}
    return rep


def verify_degree_identities(n: int, catalog: Catalog | None = None) -> VerificationReport:
    """Degree-count identities for classes with min degree >= 4 and bounded max degree."""
    if n not in (9, 10, 11):
        raise ValueError("identities are stated for n = 9, 10, 11")
    max_deg = 7 if n == 11 else 6
    f = _cat(catalog).facts(n)
    rep = VerificationReport(f"identities.n{n}", (n, n))
    hyp = 0
    for code, p in zip(f.codes, f.profiles):
        if p.min_degree < 4 or p.max_degree > max_deg:
            continue
        hyp += 1
        if n == 9:
            ok = p[6] == p[4] - 3 and p[4] >= 3
        elif n == 10:
            ok = p[6] == p[4] - 2 and p[4] >= 2
        else:
            ok = p[6] + 2 * p[7] == p[4] - 1 and (p[7] == 0 or p[4] >= 3)
        if not ok:
            rep.counterexamples.append(code)
    rep.statistics[n] = {"catalog_size": len(f.codes), "hypothesis_holds": hyp}
    return rep


def interior_pair(T: Triangulation, v: int) -> tuple[int, ...]:
    """Vertices outside the closed neighbourhood of ``v``."""
    closed = set(T.rotation[v]) | {v}
    return tuple(u for u in range(T.n) if u not in closed)


def claim8_adjacent_pair(T: Triangulation) -> bool:
    """Min degree >= 4 and some degree-5 vertex whose two outside vertices are adjacent."""
    if min(T.degrees) < 4:
        return False
    for v, d in enumerate(T.degrees):
        if d == 5:
            pair = interior_pair(T, v)
            if len(pair) == 2 and T.has_edge(*pair):
                return True
    return False


def _separating_4cycle_via_triangle(T: Triangulation, tri: tuple[int, int, int]) -> bool:
    """Every big side of a separating triangle yields a separating x1-z-x2-x3."""
    removed = set(tri)
    rest = [u for u in range(T.n) if u not in removed]
    sides: list[set[int]] = []
    todo = set(rest)
    while todo:
        s = todo.pop()
        comp, stack = {s}, [s]
        while stack:
            for u in T.rotation[stack.pop()]:
                if u in todo:
                    todo.discard(u)
                    comp.add(u)
                    stack.append(u)
        sides.append(comp)
    for side in sides:
        if len(side) < 2:
            continue
        for x1, x2, x3 in ((tri[0], tri[1], tri[2]), (tri[1], tri[2], tri[0]), (tri[0], tri[2], tri[1])):
            z = next(a for a in face_apexes(T, x1, x2) if a in side)
            if not is_vertex_cut(T, (x1, z, x2, x3)):
                return False
    return True


def _subclaim(cid: str, lo: int, hi: int, notes: str = "") -> VerificationReport:
    return VerificationReport(f"claims.{cid}", (lo, hi), notes=notes)


def verify_structural_claims(max_n: int, catalog: Catalog | None = None) -> list[VerificationReport]:
    """Sub-claims (a)-(g); each needs the part of the range that max_n covers."""
    cat = _cat(catalog)
    out = []

    if max_n >= 7:
        r = _subclaim("a", 7, 7)
        f = cat.facts(7)
        hits = [c for c, p in zip(f.codes, f.profiles) if p.min_degree == 4]
        r.statistics[7] = {"min_degree_4_classes": len(hits)}
        if len(hits) != 1:
            r.counterexamples.extend(hits or f.codes)
        out.append(r)

    if max_n >= 8:
        r = _subclaim(
            "b",
            8,
            8,
            notes="interpretation: min degree >= 4 and a degree-5 vertex whose two "
            "non-neighbours are adjacent; exactly one such class, with c4 = 23",
        )
        hits = [(c, T) for c, T in cat.graphs(8) if claim8_adjacent_pair(T)]
        c4s = [count_4cycles(T) for _, T in hits]
        r.statistics[8] = {"matching_classes": len(hits), "c4": c4s}
        if len(hits) != 1 or c4s != [23]:
            r.counterexamples.extend(c for c, _ in hits) or r.counterexamples.extend(cat.codes(8))
        out.append(r)

    if max_n >= 11:
        r = _subclaim("c", 11, 11)
        f = cat.facts(11)
        bad = [c for c, p in zip(f.codes, f.profiles) if p.counts == {4: 1, 5: 10}]
        r.statistics[11] = {"classes_with_degrees_4x1_5x10": len(bad)}
        r.counterexamples.extend(bad)
        out.append(r)

    r = _subclaim("d", 4, max_n)
    for n in range(4, max_n + 1):
        f = cat.facts(n)
        k = sum(p.min_degree == 5 for p in f.profiles)
        r.statistics[n] = {"min_degree_5_classes": k}
        if n < 12 and k:
            r.counterexamples.extend(c for c, p in zip(f.codes, f.profiles) if p.min_degree == 5)
        if n == 12 and not k:
            r.counterexamples.extend(f.codes)
    out.append(r)

    r = _subclaim("e", 5, max_n)
    for n in range(5, max_n + 1):
        f = cat.facts(n)
        five = [c for c, k in zip(f.codes, f.kappa) if k == 5]
        r.statistics[n] = {"five_connected_classes": len(five)}
        if n in (12, 14):
            if not five:
                r.counterexamples.extend(f.codes)
        else:
            r.counterexamples.extend(five)
    out.append(r)

    if max_n >= 13:
        r = _subclaim("f", 13, 13)
        tri_count = 0
        for code, T in cat.graphs(13):
            tris = separating_triangles(T)
            tri_count += len(tris)
            if not all(_separating_4cycle_via_triangle(T, t) for t in tris):
                r.counterexamples.append(code)
        r.statistics[13] = {"separating_triangles": tri_count}
        out.append(r)

    r = _subclaim("g", 7, max_n, notes="separating 4-cycles >= number of degree-4 vertices")
    for n in range(7, max_n + 1):
        if n > 13:
            break
        checked = 0
        for code, T in cat.graphs(n):
            n4 = T.degrees.count(4)
            if not n4:
                continue
            checked += 1
            seps = {frozenset(c) for c in separating_4cycles(T)}
            if not all(frozenset(T.rotation[v]) in seps for v in range(n) if T.degree(v) == 4) or (
                len(seps) < n4
            ):
                r.counterexamples.append(code)
        r.statistics[n] = {"classes_with_degree_4": checked}
    out.append(r)
    return out


def delete_degree3(T: Triangulation, v: int) -> Triangulation:
    """Remove a degree-3 vertex; vertices above ``v`` shift down by one."""
    if T.degree(v) != 3:
        raise ValueError(f"vertex {v} has degree {T.degree(v)}, not 3")
    rot = [
        tuple(u - (u > v) for u in r if u != v) for w, r in enumerate(T.rotation) if w != v
    ]
    return validate(rot)


def verify_bounds(max_n: int, catalog: Catalog | None = None) -> VerificationReport:
    """Edge-diamond lower bound, cut dichotomy, degree-3 count and 5-connected exactness."""
    cat = _cat(catalog)
    rep = VerificationReport("bounds", (5, max_n))
    for n in range(5, max_n + 1):
        f = cat.facts(n)
        diamonds_total = 0
        for (code, T), kappa in zip(cat.graphs(n), f.kappa):
            cycles = four_cycles(T)
            dmap = diamonds(T)
            dset = set(dmap.values())
            ok = None not in dset and len(dset) == len(dmap) >= 3 * n - 6
            ok = ok and dset <= set(cycles)
            others = [c for c in cycles if c not in dset]
            ok = ok and all(is_vertex_cut(T, c) for c in others)
            ok = ok and all(
                cycles_through_vertex(T, v, cycles) >= 6 for v in range(n) if T.degree(v) == 3
            )
            if kappa == 5:
                ok = ok and len(cycles) == 3 * n - 6 and not separating_4cycles(T, cycles)
            diamonds_total += len(dset)
            if not ok:
                rep.counterexamples.append(code)
        rep.statistics[n] = {"catalog_size": len(f.codes), "diamond_cycles": diamonds_total}
    return rep


def verify_recursion(max_n: int, catalog: Catalog | None = None) -> VerificationReport:
    """Deleting a degree-3 vertex: C4(G) = C4(G - v) + C4(G, v) >= g(n - 1) + 6."""
    cat = _cat(catalog)
    rep = VerificationReport("recursion", (5, max_n))
    for n in range(5, max_n + 1):
        g_prev = min_c4(n - 1, cat).g_value
        checked = 0
        for code, T in cat.graphs(n):
            cycles = None
            bad = False
            for v in (v for v in range(n) if T.degree(v) == 3):
                if cycles is None:
                    cycles = four_cycles(T)
                checked += 1
                through = cycles_through_vertex(T, v, cycles)
                rest = count_4cycles(delete_degree3(T, v))
                if len(cycles) != rest + through or len(cycles) < g_prev + 6 or through < 6:
                    bad = True
            if bad:
                rep.counterexamples.append(code)
        rep.statistics[n] = {"degree3_deletions": checked, "g_prev": g_prev}
    return rep


def verify_minimizers(max_n: int, catalog: Catalog | None = None) -> VerificationReport:
    cat = _cat(catalog)
    ns = [n for n in MIN_SEPARATING if n <= max_n]
    rep = VerificationReport("minimizers", (min(ns, default=9), max_n))
    for n in ns:
        rec = min_c4(n, cat)
        seps = []
        for code in rec.minimizer_codes:
            s = len(separating_4cycles(Triangulation.from_code(code)))
            seps.append(s)
            if rec.g_value != THEOREM1[n] or s < MIN_SEPARATING[n]:
                rep.counterexamples.append(code)
        rep.statistics[n] = {"g": rec.g_value, "separating_per_minimizer": seps}
    return rep


def verify_generator_oracle(
    max_n: int,
    catalog: Catalog | None = None,
    threads: int = 1,
    budget: int = generate.DEFAULT_CLASS_BUDGET,
) -> VerificationReport:
    """Split-enumeration and flip closure from a stacked seed give the same code sets."""
    cat = _cat(catalog)
    rep = VerificationReport("oracle.generators", (4, max_n))
    for n in range(4, max_n + 1):
        mine = set(cat.codes(n))
        other = generate.flip_closure(generate.stacked(n), threads=threads, budget=budget)
        diff = sorted(mine ^ other)
        rep.statistics[n] = {"enumerate": len(mine), "flip_closure": len(other)}
        rep.counterexamples.extend(CanonicalCode(c) for c in diff)
    return rep


def verify_counting_oracle(
    max_n: int, catalog: Catalog | None = None, sample: int = ORACLE_SAMPLE
) -> VerificationReport:
    """Pair formula vs subset scan: every class for n <= 9, a seeded sample above."""
    cat = _cat(catalog)
    rng = random.Random(ORACLE_SEED)
    rep = VerificationReport("oracle.counting", (4, max_n))
    for n in range(4, max_n + 1):
        codes = cat.codes(n)
        chosen = codes if n <= 9 or len(codes) <= sample else rng.sample(codes, sample)
        for c in chosen:
            T = Triangulation.from_code(c)
            if count_4cycles(T) != count_cycles_brute(T, 4):
                rep.counterexamples.append(c)
        rep.statistics[n] = {"catalog_size": len(codes), "checked": len(chosen)}
    return rep


PREDICATE_FIELDS = ("min_degree", "max_degree", "degree_count", "connectivity", "c4_min", "c4_max")


def filter_triangulations(
    n: int, catalog: Catalog | None = None, **predicate
) -> list[CanonicalCode]:
    """Classes satisfying every given bound, in canonical-code order.

    ``min_degree``/``connectivity``/``c4_min`` are lower bounds,
    ``max_degree``/``c4_max`` upper bounds, and ``degree_count`` maps a
    degree k to the exact number of vertices of that degree.
    """
    unknown = set(predicate) - set(PREDICATE_FIELDS)
    if unknown:
        raise UnknownPredicateField(", ".join(sorted(unknown)))
    f = _cat(catalog).facts(n)
    lo_deg = predicate.get("min_degree")
    hi_deg = predicate.get("max_degree")
    counts = predicate.get("degree_count") or {}
    kappa = predicate.get("connectivity")
    c4_min = predicate.get("c4_min")
    c4_max = predicate.get("c4_max")
    out = []
    for code, p, k, c4 in zip(f.codes, f.profiles, f.kappa, f.c4):
        if lo_deg is not None and p.min_degree < lo_deg:
            continue
        if hi_deg is not None and p.max_degree > hi_deg:
            continue
        if any(p[d] != m for d, m in counts.items()):
            continue
        if kappa is not None and k < kappa:
            continue
        if c4_min is not None and c4 < c4_min:
            continue
        if c4_max is not None and c4 > c4_max:
            continue
        out.append(code)
    return out
