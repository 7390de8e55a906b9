from __future__ import annotations

from itertools import permutations
from pathlib import Path

import networkx as nx
import pytest

from tricensus import Triangulation, validate
from tricensus.generate import catalog_codes

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE: list[tuple[str, bool, str]] = []


def from_networkx(G: nx.Graph) -> Triangulation:
    G = nx.convert_node_labels_to_integers(G)
    ok, emb = nx.check_planarity(G)
    assert ok
    return validate([list(emb.neighbors_cw_order(v)) for v in range(G.number_of_nodes())])


def brute_isomorphic(S: Triangulation, T: Triangulation) -> bool:
    """Try all n! bijections on the abstract graphs."""
    if S.n != T.n or sorted(S.degrees) != sorted(T.degrees):
        return False
    es = {frozenset(e) for e in S.edges()}
    et = {frozenset(e) for e in T.edges()}
    for p in permutations(range(S.n)):
        if all(frozenset((p[u], p[v])) in et for u, v in es):
            return True
    return False


def catalog(n: int) -> list[Triangulation]:
    return [Triangulation.from_code(c) for c in catalog_codes(n)]


@pytest.fixture(scope="session")
def octahedron() -> Triangulation:
    return from_networkx(nx.octahedral_graph())


@pytest.fixture(scope="session")
def icosahedron() -> Triangulation:
    return from_networkx(nx.icosahedral_graph())


@pytest.fixture(scope="session")
def n5() -> Triangulation:
    (T,) = catalog(5)
    return T


@pytest.fixture(scope="session")
def other6(octahedron) -> Triangulation:
    (T,) = [T for T in catalog(6) if T.code != octahedron.code]
    return T


@pytest.fixture(scope="session")
def delta4_n7() -> Triangulation:
    (T,) = [T for T in catalog(7) if min(T.degrees) == 4]
    return T


@pytest.fixture
def record_acceptance():
    def record(cid: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE.append((cid, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {cid}  {detail}")
