from __future__ import annotations

import networkx as nx
import pytest

from tricensus import k4
from tricensus.errors import BadHeader, TooManyVertices, TruncatedRecord, ValidationFailed
from tricensus.generate import catalog_codes
from tricensus.io import (
    PLANAR_CODE_HEADER,
    decode_graph6,
    decode_planar_code,
    encode_graph6,
    encode_planar_code,
)

from .conftest import FIXTURES, catalog


def test_k4_planar_code():
    data = encode_planar_code([k4()])
    assert len(data) == 17
    assert data[0] == 4
    assert data.count(0) == 4
    assert decode_planar_code(data) == [k4()]
    assert encode_planar_code([k4()], with_header=True) == PLANAR_CODE_HEADER + data


def test_empty():
    assert encode_planar_code([]) == b""
    assert encode_planar_code([], with_header=True) == PLANAR_CODE_HEADER
    assert decode_planar_code(PLANAR_CODE_HEADER) == []


def test_round_trip_catalog_to_10():
    graphs = [T for n in range(4, 11) for T in catalog(n)]
    data = encode_planar_code(graphs, with_header=True)
    back = decode_planar_code(data)
    assert back == graphs
    assert encode_planar_code(back, with_header=True) == data


def test_canonical_code_is_planar_code_record():
    for c in catalog_codes(8):
        assert encode_planar_code([c.to_triangulation()]) == c


def test_bad_header():
    with pytest.raises(BadHeader):
        decode_planar_code(b">>graph6<<C~")
    with pytest.raises(BadHeader):
        decode_planar_code(b"\x00\x04\x00")


def test_truncated():
    data = encode_planar_code([k4()])
    with pytest.raises(TruncatedRecord):
        decode_planar_code(data[:-3])


def test_invalid_record_reports_index():
    good = encode_planar_code([k4()])
    bad = bytearray(good)
    # swap two neighbours of vertex 1 -> inconsistent orientation
    bad[1], bad[2] = bad[2], bad[1]
    with pytest.raises(ValidationFailed) as info:
        decode_planar_code(good + bytes(bad))
    assert info.value.index == 1
    # out-of-range neighbour
    bad = bytearray(good)
    bad[1] = 9
    with pytest.raises(ValidationFailed):
        decode_planar_code(bytes(bad))


def test_too_many_vertices():
    class Big:
        n = 300
        rotation = ()

    with pytest.raises(TooManyVertices):
        encode_planar_code([Big()])  # type: ignore[list-item]


def test_n7_fixture():
    graphs = decode_planar_code((FIXTURES / "n7_triangulations.pc").read_bytes())
    assert len(graphs) == 5
    assert {T.code for T in graphs} == set(catalog_codes(7))


def test_graph6_k4():
    # 6 upper-triangle bits all set: 63 + 63 = '~'
    assert encode_graph6(k4()) == "C~"


def test_graph6_matches_networkx():
    for T in catalog(8) + catalog(9)[:10]:
        line = encode_graph6(T)
        G = nx.from_graph6_bytes(line.encode())
        assert {frozenset(e) for e in G.edges()} == {frozenset(e) for e in T.edges()}
        H = nx.Graph(T.edges())
        H.add_nodes_from(range(T.n))
        assert nx.to_graph6_bytes(H, nodes=range(T.n), header=False).strip().decode() == line
        n, edges = decode_graph6(line)
        assert n == T.n and edges == set(T.edges())


def test_graph6_octahedron_is_4_regular(octahedron):
    G = nx.from_graph6_bytes(encode_graph6(octahedron).encode())
    assert G.number_of_nodes() == 6 and {d for _, d in G.degree} == {4}


def test_graph6_is_labeling_sensitive(octahedron):
    from tricensus import relabel

    lines = {encode_graph6(relabel(octahedron, p)) for p in ([0, 1, 2, 3, 4, 5], [1, 0, 2, 3, 4, 5], [5, 3, 1, 0, 2, 4])}
    assert len(lines) > 1


def test_graph6_extended_size():
    n, edges = decode_graph6("~" + chr(63) + chr(64) + chr(63) + "?" * 1100)
    assert n == 64 and not edges
