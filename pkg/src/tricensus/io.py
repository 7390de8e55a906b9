"""planar_code and graph6 encoders/decoders, and the report JSON schema.

planar_code (single-byte variant): optional ``>>planar_code<<`` header,
then per graph one byte ``n`` followed by each vertex's clockwise
neighbour list as 1-based bytes closed by a 0 byte.  Records whose first
byte is 0 announce the two-byte variant, which is rejected.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from importlib import resources

from .embed import Triangulation, validate
from .errors import BadHeader, TooManyVertices, TriangulationError, TruncatedRecord, ValidationFailed

PLANAR_CODE_HEADER = b">>planar_code<<"


def decode_planar_code(data: bytes) -> list[Triangulation]:
    pos = 0
    if data.startswith(b">>"):
        if not data.startswith(PLANAR_CODE_HEADER):
            end = data.find(b"<<")
            raise BadHeader(f"unsupported header {data[: end + 2 if end >= 0 else 20]!r}")
        pos = len(PLANAR_CODE_HEADER)
    graphs = []
    while pos < len(data):
        index = len(graphs)
        n = data[pos]
        if n == 0:
            raise BadHeader(f"graph #{index} uses the two-byte planar_code variant")
        start = pos
        pos += 1
        rot: list[list[int]] = []
        for _ in range(n):
            cur: list[int] = []
            while True:
                if pos >= len(data):
                    raise TruncatedRecord(f"graph #{index} ends after {pos - start} bytes")
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                cur.append(b - 1)
            rot.append(cur)
        expected = 1 + (6 * n - 12) + n
        try:
            if pos - start != expected:
                raise TriangulationError(f"record is {pos - start} bytes, expected {expected}")
            graphs.append(validate(rot))
        except TriangulationError as exc:
            raise ValidationFailed(index, exc) from exc
    return graphs


def encode_planar_code(graphs: Iterable[Triangulation], with_header: bool = False) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER if with_header else b"")
    for T in graphs:
        if T.n > 255:
            raise TooManyVertices(f"n = {T.n} needs the two-byte variant")
        out.append(T.n)
        for r in T.rotation:
            out.extend(u + 1 for u in r)
            out.append(0)
    return bytes(out)


def _graph6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise TooManyVertices(f"n = {n} is beyond the graph6 range handled here")


def encode_graph6(T: Triangulation) -> str:
    """graph6 line of the underlying abstract graph (no newline)."""
    bits = [T.has_edge(i, j) for j in range(1, T.n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i : i + 6])) for i in range(0, len(bits), 6)
    )
    return (_graph6_size(T.n) + body).decode("ascii")


def decode_graph6(line: str) -> tuple[int, set[tuple[int, int]]]:
    """Vertex count and edge set (i < j) of a graph6 line."""
    data = line.strip().encode("ascii")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if data[0] == 126:
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    bits = [(c - 63) >> (5 - k) & 1 for c in body for k in range(6)]
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    if len(bits) < len(pairs):
        raise TruncatedRecord("graph6 body too short")
    return n, {p for p, b in zip(pairs, bits) if b}


def report_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("report_schema.json").read_text())
