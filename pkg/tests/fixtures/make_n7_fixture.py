"""Regenerate ``n7_triangulations.pc`` without using tricensus.

Scans every 15-edge graph on 7 vertices, keeps the planar ones
(networkx LR planarity), dedups by networkx isomorphism and writes each
survivor's networkx embedding as a planar_code record with header.

    python tests/fixtures/make_n7_fixture.py
"""

from __future__ import annotations

from itertools import combinations
from pathlib import Path

import networkx as nx

N = 7
E = 3 * N - 6


def main() -> None:
    pairs = list(combinations(range(N), 2))
    found: list[nx.Graph] = []
    for edges in combinations(pairs, E):
        G = nx.Graph(edges)
        if G.number_of_nodes() != N or min(d for _, d in G.degree) < 3:
            continue
        planar, _ = nx.check_planarity(G)
        if planar and not any(nx.is_isomorphic(G, H) for H in found):
            found.append(G)
    out = bytearray(b">>planar_code<<")
    for G in found:
        _, emb = nx.check_planarity(G)
        out.append(N)
        for v in range(N):
            out.extend(u + 1 for u in emb.neighbors_cw_order(v))
            out.append(0)
    path = Path(__file__).with_name("n7_triangulations.pc")
    path.write_bytes(bytes(out))
    print(f"{len(found)} graphs -> {path}")


if __name__ == "__main__":
    main()
