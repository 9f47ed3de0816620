#!/usr/bin/env python3
"""Generate planar_code fixtures used by the test suite.

Writes every planar triangulation on 3..MAX_N vertices (up to isomorphism),
plus single-graph files for K4 and the octahedron. Triangulations are found by
closing a seed triangulation under edge flips, which connect all
triangulations on a fixed vertex count. Counts are checked against the known
sequence 1, 1, 1, 2, 5, 14, 50, 233 for n = 3..10.

Usage: gen_triangulations.py OUT_DIR [MAX_N]
"""

import sys
from pathlib import Path

import networkx as nx

KNOWN_COUNTS = {3: 1, 4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233}


def embedding(g):
    ok, emb = nx.check_planarity(g)
    if not ok:
        raise ValueError("graph is not planar")
    return emb


def faces(g):
    emb = embedding(g)
    seen = set()
    out = []
    for u, v in emb.edges():
        if (u, v) in seen:
            continue
        face = emb.traverse_face(u, v, mark_half_edges=seen)
        out.append(face)
    return out


def flips(g):
    emb = embedding(g)
    for u, v in list(g.edges()):
        a = [x for x in emb.traverse_face(u, v) if x not in (u, v)]
        b = [x for x in emb.traverse_face(v, u) if x not in (u, v)]
        if len(a) != 1 or len(b) != 1:
            continue
        a, b = a[0], b[0]
        if a == b or g.has_edge(a, b):
            continue
        h = g.copy()
        h.remove_edge(u, v)
        h.add_edge(a, b)
        yield h


def stack(g):
    f = faces(g)[0]
    h = g.copy()
    w = h.number_of_nodes()
    for x in f:
        h.add_edge(w, x)
    return h


class IsoSet:
    def __init__(self):
        self.buckets = {}
        self.items = []

    def add(self, g):
        key = tuple(sorted(d for _, d in g.degree()))
        bucket = self.buckets.setdefault(key, [])
        for other in bucket:
            if nx.is_isomorphic(g, other):
                return False
        bucket.append(g)
        self.items.append(g)
        return True


def triangulations(n, seed):
    found = IsoSet()
    found.add(seed)
    frontier = [seed]
    while frontier:
        nxt = []
        for g in frontier:
            for h in flips(g):
                if found.add(h):
                    nxt.append(h)
        frontier = nxt
    return found.items


def canonical_labels(g):
    """Relabel by BFS from the highest-degree vertex so output is stable."""
    start = max(g.nodes(), key=lambda v: (g.degree(v), -v))
    order = [start] + [v for _, v in nx.bfs_edges(g, start)]
    return nx.relabel_nodes(g, {v: i for i, v in enumerate(order)})


def planar_code_record(g):
    n = g.number_of_nodes()
    if n >= 256:
        raise ValueError("one-byte planar_code only")
    emb = embedding(g)
    out = bytearray([n])
    for v in range(n):
        for w in emb.neighbors_cw_order(v):
            out.append(w + 1)
        out.append(0)
    return bytes(out)


def write(path, graphs):
    data = bytearray(b">>planar_code<<")
    for g in graphs:
        data += planar_code_record(g)
    Path(path).write_bytes(bytes(data))


def main():
    out_dir = Path(sys.argv[1])
    max_n = int(sys.argv[2]) if len(sys.argv) > 2 else 8
    out_dir.mkdir(parents=True, exist_ok=True)

    all_graphs = []
    g = nx.cycle_graph(3)
    for n in range(3, max_n + 1):
        if n > 3:
            g = stack(g)
        batch = sorted(
            (canonical_labels(h) for h in triangulations(n, g)),
            key=lambda h: sorted(h.edges()),
        )
        if n in KNOWN_COUNTS and len(batch) != KNOWN_COUNTS[n]:
            raise SystemExit(f"n={n}: found {len(batch)}, expected {KNOWN_COUNTS[n]}")
        print(f"n={n}: {len(batch)} triangulations")
        all_graphs.extend(batch)

    write(out_dir / f"triangulations_3_{max_n}.pc", all_graphs)
    write(out_dir / "k4.pc", [nx.complete_graph(4)])
    write(out_dir / "octahedron.pc", [nx.octahedral_graph()])


if __name__ == "__main__":
    main()
