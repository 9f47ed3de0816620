#!/usr/bin/env python3
"""Write graph6/sparse6 cross-check records encoded by networkx.

Each line: n <TAB> graph6 <TAB> sparse6 <TAB> comma-separated u-v edges.

Usage: gen_format_fixtures.py OUT_FILE
"""

import sys

import networkx as nx

CASES = [(0, 0.0), (1, 0.0), (2, 1.0), (3, 1.0), (5, 0.5), (7, 0.4), (12, 0.3),
         (31, 0.2), (40, 0.1), (62, 0.05), (63, 0.05), (70, 0.05), (130, 0.02)]


def main():
    lines = []
    for seed, (n, p) in enumerate(CASES):
        g = nx.gnp_random_graph(n, p, seed=seed)
        g6 = nx.to_graph6_bytes(g, header=False).strip().decode()
        s6 = nx.to_sparse6_bytes(g, header=False).strip().decode()
        edges = ",".join(f"{u}-{v}" for u, v in sorted(tuple(sorted(e)) for e in g.edges()))
        lines.append(f"{n}\t{g6}\t{s6}\t{edges or '-'}")
    with open(sys.argv[1], "w") as out:
        out.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
