"""Regenerate tests/data/graphs8.g6: one graph per isomorphism class on 8 vertices.

Every 8-vertex graph is a 7-vertex graph plus one vertex, so extending each
7-vertex atlas graph by every neighbourhood and discarding isomorphic
duplicates yields all classes (12346 of them).
"""

from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "graphs8.g6"


def invariant(g):
    deg = dict(g.degree())
    tri = nx.triangles(g)
    return tuple(sorted((deg[v], tri[v], tuple(sorted(deg[w] for w in g[v]))) for v in g))


def main():
    buckets: dict[tuple, list] = {}
    for base in nx.graph_atlas_g():
        if base.number_of_nodes() != 7:
            continue
        for nb in range(128):
            g = base.copy()
            g.add_node(7)
            g.add_edges_from((7, v) for v in range(7) if nb >> v & 1)
            reps = buckets.setdefault(invariant(g), [])
            if not any(nx.is_isomorphic(g, r) for r in reps):
                reps.append(g)
    graphs = [g for reps in buckets.values() for g in reps]
    lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs)
    OUT.write_text("\n".join(lines) + "\n")
    print(f"{len(lines)} graphs written to {OUT}")


if __name__ == "__main__":
    main()
