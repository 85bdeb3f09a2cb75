"""Vertex cover as hedge cluster deletion.

Every vertex becomes a hedge, every edge a two-hedge path; a cover
corresponds to the hedges whose deletion breaks all paths.

    python3 demos/vertex_cover_gadget.py
"""

from hedgecluster import io
from hedgecluster.cover import SimpleGraph, vc_bruteforce
from hedgecluster.reductions import embed_host, vc_to_hcd
from hedgecluster.solvers import solve_bruteforce

g = SimpleGraph.from_edges(5, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)])
H, mapping = vc_to_hcd(g)
print(io.serialize("hedgegraph", H))

cover = vc_bruteforce(g)
sol = solve_bruteforce(H)
print("minimum cover:", sorted(v + 1 for v in cover), "| hedges deleted:", " ".join(H.tokens(sol.deleted)))

for host in ("path", "clique"):
    E = embed_host(H, host, 3 * (len(g.edges) + 1))
    print(f"inside a {host} host on {E.n} vertices: optimum {len(solve_bruteforce(E))}")
