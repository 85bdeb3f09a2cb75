"""Walk through the toolkit on a small instance.

Builds a hedge graph by hand, inspects its structure, solves it with every
applicable algorithm and translates it to a MinOnes formula and back.

    python3 demos/walkthrough.py
"""

from hedgecluster import build, io, structural_stats, validate_solution
from hedgecluster.reductions import eval_formula, hcd_to_minones, indicator, weight
from hedgecluster.solvers import (
    solve_acyclic,
    solve_approx2_bihedge,
    solve_bruteforce,
    solve_fpt_optimal,
)
from hedgecluster.structure import build_domination, build_intersection_graph, is_acyclic


def tri(base, doubled, single):
    a, b, c = base, base + 1, base + 2
    return [(a, b, doubled), (a, c, doubled), (b, c, single)]


# two triangles chained through hedge "b", and a path between "b" and "c"
H = build(9, tri(0, "a", "b") + tri(3, "b", "c") + [(6, 7, "c"), (7, 8, "d")])
print(io.serialize("hedgegraph", H))
print()

rep = structural_stats(H)
print("bi-hedge:", rep.bihedge, "| packing number:", rep.delta_max)
print("intersection graph acyclic:", is_acyclic(build_intersection_graph(H)))

D = build_domination(H)
for h in H.hedges:
    print(f"  deleting {H.token(h)} forces {', '.join(H.tokens(D.r[h]))}")
print()

for name, solve in [
    ("brute force", solve_bruteforce),
    ("search tree", solve_fpt_optimal),
    ("acyclic exact", solve_acyclic),
    ("2-approximation", solve_approx2_bihedge),
]:
    sol = solve(H)
    assert validate_solution(H, sol).valid
    print(f"{name:>16}: delete {' '.join(H.tokens(sol.deleted))}")
print()

phi, names = hcd_to_minones(H)
print("as a formula:")
print(io.serialize("formula", phi))
best = solve_bruteforce(H)
a = indicator(phi.variables, (names[h] for h in best.deleted))
print("optimum satisfies it:", eval_formula(phi, a), "| weight", weight(a))
