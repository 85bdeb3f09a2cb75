"""Solvers for hedge cluster deletion.

* :func:`solve_bruteforce` - exhaustive over hedge subsets (vectorised).
* :func:`solve_fpt` - bounded search tree, two branches per induced P3.
* :func:`solve_delta_bounded` - exact when the F3-packing number is small.
* :func:`solve_approx2_bihedge` - factor 2 on bi-hedge graphs via list vertex cover.
* :func:`solve_acyclic` - exact when the hedge intersection graph is a forest.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain

import numpy as np

from .core import (
    HedgeGraph,
    Solution,
    _masks,
    enumerate_triples,
    forced_closure,
    internal_p3_hedges,
    least_p3,
    max_f3_packing,
    remove_hedges,
    validate_solution,
)
from .cover import (
    ListCoverInstance,
    SimpleGraph,
    mvc_solve_2approx,
    two_coloring,
    vc_bipartite_exact,
)
from .errors import InvariantViolation, RefusalError, StructuralError
from .structure import (
    DominationIndex,
    EdgeType,
    HedgeIntersectionGraph,
    build_domination,
    build_intersection_graph,
    find_cycle,
    mixed_vertices,
)

BRUTEFORCE_LIMIT = 24
_CHUNK = 1 << 20


def _checked(H: HedgeGraph, ids) -> Solution:
    sol = Solution.of(H, ids)
    verdict = validate_solution(H, sol)
    if not verdict.valid:
        raise InvariantViolation(f"solver produced an invalid solution; residual P3 {verdict.witness}")
    return sol


# --- brute force -------------------------------------------------------------

def solve_bruteforce(H: HedgeGraph) -> Solution:
    """Minimum solution; ties go to the lexicographically least sorted id tuple."""
    hedges = H.hedges
    ell = len(hedges)
    if ell > BRUTEFORCE_LIMIT:
        raise RefusalError(f"brute force refused for {ell} hedges (limit {BRUTEFORCE_LIMIT})")
    # hedge i lives on bit ell-1-i: for equal popcount the largest mask is
    # then the lexicographically least id tuple
    bit = {h: ell - 1 - i for i, h in enumerate(hedges)}
    cat = enumerate_triples(H)
    p3_pairs = np.array([[bit[p.hedges[0]], bit[p.hedges[1]]] for p in cat.p3s], dtype=np.uint32).reshape(-1, 2)
    k3_triples = np.array(
        [[bit[h] for h in t.hedges] for t in cat.k3s if t.multiplicity > 1], dtype=np.uint32
    ).reshape(-1, 3)

    best_pop, best_mask = ell + 1, 0
    total = 1 << ell
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.uint32)
        ok = np.ones(masks.shape, dtype=bool)
        for i, j in p3_pairs:
            ok &= ((masks >> i) | (masks >> j)) & 1 == 1
        for i, j, k in k3_triples:
            removed = ((masks >> i) & 1) + ((masks >> j) & 1) + ((masks >> k) & 1)
            ok &= removed != 1
        cand = masks[ok]
        if cand.size == 0:
            continue
        pops = np.bitwise_count(cand)
        low = int(pops.min())
        top = int(cand[pops == low].max())
        if low < best_pop or (low == best_pop and top > best_mask):
            best_pop, best_mask = low, top
    ids = [h for h in hedges if best_mask >> bit[h] & 1]
    return _checked(H, ids)


# --- bounded search tree -----------------------------------------------------

@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    max_children: int = 0


def solve_fpt(H: HedgeGraph, k: int, stats: SearchStats | None = None) -> Solution | None:
    """A solution of size at most ``k``, or None when none exists.

    Each node first deletes every hedge forced by an internal P3 of the
    residual graph, then branches on the two hedges of the least induced P3.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    stats = stats if stats is not None else SearchStats()

    def search(removed: frozenset[int], budget: int, depth: int) -> frozenset[int] | None:
        stats.nodes += 1
        stats.max_depth = max(stats.max_depth, depth)
        while True:
            new = internal_p3_hedges(H, removed) - removed
            if not new:
                break
            removed |= new
            budget -= len(new)
        if budget < 0:
            return None
        p3 = least_p3(_masks(H, removed))
        if p3 is None:
            return removed
        if budget == 0:
            return None
        a, b, c = p3
        options = dict.fromkeys((H.hedge(a, b), H.hedge(b, c)))
        stats.max_children = max(stats.max_children, len(options))
        for h in options:
            found = search(removed | {h}, budget - 1, depth + 1)
            if found is not None:
                return found
        return None

    found = search(frozenset(), k, 0)
    return None if found is None else _checked(H, found)


def solve_fpt_optimal(H: HedgeGraph) -> Solution:
    """Optimum via :func:`solve_fpt`: double the budget until it succeeds, then bisect."""
    lo, hi = -1, 0  # lo fails, hi is the budget being tried
    best = solve_fpt(H, hi)
    while best is None:
        lo, hi = hi, max(1, 2 * hi)
        best = solve_fpt(H, hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        sol = solve_fpt(H, mid)
        if sol is None:
            lo = mid
        else:
            hi, best = mid, sol
    return best


# --- bounded packing number --------------------------------------------------

def _clique_partitions(vertices: list[int], adj):
    """Partitions of ``vertices`` into cliques (restricted growth order)."""
    blocks: list[list[int]] = []

    def rec(i: int):
        if i == len(vertices):
            yield [tuple(b) for b in blocks]
            return
        v = vertices[i]
        for b in blocks:
            if all(u in adj[v] for u in b):
                b.append(v)
                yield from rec(i + 1)
                b.pop()
        blocks.append([v])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def solve_delta_bounded(H: HedgeGraph, cap: int = 3) -> Solution:
    """Exact solver for graphs with at most ``cap`` disjoint connected triples.

    Outside a maximum packing the graph is an induced matching plus isolated
    vertices, so each cluster of a cluster subgraph is a clique block of the
    packed vertices extended by at most one vertex or one matching edge, or
    else lies entirely outside.  All such cluster partitions are enumerated.
    """
    packing = max_f3_packing(H, cap)
    if len(packing) > cap:
        raise RefusalError(
            f"F3-packing number is at least {len(packing)}, above the cap {cap}",
            witness=packing,
        )
    adj = H.adjacency
    packed = sorted(chain.from_iterable(packing))
    packed_set = set(packed)
    rest = [v for v in range(H.n) if v not in packed_set]
    mate: dict[int, int] = {}
    for v in rest:
        nb = [w for w in adj[v] if w not in packed_set]
        if len(nb) > 1:
            raise InvariantViolation(f"vertex {v} has {len(nb)} neighbours outside a maximum packing")
        if nb:
            mate[v] = nb[0]
    matching = sorted({(min(v, w), max(v, w)) for v, w in mate.items()})

    edges = [(u, v, h) for (u, v), h in sorted(H.edge_hedge.items())]
    best: tuple[int, tuple[int, ...]] | None = None

    for blocks in _clique_partitions(packed, adj):
        # candidate extensions of each block: nothing, one vertex, one matching edge
        options = []
        for b in blocks:
            common = [v for v in rest if all(u in adj[v] for u in b)]
            cs = set(common)
            opts: list[tuple[int, ...]] = [()]
            opts += [(v,) for v in common]
            opts += [e for e in matching if e[0] in cs and e[1] in cs]
            options.append(opts)

        part = {}
        for i, b in enumerate(blocks):
            for v in b:
                part[v] = i

        def assign(i: int, used: set[int]):
            if i < len(blocks):
                for ext in options[i]:
                    if used.intersection(ext):
                        continue
                    for v in ext:
                        part[v] = i
                    yield from assign(i + 1, used.union(ext))
                    for v in ext:
                        del part[v]
                return
            # leftover vertices: free matching edges tentatively together, others alone
            label = dict(part)
            nxt = len(blocks)
            for u, w in matching:
                if u not in used and w not in used:
                    label[u] = label[w] = nxt
                    nxt += 1
            for v in rest:
                if v not in label:
                    label[v] = nxt
                    nxt += 1
            cut = {h for u, v, h in edges if label[u] != label[v]}
            # a free matching edge whose hedge is cut anyway is split at no cost;
            # only block-internal edges can conflict with the cut
            if any(label[u] == label[v] and label[u] < len(blocks) and h in cut for u, v, h in edges):
                return
            yield tuple(sorted(cut))

        for cut in assign(0, set()):
            key = (len(cut), cut)
            if best is None or key < best:
                best = key
    assert best is not None
    return _checked(H, best[1])


# --- bi-hedge approximation ----------------------------------------------------

def hcd_to_mvc(H: HedgeGraph) -> tuple[ListCoverInstance, tuple[int, ...]]:
    """List cover instance equivalent to a bi-hedge graph with no internal P3.

    Vertex ``i`` of the instance stands for hedge ``hedges[i]``; two hedges are
    adjacent when they span an induced P3, and the list of a hedge is the set
    of hedges dominating it.
    """
    cat = enumerate_triples(H)
    if cat.internal_p3s:
        raise StructuralError("hedge spans an internal P3; delete forced hedges first",
                              witness=cat.internal_p3s[0])
    dom = build_domination(H, cat)
    hedges = H.hedges
    idx = {h: i for i, h in enumerate(hedges)}
    g = SimpleGraph.from_edges(len(hedges), ((idx[p.hedges[0]], idx[p.hedges[1]]) for p in cat.p3s))
    lists = [frozenset(idx[z] for z in dom.r[h]) for h in hedges]
    return ListCoverInstance.build(g, lists), hedges


def solve_approx2_bihedge(H: HedgeGraph) -> Solution:
    """At most twice the optimum on graphs whose triangles use at most two hedges."""
    bad = next((t for t in enumerate_triples(H).k3s if t.multiplicity == 3), None)
    if bad is not None:
        raise StructuralError(f"triangle {bad.a, bad.b, bad.c} is covered by three hedges", witness=bad)
    forced = forced_closure(H)
    inst, hedges = hcd_to_mvc(remove_hedges(H, forced))
    cover = mvc_solve_2approx(inst)
    return _checked(H, forced | {hedges[i] for i in cover})


# --- acyclic intersection graph ------------------------------------------------

@dataclass(frozen=True)
class AcyclicDecomposition:
    """Intermediate objects of the exact algorithm for acyclic intersection graphs.

    ``forced`` spans internal P3's, ``mixed`` are mixed vertices (both collected
    to a fixpoint), ``reduced`` is the graph with both removed, ``components``
    the vertex sets joined by triangle-type edges of its intersection graph,
    and ``f2_edges`` the cover graph over the surviving hedges.
    """

    forced: frozenset[int]
    mixed: frozenset[int]
    reduced: HedgeGraph
    intersection: HedgeIntersectionGraph
    domination: DominationIndex
    components: tuple[frozenset[int], ...]
    f2_edges: frozenset[tuple[int, int]]

    @property
    def removed(self) -> frozenset[int]:
        return self.forced | self.mixed

    def f2_graph(self) -> tuple[SimpleGraph, tuple[int, ...]]:
        hedges = self.reduced.hedges
        idx = {h: i for i, h in enumerate(hedges)}
        g = SimpleGraph.from_edges(len(hedges), ((idx[x], idx[y]) for x, y in self.f2_edges))
        return g, hedges


def acyclic_decomposition(H: HedgeGraph) -> AcyclicDecomposition:
    cycle = find_cycle(build_intersection_graph(H))
    if cycle is not None:
        raise StructuralError(
            "hedge intersection graph has a cycle: " + " ".join(H.token(h) for h in cycle),
            witness=tuple(cycle),
        )
    forced: set[int] = set()
    mixed: set[int] = set()
    while True:
        cur = remove_hedges(H, forced | mixed)
        z = internal_p3_hedges(cur)
        if z:
            forced |= z
            continue
        cat = enumerate_triples(cur)
        dom = build_domination(cur, cat)
        F = build_intersection_graph(cur, cat)
        x = mixed_vertices(F, dom)
        if not x:
            break
        mixed |= x

    if F.edges_of_type(EdgeType.P_TRI):
        raise InvariantViolation("a both-type edge survived the removal of mixed vertices")

    # components: connected through triangle-type edges
    comp = {h: h for h in F.vertices}

    def find(h):
        while comp[h] != h:
            comp[h] = comp[comp[h]]
            h = comp[h]
        return h

    for x, y in F.edges_of_type(EdgeType.TRI):
        comp[find(x)] = find(y)
    groups: dict[int, set[int]] = {}
    for h in F.vertices:
        groups.setdefault(find(h), set()).add(h)
    label = {h: find(h) for h in F.vertices}
    components = tuple(sorted((frozenset(g) for g in groups.values()), key=min))

    seen_pairs: set[tuple[int, int]] = set()
    for x, y in F.edges_of_type(EdgeType.P):
        pair = tuple(sorted((label[x], label[y])))
        if pair[0] == pair[1]:
            raise InvariantViolation(f"path-type edge {x, y} inside one component")
        if pair in seen_pairs:
            raise InvariantViolation(f"two edges between components {pair}")
        seen_pairs.add(pair)

    r = dom.r
    for h in F.vertices:
        if any(label[z] != label[h] for z in r[h]):
            raise InvariantViolation(f"dominators of hedge {h} leave its component")

    f2: set[tuple[int, int]] = set()
    for x, y in F.edges_of_type(EdgeType.P):
        for a in r[x]:
            for b in r[y]:
                f2.add((a, b) if a < b else (b, a))
    for a, b in f2:
        if label[a] == label[b]:
            raise InvariantViolation(f"cover-graph edge {a, b} inside one component")

    dec = AcyclicDecomposition(
        forced=frozenset(forced),
        mixed=frozenset(mixed),
        reduced=cur,
        intersection=F,
        domination=dom,
        components=components,
        f2_edges=frozenset(f2),
    )
    try:
        two_coloring(dec.f2_graph()[0])
    except StructuralError as exc:
        raise InvariantViolation(f"cover graph is not bipartite: odd cycle {exc.witness}") from None
    return dec


def solve_acyclic(H: HedgeGraph) -> Solution:
    """Optimum for graphs whose hedge intersection graph is a forest."""
    dec = acyclic_decomposition(H)
    g, hedges = dec.f2_graph()
    cover = vc_bipartite_exact(g)
    return _checked(H, dec.removed | {hedges[i] for i in cover})
